#pragma once

#include <utility>
#include <vector>

#include "polyldc/monoidal.hpp"

namespace polyldc {

/// Indexing for the internal hom [p,q]: a position assigns to every position
/// P of p a pair (Q, f: q[Q] -> p[P]); per-P choices are enumerated Q-major
/// with f in big-endian mixed radix (exactly the layout of evaluate(q, p[P])),
/// and whole assignments are big-endian over P. The direction set at an
/// assignment phi is the sum over P of q[Q_phi(P)], P-major.
class CloseLayout {
public:
    CloseLayout(const Polynomial& p, const Polynomial& q) : q_cards_(q.cards()) {
        choices_.reserve(p.positions());
        std::vector<u64> radices(p.positions());
        for (u64 P = 0; P < p.positions(); ++P) {
            choices_.emplace_back(q, p.card(P));
            radices[P] = choices_[P].total();
        }
        space_ = MixedRadix(std::move(radices));
    }

    u64 position_count() const { return space_.total(); }
    const EvalLayout& choice_layout(u64 P) const { return choices_[P]; }

    u64 encode_position(std::span<const u64> per_position_choices) const {
        return space_.encode(per_position_choices);
    }
    std::vector<u64> decode_position(u64 flat) const { return space_.decode(flat); }

    /// (Q, f digits) of the choice at P inside a decoded assignment.
    std::pair<u64, std::vector<u64>> choice_at(std::span<const u64> choices, u64 P) const {
        return choices_[P].decode(choices[P]);
    }

    u64 card(std::span<const u64> choices) const {
        u64 c = 0;
        for (u64 P = 0; P < choices.size(); ++P)
            c = checked_add(c, q_cards_[choices_[P].decode(choices[P]).first]);
        return c;
    }

    bool next(std::span<u64> choices) const { return space_.next(choices); }

private:
    std::vector<u64> q_cards_;
    std::vector<EvalLayout> choices_;
    MixedRadix space_;
};

/// Internal hom [p,q], right adjoint to tensoring with p.
inline Polynomial close(const Polynomial& p, const Polynomial& q) {
    CloseLayout layout(p, q);
    guard_cap(layout.position_count(), "closure positions");
    std::vector<u64> cards;
    cards.reserve(layout.position_count());
    if (layout.position_count() == 0) return Polynomial{};
    std::vector<u64> phi(p.positions(), 0);
    do {
        cards.push_back(layout.card(phi));
    } while (layout.next(phi));
    return Polynomial(std::move(cards));
}

/// Coclosure "p over q": positions of p, direction set at P is q applied to
/// p[P] with its canonical enumeration. Left adjoint to substituting q.
inline Polynomial coclose(const Polynomial& p, const Polynomial& q) {
    std::vector<u64> cards(p.positions());
    u64 entries = 0;
    for (u64 P = 0; P < p.positions(); ++P) {
        cards[P] = evaluate(q, p.card(P)).size;
        entries = checked_add(entries, cards[P]);
        guard_cap(entries, "coclosure directions");
    }
    return Polynomial(std::move(cards));
}

/// ev: p tensor [p,b] -> b. Forward reads off the chosen target position;
/// backward pairs the chosen function's value with the injection of the
/// direction at component P.
inline PolyMap eval_map(const Polynomial& p, const Polynomial& b) {
    const Polynomial cl = close(p, b);
    const Polynomial dom = tensor(p, cl);
    CloseLayout layout(p, b);
    std::vector<u64> fwd;
    fwd.reserve(dom.positions());
    std::vector<u64> bwd;
    u64 entries = 0;

    for (u64 P = 0; P < p.positions(); ++P) {
        if (cl.positions() == 0) break;
        std::vector<u64> phi(p.positions(), 0);
        u64 flat = 0;
        do {
            auto [Q, f] = layout.choice_at(phi, P);
            fwd.push_back(Q);
            // offset of component P inside the closure's direction sum
            u64 off = 0;
            for (u64 p2 = 0; p2 < P; ++p2)
                off += b.card(layout.choice_at(phi, p2).first);
            const u64 cl_card = cl.card(flat);
            for (u64 e = 0; e < b.card(Q); ++e)
                bwd.push_back(pair_index(f[e], off + e, cl_card));
            entries = checked_add(entries, b.card(Q));
            guard_cap(entries, "eval map table");
            ++flat;
        } while (layout.next(phi));
    }
    return PolyMap(dom, b, std::move(fwd), std::move(bwd));
}

/// coev: p -> (p over q) over q. Forward tags each closure direction with its
/// target position; backward applies the chosen function.
inline PolyMap coeval_map(const Polynomial& p, const Polynomial& q) {
    const Polynomial co = coclose(p, q);
    const Polynomial cod = substitute(co, q);
    SubstLayout cod_layout(co, q);
    std::vector<u64> fwd(p.positions());
    std::vector<u64> bwd;
    u64 entries = 0;

    std::vector<u64> w;
    for (u64 P = 0; P < p.positions(); ++P) {
        EvalLayout dirs(q, p.card(P));
        w.assign(co.card(P), 0);
        for (u64 j = 0; j < co.card(P); ++j) w[j] = dirs.decode(j).first;
        fwd[P] = cod_layout.encode_position(P, w);
        for (u64 j = 0; j < co.card(P); ++j) {
            auto [Q, d] = dirs.decode(j);
            for (u64 e = 0; e < q.card(Q); ++e) bwd.push_back(d[e]);
            entries = checked_add(entries, q.card(Q));
            guard_cap(entries, "coeval map table");
        }
    }
    return PolyMap(p, cod, std::move(fwd), std::move(bwd));
}

/// Transpose of f: p tensor r -> b into r -> [p,b].
inline PolyMap curry(const PolyMap& f, const Polynomial& p, const Polynomial& r) {
    if (f.dom() != tensor(p, r)) throw DomainMismatchError("curry: dom is not the stated tensor");
    const Polynomial& b = f.cod();
    const Polynomial cl = close(p, b);
    CloseLayout layout(p, b);
    std::vector<u64> fwd(r.positions());
    std::vector<u64> bwd;
    u64 entries = 0;

    std::vector<u64> choices(p.positions());
    std::vector<u64> fdigits;
    for (u64 R = 0; R < r.positions(); ++R) {
        for (u64 P = 0; P < p.positions(); ++P) {
            const u64 idx = pair_index(P, R, r.positions());
            const u64 Q = f.on_position(idx);
            fdigits.assign(b.card(Q), 0);
            for (u64 e = 0; e < b.card(Q); ++e) {
                // split the pair p[P] x r[R]
                fdigits[e] = r.card(R) == 0 ? 0 : f.on_direction(idx, e) / r.card(R);
            }
            choices[P] = layout.choice_layout(P).encode(Q, fdigits);
        }
        fwd[R] = layout.encode_position(choices);
        for (u64 P = 0; P < p.positions(); ++P) {
            const u64 idx = pair_index(P, R, r.positions());
            const u64 Q = f.on_position(idx);
            for (u64 e = 0; e < b.card(Q); ++e)
                bwd.push_back(f.on_direction(idx, e) % (r.card(R) == 0 ? 1 : r.card(R)));
            entries = checked_add(entries, b.card(Q));
            guard_cap(entries, "curry table");
        }
    }
    return PolyMap(r, cl, std::move(fwd), std::move(bwd));
}

/// Inverse transpose: r -> [p,b] back to p tensor r -> b.
inline PolyMap uncurry(const PolyMap& g, const Polynomial& p, const Polynomial& b) {
    if (g.cod() != close(p, b))
        throw DomainMismatchError("uncurry: cod is not the stated internal hom");
    return compose(tensor_map(identity(p), g), eval_map(p, b));
}

/// Transpose of g: p -> r over q into (p over q) -> r.
inline PolyMap cocurry(const PolyMap& g, const Polynomial& r, const Polynomial& q) {
    if (g.cod() != substitute(r, q))
        throw DomainMismatchError("cocurry: cod is not the stated substitution");
    const Polynomial& p = g.dom();
    const Polynomial co = coclose(p, q);
    SubstLayout cod_layout(r, q);
    std::vector<u64> fwd(p.positions());
    std::vector<u64> bwd;
    u64 entries = 0;

    std::vector<u64> ddigits;
    for (u64 P = 0; P < p.positions(); ++P) {
        auto [R, w] = cod_layout.decode_position(g.on_position(P));
        fwd[P] = R;
        EvalLayout dirs(q, p.card(P));
        std::vector<u64> off(w.size() + 1, 0);
        for (u64 e = 0; e < w.size(); ++e) off[e + 1] = off[e] + q.card(w[e]);
        for (u64 e = 0; e < r.card(R); ++e) {
            const u64 Q = w[e];
            ddigits.assign(q.card(Q), 0);
            for (u64 x = 0; x < q.card(Q); ++x) ddigits[x] = g.on_direction(P, off[e] + x);
            bwd.push_back(dirs.encode(Q, ddigits));
        }
        entries = checked_add(entries, r.card(R));
        guard_cap(entries, "cocurry table");
    }
    return PolyMap(co, r, std::move(fwd), std::move(bwd));
}

/// Inverse transpose: (p over q) -> r back to p -> r over q.
inline PolyMap uncocurry(const PolyMap& h, const Polynomial& p, const Polynomial& q) {
    if (h.dom() != coclose(p, q))
        throw DomainMismatchError("uncocurry: dom is not the stated coclosure");
    return compose(coeval_map(p, q), substitute_map(h, identity(q)));
}

/// ev with the hom on the left: [p,b] tensor p -> b.
inline PolyMap eval_map_swapped(const Polynomial& p, const Polynomial& b) {
    return compose(tensor_sym(close(p, b), p), eval_map(p, b));
}

/// Functorial action of the internal hom, contravariant in the first
/// argument: [f,g]: [p',q] -> [p,q'] for f: p -> p', g: q -> q'.
inline PolyMap close_map(const PolyMap& f, const PolyMap& g) {
    const Polynomial& p = f.dom();
    const Polynomial& p2 = f.cod();
    const Polynomial cl = close(p2, g.dom());
    PolyMap body = compose(compose(tensor_map(f, identity(cl)), eval_map(p2, g.dom())), g);
    return curry(body, p, cl);
}

/// Functorial action of the coclosure, contravariant in the second argument:
/// coclose(f,g): (p over q) -> (p' over q') for f: p -> p', g: q' -> q.
inline PolyMap coclose_map(const PolyMap& f, const PolyMap& g) {
    const Polynomial& p2 = f.cod();
    const Polynomial& q2 = g.dom();
    PolyMap body =
        compose(compose(f, coeval_map(p2, q2)), substitute_map(identity(coclose(p2, q2)), g));
    return cocurry(body, coclose(p2, q2), g.cod());
}

}  // namespace polyldc
