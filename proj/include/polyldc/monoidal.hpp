#pragma once

#include <utility>
#include <vector>

#include "polyldc/homs.hpp"

namespace polyldc {

// ---------------------------------------------------------------------------
// Parallel product (pairs positions, multiplies direction sets)
// ---------------------------------------------------------------------------

/// Positions p(1) x q(1) in lexicographic p-major order, direction set at
/// (P,Q) is p[P] x q[Q], also lexicographic. With this flat indexing the
/// product is strictly associative and strictly unital at y.
inline Polynomial tensor(const Polynomial& p, const Polynomial& q) {
    const u64 n = checked_mul(p.positions(), q.positions());
    guard_cap(n, "tensor positions");
    std::vector<u64> cards;
    cards.reserve(n);
    for (u64 P = 0; P < p.positions(); ++P)
        for (u64 Q = 0; Q < q.positions(); ++Q)
            cards.push_back(checked_mul(p.card(P), q.card(Q)));
    return Polynomial(std::move(cards));
}

inline PolyMap tensor_map(const PolyMap& f, const PolyMap& g) {
    const Polynomial dom = tensor(f.dom(), g.dom());
    const Polynomial cod = tensor(f.cod(), g.cod());
    const u64 qn = g.dom().positions(), qn2 = g.cod().positions();
    std::vector<u64> fwd;
    fwd.reserve(dom.positions());
    u64 entries = 0;
    for (u64 P = 0; P < f.dom().positions(); ++P)
        for (u64 Q = 0; Q < qn; ++Q) {
            fwd.push_back(pair_index(f.on_position(P), g.on_position(Q), qn2));
            entries = checked_add(entries, cod.card(fwd.back()));
        }
    guard_cap(entries, "tensor map table");
    std::vector<u64> bwd;
    bwd.reserve(entries);
    for (u64 P = 0; P < f.dom().positions(); ++P)
        for (u64 Q = 0; Q < qn; ++Q) {
            const u64 gq = g.on_position(Q);
            const u64 cq = g.cod().card(gq), dq = g.dom().card(Q);
            for (u64 d = 0; d < f.cod().card(f.on_position(P)); ++d)
                for (u64 e = 0; e < cq; ++e)
                    bwd.push_back(pair_index(f.on_direction(P, d), g.on_direction(Q, e), dq));
        }
    return PolyMap(dom, cod, std::move(fwd), std::move(bwd));
}

inline PolyMap tensor_sym(const Polynomial& p, const Polynomial& q) {
    const Polynomial dom = tensor(p, q), cod = tensor(q, p);
    std::vector<u64> fwd(dom.positions());
    std::vector<u64> bwd;
    bwd.reserve(dom.total_directions());
    for (u64 P = 0; P < p.positions(); ++P)
        for (u64 Q = 0; Q < q.positions(); ++Q) {
            fwd[pair_index(P, Q, q.positions())] = pair_index(Q, P, p.positions());
            for (u64 e = 0; e < q.card(Q); ++e)
                for (u64 d = 0; d < p.card(P); ++d) bwd.push_back(pair_index(d, e, q.card(Q)));
        }
    return PolyMap(dom, cod, std::move(fwd), std::move(bwd));
}

// Flat lexicographic indexing makes these three strict: the tables are
// identities, but the maps are still materialized explicitly so that every
// "modulo unitors" statement is a literal equality of composites.

inline PolyMap tensor_assoc(const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    Polynomial dom = tensor(tensor(p, q), r);
    Polynomial cod = tensor(p, tensor(q, r));
    PolyMap id = identity(dom);
    return PolyMap(dom, cod, id.forward_table(), id.backward_flat());
}

inline PolyMap tensor_unitL(const Polynomial& p) {
    PolyMap id = identity(p);
    return PolyMap(tensor(y_poly(), p), p, id.forward_table(), id.backward_flat());
}

inline PolyMap tensor_unitR(const Polynomial& p) {
    PolyMap id = identity(p);
    return PolyMap(tensor(p, y_poly()), p, id.forward_table(), id.backward_flat());
}

// ---------------------------------------------------------------------------
// Sequential product (functor composition)
// ---------------------------------------------------------------------------

/// Position/direction indexing for p over q: positions are pairs
/// (P, w: p[P] -> q(1)), P-major with w in big-endian mixed radix; the
/// direction set at (P,w) is the sum over d of q[w(d)], d-major.
class SubstLayout {
public:
    SubstLayout(const Polynomial& p, const Polynomial& q)
        : p_cards_(p.cards()), q_cards_(q.cards()) {
        std::vector<u64> blocks(p_cards_.size());
        for (u64 P = 0; P < p_cards_.size(); ++P)
            blocks[P] = checked_pow(q_cards_.size(), p_cards_[P]);
        pos_ = SumLayout(blocks);
    }

    u64 position_count() const { return pos_.total(); }

    u64 encode_position(u64 P, std::span<const u64> w) const {
        u64 a = 0;
        for (u64 v : w) a = a * q_cards_.size() + v;
        return pos_.encode(P, a);
    }

    std::pair<u64, std::vector<u64>> decode_position(u64 flat) const {
        auto [P, rem] = pos_.decode(flat);
        std::vector<u64> w(p_cards_[P]);
        for (u64 i = w.size(); i-- > 0;) {
            w[i] = rem % q_cards_.size();
            rem /= q_cards_.size();
        }
        return {P, std::move(w)};
    }

    u64 card(std::span<const u64> w) const {
        u64 c = 0;
        for (u64 v : w) c = checked_add(c, q_cards_[v]);
        return c;
    }

    /// Flat direction index of (d, e) at a position with assignment w.
    u64 dir_index(std::span<const u64> w, u64 d, u64 e) const {
        u64 off = 0;
        for (u64 i = 0; i < d; ++i) off += q_cards_[w[i]];
        return off + e;
    }

private:
    std::vector<u64> p_cards_, q_cards_;
    SumLayout pos_;
};

inline Polynomial substitute(const Polynomial& p, const Polynomial& q) {
    u64 n = 0;
    for (u64 P = 0; P < p.positions(); ++P)
        n = checked_add(n, checked_pow(q.positions(), p.card(P)));
    guard_cap(n, "substitution positions");
    std::vector<u64> cards;
    cards.reserve(n);
    for (u64 P = 0; P < p.positions(); ++P) {
        MixedRadix space(p.card(P), q.positions());
        if (space.total() == 0) continue;
        std::vector<u64> w(p.card(P), 0);
        do {
            u64 c = 0;
            for (u64 v : w) c = checked_add(c, q.card(v));
            cards.push_back(c);
        } while (space.next(w));
    }
    return Polynomial(std::move(cards));
}

inline PolyMap substitute_map(const PolyMap& f, const PolyMap& g) {
    const Polynomial& p = f.dom();
    const Polynomial& q = g.dom();
    const Polynomial& p2 = f.cod();
    const Polynomial& q2 = g.cod();
    const Polynomial dom = substitute(p, q);
    const Polynomial cod = substitute(p2, q2);
    SubstLayout cod_layout(p2, q2);

    std::vector<u64> fwd;
    fwd.reserve(dom.positions());
    std::vector<u64> bwd;
    u64 entries = 0;

    std::vector<u64> w2, dom_off;
    for (u64 P = 0; P < p.positions(); ++P) {
        MixedRadix space(p.card(P), q.positions());
        if (space.total() == 0) continue;
        const u64 P2 = f.on_position(P);
        std::vector<u64> w(p.card(P), 0);
        do {
            // image assignment: w'(d') = g1(w(f#_P(d')))
            w2.assign(p2.card(P2), 0);
            for (u64 d2 = 0; d2 < p2.card(P2); ++d2)
                w2[d2] = g.on_position(w[f.on_direction(P, d2)]);
            fwd.push_back(cod_layout.encode_position(P2, w2));
            // domain direction offsets for (d, e) pairs under w
            dom_off.assign(p.card(P) + 1, 0);
            for (u64 d = 0; d < p.card(P); ++d) dom_off[d + 1] = dom_off[d] + q.card(w[d]);
            for (u64 d2 = 0; d2 < p2.card(P2); ++d2) {
                const u64 d = f.on_direction(P, d2);
                for (u64 e2 = 0; e2 < q2.card(w2[d2]); ++e2)
                    bwd.push_back(dom_off[d] + g.on_direction(w[d], e2));
            }
            entries = checked_add(entries, cod.card(fwd.back()));
            guard_cap(entries, "substitution map table");
        } while (space.next(w));
    }
    return PolyMap(dom, cod, std::move(fwd), std::move(bwd));
}

/// (p over q) over r  ->  p over (q over r). Only positions re-index; the
/// direction sets agree in nested (d,e,f) order, so backward tables are
/// identities.
inline PolyMap tri_assoc(const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    const Polynomial pq = substitute(p, q);
    const Polynomial qr = substitute(q, r);
    const Polynomial dom = substitute(pq, r);
    const Polynomial cod = substitute(p, qr);
    SubstLayout pq_layout(p, q), qr_layout(q, r), cod_layout(p, qr);

    std::vector<u64> fwd;
    fwd.reserve(dom.positions());
    std::vector<u64> bwd;
    bwd.reserve(dom.total_directions());

    std::vector<u64> v, u;
    u64 x = 0;  // running position index of p over q
    for (u64 P = 0; P < p.positions(); ++P) {
        MixedRadix wspace(p.card(P), q.positions());
        if (wspace.total() == 0) continue;
        std::vector<u64> w1(p.card(P), 0);
        do {
            const u64 inner_dirs = pq.card(x);
            MixedRadix w2space(inner_dirs, r.positions());
            if (w2space.total() != 0) {
                std::vector<u64> w2(inner_dirs, 0);
                do {
                    v.assign(p.card(P), 0);
                    u64 flat = 0;  // runs over (d,e) pairs in order
                    u64 total_card = 0;
                    for (u64 d = 0; d < p.card(P); ++d) {
                        u.assign(q.card(w1[d]), 0);
                        for (u64 e = 0; e < q.card(w1[d]); ++e) {
                            u[e] = w2[flat++];
                            total_card += r.card(u[e]);
                        }
                        v[d] = qr_layout.encode_position(w1[d], u);
                    }
                    fwd.push_back(cod_layout.encode_position(P, v));
                    for (u64 i = 0; i < total_card; ++i) bwd.push_back(i);
                } while (w2space.next(w2));
            }
            ++x;
        } while (wspace.next(w1));
    }
    return PolyMap(dom, cod, std::move(fwd), std::move(bwd));
}

/// y over p -> p and p over y -> p; strict under this indexing.
inline PolyMap tri_unitL(const Polynomial& p) {
    PolyMap id = identity(p);
    return PolyMap(substitute(y_poly(), p), p, id.forward_table(), id.backward_flat());
}

inline PolyMap tri_unitR(const Polynomial& p) {
    PolyMap id = identity(p);
    return PolyMap(substitute(p, y_poly()), p, id.forward_table(), id.backward_flat());
}

// ---------------------------------------------------------------------------
// Interchange, distributors, mix
// ---------------------------------------------------------------------------

/// (p1 over p2) tensor (q1 over q2)  ->  (p1 tensor q1) over (p2 tensor q2).
/// Forward pairs the assignments pointwise; backward pairs directions.
inline PolyMap duoidal(const Polynomial& p1, const Polynomial& p2, const Polynomial& q1,
                       const Polynomial& q2) {
    const Polynomial sp = substitute(p1, p2), sq = substitute(q1, q2);
    const Polynomial dom = tensor(sp, sq);
    const Polynomial cod = substitute(tensor(p1, q1), tensor(p2, q2));
    SubstLayout sp_layout(p1, p2), sq_layout(q1, q2);
    SubstLayout cod_layout(tensor(p1, q1), tensor(p2, q2));
    const u64 q2n = q2.positions();

    std::vector<u64> fwd(dom.positions());
    std::vector<u64> bwd;
    u64 entries = 0;
    for (u64 x1 = 0; x1 < sp.positions(); ++x1) {
        auto [P1, w1] = sp_layout.decode_position(x1);
        std::vector<u64> off1(w1.size() + 1, 0);
        for (u64 d = 0; d < w1.size(); ++d) off1[d + 1] = off1[d] + p2.card(w1[d]);
        for (u64 x2 = 0; x2 < sq.positions(); ++x2) {
            auto [Q1, w2] = sq_layout.decode_position(x2);
            std::vector<u64> off2(w2.size() + 1, 0);
            for (u64 e = 0; e < w2.size(); ++e) off2[e + 1] = off2[e] + q2.card(w2[e]);
            // v(d,e) = (w1(d), w2(e)) as a position of p2 tensor q2
            std::vector<u64> v;
            v.reserve(w1.size() * w2.size());
            for (u64 d = 0; d < w1.size(); ++d)
                for (u64 e = 0; e < w2.size(); ++e) v.push_back(pair_index(w1[d], w2[e], q2n));
            fwd[pair_index(x1, x2, sq.positions())] =
                cod_layout.encode_position(pair_index(P1, Q1, q1.positions()), v);
            for (u64 d = 0; d < w1.size(); ++d)
                for (u64 e = 0; e < w2.size(); ++e)
                    for (u64 b = 0; b < p2.card(w1[d]); ++b)
                        for (u64 c = 0; c < q2.card(w2[e]); ++c) {
                            bwd.push_back(pair_index(off1[d] + b, off2[e] + c, sq.card(x2)));
                            ++entries;
                        }
            guard_cap(entries, "duoidal map table");
        }
    }
    return PolyMap(dom, cod, std::move(fwd), std::move(bwd));
}

inline PolyMap mix_map() { return identity(y_poly()); }

/// Left distributor a tensor (b over c) -> (a tensor b) over c, built by
/// introducing the sequential unit, interchanging, and eliminating the
/// parallel unit (the unit comparison is the identity here).
inline PolyMap dist_l(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    const Polynomial bc = substitute(b, c);
    const Polynomial ab = tensor(a, b);
    PolyMap intro = tensor_map(inverse(tri_unitR(a)), identity(bc));
    PolyMap duo = duoidal(a, y_poly(), b, c);
    PolyMap units = substitute_map(
        identity(ab), compose(tensor_map(inverse(mix_map()), identity(c)), tensor_unitL(c)));
    return compose(compose(intro, duo), units);
}

/// Right distributor (b over c) tensor a -> b over (c tensor a).
inline PolyMap dist_r(const Polynomial& b, const Polynomial& c, const Polynomial& a) {
    const Polynomial bc = substitute(b, c);
    const Polynomial ca = tensor(c, a);
    PolyMap intro = tensor_map(identity(bc), inverse(tri_unitL(a)));
    PolyMap duo = duoidal(b, c, y_poly(), a);
    PolyMap units = substitute_map(
        compose(tensor_map(identity(b), inverse(mix_map())), tensor_unitR(b)), identity(ca));
    return compose(compose(intro, duo), units);
}

/// Permuting distributors, from the parallel symmetry.
inline PolyMap perm_dist_lr(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    return compose(compose(tensor_sym(a, substitute(b, c)), dist_r(b, c, a)),
                   substitute_map(identity(b), tensor_sym(c, a)));
}

inline PolyMap perm_dist_rl(const Polynomial& b, const Polynomial& c, const Polynomial& a) {
    return compose(compose(tensor_sym(substitute(b, c), a), dist_l(a, b, c)),
                   substitute_map(tensor_sym(a, b), identity(c)));
}

/// The canonical comparison p tensor q -> p over q: the image assignment is
/// constant at Q, and directions map identically. Always cartesian.
inline PolyMap indep(const Polynomial& p, const Polynomial& q) {
    const Polynomial dom = tensor(p, q);
    const Polynomial cod = substitute(p, q);
    SubstLayout cod_layout(p, q);
    std::vector<u64> fwd(dom.positions());
    std::vector<u64> bwd;
    bwd.reserve(dom.total_directions());
    std::vector<u64> w;
    for (u64 P = 0; P < p.positions(); ++P)
        for (u64 Q = 0; Q < q.positions(); ++Q) {
            w.assign(p.card(P), Q);
            fwd[pair_index(P, Q, q.positions())] = cod_layout.encode_position(P, w);
            for (u64 i = 0; i < p.card(P) * q.card(Q); ++i) bwd.push_back(i);
        }
    return PolyMap(dom, cod, std::move(fwd), std::move(bwd));
}

}  // namespace polyldc
