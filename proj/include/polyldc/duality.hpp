#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "polyldc/closure.hpp"
#include "polyldc/report.hpp"

namespace polyldc {

/// A candidate linear duality left -| right: a unit y -> right over left and
/// a counit left tensor right -> y. verify_dual_pair decides whether the two
/// snake composites are identities.
struct DualityWitness {
    Polynomial left;   // b
    Polynomial right;  // a
    PolyMap eta;       // y -> a over b
    PolyMap epsilon;   // b tensor a -> y
};

inline DualityWitness make_witness(Polynomial left, Polynomial right, PolyMap eta,
                                   PolyMap epsilon) {
    if (eta.dom() != y_poly() || eta.cod() != substitute(right, left))
        throw DomainMismatchError("witness: eta must map y to right over left");
    if (epsilon.dom() != tensor(left, right) || epsilon.cod() != y_poly())
        throw DomainMismatchError("witness: epsilon must map left tensor right to y");
    return DualityWitness{std::move(left), std::move(right), std::move(eta), std::move(epsilon)};
}

/// a -> y tensor a -> (a over b) tensor a -> a over (b tensor a) -> a over y -> a
inline PolyMap snake_right(const DualityWitness& w) {
    const Polynomial& a = w.right;
    const Polynomial& b = w.left;
    return compose(inverse(tensor_unitL(a)), tensor_map(w.eta, identity(a)), dist_r(a, b, a),
                   substitute_map(identity(a), w.epsilon), tri_unitR(a));
}

/// b -> b tensor y -> b tensor (a over b) -> (b tensor a) over b -> y over b -> b
inline PolyMap snake_left(const DualityWitness& w) {
    const Polynomial& a = w.right;
    const Polynomial& b = w.left;
    return compose(inverse(tensor_unitR(b)), tensor_map(identity(b), w.eta), dist_l(b, a, b),
                   substitute_map(w.epsilon, identity(b)), tri_unitL(b));
}

inline LawReport verify_dual_pair(const DualityWitness& w) {
    LawReport right = compare_maps("duality/snake-right", snake_right(w), identity(w.right));
    if (!right.pass) {
        right.law = "duality/snakes";
        return right;
    }
    LawReport left = compare_maps("duality/snake-left", snake_left(w), identity(w.left));
    left.law = "duality/snakes";
    left.stats.emplace_back("right_positions", w.right.positions());
    return left;
}

/// The canonical duality Ay -| y^A with unit coev and counit ev.
inline DualityWitness canonical_dual(const FiniteSet& a) {
    Polynomial left = linear(a);
    Polynomial right = representable(a);
    PolyMap eta = coeval_map(y_poly(), left);
    PolyMap epsilon = eval_map(left, y_poly());
    return make_witness(std::move(left), std::move(right), std::move(eta), std::move(epsilon));
}
inline DualityWitness canonical_dual(u64 n) { return canonical_dual(FiniteSet{n}); }

/// Double-dual comparison p -> (y over [p,y]) built from coev, the right
/// distributor, and ev. Small only when p has few sections; guarded by the cap.
inline PolyMap phi(const Polynomial& p) {
    const Polynomial cl = close(p, y_poly());
    const Polynomial w = coclose(y_poly(), cl);
    return compose(inverse(tensor_unitL(p)), tensor_map(coeval_map(y_poly(), cl), identity(p)),
                   dist_r(w, cl, p),
                   substitute_map(identity(w), eval_map_swapped(p, y_poly())), tri_unitR(w));
}

/// Double-dual comparison [y over q, y] -> q via coev, the left distributor,
/// and ev.
inline PolyMap psi(const Polynomial& q) {
    const Polynomial s = coclose(y_poly(), q);
    const Polynomial cs = close(s, y_poly());
    return compose(inverse(tensor_unitR(cs)), tensor_map(identity(cs), coeval_map(y_poly(), q)),
                   dist_l(cs, s, q),
                   substitute_map(eval_map_swapped(s, y_poly()), identity(q)), tri_unitL(q));
}

/// With a retraction chi of phi(p), the closed composite on [p,y] that must
/// be the identity when p is right-dualable.
inline PolyMap double_dual_hom_composite_right(const Polynomial& p, const PolyMap& chi) {
    const Polynomial cl = close(p, y_poly());
    const Polynomial w = coclose(y_poly(), cl);
    return compose(inverse(tensor_unitR(cl)), tensor_map(identity(cl), coeval_map(y_poly(), cl)),
                   dist_l(cl, w, cl),
                   substitute_map(tensor_map(identity(cl), chi), identity(cl)),
                   substitute_map(eval_map_swapped(p, y_poly()), identity(cl)), tri_unitL(cl));
}

/// With a section omega of psi(q), the closed composite on y over q that must
/// be the identity when q is left-dualable.
inline PolyMap double_dual_hom_composite_left(const Polynomial& q, const PolyMap& omega) {
    const Polynomial s = coclose(y_poly(), q);
    const Polynomial cs = close(s, y_poly());
    return compose(inverse(tensor_unitL(s)), tensor_map(coeval_map(y_poly(), q), identity(s)),
                   dist_r(s, q, s),
                   substitute_map(identity(s), tensor_map(omega, identity(s))),
                   substitute_map(identity(s), eval_map_swapped(s, y_poly())), tri_unitR(s));
}

/// Right-dualable objects are exactly the one-position polynomials; returns
/// the witnessing direction set.
inline std::optional<FiniteSet> decide_right_dualable(const Polynomial& p) {
    if (p.is_representable()) return FiniteSet{p.card(0)};
    return std::nullopt;
}

/// Left-dualable objects are exactly the one-direction-per-position ones;
/// returns the witnessing position set.
inline std::optional<FiniteSet> decide_left_dualable(const Polynomial& q) {
    if (q.is_linear()) return FiniteSet{q.positions()};
    return std::nullopt;
}

/// Finite search for a retraction of phi(p); the existential half of the
/// right-dualability characterization, used to cross-validate the shape test.
inline std::optional<PolyMap> search_phi_retraction(const Polynomial& p) {
    const PolyMap f = phi(p);
    const PolyMap id_p = identity(p);
    std::optional<PolyMap> found;
    for_each_hom(f.cod(), p, [&](const PolyMap& chi) {
        if (!found && compose(f, chi) == id_p) found = chi;
    });
    return found;
}

/// Finite search for a section of psi(q).
inline std::optional<PolyMap> search_psi_section(const Polynomial& q) {
    const PolyMap f = psi(q);
    const PolyMap id_q = identity(q);
    std::optional<PolyMap> found;
    for_each_hom(q, f.dom(), [&](const PolyMap& omega) {
        if (!found && compose(omega, f) == id_q) found = omega;
    });
    return found;
}

struct FoundDuality {
    Polynomial left;
    Polynomial right;
    std::vector<DualityWitness> witnesses;
};

namespace detail {
inline void search_pair(const Polynomial& q, const Polynomial& p,
                        std::vector<FoundDuality>& out) {
    // Both snake laws force the right leg to a single position: the position
    // component of the right snake is the constant position chosen by eta,
    // independent of epsilon and of the input position.
    if (p.positions() != 1) return;
    const Polynomial home = substitute(p, q);
    const Polynomial counit_dom = tensor(q, p);
    std::vector<DualityWitness> witnesses;
    for_each_hom(y_poly(), home, [&](const PolyMap& eta) {
        for_each_hom(counit_dom, y_poly(), [&](const PolyMap& epsilon) {
            DualityWitness w{q, p, eta, epsilon};
            if (snake_right(w) == identity(p) && snake_left(w) == identity(q))
                witnesses.push_back(std::move(w));
        });
    });
    if (!witnesses.empty()) out.push_back({q, p, std::move(witnesses)});
}
}  // namespace detail

/// Exhaustive search for linear dualities among polynomials within the given
/// bounds. Candidate pairs are independent work units; the output order is
/// the enumeration order of (left, right) regardless of scheduling.
inline std::vector<FoundDuality> search_duals(u64 max_positions, u64 max_directions,
                                              unsigned threads = 0) {
    const std::vector<Polynomial> family = enumerate_polynomials(max_positions, max_directions);
    std::vector<std::pair<Polynomial, Polynomial>> pairs;
    for (const Polynomial& q : family)
        for (const Polynomial& p : family) pairs.emplace_back(q, p);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, 8);
    const u64 chunk = (pairs.size() + threads - 1) / threads;
    std::vector<std::future<std::vector<FoundDuality>>> futures;
    for (unsigned t = 0; t < threads; ++t) {
        const u64 begin = t * chunk, end = std::min<u64>(pairs.size(), begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, [&pairs, begin, end] {
            std::vector<FoundDuality> local;
            for (u64 i = begin; i < end; ++i)
                detail::search_pair(pairs[i].first, pairs[i].second, local);
            return local;
        }));
    }
    std::vector<FoundDuality> out;
    for (auto& f : futures)
        for (auto& d : f.get()) out.push_back(std::move(d));
    std::sort(out.begin(), out.end(), [](const FoundDuality& x, const FoundDuality& y) {
        if (x.left != y.left) return x.left < y.left;
        return x.right < y.right;
    });
    return out;
}

/// Transpose of a map between left legs to a map between right legs:
/// f: b -> b' gives a' -> a through the unit of the first duality and the
/// counit of the second.
inline PolyMap mate(const PolyMap& f, const DualityWitness& w, const DualityWitness& w2) {
    if (f.dom() != w.left || f.cod() != w2.left)
        throw DomainMismatchError("mate: map must go between the left legs");
    const Polynomial& a = w.right;
    const Polynomial& a2 = w2.right;
    return compose(inverse(tensor_unitL(a2)), tensor_map(w.eta, identity(a2)),
                   tensor_map(substitute_map(identity(a), f), identity(a2)),
                   dist_r(a, w2.left, a2), substitute_map(identity(a), w2.epsilon),
                   tri_unitR(a));
}

/// Inverse transpose: g: a' -> a gives b -> b' through the unit of the second
/// duality and the counit of the first.
inline PolyMap mate_inverse(const PolyMap& g, const DualityWitness& w, const DualityWitness& w2) {
    if (g.dom() != w2.right || g.cod() != w.right)
        throw DomainMismatchError("mate_inverse: map must go between the right legs");
    const Polynomial& b = w.left;
    const Polynomial& b2 = w2.left;
    return compose(inverse(tensor_unitR(b)), tensor_map(identity(b), w2.eta),
                   tensor_map(identity(b), substitute_map(g, identity(b2))),
                   dist_l(b, w.right, b2), substitute_map(w.epsilon, identity(b2)),
                   tri_unitL(b2));
}

/// The two equations making (f, g) a morphism of duals.
inline LawReport verify_dual_morphism(const PolyMap& f, const PolyMap& g,
                                      const DualityWitness& w, const DualityWitness& w2) {
    LawReport unit = compare_maps(
        "duality/morphism-unit", compose(w2.eta, substitute_map(g, identity(w2.left))),
        compose(w.eta, substitute_map(identity(w.right), f)));
    if (!unit.pass) return unit;
    LawReport counit = compare_maps(
        "duality/morphism-counit", compose(tensor_map(f, identity(w2.right)), w2.epsilon),
        compose(tensor_map(identity(w.left), g), w.epsilon));
    counit.law = "duality/morphism";
    return counit;
}

/// The two unit/counit interchange squares that hold in any mix setting; the
/// mix comparison is the identity here.
inline LawReport verify_mix_eta_epsilon(const DualityWitness& w) {
    const Polynomial& a = w.right;
    const Polynomial& b = w.left;
    const Polynomial ba = tensor(b, a);
    const Polynomial ab = substitute(a, b);
    PolyMap through_unit = compose(w.epsilon, mix_map(), w.eta);
    PolyMap square_i =
        compose(inverse(tensor_unitL(ba)), tensor_map(w.eta, identity(ba)),
                tensor_map(identity(ab), w.epsilon),
                tensor_map(identity(ab), mix_map()), tensor_unitR(ab));
    LawReport first = compare_maps("duality/mix-eta-epsilon-i", square_i, through_unit);
    if (!first.pass) return first;
    PolyMap square_ii =
        compose(inverse(tensor_unitR(ba)), tensor_map(identity(ba), w.eta),
                tensor_map(w.epsilon, identity(ab)),
                tensor_map(mix_map(), identity(ab)), tensor_unitL(ab));
    LawReport second = compare_maps("duality/mix-eta-epsilon-ii", square_ii, through_unit);
    second.law = "duality/mix-eta-epsilon";
    return second;
}

/// Transposes of the unit and counit: the unit transpose is a retraction and
/// the counit transpose is a section, witnessed by explicit partners.
inline LawReport verify_retract_section(const DualityWitness& w) {
    const Polynomial& a = w.right;
    const Polynomial& b = w.left;
    const Polynomial s = coclose(y_poly(), b);

    PolyMap eta_prime = cocurry(w.eta, a, b);
    PolyMap phi_partner =
        compose(inverse(tensor_unitL(a)), tensor_map(coeval_map(y_poly(), b), identity(a)),
                dist_r(s, b, a), substitute_map(identity(s), w.epsilon), tri_unitR(s));
    LawReport retract = compare_maps("duality/unit-transpose-retraction",
                                     compose(phi_partner, eta_prime), identity(a));
    if (!retract.pass) return retract;

    const Polynomial cl = close(a, y_poly());
    PolyMap eps_prime = curry(compose(tensor_sym(a, b), w.epsilon), a, b);
    PolyMap psi_partner =
        compose(inverse(tensor_unitR(cl)), tensor_map(identity(cl), w.eta), dist_l(cl, a, b),
                substitute_map(eval_map_swapped(a, y_poly()), identity(b)), tri_unitL(b));
    LawReport section = compare_maps("duality/counit-transpose-section",
                                     compose(eps_prime, psi_partner), identity(b));
    section.law = "duality/retract-section";
    return section;
}

}  // namespace polyldc
