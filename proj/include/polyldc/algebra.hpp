#pragma once

#include <utility>
#include <vector>

#include "polyldc/cores.hpp"

namespace polyldc {

/// A finite monoid: carrier 0..order-1, row-major multiplication table, unit.
/// Associativity and the unit laws are checked at construction.
class FiniteMonoid {
public:
    FiniteMonoid(u64 order, u64 unit, std::vector<u64> table)
        : order_(order), unit_(unit), table_(std::move(table)) {
        if (unit_ >= order_) throw DomainMismatchError("monoid: unit outside carrier");
        if (table_.size() != order_ * order_)
            throw DomainMismatchError("monoid: table must be order x order");
        for (u64 v : table_)
            if (v >= order_) throw DomainMismatchError("monoid: table value outside carrier");
        for (u64 x = 0; x < order_; ++x)
            if (mul(unit_, x) != x || mul(x, unit_) != x)
                throw DomainMismatchError("monoid: unit laws fail at " + std::to_string(x));
        for (u64 x = 0; x < order_; ++x)
            for (u64 y = 0; y < order_; ++y)
                for (u64 z = 0; z < order_; ++z)
                    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                        throw DomainMismatchError("monoid: associativity fails at (" +
                                                  std::to_string(x) + "," + std::to_string(y) +
                                                  "," + std::to_string(z) + ")");
    }

    u64 order() const { return order_; }
    u64 unit() const { return unit_; }
    u64 mul(u64 x, u64 y) const { return table_[x * order_ + y]; }
    const std::vector<u64>& table() const { return table_; }

    friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
        return a.order_ == b.order_ && a.unit_ == b.unit_ && a.table_ == b.table_;
    }

private:
    u64 order_;
    u64 unit_;
    std::vector<u64> table_;
};

/// All monoid tables on the carrier 0..n-1, deduplicated exactly and in a
/// deterministic order (unit-major, then table-lexicographic). A table's unit
/// is unique, so enumerating per unit choice never repeats a table.
inline std::vector<FiniteMonoid> enumerate_monoids(u64 n) {
    if (n > 4) throw SizeCapError("monoid enumeration limited to carriers of size 4");
    std::vector<FiniteMonoid> out;
    if (n == 0) return out;
    for (u64 e = 0; e < n; ++e) {
        std::vector<std::pair<u64, u64>> free_cells;
        for (u64 x = 0; x < n; ++x)
            for (u64 y = 0; y < n; ++y)
                if (x != e && y != e) free_cells.emplace_back(x, y);
        MixedRadix space(free_cells.size(), n);
        std::vector<u64> values(free_cells.size(), 0);
        std::vector<u64> table(n * n);
        do {
            for (u64 x = 0; x < n; ++x) {
                table[e * n + x] = x;
                table[x * n + e] = x;
            }
            for (u64 i = 0; i < free_cells.size(); ++i)
                table[free_cells[i].first * n + free_cells[i].second] = values[i];
            bool assoc = true;
            for (u64 x = 0; x < n && assoc; ++x)
                for (u64 y = 0; y < n && assoc; ++y)
                    for (u64 z = 0; z < n && assoc; ++z)
                        assoc = table[table[x * n + y] * n + z] == table[x * n + table[y * n + z]];
            if (assoc) out.emplace_back(n, e, table);
        } while (space.next(values));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parallel-product (co)monoid structures and the sequential structures the
// dualities induce on the opposite leg.
// ---------------------------------------------------------------------------

struct TensorMonoid {
    Polynomial carrier;
    PolyMap mu;  // carrier tensor carrier -> carrier
    PolyMap nu;  // y -> carrier
};

struct TensorComonoid {
    Polynomial carrier;
    PolyMap delta;  // carrier -> carrier tensor carrier
    PolyMap gamma;  // carrier -> y
};

struct TriComonoid {
    Polynomial carrier;
    PolyMap delta;  // carrier -> carrier over carrier
    PolyMap gamma;  // carrier -> y
};

struct TriMonoid {
    Polynomial carrier;
    PolyMap mu;  // carrier over carrier -> carrier
    PolyMap nu;  // y -> carrier
};

struct LinearMonoid {
    DualityWitness duality;
    bool structure_on_left;  // which leg carries the parallel monoid
    TensorMonoid monoid;
    TriComonoid induced;  // on the other leg
};

struct LinearComonoid {
    DualityWitness duality;
    bool structure_on_left;
    TensorComonoid comonoid;
    TriMonoid induced;  // on the other leg
};

/// Sequential comonoid induced on the opposite leg by a parallel monoid
/// through the duality: unit maps introduce the dual pair, the monoid
/// multiplies the paired directions, and the counit closes the loop.
inline TriComonoid induce_tri_comonoid(const DualityWitness& w, const TensorMonoid& m,
                                       bool monoid_on_left) {
    const Polynomial& a = w.right;
    const Polynomial& b = w.left;
    if (monoid_on_left) {
        // comonoid on the right leg a
        PolyMap grow = compose(inverse(tensor_unitL(b)), tensor_map(w.eta, identity(b)),
                               dist_r(a, b, b), substitute_map(identity(a), m.mu));
        PolyMap delta = compose(
            inverse(tensor_unitL(a)), tensor_map(w.eta, identity(a)),
            tensor_map(substitute_map(identity(a), grow), identity(a)),
            tensor_map(inverse(tri_assoc(a, a, b)), identity(a)),
            dist_r(substitute(a, a), b, a),
            substitute_map(identity(substitute(a, a)), w.epsilon),
            tri_unitR(substitute(a, a)));
        PolyMap gamma = compose(inverse(tensor_unitL(a)), tensor_map(m.nu, identity(a)),
                                w.epsilon);
        return TriComonoid{a, std::move(delta), std::move(gamma)};
    }
    // comonoid on the left leg b
    PolyMap grow = compose(inverse(tensor_unitR(a)), tensor_map(identity(a), w.eta),
                           dist_l(a, a, b), substitute_map(m.mu, identity(b)));
    PolyMap delta = compose(
        inverse(tensor_unitR(b)), tensor_map(identity(b), w.eta),
        tensor_map(identity(b), substitute_map(grow, identity(b))),
        tensor_map(identity(b), tri_assoc(a, b, b)),
        dist_l(b, a, substitute(b, b)),
        substitute_map(w.epsilon, identity(substitute(b, b))),
        tri_unitL(substitute(b, b)));
    PolyMap gamma =
        compose(inverse(tensor_unitR(b)), tensor_map(identity(b), m.nu), w.epsilon);
    return TriComonoid{b, std::move(delta), std::move(gamma)};
}

/// Sequential monoid induced on the opposite leg by a parallel comonoid.
inline TriMonoid induce_tri_monoid(const DualityWitness& w, const TensorComonoid& c,
                                   bool comonoid_on_left) {
    const Polynomial& a = w.right;
    const Polynomial& b = w.left;
    if (comonoid_on_left) {
        // monoid on the right leg a
        const Polynomial aa = substitute(a, a);
        PolyMap collapse = compose(
            tensor_assoc(b, b, aa), tensor_map(identity(b), dist_l(b, a, a)),
            tensor_map(identity(b), substitute_map(w.epsilon, identity(a))),
            tensor_map(identity(b), tri_unitL(a)), w.epsilon);
        PolyMap mu = compose(
            inverse(tensor_unitL(aa)), tensor_map(w.eta, identity(aa)),
            tensor_map(substitute_map(identity(a), c.delta), identity(aa)),
            dist_r(a, tensor(b, b), aa), substitute_map(identity(a), collapse), tri_unitR(a));
        PolyMap nu = compose(w.eta, substitute_map(identity(a), c.gamma), tri_unitR(a));
        return TriMonoid{a, std::move(mu), std::move(nu)};
    }
    // monoid on the left leg b
    const Polynomial bb = substitute(b, b);
    PolyMap collapse = compose(
        inverse(tensor_assoc(bb, a, a)), tensor_map(dist_r(b, b, a), identity(a)),
        tensor_map(substitute_map(identity(b), w.epsilon), identity(a)),
        tensor_map(tri_unitR(b), identity(a)), w.epsilon);
    PolyMap mu = compose(
        inverse(tensor_unitR(bb)), tensor_map(identity(bb), w.eta),
        tensor_map(identity(bb), substitute_map(c.delta, identity(b))),
        dist_l(bb, tensor(a, a), b), substitute_map(collapse, identity(b)), tri_unitL(b));
    PolyMap nu = compose(w.eta, substitute_map(c.gamma, identity(b)), tri_unitL(b));
    return TriMonoid{b, std::move(mu), std::move(nu)};
}

/// Left linear monoid on My -| y^M: multiplication runs the monoid table on
/// positions of My.
inline LinearMonoid left_linear_monoid(const FiniteMonoid& m) {
    const u64 n = m.order();
    DualityWitness w = canonical_dual(n);
    Polynomial my = linear(n);
    std::vector<u64> fwd(n * n);
    for (u64 x = 0; x < n; ++x)
        for (u64 y = 0; y < n; ++y) fwd[x * n + y] = m.mul(x, y);
    PolyMap mu(tensor(my, my), my, std::move(fwd), std::vector<u64>(n * n, 0));
    PolyMap nu(y_poly(), my, {m.unit()}, {0});
    TensorMonoid monoid{my, std::move(mu), std::move(nu)};
    TriComonoid induced = induce_tri_comonoid(w, monoid, true);
    return LinearMonoid{std::move(w), true, std::move(monoid), std::move(induced)};
}

/// Right linear monoid on Ay -| y^A: multiplication is the backward diagonal
/// on y^A, the unit the backward terminal map.
inline LinearMonoid right_linear_monoid(const FiniteSet& set) {
    const u64 n = set.size;
    DualityWitness w = canonical_dual(n);
    Polynomial ya = representable(n);
    std::vector<u64> diag(n);
    for (u64 x = 0; x < n; ++x) diag[x] = x * n + x;
    PolyMap mu(tensor(ya, ya), ya, {0}, std::move(diag));
    PolyMap nu(y_poly(), ya, {0}, std::vector<u64>(n, 0));
    TensorMonoid monoid{ya, std::move(mu), std::move(nu)};
    TriComonoid induced = induce_tri_comonoid(w, monoid, false);
    return LinearMonoid{std::move(w), false, std::move(monoid), std::move(induced)};
}

/// Left linear comonoid on Ay -| y^A: forward diagonal and terminal maps.
inline LinearComonoid left_linear_comonoid(const FiniteSet& set) {
    const u64 n = set.size;
    DualityWitness w = canonical_dual(n);
    Polynomial ay = linear(n);
    std::vector<u64> diag(n);
    for (u64 x = 0; x < n; ++x) diag[x] = x * n + x;
    PolyMap delta(ay, tensor(ay, ay), std::move(diag), std::vector<u64>(n, 0));
    PolyMap gamma(ay, y_poly(), std::vector<u64>(n, 0), std::vector<u64>(n, 0));
    TensorComonoid comonoid{ay, std::move(delta), std::move(gamma)};
    TriMonoid induced = induce_tri_monoid(w, comonoid, true);
    return LinearComonoid{std::move(w), true, std::move(comonoid), std::move(induced)};
}

/// Right linear comonoid on My -| y^M: the monoid transported backward onto
/// the representable.
inline LinearComonoid right_linear_comonoid(const FiniteMonoid& m) {
    const u64 n = m.order();
    DualityWitness w = canonical_dual(n);
    Polynomial ym = representable(n);
    std::vector<u64> back(n * n);
    for (u64 x = 0; x < n; ++x)
        for (u64 y = 0; y < n; ++y) back[x * n + y] = m.mul(x, y);
    PolyMap delta(ym, tensor(ym, ym), {0}, std::move(back));
    PolyMap gamma(ym, y_poly(), {0}, {m.unit()});
    TensorComonoid comonoid{ym, std::move(delta), std::move(gamma)};
    TriMonoid induced = induce_tri_monoid(w, comonoid, false);
    return LinearComonoid{std::move(w), false, std::move(comonoid), std::move(induced)};
}

// ---------------------------------------------------------------------------
// Law batteries
// ---------------------------------------------------------------------------

inline std::vector<LawReport> tensor_monoid_laws(const TensorMonoid& m) {
    const Polynomial& c = m.carrier;
    std::vector<LawReport> out;
    out.push_back(compare_maps(
        "algebra/tensor-monoid-assoc", compose(tensor_map(m.mu, identity(c)), m.mu),
        compose(tensor_assoc(c, c, c), tensor_map(identity(c), m.mu), m.mu)));
    out.push_back(compare_maps(
        "algebra/tensor-monoid-unit-left",
        compose(inverse(tensor_unitL(c)), tensor_map(m.nu, identity(c)), m.mu), identity(c)));
    out.push_back(compare_maps(
        "algebra/tensor-monoid-unit-right",
        compose(inverse(tensor_unitR(c)), tensor_map(identity(c), m.nu), m.mu), identity(c)));
    return out;
}

inline std::vector<LawReport> tensor_comonoid_laws(const TensorComonoid& m) {
    const Polynomial& c = m.carrier;
    std::vector<LawReport> out;
    out.push_back(compare_maps(
        "algebra/tensor-comonoid-coassoc",
        compose(m.delta, tensor_map(m.delta, identity(c)), tensor_assoc(c, c, c)),
        compose(m.delta, tensor_map(identity(c), m.delta))));
    out.push_back(compare_maps(
        "algebra/tensor-comonoid-counit-left",
        compose(m.delta, tensor_map(m.gamma, identity(c)), tensor_unitL(c)), identity(c)));
    out.push_back(compare_maps(
        "algebra/tensor-comonoid-counit-right",
        compose(m.delta, tensor_map(identity(c), m.gamma), tensor_unitR(c)), identity(c)));
    return out;
}

inline std::vector<LawReport> tri_comonoid_laws(const TriComonoid& m) {
    const Polynomial& c = m.carrier;
    std::vector<LawReport> out;
    out.push_back(compare_maps(
        "algebra/tri-comonoid-coassoc",
        compose(m.delta, substitute_map(m.delta, identity(c)), tri_assoc(c, c, c)),
        compose(m.delta, substitute_map(identity(c), m.delta))));
    out.push_back(compare_maps(
        "algebra/tri-comonoid-counit-left",
        compose(m.delta, substitute_map(m.gamma, identity(c)), tri_unitL(c)), identity(c)));
    out.push_back(compare_maps(
        "algebra/tri-comonoid-counit-right",
        compose(m.delta, substitute_map(identity(c), m.gamma), tri_unitR(c)), identity(c)));
    return out;
}

inline std::vector<LawReport> tri_monoid_laws(const TriMonoid& m) {
    const Polynomial& c = m.carrier;
    std::vector<LawReport> out;
    out.push_back(compare_maps(
        "algebra/tri-monoid-assoc", compose(substitute_map(m.mu, identity(c)), m.mu),
        compose(tri_assoc(c, c, c), substitute_map(identity(c), m.mu), m.mu)));
    out.push_back(compare_maps(
        "algebra/tri-monoid-unit-left",
        compose(inverse(tri_unitL(c)), substitute_map(m.nu, identity(c)), m.mu), identity(c)));
    out.push_back(compare_maps(
        "algebra/tri-monoid-unit-right",
        compose(inverse(tri_unitR(c)), substitute_map(identity(c), m.nu), m.mu), identity(c)));
    return out;
}

/// The four bialgebra interaction laws between a parallel monoid and a
/// parallel comonoid on the same carrier.
inline std::vector<LawReport> bialgebra_laws(const TensorMonoid& mon, const TensorComonoid& com) {
    if (mon.carrier != com.carrier)
        throw DomainMismatchError("bialgebra: structures live on different carriers");
    const Polynomial& c = mon.carrier;
    const Polynomial cc = tensor(c, c);
    std::vector<LawReport> out;
    out.push_back(compare_maps("algebra/bialgebra-mult-counit", compose(mon.mu, com.gamma),
                               compose(tensor_map(com.gamma, com.gamma), tensor_unitL(y_poly()))));
    out.push_back(compare_maps("algebra/bialgebra-unit-comult", compose(mon.nu, com.delta),
                               compose(inverse(tensor_unitL(y_poly())),
                                       tensor_map(mon.nu, mon.nu))));
    out.push_back(compare_maps("algebra/bialgebra-unit-counit", compose(mon.nu, com.gamma),
                               identity(y_poly())));
    PolyMap middle = compose(
        tensor_assoc(c, c, cc),
        tensor_map(identity(c), inverse(tensor_assoc(c, c, c))),
        tensor_map(identity(c), tensor_map(tensor_sym(c, c), identity(c))),
        tensor_map(identity(c), tensor_assoc(c, c, c)),
        inverse(tensor_assoc(c, c, cc)));
    out.push_back(compare_maps(
        "algebra/bialgebra-square", compose(mon.mu, com.delta),
        compose(tensor_map(com.delta, com.delta), middle, tensor_map(mon.mu, mon.mu))));
    return out;
}

/// Single-report wrapper over the four interaction laws.
inline LawReport check_bialgebra(const TensorMonoid& mon, const TensorComonoid& com) {
    return combine("algebra/bialgebra", bialgebra_laws(mon, com));
}

}  // namespace polyldc
