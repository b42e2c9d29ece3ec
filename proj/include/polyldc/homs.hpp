#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "polyldc/map.hpp"

namespace polyldc {

/// Canonical enumeration of p applied to a set of size x: elements are pairs
/// (P, assignment p[P] -> x), position-major, assignment in big-endian mixed
/// radix. This layout is what coclosure direction sets are built from.
class EvalLayout {
public:
    EvalLayout(const Polynomial& p, u64 x) : x_(x), cards_(p.cards()) {
        std::vector<u64> sizes(cards_.size());
        for (u64 i = 0; i < sizes.size(); ++i) sizes[i] = checked_pow(x, cards_[i]);
        blocks_ = SumLayout(sizes);
    }

    u64 total() const { return blocks_.total(); }
    u64 offset(u64 pos) const { return blocks_.offset(pos); }
    u64 block_size(u64 pos) const { return blocks_.block_size(pos); }

    u64 encode(u64 pos, std::span<const u64> assignment) const {
        u64 a = 0;
        for (u64 v : assignment) a = a * x_ + v;
        return blocks_.encode(pos, a);
    }

    /// Returns (position, assignment digits).
    std::pair<u64, std::vector<u64>> decode(u64 flat) const {
        auto [pos, rem] = blocks_.decode(flat);
        std::vector<u64> digits(cards_[pos]);
        for (u64 i = digits.size(); i-- > 0;) {
            digits[i] = rem % x_;
            rem /= x_;
        }
        return {pos, std::move(digits)};
    }

private:
    u64 x_;
    std::vector<u64> cards_;
    SumLayout blocks_;
};

/// |p(X)| with the 0^0 = 1 convention. Guarded by the size cap: the result
/// seeds canonical enumerations elsewhere.
inline FiniteSet evaluate(const Polynomial& p, const FiniteSet& x) {
    u64 total = 0;
    for (u64 i = 0; i < p.positions(); ++i)
        total = checked_add(total, checked_pow(x.size, p.card(i)));
    guard_cap(total, "evaluate");
    return FiniteSet{total};
}
inline FiniteSet evaluate(const Polynomial& p, u64 x) { return evaluate(p, FiniteSet{x}); }

/// Global sections: one direction chosen per position.
inline FiniteSet gamma(const Polynomial& p) {
    u64 total = 1;
    for (u64 i = 0; i < p.positions(); ++i) total = checked_mul(total, p.card(i));
    guard_cap(total, "gamma");
    return FiniteSet{total};
}

/// Closed-form hom-set count: product over domain positions of
/// sum over codomain positions of card(P)^card(Q). Overflow raises SizeCap;
/// the numeric value itself is not capped.
inline u64 hom_count(const Polynomial& p, const Polynomial& q) {
    u64 total = 1;
    for (u64 P = 0; P < p.positions(); ++P) {
        u64 factor = 0;
        for (u64 Q = 0; Q < q.positions(); ++Q)
            factor = checked_add(factor, checked_pow(p.card(P), q.card(Q)));
        total = checked_mul(total, factor);
    }
    return total;
}

/// Streams every map p -> q in lexicographic order of
/// (forward table, backward tables), without materializing the hom-set.
template <typename Fn>
void for_each_hom(const Polynomial& p, const Polynomial& q, Fn&& fn) {
    const u64 n = p.positions();
    if (n == 0) {
        fn(PolyMap(p, q, {}, {}));
        return;
    }
    if (q.positions() == 0) return;
    std::vector<u64> fwd(n, 0);
    MixedRadix fwd_space(n, q.positions());
    do {
        std::vector<u64> radices;
        for (u64 P = 0; P < n; ++P)
            for (u64 e = 0; e < q.card(fwd[P]); ++e) radices.push_back(p.card(P));
        MixedRadix bwd_space(radices);
        if (bwd_space.total() == 0) continue;
        std::vector<u64> bwd(radices.size(), 0);
        do {
            fn(PolyMap(p, q, fwd, bwd));
        } while (bwd_space.next(bwd));
    } while (fwd_space.next(fwd));
}

/// Materialized hom-set; requires hom_count within the cap.
inline std::vector<PolyMap> enumerate_homs(const Polynomial& p, const Polynomial& q) {
    guard_cap(hom_count(p, q), "hom-set enumeration");
    std::vector<PolyMap> out;
    out.reserve(hom_count(p, q));
    for_each_hom(p, q, [&](const PolyMap& m) { out.push_back(m); });
    return out;
}

/// The map at a given index of the enumeration order, without a full listing.
inline PolyMap hom_at(const Polynomial& p, const Polynomial& q, u64 index) {
    const u64 n = p.positions();
    if (n == 0) {
        if (index == 0) return PolyMap(p, q, {}, {});
        throw DomainMismatchError("hom index out of range");
    }
    if (q.positions() == 0) throw DomainMismatchError("hom index out of range");
    std::vector<u64> fwd(n, 0);
    MixedRadix fwd_space(n, q.positions());
    do {
        std::vector<u64> radices;
        for (u64 P = 0; P < n; ++P)
            for (u64 e = 0; e < q.card(fwd[P]); ++e) radices.push_back(p.card(P));
        MixedRadix bwd_space(radices);
        if (index < bwd_space.total()) {
            std::vector<u64> bwd(radices.size());
            bwd_space.decode(index, bwd);
            return PolyMap(p, q, fwd, bwd);
        }
        index -= bwd_space.total();
    } while (fwd_space.next(fwd));
    throw DomainMismatchError("hom index out of range");
}

/// Every polynomial with at most `max_positions` positions and at most
/// `max_directions` directions per position, in a fixed deterministic order.
inline std::vector<Polynomial> enumerate_polynomials(u64 max_positions, u64 max_directions) {
    std::vector<Polynomial> out;
    for (u64 n = 0; n <= max_positions; ++n) {
        std::vector<u64> cards(n, 0);
        MixedRadix space(n, max_directions + 1);
        do {
            out.emplace_back(cards);
        } while (space.next(cards));
    }
    return out;
}

}  // namespace polyldc
