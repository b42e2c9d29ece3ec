#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "polyldc/fin.hpp"

namespace polyldc {

/// Display names for positions and directions. Never semantic: equality,
/// counts and every law ignore them.
struct PolyLabels {
    std::vector<std::string> positions;               // one per position, may be empty
    std::vector<std::vector<std::string>> directions;  // one list per position, may be empty
};

/// A finite polynomial functor, presented as an ordered list of positions,
/// each carrying the cardinality of its direction set. Directions at position
/// P are canonically 0..card(P)-1. The zero polynomial has no positions;
/// constants have card(P) = 0 everywhere.
///
/// Semantic identity is exactly the ordered cardinality list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<u64> cards) : cards_(std::move(cards)) {
        guard_cap(cards_.size(), "polynomial positions");
    }
    Polynomial(std::vector<u64> cards, PolyLabels labels)
        : cards_(std::move(cards)), labels_(std::make_shared<const PolyLabels>(std::move(labels))) {
        guard_cap(cards_.size(), "polynomial positions");
    }

    u64 positions() const { return cards_.size(); }
    u64 card(u64 p) const { return cards_[p]; }
    const std::vector<u64>& cards() const { return cards_; }

    /// Sum of all direction-set sizes (the size of a full backward table).
    u64 total_directions() const {
        u64 t = 0;
        for (u64 c : cards_) t = checked_add(t, c);
        return t;
    }

    bool is_zero() const { return cards_.empty(); }
    bool is_representable() const { return cards_.size() == 1; }
    bool is_linear() const {
        return std::all_of(cards_.begin(), cards_.end(), [](u64 c) { return c == 1; });
    }
    bool is_constant() const {
        return std::all_of(cards_.begin(), cards_.end(), [](u64 c) { return c == 0; });
    }

    const std::shared_ptr<const PolyLabels>& labels() const { return labels_; }
    Polynomial with_labels(PolyLabels labels) const {
        Polynomial p(cards_);
        p.labels_ = std::make_shared<const PolyLabels>(std::move(labels));
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.cards_ == b.cards_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Strict order on shapes, used for deterministic listings.
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.cards_.size() != b.cards_.size()) return a.cards_.size() < b.cards_.size();
        return a.cards_ < b.cards_;
    }

private:
    std::vector<u64> cards_;
    std::shared_ptr<const PolyLabels> labels_;
};

inline Polynomial zero_poly() { return Polynomial{}; }
inline Polynomial y_poly() { return Polynomial{{1}}; }

/// Ay: one position per element, one direction each.
inline Polynomial linear(const FiniteSet& a) {
    return Polynomial(std::vector<u64>(a.size, 1));
}
inline Polynomial linear(u64 n) { return linear(FiniteSet{n}); }

/// y^A: one position with |A| directions.
inline Polynomial representable(const FiniteSet& a) { return Polynomial{{a.size}}; }
inline Polynomial representable(u64 n) { return Polynomial{{n}}; }

/// The constant polynomial A·y^0.
inline Polynomial constant(const FiniteSet& a) {
    return Polynomial(std::vector<u64>(a.size, 0));
}
inline Polynomial constant(u64 n) { return constant(FiniteSet{n}); }

/// Same positions-with-direction-counts multiset, ignoring order: the
/// isomorphism-class test that complements strict equality.
inline bool shape_isomorphic(const Polynomial& a, const Polynomial& b) {
    if (a.positions() != b.positions()) return false;
    std::vector<u64> ca = a.cards(), cb = b.cards();
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

namespace detail {
inline std::string superscript(u64 n) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string plain = std::to_string(n), out;
    for (char c : plain) out += digits[c - '0'];
    return out;
}
}  // namespace detail

/// Literal notation, e.g. "3y^2 + y + 2". Adjacent equal cardinalities are
/// grouped, so printing preserves the position order and parsing the result
/// gives back the same polynomial. `unicode` switches to superscript exponents.
inline std::string to_notation(const Polynomial& p, bool unicode = false) {
    if (p.is_zero()) return "0";
    std::string out;
    u64 i = 0;
    const u64 n = p.positions();
    while (i < n) {
        u64 j = i;
        while (j < n && p.card(j) == p.card(i)) ++j;
        u64 count = j - i, exp = p.card(i);
        if (!out.empty()) out += " + ";
        if (exp == 0) {
            out += std::to_string(count);
        } else {
            if (count != 1) out += std::to_string(count);
            out += unicode ? "\U0001d466" : "y";
            if (exp != 1) out += unicode ? detail::superscript(exp) : "^" + std::to_string(exp);
        }
        i = j;
    }
    return out;
}

/// ASCII corolla forest: one line per position, one tick per direction.
inline std::vector<std::string> corolla_lines(const Polynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.positions());
    for (u64 i = 0; i < p.positions(); ++i) {
        std::string name = std::to_string(i);
        if (p.labels() && i < p.labels()->positions.size() && !p.labels()->positions[i].empty())
            name = p.labels()->positions[i];
        out.push_back(name + ": " + std::string(p.card(i), '|'));
    }
    return out;
}

}  // namespace polyldc
