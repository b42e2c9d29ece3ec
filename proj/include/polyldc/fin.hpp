#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyldc/errors.hpp"

namespace polyldc {

using u64 = std::uint64_t;

// Checked counting arithmetic: overflow is an error, never a wrap.

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) throw SizeCapError("cardinality overflow in addition");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw SizeCapError("cardinality overflow in product");
    return r;
}

/// base^exp with 0^0 = 1.
inline u64 checked_pow(u64 base, u64 exp) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

/// A finite set presented by its cardinality; elements are canonically 0..size-1.
/// Labels are presentation only and never participate in equality.
struct FiniteSet {
    u64 size = 0;
    std::optional<std::vector<std::string>> labels;

    FiniteSet() = default;
    explicit FiniteSet(u64 k) : size(k) {}
    FiniteSet(u64 k, std::vector<std::string> names) : size(k), labels(std::move(names)) {}

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.size == b.size; }
};

/// Big-endian mixed-radix codec: digit 0 is most significant, so the flat
/// index order is the lexicographic order of digit tuples. This is the
/// canonical encoding for every dependent-function enumeration in the library.
class MixedRadix {
public:
    MixedRadix() = default;
    explicit MixedRadix(std::vector<u64> radices) : radices_(std::move(radices)) {
        total_ = 1;
        for (u64 r : radices_) total_ = checked_mul(total_, r);
    }
    /// `count` digits with one common radix.
    MixedRadix(u64 count, u64 radix) : MixedRadix(std::vector<u64>(count, radix)) {}

    u64 total() const { return total_; }
    u64 digit_count() const { return radices_.size(); }
    u64 radix(u64 i) const { return radices_[i]; }

    u64 encode(std::span<const u64> digits) const {
        u64 idx = 0;
        for (u64 i = 0; i < radices_.size(); ++i) idx = idx * radices_[i] + digits[i];
        return idx;
    }

    void decode(u64 idx, std::span<u64> digits) const {
        for (u64 i = radices_.size(); i-- > 0;) {
            digits[i] = idx % radices_[i];
            idx /= radices_[i];
        }
    }

    std::vector<u64> decode(u64 idx) const {
        std::vector<u64> digits(radices_.size());
        decode(idx, digits);
        return digits;
    }

    /// Lexicographic successor; returns false after the last tuple.
    bool next(std::span<u64> digits) const {
        for (u64 i = radices_.size(); i-- > 0;) {
            if (++digits[i] < radices_[i]) return true;
            digits[i] = 0;
        }
        return false;
    }

private:
    std::vector<u64> radices_;
    u64 total_ = 1;
};

/// Offset table for a dependent sum of blocks; flat order is block-major.
class SumLayout {
public:
    SumLayout() : offsets_{0} {}
    explicit SumLayout(std::span<const u64> sizes) {
        offsets_.reserve(sizes.size() + 1);
        offsets_.push_back(0);
        for (u64 s : sizes) offsets_.push_back(checked_add(offsets_.back(), s));
    }

    u64 total() const { return offsets_.back(); }
    u64 block_count() const { return offsets_.size() - 1; }
    u64 block_size(u64 i) const { return offsets_[i + 1] - offsets_[i]; }
    u64 offset(u64 i) const { return offsets_[i]; }
    u64 encode(u64 block, u64 within) const { return offsets_[block] + within; }

    std::pair<u64, u64> decode(u64 flat) const {
        auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
        u64 block = static_cast<u64>(it - offsets_.begin()) - 1;
        return {block, flat - offsets_[block]};
    }

private:
    std::vector<u64> offsets_;
};

inline u64 pair_index(u64 i, u64 j, u64 j_count) { return i * j_count + j; }

}  // namespace polyldc
