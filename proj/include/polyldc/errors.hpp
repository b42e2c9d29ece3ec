#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyldc {

/// Raised when an operation would materialize more positions or table entries
/// than the configured cap allows, or when a cardinality computation overflows.
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when maps are combined along non-matching polynomials.
class DomainMismatchError : public std::runtime_error {
public:
    explicit DomainMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation defined only on representables gets something else.
class NotRepresentableError : public std::runtime_error {
public:
    explicit NotRepresentableError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure with 1-based location and the token set that was expected there.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column, std::vector<std::string> expected)
        : std::runtime_error(what), line_(line), column_(column), expected_(std::move(expected)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::vector<std::string> expected_;
};

// Global size guard. Counts both positions of a materialized polynomial and
// entries of a materialized map table. Overridable per scope; the CLI also
// honors POLY_LDC_CAP.
inline std::atomic<std::uint64_t>& size_cap_storage() {
    static std::atomic<std::uint64_t> cap{1'000'000};
    return cap;
}

inline std::uint64_t size_cap() { return size_cap_storage().load(std::memory_order_relaxed); }

inline void set_size_cap(std::uint64_t cap) {
    size_cap_storage().store(cap, std::memory_order_relaxed);
}

struct ScopedSizeCap {
    explicit ScopedSizeCap(std::uint64_t cap) : previous(size_cap()) { set_size_cap(cap); }
    ~ScopedSizeCap() { set_size_cap(previous); }
    ScopedSizeCap(const ScopedSizeCap&) = delete;
    ScopedSizeCap& operator=(const ScopedSizeCap&) = delete;
    std::uint64_t previous;
};

inline void guard_cap(std::uint64_t n, const char* what) {
    if (n > size_cap()) {
        throw SizeCapError(std::string(what) + " needs " + std::to_string(n) +
                           " entries, over the cap of " + std::to_string(size_cap()));
    }
}

}  // namespace polyldc
