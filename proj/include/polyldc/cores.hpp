#pragma once

#include <utility>
#include <vector>

#include "polyldc/duality.hpp"

namespace polyldc {

/// Left-core membership: the comparison p tensor x -> p over x is invertible
/// for every x exactly when every direction set is a singleton.
inline bool in_left_core(const Polynomial& p) { return p.is_linear(); }

/// Right-core membership: x tensor p -> x over p is invertible for every x
/// exactly when p has a single position.
inline bool in_right_core(const Polynomial& p) { return p.is_representable(); }

/// Empirical cross-check of core membership: probes every polynomial with at
/// most max_probe positions and directions (constants included) and compares
/// the probed verdict with the shape test.
inline LawReport verify_core_membership(const Polynomial& p, u64 max_probe, bool left_side) {
    const bool expected = left_side ? in_left_core(p) : in_right_core(p);
    LawReport report{left_side ? "cores/left-probe-agreement" : "cores/right-probe-agreement",
                     true,
                     {},
                     {}};
    bool all_iso = true;
    std::optional<u64> breaking_probe;
    const std::vector<Polynomial> probes = enumerate_polynomials(max_probe, max_probe);
    for (u64 i = 0; i < probes.size(); ++i) {
        const PolyMap comparison =
            left_side ? indep(p, probes[i]) : indep(probes[i], p);
        if (!is_iso(comparison)) {
            all_iso = false;
            breaking_probe = i;
            break;
        }
    }
    report.stats.emplace_back("probes", probes.size());
    report.pass = (all_iso == expected);
    if (!report.pass) {
        report.counterexample = Counterexample{
            "shape", breaking_probe.value_or(0), {},
            all_iso ? "probes all invertible but shape test rejects"
                    : "shape test accepts but probe " +
                          to_notation(probes[*breaking_probe]) + " is not invertible"};
    }
    return report;
}

/// The contravariant equivalence between the cores: y^A goes to Ay.
inline Polynomial star_obj(const Polynomial& p) {
    if (!p.is_representable())
        throw NotRepresentableError("star: " + to_notation(p) + " is not representable");
    return linear(p.card(0));
}

/// A map y^B -> y^A is a single backward table A -> B; its star runs that
/// table forward as a map Ay -> By.
inline PolyMap star_map(const PolyMap& f) {
    if (!f.dom().is_representable() || !f.cod().is_representable())
        throw NotRepresentableError("star: both endpoints must be representable");
    const u64 a = f.cod().card(0);
    std::vector<u64> fwd(a);
    for (u64 i = 0; i < a; ++i) fwd[i] = f.on_direction(0, i);
    return PolyMap(linear(a), linear(f.dom().card(0)), std::move(fwd),
                   std::vector<u64>(a, 0));
}

}  // namespace polyldc
