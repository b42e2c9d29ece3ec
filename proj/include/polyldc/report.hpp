#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyldc/map.hpp"

namespace polyldc {

/// Outcome of a single law check. On failure records the first disagreeing
/// coordinate: a position, and when the mismatch is in a backward table also
/// the direction.
struct Counterexample {
    std::string kind;  // "shape" | "forward" | "backward"
    u64 position = 0;
    std::optional<u64> direction;
    std::string detail;
};

struct LawReport {
    std::string law;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::vector<std::pair<std::string, u64>> stats;

    static LawReport ok(std::string name) { return LawReport{std::move(name), true, {}, {}}; }
};

/// Compare two parallel composites pointwise and report the first mismatch.
inline LawReport compare_maps(std::string law, const PolyMap& lhs, const PolyMap& rhs) {
    LawReport report{std::move(law), true, {}, {}};
    report.stats.emplace_back("positions", lhs.dom().positions());
    report.stats.emplace_back("table_entries", lhs.table_entries());
    if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) {
        report.pass = false;
        report.counterexample = Counterexample{"shape", 0, {}, "dom/cod shapes differ"};
        return report;
    }
    for (u64 p = 0; p < lhs.dom().positions(); ++p) {
        if (lhs.on_position(p) != rhs.on_position(p)) {
            report.pass = false;
            report.counterexample = Counterexample{
                "forward", p, {},
                std::to_string(lhs.on_position(p)) + " vs " + std::to_string(rhs.on_position(p))};
            return report;
        }
    }
    for (u64 p = 0; p < lhs.dom().positions(); ++p) {
        const u64 block = lhs.cod().card(lhs.on_position(p));
        for (u64 e = 0; e < block; ++e) {
            if (lhs.on_direction(p, e) != rhs.on_direction(p, e)) {
                report.pass = false;
                report.counterexample =
                    Counterexample{"backward", p, e,
                                   std::to_string(lhs.on_direction(p, e)) + " vs " +
                                       std::to_string(rhs.on_direction(p, e))};
                return report;
            }
        }
    }
    return report;
}

inline LawReport expect_true(std::string law, bool value, std::string detail = "") {
    LawReport report{std::move(law), value, {}, {}};
    if (!value) report.counterexample = Counterexample{"shape", 0, {}, std::move(detail)};
    return report;
}

/// Fold several reports into one named check; keeps the first failure.
inline LawReport combine(std::string law, const std::vector<LawReport>& parts) {
    LawReport report{std::move(law), true, {}, {}};
    for (const auto& part : parts) {
        if (!part.pass && report.pass) {
            report.pass = false;
            report.counterexample = part.counterexample;
            if (report.counterexample)
                report.counterexample->detail = part.law + ": " + report.counterexample->detail;
            else
                report.counterexample = Counterexample{"shape", 0, {}, part.law};
        }
    }
    report.stats.emplace_back("checks", parts.size());
    return report;
}

}  // namespace polyldc
