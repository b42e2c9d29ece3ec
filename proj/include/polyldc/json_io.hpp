#pragma once

#include <string>

#include <json.hpp>

#include "polyldc/algebra.hpp"
#include "polyldc/report.hpp"

namespace polyldc {

using json = nlohmann::ordered_json;

inline json to_json(const Polynomial& p) {
    json j;
    j["positions"] = p.cards();
    if (p.labels() && !p.labels()->positions.empty()) j["labels"] = p.labels()->positions;
    return j;
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.contains("positions") || !j["positions"].is_array())
        throw DomainMismatchError("polynomial json needs a positions array");
    std::vector<u64> cards;
    for (const auto& c : j["positions"]) cards.push_back(c.get<u64>());
    if (j.contains("labels")) {
        PolyLabels labels;
        labels.positions = j["labels"].get<std::vector<std::string>>();
        return Polynomial(std::move(cards), std::move(labels));
    }
    return Polynomial(std::move(cards));
}

inline json to_json(const PolyMap& f) {
    json j;
    j["dom"] = to_json(f.dom());
    j["cod"] = to_json(f.cod());
    j["on_positions"] = f.forward_table();
    json tables = json::array();
    for (u64 p = 0; p < f.dom().positions(); ++p) {
        const auto t = f.backward_table(p);
        tables.push_back(std::vector<u64>(t.begin(), t.end()));
    }
    j["on_directions"] = std::move(tables);
    return j;
}

inline json to_json(const LawReport& r) {
    json j;
    j["law"] = r.law;
    j["pass"] = r.pass;
    if (r.counterexample) {
        json c;
        c["kind"] = r.counterexample->kind;
        c["position_path"] = json::array({r.counterexample->position});
        c["direction_path"] = r.counterexample->direction
                                  ? json::array({*r.counterexample->direction})
                                  : json::array();
        if (!r.counterexample->detail.empty()) c["detail"] = r.counterexample->detail;
        j["counterexample"] = std::move(c);
    }
    json stats = json::object();
    for (const auto& [key, value] : r.stats) stats[key] = value;
    j["stats"] = std::move(stats);
    return j;
}

/// {order, unit, table: [[...], ...]} with a row-major multiplication table.
inline FiniteMonoid monoid_from_json(const json& j) {
    if (!j.contains("order") || !j.contains("unit") || !j.contains("table"))
        throw DomainMismatchError("monoid json needs order, unit, and table");
    const u64 order = j["order"].get<u64>();
    const u64 unit = j["unit"].get<u64>();
    std::vector<u64> table;
    for (const auto& row : j["table"]) {
        if (!row.is_array() || row.size() != order)
            throw DomainMismatchError("monoid table rows must have length = order");
        for (const auto& v : row) table.push_back(v.get<u64>());
    }
    if (table.size() != order * order)
        throw DomainMismatchError("monoid table must have order rows");
    return FiniteMonoid(order, unit, std::move(table));
}

inline json to_json(const FiniteMonoid& m) {
    json j;
    j["order"] = m.order();
    j["unit"] = m.unit();
    json rows = json::array();
    for (u64 x = 0; x < m.order(); ++x) {
        json row = json::array();
        for (u64 y = 0; y < m.order(); ++y) row.push_back(m.mul(x, y));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j;
}

}  // namespace polyldc
