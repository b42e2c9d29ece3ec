#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyldc/poly.hpp"

namespace polyldc {

/// A natural transformation between finite polynomial functors: a total
/// forward function on positions and, for each domain position P, a total
/// backward function from the codomain's directions at the image back to the
/// domain's directions at P.
///
/// Backward tables are stored flat (one block per domain position, block
/// length = cod.card(forward(P))). Values are immutable after construction.
class PolyMap {
public:
    PolyMap(Polynomial dom, Polynomial cod, std::vector<u64> forward, std::vector<u64> backward)
        : dom_(std::move(dom)),
          cod_(std::move(cod)),
          fwd_(std::move(forward)),
          bwd_(std::move(backward)) {
        const u64 n = dom_.positions();
        if (fwd_.size() != n) throw DomainMismatchError("forward table size mismatch");
        offsets_.reserve(n + 1);
        offsets_.push_back(0);
        for (u64 p = 0; p < n; ++p) {
            if (fwd_[p] >= cod_.positions())
                throw DomainMismatchError("forward table lands outside codomain");
            offsets_.push_back(checked_add(offsets_.back(), cod_.card(fwd_[p])));
        }
        if (bwd_.size() != offsets_.back())
            throw DomainMismatchError("backward table size mismatch");
        for (u64 p = 0; p < n; ++p)
            for (u64 e = offsets_[p]; e < offsets_[p + 1]; ++e)
                if (bwd_[e] >= dom_.card(p))
                    throw DomainMismatchError("backward table lands outside domain directions");
    }

    const Polynomial& dom() const { return dom_; }
    const Polynomial& cod() const { return cod_; }

    u64 on_position(u64 p) const { return fwd_[p]; }
    /// Backward value at domain position `p` for codomain direction `e`.
    u64 on_direction(u64 p, u64 e) const { return bwd_[offsets_[p] + e]; }
    std::span<const u64> backward_table(u64 p) const {
        return {bwd_.data() + offsets_[p], bwd_.data() + offsets_[p + 1]};
    }
    const std::vector<u64>& forward_table() const { return fwd_; }
    const std::vector<u64>& backward_flat() const { return bwd_; }
    u64 table_entries() const { return bwd_.size(); }

    friend bool operator==(const PolyMap& f, const PolyMap& g) {
        return f.dom_ == g.dom_ && f.cod_ == g.cod_ && f.fwd_ == g.fwd_ && f.bwd_ == g.bwd_;
    }
    friend bool operator!=(const PolyMap& f, const PolyMap& g) { return !(f == g); }

private:
    Polynomial dom_, cod_;
    std::vector<u64> fwd_;
    std::vector<u64> bwd_;
    std::vector<u64> offsets_;
};

inline PolyMap identity(const Polynomial& p) {
    std::vector<u64> fwd(p.positions());
    std::vector<u64> bwd;
    bwd.reserve(p.total_directions());
    for (u64 i = 0; i < p.positions(); ++i) {
        fwd[i] = i;
        for (u64 d = 0; d < p.card(i); ++d) bwd.push_back(d);
    }
    return PolyMap(p, p, std::move(fwd), std::move(bwd));
}

/// Diagrammatic composition f ; g. Positions compose forward, directions
/// compose contravariantly.
inline PolyMap compose(const PolyMap& f, const PolyMap& g) {
    if (f.cod() != g.dom())
        throw DomainMismatchError("compose: cod of first map is not dom of second");
    const Polynomial& dom = f.dom();
    const Polynomial& cod = g.cod();
    std::vector<u64> fwd(dom.positions());
    std::vector<u64> bwd;
    u64 entries = 0;
    for (u64 p = 0; p < dom.positions(); ++p)
        entries = checked_add(entries, cod.card(g.on_position(f.on_position(p))));
    guard_cap(entries, "composite map table");
    bwd.reserve(entries);
    for (u64 p = 0; p < dom.positions(); ++p) {
        const u64 mid = f.on_position(p);
        fwd[p] = g.on_position(mid);
        for (u64 e = 0; e < cod.card(fwd[p]); ++e)
            bwd.push_back(f.on_direction(p, g.on_direction(mid, e)));
    }
    return PolyMap(dom, cod, std::move(fwd), std::move(bwd));
}

template <typename... Maps>
PolyMap compose(const PolyMap& f, const PolyMap& g, const Maps&... rest) {
    return compose(compose(f, g), rest...);
}

/// Pointwise equality of dom, cod, forward table, and every backward table.
inline bool equal_maps(const PolyMap& f, const PolyMap& g) { return f == g; }

/// True when every backward function is a bijection.
inline bool is_cartesian(const PolyMap& f) {
    std::vector<char> seen;
    for (u64 p = 0; p < f.dom().positions(); ++p) {
        const auto table = f.backward_table(p);
        if (table.size() != f.dom().card(p)) return false;
        seen.assign(table.size(), 0);
        for (u64 v : table) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

/// True when the forward function and every backward function are bijections;
/// such a map has a constructible inverse.
inline bool is_iso(const PolyMap& f) {
    if (f.dom().positions() != f.cod().positions()) return false;
    std::vector<char> hit(f.cod().positions(), 0);
    for (u64 p = 0; p < f.dom().positions(); ++p) {
        const u64 q = f.on_position(p);
        if (hit[q] || f.dom().card(p) != f.cod().card(q)) return false;
        hit[q] = 1;
    }
    return is_cartesian(f);
}

inline PolyMap inverse(const PolyMap& f) {
    if (!is_iso(f)) throw DomainMismatchError("inverse: map is not an isomorphism");
    const Polynomial& p = f.dom();
    const Polynomial& q = f.cod();
    std::vector<u64> fwd(q.positions());
    std::vector<u64> bwd(p.total_directions());
    std::vector<u64> out_offsets(q.positions());
    for (u64 a = 0; a < p.positions(); ++a) fwd[f.on_position(a)] = a;
    // Offsets of the inverse's backward blocks, in codomain-position order.
    u64 acc = 0;
    for (u64 b = 0; b < q.positions(); ++b) {
        out_offsets[b] = acc;
        acc += p.card(fwd[b]);
    }
    for (u64 a = 0; a < p.positions(); ++a) {
        const u64 b = f.on_position(a);
        for (u64 e = 0; e < q.card(b); ++e) bwd[out_offsets[b] + f.on_direction(a, e)] = e;
    }
    return PolyMap(q, p, std::move(fwd), std::move(bwd));
}

/// The component of the natural transformation at a finite set of size
/// `x`: a function p(x) -> q(x) on canonically enumerated elements
/// (position-major, then the direction assignment in mixed radix).
inline u64 apply_at_set(const PolyMap& f, u64 x, u64 element) {
    const Polynomial& p = f.dom();
    const Polynomial& q = f.cod();
    std::vector<u64> dom_sizes(p.positions());
    for (u64 i = 0; i < p.positions(); ++i) dom_sizes[i] = checked_pow(x, p.card(i));
    SumLayout dom(dom_sizes);
    std::vector<u64> cod_sizes(q.positions());
    for (u64 i = 0; i < q.positions(); ++i) cod_sizes[i] = checked_pow(x, q.card(i));
    SumLayout cod(cod_sizes);

    auto [pos, rem] = dom.decode(element);
    MixedRadix dom_assign(p.card(pos), x);
    std::vector<u64> g(p.card(pos));
    dom_assign.decode(rem, g);
    const u64 out_pos = f.on_position(pos);
    MixedRadix cod_assign(q.card(out_pos), x);
    std::vector<u64> h(q.card(out_pos));
    for (u64 e = 0; e < q.card(out_pos); ++e) h[e] = g[f.on_direction(pos, e)];
    return cod.encode(out_pos, cod_assign.encode(h));
}

/// Human-readable forward/backward tables.
inline std::string to_table_string(const PolyMap& f) {
    std::string out = "forward:";
    for (u64 p = 0; p < f.dom().positions(); ++p)
        out += " " + std::to_string(p) + "->" + std::to_string(f.on_position(p));
    for (u64 p = 0; p < f.dom().positions(); ++p) {
        out += "\nbackward@" + std::to_string(p) + ":";
        for (u64 e = 0; e < f.cod().card(f.on_position(p)); ++e)
            out += " " + std::to_string(e) + "->" + std::to_string(f.on_direction(p, e));
    }
    return out;
}

}  // namespace polyldc
