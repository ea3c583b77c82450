#pragma once

#include "superq/indecomposables.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace superq {

struct GradedKey {
    long degree = 0;
    RationalWeight core;
    int parity = 0;
    auto operator<=>(const GradedKey&) const = default;
};

// Finite Z-graded super representation of Gl(rank).
struct GradedGlObject {
    int rank = 1;
    std::map<GradedKey, Integer> pieces;

    void add(const GradedKey& k, const Integer& mult) {
        if (mult == 0) return;
        auto& slot = pieces[k];
        slot += mult;
        if (slot == 0) pieces.erase(k);
    }
    void add(const GradedGlObject& o, const Integer& scale = 1) {
        if (o.rank != rank) throw std::invalid_argument("rank mismatch in graded object");
        for (const auto& [k, c] : o.pieces) add(k, c * scale);
    }
    bool operator==(const GradedGlObject& o) const { return rank == o.rank && pieces == o.pieces; }
};

inline GradedGlObject graded_unit(int rank) {
    GradedGlObject g{rank, {}};
    g.add({0, RationalWeight{std::vector<long>(rank, 0)}, 0}, 1);
    return g;
}

namespace detail {

inline GradedGlObject ds_irr(const BlockId& b, long v, int parity) {
    long a = block_coordinate(b, v);
    GradedGlObject g{static_cast<int>(b.crosses.size()), {}};
    g.add({a, core_weight(weight_at(b, v)), static_cast<int>(((a + parity) % 2 + 2) % 2)}, 1);
    return g;
}

// sigma = false: DS for x in g_{+1}; sigma = true: DS_sigma for x in g_{-1}.
inline GradedGlObject ds_generic(const IndecompLabel& x, bool sigma) {
    validate(x);
    GradedGlObject zero{x.kind == Kind::typical ? static_cast<int>(x.block.crosses.size()) - 1
                                                : static_cast<int>(x.block.crosses.size()),
                        {}};
    if (x.kind == Kind::typical || x.kind == Kind::proj) return zero;
    if (x.kind == Kind::irr) return ds_irr(x.block, x.lo, x.parity);
    IndecompLabel z = as_zigzag(x);
    bool roof = z.kind == Kind::roof;
    if (interval_length(z) % 2 == 1) {
        long end = roof != sigma ? z.hi : z.lo;
        return ds_irr(z.block, end, z.parity);
    }
    // Even length: the Kac-filtered family survives DS, the AntiKac-filtered family survives DS_sigma.
    if (roof == sigma) return zero;
    auto g = ds_irr(z.block, z.lo, z.parity);
    g.add(ds_irr(z.block, z.hi, z.parity));
    return g;
}

}  // namespace detail

inline GradedGlObject ds_of(const IndecompLabel& x) { return detail::ds_generic(x, false); }
inline GradedGlObject ds_sigma_of(const IndecompLabel& x) { return detail::ds_generic(x, true); }

inline GradedGlObject graded_tensor(const GradedGlObject& a, const GradedGlObject& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch in graded_tensor");
    GradedGlObject out{a.rank, {}};
    for (const auto& [ka, ca] : a.pieces)
        for (const auto& [kb, cb] : b.pieces)
            for (const auto& [nu, c] : tensor_rational(ka.core, kb.core))
                out.add({ka.degree + kb.degree, nu, (ka.parity + kb.parity) % 2}, ca * cb * c);
    return out;
}

inline Integer signed_dimension(const GradedGlObject& g) {
    Integer s = 0;
    for (const auto& [k, c] : g.pieces) s += (k.parity ? -c : c) * weyl_dim(k.core);
    return s;
}

}  // namespace superq
