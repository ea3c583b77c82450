#pragma once

#include "superq/ds.hpp"

#include <map>
#include <stdexcept>

namespace superq {

struct FormalObject {
    std::map<IndecompLabel, Integer> summands;

    void add(const IndecompLabel& x, const Integer& mult = 1) {
        if (mult == 0) return;
        auto& slot = summands[x];
        slot += mult;
        if (slot == 0) summands.erase(x);
    }
    bool empty() const { return summands.empty(); }
    bool operator==(const FormalObject&) const = default;
};

// Every summand non-negligible: irreducible or odd-length zigzag.
using QuotientObject = FormalObject;

struct Triple {
    long d = 0;
    long b = 0;
    RationalWeight core;
    int parity = 0;
    auto operator<=>(const Triple&) const = default;
};

// Image after identifying Ber with the unit.
struct SlTriple {
    long d = 0;
    RationalWeight core;
    int parity = 0;
    auto operator<=>(const SlTriple&) const = default;
};

inline int mod2(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

inline bool is_negligible(const IndecompLabel& x) { return superdimension(x) == 0; }

inline QuotientObject omega(const FormalObject& x) {
    QuotientObject out;
    for (const auto& [label, c] : x.summands)
        if (!is_negligible(label)) out.add(normalize(label), c);
    return out;
}

inline FormalObject single(const IndecompLabel& x) {
    FormalObject f;
    f.add(normalize(x));
    return f;
}

inline RationalWeight shift(RationalWeight w, long k) {
    for (auto& x : w.parts) x += k;
    return w;
}

inline std::pair<long, Bipartition> mixed_tensor_data(const Weight& w) {
    long a = berezin_charge(w);
    return {a, bipartition_of(shift(core_weight(w), -a))};
}

// The weight of the mixed tensor indexed by bp: core wt(bp), vee at Berezin charge 0.
inline Weight mixed_tensor_weight(int m, const Bipartition& bp) {
    auto mu = wt_of_bipartition(m - 1, bp);
    BlockId b;
    for (int i = 0; i < m - 1; ++i) b.crosses.push_back(mu.parts[i] - i);
    std::sort(b.crosses.begin(), b.crosses.end());
    return weight_at(b, position_at(b, 0));
}

// DS-visible end of a non-negligible label and its half-length.
struct Anchor {
    long vee;
    long half;
    bool bottom;
};

inline Anchor anchor_of(const IndecompLabel& x) {
    if (is_negligible(x)) throw std::invalid_argument("negligible label has no image: " + format_label(x));
    auto z = normalize(x);
    if (z.kind == Kind::irr) return {z.lo, 0, false};
    long half = (interval_length(z) - 1) / 2;
    if (z.kind == Kind::roof) return {z.hi, half, false};
    return {z.lo, half, true};
}

inline Triple rho(const IndecompLabel& x) {
    auto a = anchor_of(x);
    long b = block_coordinate(x.block, a.vee);
    auto core = shift(core_weight(weight_at(x.block, a.vee)), -b);
    return {a.bottom ? a.half : -a.half, b, core, mod2(x.parity + b)};
}

inline IndecompLabel rho_inverse(const Triple& t) {
    int m = t.core.rank() + 1;
    Weight w = berezin_twist(mixed_tensor_weight(m, bipartition_of(t.core)), t.b);
    auto [block, v] = block_of(w);
    if (block_coordinate(block, v) != t.b) throw std::logic_error("mixed tensor reconstruction broke");
    int parity = mod2(t.parity - t.b);
    if (t.d == 0) return {block, Kind::irr, v, v, parity};
    if (t.d < 0) return normalize({block, Kind::roof, free_step(block, v, 2 * t.d), v, parity});
    return normalize({block, Kind::bottom, v, free_step(block, v, 2 * t.d), parity});
}

inline IndecompLabel berezin_twist(const IndecompLabel& x, long k) {
    IndecompLabel y = x;
    for (auto& c : y.block.crosses) c += k;
    y.lo += k;
    y.hi += k;
    return y;
}

inline int rank_of(const QuotientObject& x, int fallback) {
    return x.empty() ? fallback : static_cast<int>(x.summands.begin()->first.block.crosses.size());
}

inline void check_ranks(const QuotientObject& x, const QuotientObject& y) {
    if (x.empty() || y.empty()) return;
    if (rank_of(x, 0) != rank_of(y, 0)) throw std::invalid_argument("rank mismatch between tensor factors");
}

// Pullback of the componentwise tensor product of triples.
inline QuotientObject tensor_quotient(const QuotientObject& x, const QuotientObject& y) {
    check_ranks(x, y);
    QuotientObject out;
    for (const auto& [lx, cx] : x.summands) {
        auto tx = rho(lx);
        for (const auto& [ly, cy] : y.summands) {
            auto ty = rho(ly);
            for (const auto& [nu, c] : tensor_rational(tx.core, ty.core))
                out.add(rho_inverse({tx.d + ty.d, tx.b + ty.b, nu, mod2(tx.parity + ty.parity)}), cx * cy * c);
        }
    }
    return out;
}

// Case analysis on bottoms and roofs through the DS-visible ends and their cohomological degrees.
inline QuotientObject tensor_direct(const QuotientObject& x, const QuotientObject& y) {
    check_ranks(x, y);
    QuotientObject out;
    for (const auto& [lx, cx] : x.summands) {
        auto ax = anchor_of(lx);
        auto gx = ds_of(lx).pieces.begin()->first;
        for (const auto& [ly, cy] : y.summands) {
            auto ay = anchor_of(ly);
            auto gy = ds_of(ly).pieces.begin()->first;
            long delta;
            bool bottom;
            if (ax.bottom == ay.bottom) {
                delta = ax.half + ay.half;
                bottom = ax.bottom;
            } else {
                long pb = ax.bottom ? ax.half : ay.half;
                long pr = ax.bottom ? ay.half : ax.half;
                delta = pb > pr ? pb - pr : pr - pb;
                bottom = pb > pr;
            }
            long degree = gx.degree + gy.degree;
            int parity = mod2(lx.parity + ly.parity);
            for (const auto& [nu, c] : tensor_rational(gx.core, gy.core)) {
                BlockId block;
                for (int i = 0; i < nu.rank(); ++i) block.crosses.push_back(nu.parts[i] - i);
                std::sort(block.crosses.begin(), block.crosses.end());
                long v = position_at(block, degree);
                IndecompLabel z{block, Kind::irr, v, v, parity};
                if (delta > 0 && bottom) z = {block, Kind::bottom, v, free_step(block, v, 2 * delta), parity};
                if (delta > 0 && !bottom) z = {block, Kind::roof, free_step(block, v, -2 * delta), v, parity};
                out.add(z, cx * cy * c);
            }
        }
    }
    return out;
}

inline Integer superdimension(const FormalObject& x) {
    Integer s = 0;
    for (const auto& [label, c] : x.summands) s += c * superdimension(label);
    return s;
}

inline GradedGlObject ds_of(const FormalObject& x, int rank) {
    GradedGlObject g{rank, {}};
    for (const auto& [label, c] : x.summands) g.add(ds_of(label), c);
    return g;
}

inline SlTriple sl_reduce(const Triple& t) { return {t.d, t.core, mod2(t.parity + t.b)}; }

// sl(2|1) zigzag labels Z^{2p+1}(j) (bar = false) and Zbar^{2p+1}(j) for sl(2|1).
struct Sl21Label {
    bool bar = false;
    long p = 0;
    long j = 0;
    auto operator<=>(const Sl21Label&) const = default;
};

// Even representative with Berezin charge 0: Z <-> roof with d = -p, Zbar <-> bottom with d = p.
inline IndecompLabel sl21_representative(const Sl21Label& z) {
    if (z.p < 0) throw std::invalid_argument("sl(2|1) zigzag needs p >= 0");
    long c = z.bar ? z.p - z.j : -z.j;
    return rho_inverse({z.bar ? z.p : -z.p, 0, RationalWeight{{c}}, 0});
}

// Length-1 modules come back as Z^1(j).
inline Sl21Label sl21_name(const IndecompLabel& x) {
    if (x.block.crosses.size() != 1) throw std::invalid_argument("sl(2|1) names need m = 2");
    auto t = rho(x);
    long c = t.core.parts[0];
    if (t.d > 0) return {true, t.d, t.d - c};
    return {false, -t.d, -c};
}

// Additive Gl(1) x Gl(1) charges (P, Q) of an sl(2|1) label.
inline std::pair<long, long> sl21_charges(const Sl21Label& z) {
    return z.bar ? std::pair{-z.p, -z.j} : std::pair{z.p, z.p - z.j};
}

}  // namespace superq
