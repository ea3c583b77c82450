#pragma once

#include "superq/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace superq {

// Cross positions of an atypical block, ascending. m = crosses.size() + 1.
struct BlockId {
    std::vector<long> crosses;
    int m() const { return static_cast<int>(crosses.size()) + 1; }
    auto operator<=>(const BlockId&) const = default;
};

// `typical` is not an atypical-block kind: its block holds all m crosses and lo = hi is the circle.
enum class Kind { irr, roof, bottom, kac, antikac, proj, typical };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::irr: return "irr";
        case Kind::roof: return "roof";
        case Kind::bottom: return "bottom";
        case Kind::kac: return "kac";
        case Kind::antikac: return "antikac";
        case Kind::proj: return "proj";
        case Kind::typical: return "typical";
    }
    return "?";
}

inline Kind kind_from_name(const std::string& s) {
    for (Kind k : {Kind::irr, Kind::roof, Kind::bottom, Kind::kac, Kind::antikac, Kind::proj, Kind::typical})
        if (s == kind_name(k)) return k;
    throw std::invalid_argument("unknown module kind '" + s + "'");
}

// Roof/bottom over [lo, hi] (free positions); irr/kac/antikac/proj use lo = hi = v.
struct IndecompLabel {
    BlockId block;
    Kind kind = Kind::irr;
    long lo = 0;
    long hi = 0;
    int parity = 0;

    bool operator==(const IndecompLabel&) const = default;
    bool operator<(const IndecompLabel& o) const {
        return std::tie(block, lo, hi, kind, parity) < std::tie(o.block, o.lo, o.hi, o.kind, o.parity);
    }
};

inline bool is_free(const BlockId& b, long pos) {
    return !std::binary_search(b.crosses.begin(), b.crosses.end(), pos);
}

// Position of the vee counted in the block: strictly increasing bijection from free positions onto Z,
// equal to the Berezin charge a_B of the weight with that vee.
inline long block_coordinate(const BlockId& b, long v) {
    long above = b.crosses.end() - std::upper_bound(b.crosses.begin(), b.crosses.end(), v);
    return v + above;
}

inline long position_at(const BlockId& b, long coord) {
    long v = coord - static_cast<long>(b.crosses.size());
    while (!is_free(b, v) || block_coordinate(b, v) < coord) ++v;
    return v;
}

inline long free_step(const BlockId& b, long v, long steps) {
    return position_at(b, block_coordinate(b, v) + steps);
}

inline Weight weight_at(const BlockId& b, long v) {
    if (!is_free(b, v)) throw std::invalid_argument("vee position lies on a cross");
    WeightDiagram d{b.m(), {}};
    for (long c : b.crosses) d.labels[c] = Mark::cross;
    d.labels[v] = Mark::vee;
    return weight_from_diagram(d);
}

inline std::pair<BlockId, long> block_of(const Weight& w) {
    auto d = build_diagram(w);
    BlockId b;
    long v = 0;
    bool found = false;
    for (auto [pos, mark] : d.labels) {
        if (mark == Mark::cross) b.crosses.push_back(pos);
        if (mark == Mark::vee) {
            v = pos;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("block_of needs an atypical weight, got " + format_weight(w));
    return {b, v};
}

inline long berezin_charge(const Weight& w) {
    auto [b, v] = block_of(w);
    return block_coordinate(b, v);
}

inline int parity_class(const Weight& w) {
    long a = berezin_charge(w);
    return static_cast<int>(((a % 2) + 2) % 2);
}

inline Weight t_shift(const Weight& w, int dir) {
    if (dir != 1 && dir != -1) throw std::invalid_argument("t_shift direction must be +1 or -1");
    auto [b, v] = block_of(w);
    return weight_at(b, free_step(b, v, dir));
}

inline int ext1_dim(const Weight& a, const Weight& b) {
    if (!atypicality(a) || !atypicality(b)) return 0;
    auto [ba, va] = block_of(a);
    auto [bb, vb] = block_of(b);
    if (ba != bb) return 0;
    long d = block_coordinate(ba, va) - block_coordinate(bb, vb);
    return d == 1 || d == -1 ? 1 : 0;
}

inline IndecompLabel irr_label(const Weight& w, int parity = 0) {
    if (!atypicality(w)) {
        auto d = build_diagram(w);
        BlockId b;
        long circle = 0;
        for (auto [pos, mark] : d.labels) {
            if (mark == Mark::cross) b.crosses.push_back(pos);
            else circle = pos;
        }
        return {b, Kind::typical, circle, circle, parity};
    }
    auto [b, v] = block_of(w);
    return {b, Kind::irr, v, v, parity};
}

inline Weight typical_weight(const IndecompLabel& x) {
    WeightDiagram d{static_cast<int>(x.block.crosses.size()), {}};
    for (long c : x.block.crosses) d.labels[c] = Mark::cross;
    d.labels[x.lo] = Mark::circle;
    return weight_from_diagram(d);
}

inline long interval_length(const IndecompLabel& x) {
    return block_coordinate(x.block, x.hi) - block_coordinate(x.block, x.lo) + 1;
}

inline void validate(const IndecompLabel& x) {
    if (x.parity != 0 && x.parity != 1) throw std::invalid_argument("parity bit must be 0 or 1");
    if (!std::is_sorted(x.block.crosses.begin(), x.block.crosses.end()) ||
        std::adjacent_find(x.block.crosses.begin(), x.block.crosses.end()) != x.block.crosses.end())
        throw std::invalid_argument("block crosses must be distinct");
    if (x.kind == Kind::typical) {
        if (x.block.crosses.size() < 2 || !is_free(x.block, x.lo) || x.lo != x.hi)
            throw std::invalid_argument("invalid typical label");
        return;
    }
    if (x.block.crosses.empty()) throw std::invalid_argument("block needs m-1 >= 1 crosses");
    if (!is_free(x.block, x.lo) || !is_free(x.block, x.hi))
        throw std::invalid_argument("vee positions must avoid the block crosses");
    bool interval = x.kind == Kind::roof || x.kind == Kind::bottom;
    if (interval ? x.lo > x.hi : x.lo != x.hi) throw std::invalid_argument("invalid interval in label");
}

// Length-1 zigzags become irr; length-2 zigzags become kac/antikac.
inline IndecompLabel normalize(IndecompLabel x) {
    validate(x);
    if (x.kind != Kind::roof && x.kind != Kind::bottom) return x;
    long len = interval_length(x);
    if (len == 1) return {x.block, Kind::irr, x.lo, x.lo, x.parity};
    if (len == 2) {
        if (x.kind == Kind::roof) return {x.block, Kind::kac, x.hi, x.hi, x.parity};
        return {x.block, Kind::antikac, x.lo, x.lo, x.parity};
    }
    return x;
}

// Roof/bottom interval spanned by a label; kac(v) = roof[T^-v, v], antikac(v) = bottom[v, T^+v].
inline IndecompLabel as_zigzag(const IndecompLabel& x) {
    if (x.kind == Kind::kac) return {x.block, Kind::roof, free_step(x.block, x.lo, -1), x.lo, x.parity};
    if (x.kind == Kind::antikac) return {x.block, Kind::bottom, x.lo, free_step(x.block, x.lo, 1), x.parity};
    if (x.kind == Kind::irr) return {x.block, Kind::roof, x.lo, x.lo, x.parity};
    return x;
}

inline std::vector<long> composition_factors(const IndecompLabel& x) {
    validate(x);
    const auto& b = x.block;
    switch (x.kind) {
        case Kind::irr:
        case Kind::typical: return {x.lo};
        case Kind::kac: return {x.lo, free_step(b, x.lo, -1)};
        case Kind::antikac: return {x.lo, free_step(b, x.lo, 1)};
        case Kind::proj: return {x.lo, free_step(b, x.lo, -1), free_step(b, x.lo, 1), x.lo};
        case Kind::roof:
        case Kind::bottom: {
            std::vector<long> out;
            for (long c = block_coordinate(b, x.lo); c <= block_coordinate(b, x.hi); ++c)
                out.push_back(position_at(b, c));
            return out;
        }
    }
    return {};
}

inline Integer irr_superdimension(const BlockId& b, long v, int parity) {
    Integer d = weyl_dim(core_weight(weight_at(b, v)));
    return (block_coordinate(b, v) + parity) % 2 == 0 ? d : Integer(-d);
}

inline Integer superdimension(const IndecompLabel& x) {
    validate(x);
    switch (x.kind) {
        case Kind::irr: return irr_superdimension(x.block, x.lo, x.parity);
        case Kind::roof:
        case Kind::bottom:
            if (interval_length(x) % 2 == 0) return 0;
            return irr_superdimension(x.block, x.lo, x.parity);
        default: return 0;
    }
}

inline std::string format_label(const IndecompLabel& x) {
    std::string s = x.parity ? "pi:" : "";
    s += kind_name(x.kind);
    s += "@" + std::to_string(x.lo);
    if (x.kind == Kind::roof || x.kind == Kind::bottom) s += ":" + std::to_string(x.hi);
    s += ",block=";
    for (std::size_t i = 0; i < x.block.crosses.size(); ++i)
        s += (i ? "," : "") + std::to_string(x.block.crosses[i]);
    return s;
}

// Inverse of format_label: [pi:]kind@lo[:hi],block=c1,...,ck
inline IndecompLabel parse_label(std::string s) {
    IndecompLabel x;
    if (s.rfind("pi:", 0) == 0) {
        x.parity = 1;
        s = s.substr(3);
    }
    auto at = s.find('@');
    auto bl = s.find(",block=");
    if (at == std::string::npos || bl == std::string::npos || bl < at)
        throw std::invalid_argument("label must look like kind@lo[:hi],block=c1,...");
    x.kind = kind_from_name(s.substr(0, at));
    std::string pos = s.substr(at + 1, bl - at - 1);
    auto colon = pos.find(':');
    try {
        x.lo = std::stol(pos.substr(0, colon));
        x.hi = colon == std::string::npos ? x.lo : std::stol(pos.substr(colon + 1));
        std::string rest = s.substr(bl + 7);
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            std::size_t used = 0;
            x.block.crosses.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("trailing characters");
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed label '" + s + "'");
    }
    std::sort(x.block.crosses.begin(), x.block.crosses.end());
    return normalize(x);
}

}  // namespace superq
