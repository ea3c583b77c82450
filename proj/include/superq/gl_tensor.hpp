#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace superq {

using Integer = mpz_class;

// Weakly decreasing list of positive parts.
struct Partition {
    std::vector<long> parts;

    long size() const {
        long s = 0;
        for (long p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    long operator[](int i) const { return i < length() ? parts[i] : 0; }
    auto operator<=>(const Partition&) const = default;
};

// Weakly decreasing integer vector: a highest weight of gl(k), k = parts.size().
struct RationalWeight {
    std::vector<long> parts;

    int rank() const { return static_cast<int>(parts.size()); }
    auto operator<=>(const RationalWeight&) const = default;
};

struct Bipartition {
    Partition left;
    Partition right;
    auto operator<=>(const Bipartition&) const = default;
};

using WeightMultiset = std::map<RationalWeight, Integer>;

inline Partition make_partition(std::vector<long> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw std::invalid_argument("not a partition");
    }
    return Partition{std::move(parts)};
}

inline RationalWeight make_rational_weight(std::vector<long> parts) {
    if (parts.empty()) throw std::invalid_argument("rational weight of rank 0");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw std::invalid_argument("rational weight not dominant");
    return RationalWeight{std::move(parts)};
}

namespace detail {

struct LrSearch {
    std::vector<long> outer, inner, content;
    std::vector<std::vector<int>> grid;  // grid[row][col], 0 = outside skew shape
    std::vector<long> used;
    std::vector<std::pair<int, int>> cells;
    Integer count = 0;

    void run(std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int hi = static_cast<int>(content.size());
        if (c + 1 < outer[r]) hi = std::min(hi, grid[r][c + 1]);
        int lo = 1;
        if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) lo = grid[r - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[v - 1] >= content[v - 1]) continue;
            if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;
            ++used[v - 1];
            grid[r][c] = v;
            run(idx + 1);
            grid[r][c] = 0;
            --used[v - 1];
        }
    }
};

}  // namespace detail

// Number of LR tableaux of shape nu/alpha and content beta.
inline Integer lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& nu) {
    if (alpha.size() + beta.size() != nu.size()) return 0;
    if (alpha.length() > nu.length()) return 0;
    for (int i = 0; i < alpha.length(); ++i)
        if (alpha.parts[i] > nu.parts[i]) return 0;
    if (beta.length() == 0) return 1;

    detail::LrSearch s;
    s.outer = nu.parts;
    s.inner.assign(nu.parts.size(), 0);
    for (int i = 0; i < alpha.length(); ++i) s.inner[i] = alpha.parts[i];
    s.content = beta.parts;
    s.used.assign(beta.parts.size(), 0);
    s.grid.resize(nu.parts.size());
    for (std::size_t r = 0; r < nu.parts.size(); ++r) {
        s.grid[r].assign(nu.parts[r], 0);
        for (long c = nu.parts[r] - 1; c >= s.inner[r]; --c) s.cells.emplace_back(int(r), int(c));
    }
    s.run(0);
    return s.count;
}

namespace detail {

inline void partitions_containing(const std::vector<long>& inner, long total, int max_len,
                                  std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    int i = static_cast<int>(cur.size());
    long placed = 0;
    for (long p : cur) placed += p;
    long rest = total - placed;
    if (rest == 0) {
        bool ok = true;
        for (int j = i; j < static_cast<int>(inner.size()); ++j)
            if (inner[j] > 0) ok = false;
        if (ok) out.push_back(cur);
        return;
    }
    if (i >= max_len) return;
    long lower = i < static_cast<int>(inner.size()) ? inner[i] : 0;
    long upper = i == 0 ? rest : std::min(rest, cur.back());
    for (long p = upper; p >= std::max(lower, 1L); --p) {
        cur.push_back(p);
        partitions_containing(inner, total, max_len, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All partitions of `total` with at most max_len parts containing `inner`.
inline std::vector<Partition> partitions_over(const Partition& inner, long total, int max_len) {
    std::vector<std::vector<long>> raw;
    std::vector<long> cur;
    detail::partitions_containing(inner.parts, total, max_len, cur, raw);
    std::vector<Partition> out;
    for (auto& r : raw) out.push_back(Partition{std::move(r)});
    return out;
}

inline std::vector<Partition> partitions_of(long n) { return partitions_over(Partition{}, n, int(n) + 1); }

// Product of two Schur functions truncated to at most max_len rows.
inline std::map<Partition, Integer> lr_product(const Partition& a, const Partition& b, int max_len) {
    std::map<Partition, Integer> out;
    for (const auto& nu : partitions_over(a, a.size() + b.size(), max_len)) {
        Integer c = lr_coefficient(a, b, nu);
        if (c != 0) out[nu] = c;
    }
    return out;
}

// Tensor product of irreducible gl(k) representations with arbitrary integral highest weights.
inline WeightMultiset tensor_rational(const RationalWeight& a, const RationalWeight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in tensor_rational");
    int k = a.rank();
    long sa = a.parts.back(), sb = b.parts.back();
    std::vector<long> pa, pb;
    for (long x : a.parts) pa.push_back(x - sa);
    for (long x : b.parts) pb.push_back(x - sb);
    WeightMultiset out;
    for (auto& [nu, c] : lr_product(make_partition(pa), make_partition(pb), k)) {
        std::vector<long> w(k);
        for (int i = 0; i < k; ++i) w[i] = nu[i] + sa + sb;
        out[RationalWeight{w}] += c;
    }
    return out;
}

inline Integer weyl_dim(const RationalWeight& a) {
    Integer num = 1, den = 1;
    int k = a.rank();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            num *= a.parts[i] - a.parts[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

// (left, right) with left = positive entries and right = negated negative entries in reverse.
inline Bipartition bipartition_of(const RationalWeight& w) {
    Bipartition bp;
    for (long x : w.parts)
        if (x > 0) bp.left.parts.push_back(x);
    for (auto it = w.parts.rbegin(); it != w.parts.rend(); ++it)
        if (*it < 0) bp.right.parts.push_back(-*it);
    return bp;
}

inline RationalWeight wt_of_bipartition(int k, const Bipartition& bp) {
    if (bp.left.length() + bp.right.length() > k)
        throw std::invalid_argument("bipartition too long for rank " + std::to_string(k));
    std::vector<long> w(k, 0);
    for (int i = 0; i < bp.left.length(); ++i) w[i] = bp.left.parts[i];
    for (int i = 0; i < bp.right.length(); ++i) w[k - 1 - i] = -bp.right.parts[i];
    return RationalWeight{w};
}

namespace detail {

inline void ssyt_fill(const std::vector<long>& shape, int k, std::vector<std::vector<int>>& t, int r, int c,
                      std::vector<long>& content, std::map<std::vector<long>, Integer>& out) {
    if (r == static_cast<int>(shape.size())) {
        out[content] += 1;
        return;
    }
    if (c == shape[r]) {
        ssyt_fill(shape, k, t, r + 1, 0, content, out);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= k; ++v) {
        t[r][c] = v;
        ++content[v - 1];
        ssyt_fill(shape, k, t, r, c + 1, content, out);
        --content[v - 1];
    }
}

}  // namespace detail

// Weight multiplicities of the irreducible gl(k) module of highest weight a.
inline std::map<std::vector<long>, Integer> gl_character(const RationalWeight& a) {
    int k = a.rank();
    long shift = a.parts.back();
    std::vector<long> shape;
    for (long x : a.parts)
        if (x - shift > 0) shape.push_back(x - shift);
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(shape[r], 0);
    std::vector<long> content(k, 0);
    std::map<std::vector<long>, Integer> raw, out;
    detail::ssyt_fill(shape, k, t, 0, 0, content, raw);
    for (auto& [w, c] : raw) {
        auto v = w;
        for (auto& x : v) x += shift;
        out[v] = c;
    }
    return out;
}

}  // namespace superq
