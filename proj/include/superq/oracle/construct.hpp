#pragma once

#include "superq/oracle/module.hpp"
#include "superq/weights.hpp"

#include <bit>
#include <functional>

namespace superq::oracle {

namespace detail {

// Wedge monomials e_S, S a bitmask of {0..m-1}; E_ab e_S with sign from reordering.
inline std::optional<std::pair<unsigned, int>> wedge_act(int a, int b, unsigned S) {
    if (!(S >> b & 1u)) return std::nullopt;
    if (a == b) return std::pair{S, 1};
    if (S >> a & 1u) return std::nullopt;
    unsigned lo = std::min(a, b), hi = std::max(a, b);
    unsigned between = S & (((1u << hi) - 1) & ~((1u << (lo + 1)) - 1));
    int sign = std::popcount(between) % 2 ? -1 : 1;
    return std::pair{(S & ~(1u << b)) | (1u << a), sign};
}

}  // namespace detail

// Simple gl(m) (+) gl(1) module of highest weight (even | odd) inside a tensor product of exterior
// powers of the standard module, twisted by a power of the determinant. Odd generators act by zero.
inline SuperMatrixModule build_L0(int m, const std::vector<long>& even, long odd) {
    if (static_cast<int>(even.size()) != m) throw std::invalid_argument("even part has wrong length");
    for (int i = 1; i < m; ++i)
        if (even[i] > even[i - 1]) throw std::invalid_argument("L0 needs a dominant gl(m) weight");
    long shift = even[m - 1];
    std::vector<int> cols;  // column lengths of the shifted partition
    for (long j = 1; j <= even[0] - shift; ++j) {
        int c = 0;
        for (long x : even) c += x - shift >= j;
        cols.push_back(c);
    }
    // ambient basis: tuples of subsets, encoded with one m-bit digit per column
    const unsigned long mask = (1ul << m) - 1;
    auto digit = [&](unsigned long code, std::size_t j) { return static_cast<unsigned>(code >> (m * j) & mask); };
    auto set_digit = [&](unsigned long code, std::size_t j, unsigned v) {
        return (code & ~(mask << (m * j))) | (static_cast<unsigned long>(v) << (m * j));
    };
    if (cols.size() * m > 64) throw std::invalid_argument("L0 weight too large for the ambient encoding");
    auto act_ambient = [&](int a, int b, const std::map<unsigned long, Rational>& v) {
        std::map<unsigned long, Rational> out;
        for (const auto& [code, x] : v)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                auto r = detail::wedge_act(a, b, digit(code, j));
                if (!r) continue;
                auto& slot = out[set_digit(code, j, r->first)];
                slot += x * r->second;
            }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    };
    auto weight_of = [&](unsigned long code) {
        WeightKey w(m + 1, shift);
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < m; ++i) w[i] += digit(code, j) >> i & 1u;
        w[m] = odd;
        return w;
    };
    // ambient vectors are re-indexed densely so SubspaceBasis can work with int keys
    std::map<unsigned long, int> code_index;
    auto to_sparse = [&](const std::map<unsigned long, Rational>& v) {
        SparseVec s;
        for (const auto& [code, x] : v) s[code_index.emplace(code, static_cast<int>(code_index.size())).first->second] = x;
        return s;
    };
    unsigned long top = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) top = set_digit(top, j, (1u << cols[j]) - 1);

    std::vector<std::map<unsigned long, Rational>> basis;
    std::vector<WeightKey> weights;
    std::map<WeightKey, SubspaceBasis> spaces;
    std::map<WeightKey, std::vector<int>> index;
    std::vector<std::size_t> queue;
    auto push = [&](std::map<unsigned long, Rational> v) {
        if (v.empty()) return;
        auto w = weight_of(v.begin()->first);
        if (!spaces[w].add(to_sparse(v))) return;
        index[w].push_back(static_cast<int>(basis.size()));
        queue.push_back(basis.size());
        basis.push_back(std::move(v));
        weights.push_back(w);
    };
    push({{top, Rational(1)}});
    while (!queue.empty()) {
        std::size_t k = queue.back();
        queue.pop_back();
        for (int i = 0; i + 1 < m; ++i) push(act_ambient(i + 1, i, basis[k]));
    }

    SuperMatrixModule L;
    L.m = m;
    L.weights = weights;
    L.parity.assign(basis.size(), static_cast<int>(((odd % 2) + 2) % 2));
    int n = m + 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SparseMatrix s(L.dim(), L.dim());
            if (a == m && b == m) {
                if (odd != 0)
                    for (int k = 0; k < L.dim(); ++k) s.col[k].emplace_back(k, Rational(odd));
            } else if (a < m && b < m) {
                for (int k = 0; k < L.dim(); ++k) {
                    auto y = act_ambient(a, b, basis[k]);
                    std::map<int, Rational> colv;
                    if (!y.empty()) {
                        auto w = weight_of(y.begin()->first);
                        auto c = spaces.at(w).coordinates(to_sparse(y));
                        if (!c) throw std::logic_error("L0 generation is not closed");
                        for (const auto& [j, x] : *c) colv[index[w][j]] += x;
                    }
                    if (a == b && shift != 0) colv[k] += shift;
                    for (auto& [r, x] : colv)
                        if (x != 0) s.col[k].emplace_back(r, x);
                }
            }
            L.action.push_back(std::move(s));
        }
    return L;
}

// Induced module Lambda(g_{-1}) (x) L0 (kac) or Lambda(g_{+1}) (x) L0 (antikac).
inline SuperMatrixModule induce(const SuperMatrixModule& L0, bool anti) {
    int m = L0.m, d0 = L0.dim();
    int nmask = 1 << m;
    // theta_i: E_{m,i} for kac, E_{i,m} for antikac
    auto theta = [&](int i) { return anti ? std::pair{i, m} : std::pair{m, i}; };
    auto is_free = [&](int a, int b) { return anti ? (a < m && b == m) : (a == m && b < m); };
    auto is_killer = [&](int a, int b) { return anti ? (a == m && b < m) : (a < m && b == m); };

    auto mult_theta = [&](int i, const SparseVec& v) {
        SparseVec out;
        for (const auto& [idx, x] : v) {
            unsigned mask = static_cast<unsigned>(idx / d0);
            if (mask >> i & 1u) continue;
            int sign = std::popcount(mask & ((1u << i) - 1)) % 2 ? -1 : 1;
            out[static_cast<int>((mask | 1u << i) * d0 + idx % d0)] += sign * x;
        }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    };

    std::function<SparseVec(int, int, unsigned, int)> act = [&](int a, int b, unsigned mask, int k) -> SparseVec {
        if (mask == 0) {
            SparseVec out;
            if (is_free(a, b)) out[static_cast<int>((1u << (anti ? a : b)) * d0 + k)] = 1;
            else if (!is_killer(a, b))
                for (const auto& [r, x] : L0.E(a, b).col[k]) out[r] = x;
            return out;
        }
        int i = std::countr_zero(mask);
        unsigned rest = mask & (mask - 1);
        auto [c, d] = theta(i);
        int px = generator_parity(m, a, b);
        SparseVec out;
        // [X, theta] acting on the rest
        if (b == c) axpy(out, 1, act(a, d, rest, k));
        if (d == a) axpy(out, px ? 1 : -1, act(c, b, rest, k));
        axpy(out, px ? -1 : 1, mult_theta(i, act(a, b, rest, k)));
        return out;
    };

    SuperMatrixModule K;
    K.m = m;
    for (int mask = 0; mask < nmask; ++mask)
        for (int k = 0; k < d0; ++k) {
            WeightKey w = L0.weights[k];
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) w = w + (anti ? root(m, i, m) : root(m, m, i));
            K.weights.push_back(w);
            K.parity.push_back((L0.parity[k] + std::popcount(static_cast<unsigned>(mask))) % 2);
        }
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= m; ++b) {
            std::vector<SparseVec> cols;
            for (int mask = 0; mask < nmask; ++mask)
                for (int k = 0; k < d0; ++k) cols.push_back(act(a, b, static_cast<unsigned>(mask), k));
            K.action.push_back(from_columns(K.dim(), cols));
        }
    return K;
}

inline long order_key(const WeightKey& w) {
    long m = static_cast<long>(w.size()) - 1, f = 0;
    for (long i = 0; i < m; ++i) f += (m + 1 - i) * w[i];
    return f + w[m];
}

// Largest submodule meeting the given weight space trivially (the radical of a highest weight module).
inline std::vector<SparseVec> radical_vectors(const SuperMatrixModule& M, const WeightKey& top) {
    std::map<std::pair<WeightKey, int>, std::vector<int>> spaces;
    for (int i = 0; i < M.dim(); ++i) spaces[{M.weights[i], M.parity[i]}].push_back(i);
    // U[key] = basis of the current candidate subspace
    std::map<std::pair<WeightKey, int>, std::vector<SparseVec>> U;
    for (const auto& [key, idx] : spaces) {
        if (key.first == top) continue;
        for (int i : idx) U[key].push_back(SparseVec{{i, Rational(1)}});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [key, basis] : U) {
            if (basis.empty()) continue;
            for (int a = 0; a <= M.m && !basis.empty(); ++a)
                for (int b = 0; b <= M.m && !basis.empty(); ++b) {
                    if (a == b) continue;
                    std::pair tkey{key.first + root(M.m, a, b), (key.second + generator_parity(M.m, a, b)) % 2};
                    auto tsp = spaces.find(tkey);
                    if (tsp == spaces.end()) continue;
                    // coordinates of X u modulo U[target] along a complement
                    SubspaceBasis sb;
                    int base = 0;
                    if (auto ut = U.find(tkey); ut != U.end())
                        for (const auto& v : ut->second) base += sb.add(v);
                    std::vector<int> comp;
                    for (int i : tsp->second)
                        if (sb.add(SparseVec{{i, Rational(1)}})) comp.push_back(i);
                    if (comp.empty()) continue;
                    Matrix A(static_cast<int>(comp.size()), static_cast<int>(basis.size()));
                    bool nonzero = false;
                    for (std::size_t j = 0; j < basis.size(); ++j) {
                        auto y = act_on(M.E(a, b), basis[j]);
                        if (y.empty()) continue;
                        auto c = sb.coordinates(y);
                        for (const auto& [t, x] : *c)
                            if (t >= base) {
                                A(t - base, static_cast<int>(j)) = x;
                                nonzero = true;
                            }
                    }
                    if (!nonzero) continue;
                    std::vector<SparseVec> next;
                    for (const auto& kv : kernel(A)) {
                        SparseVec s;
                        for (std::size_t j = 0; j < basis.size(); ++j) axpy(s, kv[j], basis[j]);
                        if (!s.empty()) next.push_back(std::move(s));
                    }
                    basis = std::move(next);
                    changed = true;
                }
        }
    }
    std::vector<SparseVec> out;
    for (auto& [key, basis] : U)
        for (auto& v : basis) out.push_back(v);
    return out;
}

inline WeightKey highest_weight(const SuperMatrixModule& M) {
    WeightKey best = M.weights.at(0);
    for (const auto& w : M.weights)
        if (order_key(w) > order_key(best)) best = w;
    return best;
}

inline WeightKey weight_key(const Weight& w) {
    WeightKey k = w.even;
    k.push_back(w.odd);
    return k;
}

inline SuperMatrixModule kac_module(const Weight& w) { return induce(build_L0(w.m, w.even, w.odd), false); }

inline SuperMatrixModule irreducible(const Weight& w) {
    auto K = kac_module(w);
    return quotient(K, radical_vectors(K, weight_key(w))).module;
}

}  // namespace superq::oracle
