#pragma once

// Independent Littlewood-Richardson reference: expand s_beta by Jacobi-Trudi
// and multiply s_alpha by complete symmetric functions through Pieri's rule.
// Used only by tests and the `check lr-oracle` suite.

#include "superq/gl_tensor.hpp"

#include <algorithm>
#include <numeric>

namespace superq::testing {

using SchurSum = std::map<std::vector<long>, Integer>;

namespace detail {

inline void horizontal_strips(const std::vector<long>& lam, long k, std::size_t row, std::vector<long>& cur,
                              std::vector<std::vector<long>>& out) {
    if (row == lam.size() + 1) {
        if (k == 0) {
            auto v = cur;
            while (!v.empty() && v.back() == 0) v.pop_back();
            out.push_back(v);
        }
        return;
    }
    long base = row < lam.size() ? lam[row] : 0;
    long cap = row == 0 ? k : (row - 1 < lam.size() ? lam[row - 1] : 0) - base;
    for (long add = 0; add <= std::min(k, cap); ++add) {
        cur.push_back(base + add);
        horizontal_strips(lam, k - add, row + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

inline SchurSum pieri(const SchurSum& in, long k) {
    SchurSum out;
    if (k < 0) return out;
    for (const auto& [lam, c] : in) {
        std::vector<std::vector<long>> res;
        std::vector<long> cur;
        detail::horizontal_strips(lam, k, 0, cur, res);
        for (auto& nu : res) out[nu] += c;
    }
    return out;
}

inline SchurSum schur_product(const Partition& alpha, const Partition& beta) {
    int l = beta.length();
    SchurSum total;
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        SchurSum acc{{alpha.parts, Integer(1)}};
        bool dead = false;
        for (int i = 0; i < l && !dead; ++i) {
            long k = beta.parts[i] - i + perm[i];
            if (k < 0) dead = true;
            else acc = pieri(acc, k);
        }
        if (dead) continue;
        for (auto& [nu, c] : acc) total[nu] += inversions % 2 ? -c : c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
    return total;
}

}  // namespace superq::testing
