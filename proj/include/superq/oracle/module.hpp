#pragma once

#include "superq/oracle/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superq::oracle {

struct SparseMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, Rational>>> col;  // col[j] = nonzero (row, value), rows ascending

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
};

inline SparseVec act_on(const SparseMatrix& a, const SparseVec& v) {
    SparseVec out;
    for (const auto& [j, x] : v)
        for (const auto& [i, y] : a.col[j]) {
            auto& slot = out[i];
            slot += x * y;
            if (slot == 0) out.erase(i);
        }
    return out;
}

inline SparseMatrix from_columns(int rows, const std::vector<SparseVec>& cols) {
    SparseMatrix s(rows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, x] : cols[j]) s.col[j].emplace_back(i, x);
    return s;
}

inline SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
    std::vector<SparseVec> cols(b.cols);
    for (int j = 0; j < b.cols; ++j) cols[j] = act_on(a, SparseVec(b.col[j].begin(), b.col[j].end()));
    return from_columns(a.rows, cols);
}

inline bool is_zero(const SparseMatrix& a) {
    for (const auto& c : a.col)
        if (!c.empty()) return false;
    return true;
}

using WeightKey = std::vector<long>;

// Finite-dimensional weight module of gl(m|1) (indices 0..m, index m odd), or of its even part
// when only the even generators are meaningful.
struct SuperMatrixModule {
    int m = 0;
    std::vector<WeightKey> weights;  // eigenvalues of E_11 .. E_{m+1,m+1}
    std::vector<int> parity;
    std::vector<SparseMatrix> action;  // E_ab at a * (m + 1) + b

    int dim() const { return static_cast<int>(weights.size()); }
    int n() const { return m + 1; }
    const SparseMatrix& E(int a, int b) const { return action[a * (m + 1) + b]; }
    int dim_even() const {
        int c = 0;
        for (int p : parity) c += p == 0;
        return c;
    }
    int dim_odd() const { return dim() - dim_even(); }
    long sdim() const { return dim_even() - dim_odd(); }
};

inline int generator_parity(int m, int a, int b) { return (a == m) != (b == m) ? 1 : 0; }

inline std::map<WeightKey, std::vector<int>> weight_spaces(const SuperMatrixModule& M) {
    std::map<WeightKey, std::vector<int>> out;
    for (int i = 0; i < M.dim(); ++i) out[M.weights[i]].push_back(i);
    return out;
}

inline WeightKey root(int m, int a, int b) {
    WeightKey r(m + 1, 0);
    r[a] += 1;
    r[b] -= 1;
    return r;
}

inline WeightKey operator+(WeightKey x, const WeightKey& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

// Simple root vectors and their negatives; together with the Cartan they generate gl(m|1).
inline std::vector<std::pair<int, int>> simple_generators(int m) {
    std::vector<std::pair<int, int>> g;
    for (int i = 0; i < m; ++i) {
        g.emplace_back(i, i + 1);
        g.emplace_back(i + 1, i);
    }
    return g;
}

inline SparseMatrix diagonal_action(const SuperMatrixModule& M, int a) {
    SparseMatrix s(M.dim(), M.dim());
    for (int i = 0; i < M.dim(); ++i)
        if (M.weights[i][a] != 0) s.col[i].emplace_back(i, Rational(M.weights[i][a]));
    return s;
}

// rho([X,Y]) = rho(X)rho(Y) - (-1)^{p(X)p(Y)} rho(Y)rho(X) on all pairs of matrix units.
inline std::string bracket_defect(const SuperMatrixModule& M, bool even_only = false) {
    int n = M.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    int px = generator_parity(M.m, a, b), py = generator_parity(M.m, c, d);
                    if (even_only && (px || py)) continue;
                    int sign = px && py ? 1 : -1;  // XY + sign * YX
                    for (int j = 0; j < M.dim(); ++j) {
                        SparseVec e{{j, Rational(1)}};
                        SparseVec lhs = act_on(M.E(a, b), act_on(M.E(c, d), e));
                        axpy(lhs, sign, act_on(M.E(c, d), act_on(M.E(a, b), e)));
                        SparseVec rhs;
                        if (b == c) axpy(rhs, 1, act_on(M.E(a, d), e));
                        if (d == a) axpy(rhs, sign, act_on(M.E(c, b), e));
                        axpy(lhs, -1, rhs);
                        if (!lhs.empty())
                            return "bracket fails for E" + std::to_string(a + 1) + std::to_string(b + 1) + ", E" +
                                   std::to_string(c + 1) + std::to_string(d + 1);
                    }
                }
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < M.dim(); ++j) {
            SparseVec e{{j, Rational(1)}};
            SparseVec x = act_on(M.E(a, a), e);
            SparseVec want;
            if (M.weights[j][a] != 0) want[j] = M.weights[j][a];
            if (x != want) return "weight data disagrees with Cartan action";
        }
    return "";
}

inline SuperMatrixModule tensor(const SuperMatrixModule& A, const SuperMatrixModule& B) {
    if (A.m != B.m) throw std::invalid_argument("rank mismatch in module tensor product");
    SuperMatrixModule T;
    T.m = A.m;
    int db = B.dim();
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < db; ++j) {
            T.weights.push_back(A.weights[i] + B.weights[j]);
            T.parity.push_back((A.parity[i] + B.parity[j]) % 2);
        }
    int n = A.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int px = generator_parity(A.m, a, b);
            SparseMatrix s(T.dim(), T.dim());
            for (int i = 0; i < A.dim(); ++i)
                for (int j = 0; j < db; ++j) {
                    std::map<int, Rational> colv;
                    for (const auto& [r, x] : A.E(a, b).col[i]) colv[r * db + j] += x;
                    int sign = px && A.parity[i] ? -1 : 1;
                    for (const auto& [r, x] : B.E(a, b).col[j]) colv[i * db + r] += sign * x;
                    for (auto& [r, x] : colv)
                        if (x != 0) s.col[i * db + j].emplace_back(r, x);
                }
            T.action.push_back(std::move(s));
        }
    return T;
}

inline SuperMatrixModule direct_sum(const SuperMatrixModule& A, const SuperMatrixModule& B) {
    if (A.m != B.m) throw std::invalid_argument("rank mismatch in direct sum");
    SuperMatrixModule S{A.m, A.weights, A.parity, {}};
    S.weights.insert(S.weights.end(), B.weights.begin(), B.weights.end());
    S.parity.insert(S.parity.end(), B.parity.begin(), B.parity.end());
    int off = A.dim();
    for (std::size_t g = 0; g < A.action.size(); ++g) {
        SparseMatrix s(S.dim(), S.dim());
        for (int j = 0; j < A.dim(); ++j) s.col[j] = A.action[g].col[j];
        for (int j = 0; j < B.dim(); ++j)
            for (const auto& [r, x] : B.action[g].col[j]) s.col[off + j].emplace_back(off + r, x);
        S.action.push_back(std::move(s));
    }
    return S;
}

// Flipping parity labels gives a module isomorphic to Pi (x) M.
inline SuperMatrixModule parity_shift(SuperMatrixModule M) {
    for (auto& p : M.parity) p ^= 1;
    return M;
}

// Submodule with the given basis of weight vectors (must be stable under the action).
inline SuperMatrixModule restrict_to(const SuperMatrixModule& M, const std::vector<SparseVec>& basis) {
    SuperMatrixModule S;
    S.m = M.m;
    std::map<WeightKey, SubspaceBasis> spaces;
    std::map<WeightKey, std::vector<int>> index;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].empty()) throw std::invalid_argument("zero vector in submodule basis");
        int first = basis[k].begin()->first;
        const auto& w = M.weights[first];
        int par = M.parity[first];
        for (const auto& [i, x] : basis[k])
            if (M.weights[i] != w || M.parity[i] != par)
                throw std::invalid_argument("submodule basis vector is not homogeneous");
        if (!spaces[w].add(basis[k])) throw std::invalid_argument("submodule basis is dependent");
        index[w].push_back(static_cast<int>(k));
        S.weights.push_back(w);
        S.parity.push_back(par);
    }
    int n = M.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SparseMatrix s(S.dim(), S.dim());
            for (std::size_t k = 0; k < basis.size(); ++k) {
                SparseVec y = act_on(M.E(a, b), basis[k]);
                if (y.empty()) continue;
                const auto& w = M.weights[y.begin()->first];
                auto sp = spaces.find(w);
                std::optional<SparseVec> c;
                if (sp != spaces.end()) c = sp->second.coordinates(y);
                if (!c) throw std::logic_error("subspace is not stable under the action");
                for (const auto& [j, x] : *c) s.col[k].emplace_back(index[w][j], x);
                std::sort(s.col[k].begin(), s.col[k].end(),
                          [](const auto& p, const auto& q) { return p.first < q.first; });
            }
            S.action.push_back(std::move(s));
        }
    return S;
}

// Basis of the submodule generated by homogeneous weight vectors.
inline std::vector<SparseVec> generate(const SuperMatrixModule& M, const std::vector<SparseVec>& gens) {
    std::map<std::pair<WeightKey, int>, SubspaceBasis> spaces;
    std::vector<SparseVec> basis, queue;
    auto push = [&](const SparseVec& v) {
        if (v.empty()) return;
        int i = v.begin()->first;
        if (spaces[{M.weights[i], M.parity[i]}].add(v)) {
            basis.push_back(v);
            queue.push_back(v);
        }
    };
    for (const auto& g : gens) push(g);
    while (!queue.empty()) {
        SparseVec v = std::move(queue.back());
        queue.pop_back();
        for (auto [a, b] : simple_generators(M.m)) push(act_on(M.E(a, b), v));
    }
    return basis;
}

struct Quotient {
    SuperMatrixModule module;
    SparseMatrix projection;  // M -> M/S
};

inline Quotient quotient(const SuperMatrixModule& M, const std::vector<SparseVec>& sub) {
    std::map<std::pair<WeightKey, int>, SubspaceBasis> spaces;
    std::map<std::pair<WeightKey, int>, int> sub_count;
    for (const auto& v : sub) {
        int i = v.begin()->first;
        std::pair key{M.weights[i], M.parity[i]};
        if (spaces[key].add(v)) ++sub_count[key];
    }
    // complement: standard basis vectors independent of the submodule
    std::vector<int> keep;
    std::map<std::pair<WeightKey, int>, std::vector<int>> comp_index;
    for (int i = 0; i < M.dim(); ++i) {
        std::pair key{M.weights[i], M.parity[i]};
        if (spaces[key].add(SparseVec{{i, Rational(1)}})) {
            comp_index[key].push_back(static_cast<int>(keep.size()));
            keep.push_back(i);
        }
    }
    auto project = [&](const SparseVec& y) {
        SparseVec out;
        if (y.empty()) return out;
        int i = y.begin()->first;
        std::pair key{M.weights[i], M.parity[i]};
        auto c = spaces.at(key).coordinates(y);
        int off = sub_count[key];
        for (const auto& [j, x] : *c)
            if (j >= off) out[comp_index[key][j - off]] = x;
        return out;
    };
    Quotient Q;
    Q.module.m = M.m;
    for (int i : keep) {
        Q.module.weights.push_back(M.weights[i]);
        Q.module.parity.push_back(M.parity[i]);
    }
    for (const auto& X : M.action) {
        std::vector<SparseVec> cols;
        for (int i : keep) cols.push_back(project(SparseVec(X.col[i].begin(), X.col[i].end())));
        Q.module.action.push_back(from_columns(Q.module.dim(), cols));
    }
    std::vector<SparseVec> pcols;
    for (int i = 0; i < M.dim(); ++i) pcols.push_back(project(SparseVec{{i, Rational(1)}}));
    Q.projection = from_columns(Q.module.dim(), pcols);
    return Q;
}

// Even g-equivariant maps M -> N.
inline std::vector<SparseMatrix> hom_space(const SuperMatrixModule& M, const SuperMatrixModule& N) {
    if (M.m != N.m) throw std::invalid_argument("rank mismatch in hom_space");
    auto wm = weight_spaces(M), wn = weight_spaces(N);
    std::map<std::pair<int, int>, int> var;  // (row in N, col in M) -> unknown
    for (const auto& [w, cols] : wm) {
        auto it = wn.find(w);
        if (it == wn.end()) continue;
        for (int c : cols)
            for (int r : it->second)
                if (M.parity[c] == N.parity[r]) var.emplace(std::pair{r, c}, static_cast<int>(var.size()));
    }
    SparseSystem sys(static_cast<int>(var.size()));
    auto lookup = [&](int r, int c) {
        auto it = var.find({r, c});
        return it == var.end() ? -1 : it->second;
    };
    for (auto [a, b] : simple_generators(M.m)) {
        WeightKey alpha = root(M.m, a, b);
        const auto& XM = M.E(a, b);
        const auto& XN = N.E(a, b);
        for (const auto& [w, cols] : wm) {
            auto target = wn.find(w + alpha);
            if (target == wn.end()) continue;
            auto src_n = wn.find(w);
            for (int c : cols) {
                // (X_N phi - phi X_M) e_c restricted to row r
                std::map<int, SparseVec> rows;
                if (src_n != wn.end())
                    for (int k : src_n->second) {
                        int v = lookup(k, c);
                        if (v < 0) continue;
                        for (const auto& [r, x] : XN.col[k]) rows[r][v] += x;
                    }
                for (const auto& [k, x] : XM.col[c])
                    for (int r : target->second) {
                        int v = lookup(r, k);
                        if (v >= 0) rows[r][v] -= x;
                    }
                for (auto& [r, eq] : rows) {
                    for (auto it = eq.begin(); it != eq.end();) it = it->second == 0 ? eq.erase(it) : std::next(it);
                    if (!eq.empty()) sys.add_equation(std::move(eq));
                }
            }
        }
    }
    std::vector<SparseMatrix> out;
    std::vector<std::pair<int, int>> where(var.size());
    for (const auto& [rc, v] : var) where[v] = rc;
    for (const auto& sol : sys.nullspace()) {
        std::vector<SparseVec> cols(M.dim());
        for (const auto& [v, x] : sol) cols[where[v].second][where[v].first] = x;
        out.push_back(from_columns(N.dim(), cols));
    }
    return out;
}

// Kernel of a module map as a list of homogeneous basis vectors of the source.
inline std::vector<SparseVec> kernel_vectors(const SuperMatrixModule& M, const SparseMatrix& f) {
    std::vector<SparseVec> out;
    std::map<std::pair<WeightKey, int>, std::vector<int>> spaces;
    for (int i = 0; i < M.dim(); ++i) spaces[{M.weights[i], M.parity[i]}].push_back(i);
    for (const auto& [key, idx] : spaces) {
        std::map<int, int> rowpos;
        for (int c : idx)
            for (const auto& [r, x] : f.col[c]) rowpos.emplace(r, static_cast<int>(rowpos.size()));
        Matrix a(static_cast<int>(rowpos.size()), static_cast<int>(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (const auto& [r, x] : f.col[idx[j]]) a(rowpos[r], static_cast<int>(j)) = x;
        for (const auto& v : kernel(a)) {
            SparseVec s;
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (v[j] != 0) s[idx[j]] = v[j];
            out.push_back(std::move(s));
        }
    }
    return out;
}

// Nonzero columns of f, as homogeneous vectors spanning the image.
inline std::vector<SparseVec> image_vectors(const SparseMatrix& f) {
    std::vector<SparseVec> out;
    for (const auto& c : f.col)
        if (!c.empty()) out.emplace_back(c.begin(), c.end());
    return out;
}

inline std::map<WeightKey, int> character(const SuperMatrixModule& M) {
    std::map<WeightKey, int> ch;
    for (const auto& w : M.weights) ++ch[w];
    return ch;
}

}  // namespace superq::oracle
