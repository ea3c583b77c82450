#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace superq::oracle {

using Rational = mpq_class;
using SparseVec = std::map<int, Rational>;

inline void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
    if (a == 0) return;
    for (const auto& [i, v] : x) {
        auto it = y.find(i);
        if (it == y.end()) y.emplace(i, a * v);
        else {
            it->second += a * v;
            if (it->second == 0) y.erase(it);
        }
    }
}

// Incrementally built basis of a subspace with coordinates of members.
class SubspaceBasis {
public:
    // Returns false when v already lies in the span.
    bool add(const SparseVec& v) {
        auto [r, comb] = reduce(v);
        if (r.empty()) return false;
        int pivot = r.begin()->first;
        Rational inv = 1 / r.begin()->second;
        for (auto& [i, x] : r) x *= inv;
        for (auto& [i, x] : comb) x *= inv;
        comb[static_cast<int>(members_.size())] = inv;
        rows_.push_back({pivot, std::move(r), std::move(comb)});
        index_[pivot] = rows_.size() - 1;
        members_.push_back(v);
        return true;
    }

    std::optional<SparseVec> coordinates(const SparseVec& v) const {
        auto [r, comb] = reduce(v);
        if (!r.empty()) return std::nullopt;
        for (auto& [i, x] : comb) x = -x;
        return comb;
    }

    bool contains(const SparseVec& v) const { return reduce(v).first.empty(); }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<SparseVec>& members() const { return members_; }

private:
    struct Row {
        int pivot;
        SparseVec vec;   // pivot coefficient 1
        SparseVec comb;  // vec = sum comb[j] * members[j]
    };

    // Returns (residual, c) with residual = v + sum c[j] members[j].
    std::pair<SparseVec, SparseVec> reduce(const SparseVec& v) const {
        SparseVec r = v, comb;
        auto it = r.begin();
        while (it != r.end()) {
            auto row = index_.find(it->first);
            if (row == index_.end()) {
                ++it;
                continue;
            }
            const Row& R = rows_[row->second];
            Rational f = -it->second;
            int key = it->first;
            axpy(r, f, R.vec);
            axpy(comb, f, R.comb);
            it = r.upper_bound(key);
        }
        return {r, comb};
    }

    std::vector<Row> rows_;
    std::map<int, std::size_t> index_;
    std::vector<SparseVec> members_;
};

// Null space of a sparse homogeneous linear system in `nvars` unknowns.
class SparseSystem {
public:
    explicit SparseSystem(int nvars) : nvars_(nvars) {}

    void add_equation(SparseVec row) {
        // pivot rows only reach below their pivot, so sweep downward
        for (auto it = row.end(); it != row.begin();) {
            --it;
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) continue;
            int key = it->first;
            Rational f = -it->second;
            axpy(row, f, rows_[p->second]);
            it = row.lower_bound(key);
        }
        if (row.empty()) return;
        // pivot on the last variable keeps later substitution chains short
        auto last = std::prev(row.end());
        int pivot = last->first;
        Rational inv = 1 / last->second;
        for (auto& [i, x] : row) x *= inv;
        pivots_[pivot] = rows_.size();
        order_.push_back(pivot);
        rows_.push_back(std::move(row));
    }

    std::vector<SparseVec> nullspace() const {
        std::vector<int> free;
        for (int v = 0; v < nvars_; ++v)
            if (!pivots_.count(v)) free.push_back(v);
        std::vector<SparseVec> out;
        for (int f : free) {
            std::map<int, Rational> val{{f, Rational(1)}};
            for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
                const auto& row = rows_[pivots_.at(*it)];
                Rational s = 0;
                for (const auto& [i, x] : row)
                    if (i != *it) {
                        auto vi = val.find(i);
                        if (vi != val.end()) s -= x * vi->second;
                    }
                if (s != 0) val[*it] = s;
            }
            out.push_back(SparseVec(val.begin(), val.end()));
        }
        return out;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int nvars_;
    std::vector<SparseVec> rows_;
    std::map<int, std::size_t> pivots_;
    std::vector<int> order_;
};

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    bool operator==(const Matrix&) const = default;
};

inline Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& v = x(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
        }
    return z;
}

inline Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
}

inline Matrix operator*(const Rational& s, Matrix x) {
    for (auto& v : x.a) v *= s;
    return x;
}

inline Rational trace(const Matrix& x) {
    Rational t = 0;
    for (int i = 0; i < x.rows; ++i) t += x(i, i);
    return t;
}

// Basis of {v : x v = 0}, as columns.
inline std::vector<std::vector<Rational>> kernel(Matrix x) {
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < x.cols && r < x.rows; ++c) {
        int p = -1;
        for (int i = r; i < x.rows; ++i)
            if (x(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < x.cols; ++j) std::swap(x(p, j), x(r, j));
        Rational inv = 1 / x(r, c);
        for (int j = 0; j < x.cols; ++j) x(r, j) *= inv;
        for (int i = 0; i < x.rows; ++i) {
            if (i == r || x(i, c) == 0) continue;
            Rational f = x(i, c);
            for (int j = 0; j < x.cols; ++j) x(i, j) -= f * x(r, j);
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(x.cols, false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<std::vector<Rational>> out;
    for (int f = 0; f < x.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(x.cols);
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(pivcol.size()); ++i) v[pivcol[i]] = -x(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

inline int rank(const Matrix& x) { return x.cols - static_cast<int>(kernel(x).size()); }

}  // namespace superq::oracle
