#pragma once

#include "superq/oracle/construct.hpp"
#include "superq/quotient.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>

namespace superq::oracle {

inline Weight to_weight(const WeightKey& k) {
    return make_weight(std::vector<long>(k.begin(), k.end() - 1), k.back());
}

inline std::uint64_t default_seed() {
    if (const char* s = std::getenv("SUPERQ_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240601;
}

namespace detail {

// Endomorphisms stored block-diagonally over (weight, parity) spaces.
struct BlockMap {
    std::vector<Matrix> blocks;
};

// tr(x y) for square sparse matrices
inline Rational trace_product(const SparseMatrix& x, const SparseMatrix& y) {
    Rational t = 0;
    for (int j = 0; j < x.cols; ++j)
        for (const auto& [i, v] : x.col[j])
            for (const auto& [k, w] : y.col[i])
                if (k == j) t += v * w;
    return t;
}

inline SparseVec flatten(const SparseMatrix& x) {
    SparseVec v;
    for (int j = 0; j < x.cols; ++j)
        for (const auto& [i, a] : x.col[j]) v[j * x.rows + i] = a;
    return v;
}

// Continued-fraction convergents of x with bounded denominator.
inline std::vector<Rational> rational_candidates(double x) {
    std::vector<Rational> out;
    long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    double r = x;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(r);
        if (std::abs(a) > 1e12) break;
        long ai = static_cast<long>(a);
        long h2 = ai * h0 + h1, k2 = ai * k0 + k1;
        if (k2 > 10000000) break;
        out.emplace_back(h2, k2);
        out.back().canonicalize();
        h1 = h0;
        h0 = h2;
        k1 = k0;
        k0 = k2;
        if (r - a < 1e-12) break;
        r = 1.0 / (r - a);
    }
    return out;
}

}  // namespace detail

// Exact matrix-level computations with caches of irreducible modules.
class Oracle {
public:
    explicit Oracle(std::uint64_t seed = default_seed(), long dim_bound = 4000)
        : seed_(seed), dim_bound_(dim_bound), rng_(seed) {}

    std::uint64_t seed() const { return seed_; }

    const SuperMatrixModule& irreducible(const Weight& w) {
        auto key = weight_key(w);
        auto it = irr_.find(key);
        if (it == irr_.end()) it = irr_.emplace(key, oracle::irreducible(w)).first;
        return it->second;
    }

    SuperMatrixModule kac(const Weight& w) { return kac_module(w); }

    // Induced from g_0 + g_{-1}, normalized so that its top is L(w).
    SuperMatrixModule antikac(const Weight& w) {
        const auto& L = irreducible(w);
        int m = w.m;
        long dmax = L.weights[0][m];
        for (const auto& k : L.weights) dmax = std::max(dmax, k[m]);
        WeightKey best;
        for (const auto& k : L.weights)
            if (k[m] == dmax && (best.empty() || order_key(k) > order_key(best))) best = k;
        return induce(build_L0(m, std::vector<long>(best.begin(), best.end() - 1), best.back()), true);
    }

    // Composition factors with multiplicity, by peeling characters from the top.
    std::map<Weight, int> composition_factors(const SuperMatrixModule& M) {
        auto ch = character(M);
        std::map<Weight, int> out;
        while (!ch.empty()) {
            auto top = ch.begin()->first;
            for (const auto& [w, c] : ch)
                if (order_key(w) > order_key(top)) top = w;
            int c = ch[top];
            Weight w = to_weight(top);
            out[w] += c;
            for (const auto& [k, d] : character(irreducible(w))) {
                auto it = ch.find(k);
                if (it == ch.end() || it->second < c * d) throw std::logic_error("character peeling went negative");
                it->second -= c * d;
                if (it->second == 0) ch.erase(it);
            }
        }
        return out;
    }

    // Cohomology of x = E_{m,m+1} (sigma: E_{m+1,m}), graded by minus the last weight coordinate.
    GradedGlObject ds_matrix(const SuperMatrixModule& M, bool sigma = false) {
        int m = M.m;
        auto [a, b] = sigma ? std::pair{m, m - 1} : std::pair{m - 1, m};
        const auto& X = M.E(a, b);
        WeightKey alpha = root(m, a, b);
        std::map<std::pair<WeightKey, int>, std::vector<int>> spaces;
        for (int i = 0; i < M.dim(); ++i) spaces[{M.weights[i], M.parity[i]}].push_back(i);
        auto block_rank = [&](const std::vector<int>& src, const std::vector<int>& dst) {
            std::map<int, int> pos;
            for (std::size_t r = 0; r < dst.size(); ++r) pos[dst[r]] = static_cast<int>(r);
            Matrix A(static_cast<int>(dst.size()), static_cast<int>(src.size()));
            for (std::size_t j = 0; j < src.size(); ++j)
                for (const auto& [r, x] : X.col[src[j]]) A(pos.at(r), static_cast<int>(j)) = x;
            return rank(A);
        };
        std::map<std::pair<long, int>, std::map<std::vector<long>, Integer>> chars;
        for (const auto& [key, idx] : spaces) {
            int out_rank = 0, in_rank = 0;
            if (auto t = spaces.find({key.first + alpha, 1 - key.second}); t != spaces.end())
                out_rank = block_rank(idx, t->second);
            WeightKey prev = key.first;
            for (int i = 0; i <= m; ++i) prev[i] -= alpha[i];
            if (auto s = spaces.find({prev, 1 - key.second}); s != spaces.end()) in_rank = block_rank(s->second, idx);
            int h = static_cast<int>(idx.size()) - out_rank - in_rank;
            if (h < 0) throw std::logic_error("x does not square to zero");
            if (h == 0) continue;
            chars[{-key.first[m], key.second}][std::vector<long>(key.first.begin(), key.first.begin() + (m - 1))] += h;
        }
        GradedGlObject g{m - 1, {}};
        for (auto& [lp, ch] : chars) {
            while (!ch.empty()) {
                auto top = std::prev(ch.end())->first;  // lexicographically largest is a highest weight
                Integer c = ch[top];
                RationalWeight hw{top};
                g.add({lp.first, hw, lp.second}, c);
                for (const auto& [k, d] : gl_character(hw)) {
                    auto it = ch.find(k);
                    if (it == ch.end() || it->second < c * d) throw std::logic_error("gl character peeling failed");
                    it->second -= c * d;
                    if (it->second == 0) ch.erase(it);
                }
            }
        }
        return g;
    }

    // Label of an indecomposable X, or of N when X is isomorphic to N^mult.
    IndecompLabel identify(const SuperMatrixModule& X, int mult = 1) {
        int m = X.m;
        int parity = static_cast<int>(((X.parity[0] - X.weights[0][m]) % 2 + 2) % 2);
        for (int i = 0; i < X.dim(); ++i)
            if (((X.parity[i] - X.weights[i][m]) % 2 + 2) % 2 != parity)
                throw std::runtime_error("summand mixes parity classes");
        auto factors = composition_factors(X);
        for (auto& [w, c] : factors) {
            if (c % mult) throw std::runtime_error("isotypic component has non-divisible factors");
            c /= mult;
        }
        if (factors.size() == 1 && !atypicality(factors.begin()->first)) {
            if (factors.begin()->second != 1) throw std::runtime_error("typical factor with multiplicity");
            return irr_label(factors.begin()->first, parity);
        }
        BlockId block;
        std::map<long, int> count;  // block coordinate -> multiplicity
        for (const auto& [w, c] : factors) {
            if (!atypicality(w)) throw std::runtime_error("typical factor inside an atypical summand");
            auto [b, v] = block_of(w);
            if (count.empty()) block = b;
            else if (b != block) throw std::runtime_error("summand spans two blocks");
            count[block_coordinate(b, v)] += c;
        }
        auto top_socle = [&](long coord) {
            auto L = irreducible(weight_at(block, position_at(block, coord)));
            if (parity) L = parity_shift(L);
            long t = static_cast<long>(hom_space(X, L).size()), s = static_cast<long>(hom_space(L, X).size());
            if (t % mult || s % mult) throw std::runtime_error("hom dimensions not divisible by multiplicity");
            return std::pair{t / mult, s / mult};
        };
        long lo = count.begin()->first, hi = std::prev(count.end())->first;
        auto pos = [&](long c) { return position_at(block, c); };
        if (count.size() == 1 && count.begin()->second == 1) return {block, Kind::irr, pos(lo), pos(lo), parity};
        if (count.size() == 3 && count[lo + 1] == 2 && count[lo] == 1 && count[hi] == 1 &&
            top_socle(lo + 1) == std::pair{1L, 1L})
            return {block, Kind::proj, pos(lo + 1), pos(lo + 1), parity};
        if (static_cast<long>(count.size()) != hi - lo + 1)
            throw std::runtime_error("composition factors do not form an interval");
        for (auto [c, k] : count)
            if (k != 1) throw std::runtime_error("repeated factor in a non-projective summand");
        std::vector<std::pair<long, long>> ts;
        for (long c = lo; c <= hi; ++c) ts.push_back(top_socle(c));
        // tops alternate with socles; the pattern is fixed by whether lo is a top
        bool lo_top = ts.front().first == 1;
        for (long c = lo; c <= hi; ++c) {
            bool is_top = ((c - lo) % 2 == 0) == lo_top;
            if (ts[c - lo] != (is_top ? std::pair{1L, 0L} : std::pair{0L, 1L}))
                throw std::runtime_error("top/socle pattern matches no zigzag");
        }
        bool hi_top = ts.back().first == 1;
        Kind kind = lo_top && hi_top     ? Kind::roof
                    : !lo_top && !hi_top ? Kind::bottom
                    : hi_top             ? Kind::roof
                                         : Kind::bottom;
        return normalize({block, kind, pos(lo), pos(hi), parity});
    }

    FormalObject decompose(const SuperMatrixModule& M) {
        FormalObject out;
        decompose_into(M, out);
        return out;
    }

    FormalObject decompose_tensor(const SuperMatrixModule& a, const SuperMatrixModule& b) {
        if (static_cast<long>(a.dim()) * b.dim() > dim_bound_)
            throw std::length_error("tensor product exceeds the oracle dimension bound");
        return decompose(tensor(a, b));
    }

    // Explicit module for a label: irreducibles, Kac/AntiKac modules and zigzags glued from them.
    SuperMatrixModule label_module(const IndecompLabel& x) {
        auto y = normalize(x);
        SuperMatrixModule M;
        const auto& B = y.block;
        auto at = [&](long c) { return weight_at(B, position_at(B, c)); };
        switch (y.kind) {
            case Kind::typical: M = irreducible(typical_weight(y)); break;
            case Kind::irr: M = irreducible(weight_at(B, y.lo)); break;
            case Kind::kac: M = kac(weight_at(B, y.lo)); break;
            case Kind::antikac: M = antikac(weight_at(B, y.lo)); break;
            case Kind::proj: throw std::invalid_argument("projective labels have no explicit construction here");
            case Kind::roof:
            case Kind::bottom: {
                long lo = block_coordinate(B, y.lo), hi = block_coordinate(B, y.hi);
                bool odd = (hi - lo) % 2 == 0;
                if (y.kind == Kind::roof && !odd) {  // kac-type: extra socle below the lowest top
                    auto R = zigzag(B, true, lo + 1, hi);
                    M = pullback(R, kac(at(lo + 1)), irreducible(at(lo + 1)));
                } else if (y.kind == Kind::bottom && !odd) {
                    auto R = zigzag(B, true, lo, hi - 1);
                    M = pullback(R, antikac(at(hi - 1)), irreducible(at(hi - 1)));
                } else {
                    M = zigzag(B, y.kind == Kind::roof, lo, hi);
                }
            }
        }
        return y.parity ? parity_shift(M) : M;
    }

private:
    // Odd-length roof (tops at the ends) or bottom (socles at the ends) over block coordinates [lo, hi].
    SuperMatrixModule zigzag(const BlockId& B, bool roof, long lo, long hi) {
        auto at = [&](long c) { return weight_at(B, position_at(B, c)); };
        if (lo == hi) return irreducible(at(lo));
        std::optional<SuperMatrixModule> acc;
        for (long c = lo + 1; c < hi; c += 2) {
            SuperMatrixModule piece = roof ? pushout(antikac(at(c - 1)), kac(at(c + 1)), irreducible(at(c)))
                                           : pullback(kac(at(c)), antikac(at(c)), irreducible(at(c)));
            if (!acc) acc = std::move(piece);
            else if (roof) acc = pullback(*acc, piece, irreducible(at(c - 1)));
            else acc = pushout(*acc, piece, irreducible(at(c - 1)));
        }
        return *acc;
    }

    static SparseMatrix unique_hom(const SuperMatrixModule& a, const SuperMatrixModule& b) {
        auto hs = hom_space(a, b);
        if (hs.size() != 1) throw std::logic_error("expected a one-dimensional hom space while gluing");
        return hs[0];
    }

    // A (+) B modulo the image of S embedded in both.
    static SuperMatrixModule pushout(const SuperMatrixModule& A, const SuperMatrixModule& B,
                                     const SuperMatrixModule& S) {
        auto f = unique_hom(S, A), g = unique_hom(S, B);
        std::vector<SparseVec> rel;
        for (int j = 0; j < S.dim(); ++j) {
            SparseVec v(f.col[j].begin(), f.col[j].end());
            for (const auto& [r, x] : g.col[j]) v[A.dim() + r] = -x;
            if (!v.empty()) rel.push_back(std::move(v));
        }
        return quotient(direct_sum(A, B), rel).module;
    }

    // Pairs in A (+) B with equal images in C.
    static SuperMatrixModule pullback(const SuperMatrixModule& A, const SuperMatrixModule& B,
                                      const SuperMatrixModule& C) {
        auto f = unique_hom(A, C), g = unique_hom(B, C);
        SparseMatrix h(C.dim(), A.dim() + B.dim());
        for (int j = 0; j < A.dim(); ++j) h.col[j] = f.col[j];
        for (int j = 0; j < B.dim(); ++j)
            for (const auto& [r, x] : g.col[j]) h.col[A.dim() + j].emplace_back(r, -x);
        auto D = direct_sum(A, B);
        return restrict_to(D, kernel_vectors(D, h));
    }

    void decompose_into(const SuperMatrixModule& M, FormalObject& out) {
        if (M.dim() == 0) return;
        std::map<std::pair<WeightKey, int>, std::vector<int>> spaces;
        for (int i = 0; i < M.dim(); ++i) spaces[{M.weights[i], M.parity[i]}].push_back(i);
        std::vector<std::vector<int>> blocks;
        for (auto& [k, idx] : spaces) blocks.push_back(idx);
        std::vector<int> where(M.dim()), slot(M.dim());
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t p = 0; p < blocks[b].size(); ++p) {
                where[blocks[b][p]] = static_cast<int>(b);
                slot[blocks[b][p]] = static_cast<int>(p);
            }
        auto basis = hom_space(M, M);
        int r = static_cast<int>(basis.size());
        if (r == 1) {
            out.add(identify(M));
            return;
        }
        Matrix gram(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) gram(i, j) = gram(j, i) = detail::trace_product(basis[i], basis[j]);
        int dimJ = static_cast<int>(kernel(gram).size());
        int s = r - dimJ;
        if (s == 1) {
            out.add(identify(M));
            return;
        }
        // center modulo the radical: sum_i c_i [B_i, B_k] lies in J = ker(gram) for every k
        SubspaceBasis span;
        for (const auto& f : basis) span.add(detail::flatten(f));
        // gamma[i][k] = coordinates of [B_i, B_k]
        std::vector<std::vector<std::vector<Rational>>> gamma(r, std::vector<std::vector<Rational>>(r, std::vector<Rational>(r)));
        for (int i = 0; i < r; ++i)
            for (int k = i + 1; k < r; ++k) {
                auto c = detail::flatten(compose(basis[i], basis[k]));
                axpy(c, -1, detail::flatten(compose(basis[k], basis[i])));
                auto co = span.coordinates(c);
                if (!co) throw std::logic_error("commutant is not closed under products");
                for (const auto& [l, x] : *co) {
                    gamma[i][k][l] = x;
                    gamma[k][i][l] = -x;
                }
            }
        Matrix eqs(r * r, r);
        for (int k = 0; k < r; ++k)
            for (int row = 0; row < r; ++row)
                for (int i = 0; i < r; ++i) {
                    Rational acc = 0;
                    for (int l = 0; l < r; ++l)
                        if (gamma[i][k][l] != 0) acc += gram(row, l) * gamma[i][k][l];
                    eqs(k * r + row, i) = acc;
                }
        auto center = kernel(eqs);
        int t = static_cast<int>(center.size()) - dimJ;
        if (t == 1) {
            long n = std::lround(std::sqrt(static_cast<double>(s)));
            if (n * n != s) throw std::runtime_error("isotypic component with non-square endomorphism quotient");
            out.add(identify(M, static_cast<int>(n)), n);
            return;
        }
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int attempt = 0; attempt < 50; ++attempt) {
            detail::BlockMap z;
            for (auto& idx : blocks) z.blocks.emplace_back(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
            for (const auto& cv : center) {
                Rational w = coef(rng_);
                if (w == 0) continue;
                for (int i = 0; i < r; ++i)
                    if (cv[i] != 0)
                        for (int j = 0; j < M.dim(); ++j)
                            for (const auto& [row, x] : basis[i].col[j]) z.blocks[where[j]](slot[row], slot[j]) += w * cv[i] * x;
            }
            auto parts = eigen_split(z, blocks);
            if (static_cast<int>(parts.size()) != t) continue;
            for (const auto& vecs : parts) decompose_into(restrict_to(M, vecs), out);
            return;
        }
        throw std::runtime_error("could not separate isotypic components");
    }

    // Generalized eigenspaces of a block-diagonal endomorphism with rational spectrum.
    std::vector<std::vector<SparseVec>> eigen_split(const detail::BlockMap& z,
                                                     const std::vector<std::vector<int>>& blocks) {
        std::vector<Rational> values;
        for (const auto& Z : z.blocks) {
            Eigen::MatrixXd D(Z.rows, Z.cols);
            for (int p = 0; p < Z.rows; ++p)
                for (int q = 0; q < Z.cols; ++q) D(p, q) = Z(p, q).get_d();
            Eigen::EigenSolver<Eigen::MatrixXd> es(D, false);
            for (int i = 0; i < Z.rows; ++i) {
                double x = es.eigenvalues()[i].real();
                bool found = false;
                for (const auto& v : values)
                    if (std::abs(v.get_d() - x) < 1e-6 * (1 + std::abs(x))) found = true;
                if (found) continue;
                for (const auto& cand : detail::rational_candidates(x)) {
                    if (std::abs(cand.get_d() - x) > 1e-6 * (1 + std::abs(x))) continue;
                    Matrix S = Z;
                    for (int p = 0; p < S.rows; ++p) S(p, p) -= cand;
                    if (rank(S) < S.rows) {
                        values.push_back(cand);
                        break;
                    }
                }
            }
        }
        std::vector<std::vector<SparseVec>> parts;
        int total = 0;
        for (const auto& lam : values) {
            std::vector<SparseVec> vecs;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                const Matrix& Z = z.blocks[b];
                if (Z.rows == 0) continue;
                Matrix S = Z;
                for (int p = 0; p < S.rows; ++p) S(p, p) -= lam;
                // powers of S until the kernel stops growing
                Matrix P = S;
                auto ker = kernel(P);
                while (!ker.empty() && static_cast<int>(ker.size()) < S.rows) {
                    P = P * S;
                    auto next = kernel(P);
                    if (next.size() == ker.size()) break;
                    ker = std::move(next);
                }
                for (const auto& v : ker) {
                    SparseVec s;
                    for (int p = 0; p < S.rows; ++p)
                        if (v[p] != 0) s[blocks[b][p]] = v[p];
                    vecs.push_back(std::move(s));
                }
            }
            total += static_cast<int>(vecs.size());
            if (!vecs.empty()) parts.push_back(std::move(vecs));
        }
        int dim = 0;
        for (auto& b : blocks) dim += static_cast<int>(b.size());
        if (total != dim) return {};
        return parts;
    }

    std::uint64_t seed_;
    long dim_bound_;
    std::mt19937_64 rng_;
    std::map<WeightKey, SuperMatrixModule> irr_;
};

}  // namespace superq::oracle
