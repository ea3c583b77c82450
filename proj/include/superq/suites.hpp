#pragma once

#include "superq/json.hpp"
#include "superq/oracle/oracle.hpp"
#include "superq/testing/pieri.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace superq::suites {

struct Context {
    std::uint64_t seed = oracle::default_seed();
    long dim_bound = 4000;
};

struct Result {
    std::string name;
    int criterion = 0;
    long cases = 0;
    std::vector<std::string> failures;
    double seconds = 0;
    bool passed() const { return failures.empty() && cases > 0; }
};

namespace detail {

// Collects failures without flooding the report.
struct Recorder {
    Result& r;
    void check(bool ok, const std::function<std::string()>& what) {
        ++r.cases;
        if (!ok && r.failures.size() < 20) r.failures.push_back(what());
    }
};

inline std::string show(const FormalObject& f) {
    std::ostringstream s;
    s << "{";
    bool first = true;
    for (const auto& [x, c] : f.summands) {
        s << (first ? "" : ", ") << c.get_str() << "*" << format_label(x);
        first = false;
    }
    return s.str() + "}";
}

inline std::string show(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline std::string show(const Sl21Label& z) {
    return std::string(z.bar ? "Zbar" : "Z") + "^" + std::to_string(2 * z.p + 1) + "(" + std::to_string(z.j) + ")";
}

inline BlockId random_block(int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> pos(-4, 4);
    std::set<long> c;
    while (static_cast<int>(c.size()) < m - 1) c.insert(pos(rng));
    return BlockId{{c.begin(), c.end()}};
}

// Irreducible or odd-length roof/bottom in the given block.
inline IndecompLabel random_odd_zigzag(const BlockId& b, std::mt19937_64& rng, int max_len = 7) {
    std::uniform_int_distribution<long> start(-6, 6);
    std::uniform_int_distribution<int> half(0, (max_len - 1) / 2), coin(0, 1);
    long lo = start(rng);
    while (!is_free(b, lo)) ++lo;
    long h = half(rng);
    int parity = coin(rng);
    if (h == 0) return {b, Kind::irr, lo, lo, parity};
    return {b, coin(rng) ? Kind::roof : Kind::bottom, lo, free_step(b, lo, 2 * h), parity};
}

inline std::vector<RationalWeight> dominant_cores(int rank, long lo, long hi) {
    std::vector<RationalWeight> out;
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long cap) {
        if (static_cast<int>(cur.size()) == rank) {
            out.push_back(RationalWeight{cur});
            return;
        }
        for (long x = lo; x <= cap; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(hi);
    return out;
}

}  // namespace detail

// The four sl(2|1) rules; Zbar^1(j) and Z^1(j) denote the same object.
inline Sl21Label sl21_rule(const Sl21Label& a, const Sl21Label& b) {
    Sl21Label r;
    if (a.bar == b.bar) r = {a.bar, a.p + b.p, a.j + b.j};
    else {
        const Sl21Label& z = a.bar ? b : a;
        const Sl21Label& zb = a.bar ? a : b;
        if (z.p <= zb.p) r = {true, zb.p - z.p, z.j + zb.j - z.p};
        else r = {false, z.p - zb.p, z.j + zb.j - zb.p};
    }
    if (r.p == 0) r.bar = false;
    return r;
}

inline Result sl21_rules(const Context&) {
    Result res{"sl21-rules", 1};
    detail::Recorder rec{res};
    for (bool ba : {false, true})
        for (bool bb : {false, true})
            for (long p1 = 0; p1 <= 3; ++p1)
                for (long p2 = 0; p2 <= 3; ++p2)
                    for (long j1 = -3; j1 <= 3; ++j1)
                        for (long j2 = -3; j2 <= 3; ++j2) {
                            Sl21Label a{ba, p1, j1}, b{bb, p2, j2};
                            auto q = tensor_direct(single(sl21_representative(a)), single(sl21_representative(b)));
                            bool one = q.summands.size() == 1 && q.summands.begin()->second == 1;
                            auto want = sl21_rule(a, b);
                            rec.check(one && sl21_name(q.summands.begin()->first) == want, [&] {
                                return detail::show(a) + " (x) " + detail::show(b) + " gave " + detail::show(q) +
                                       ", rule says " + detail::show(want);
                            });
                            if (!one) continue;
                            auto [pa, qa] = sl21_charges(a);
                            auto [pb, qb] = sl21_charges(b);
                            auto got = sl21_charges(sl21_name(q.summands.begin()->first));
                            rec.check(got == std::pair{pa + pb, qa + qb}, [&] {
                                return "charges of " + detail::show(a) + " (x) " + detail::show(b) + " are not additive";
                            });
                        }
    return res;
}

inline Result lr_oracle(const Context&) {
    Result res{"lr-oracle", 2};
    detail::Recorder rec{res};
    std::vector<Partition> parts;
    for (long n = 0; n <= 6; ++n)
        for (auto& p : partitions_of(n)) parts.push_back(p);
    for (const auto& a : parts)
        for (const auto& b : parts) {
            auto ref = testing::schur_product(a, b);
            for (const auto& nu : partitions_over(Partition{}, a.size() + b.size(), a.length() + b.length())) {
                Integer want = ref.count(nu.parts) ? ref.at(nu.parts) : Integer(0);
                Integer got = lr_coefficient(a, b, nu);
                rec.check(got == want, [&] {
                    return "c(" + detail::show(a.parts) + "," + detail::show(b.parts) + ";" +
                           detail::show(nu.parts) + ") = " + got.get_str() + " vs " + want.get_str();
                });
            }
        }
    return res;
}

inline Result path_agreement(const Context& ctx) {
    Result res{"path-agreement", 3};
    detail::Recorder rec{res};
    std::mt19937_64 rng(ctx.seed);
    for (int m : {2, 3, 4}) {
        std::vector<BlockId> blocks;
        while (blocks.size() < 6) {
            auto b = detail::random_block(m, rng);
            if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) blocks.push_back(b);
        }
        std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
        for (int i = 0; i < 180; ++i) {
            auto x = detail::random_odd_zigzag(blocks[pick(rng)], rng);
            auto y = detail::random_odd_zigzag(blocks[pick(rng)], rng);
            auto d = tensor_direct(single(x), single(y));
            auto q = tensor_quotient(single(x), single(y));
            rec.check(d == q, [&] {
                return format_label(x) + " (x) " + format_label(y) + ": direct " + detail::show(d) + " rho " +
                       detail::show(q);
            });
        }
    }
    return res;
}

inline std::vector<Weight> sample_weights(int m, std::size_t count, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> e(-2, 2), o(-3, 3);
    std::vector<Weight> out;
    std::set<Weight> seen;
    // half atypical, half typical
    while (out.size() < count) {
        std::vector<long> even(m);
        for (auto& x : even) x = e(rng);
        std::sort(even.rbegin(), even.rend());
        auto w = make_weight(even, o(rng));
        bool want_atypical = out.size() % 2 == 0;
        if ((atypicality(w) == 1) != want_atypical || !seen.insert(w).second) continue;
        out.push_back(w);
    }
    return out;
}

inline Result oracle_m2(const Context& ctx) {
    Result res{"oracle-m2", 4};
    detail::Recorder rec{res};
    oracle::Oracle o(ctx.seed, ctx.dim_bound);
    std::mt19937_64 rng(ctx.seed);
    auto run = [&](const Weight& w) {
        std::string name = format_weight(w);
        auto K = o.kac(w);
        bool atyp = atypicality(w) == 1;
        auto radical = oracle::radical_vectors(K, oracle::weight_key(w));
        rec.check(radical.empty() == !atyp, [&] { return "K" + name + " irreducibility disagrees with typicality"; });
        if (atyp) {
            auto f = o.composition_factors(K);
            std::map<Weight, int> want{{w, 1}, {t_shift(w, -1), 1}};
            rec.check(f == want, [&] { return "K" + name + " composition factors are not {L(w), L(T^- w)}"; });
        }
        rec.check(K.sdim() == 0, [&] { return "sdim K" + name + " != 0"; });
        const auto& L = o.irreducible(w);
        auto ds = o.ds_matrix(L);
        rec.check(ds == ds_of(irr_label(w)) && ds.pieces.size() == (atyp ? 1u : 0u),
                  [&] { return "ds_matrix L" + name + " disagrees with the symbolic DS"; });
        if (atyp) {
            Integer s = L.sdim();
            rec.check(abs(s) == weyl_dim(core_weight(w)) && s == superdimension(irr_label(w)),
                      [&] { return "sdim L" + name + " = " + s.get_str(); });
        }
    };
    for (const auto& w : sample_weights(2, 20, rng)) run(w);
    for (const auto& w : sample_weights(3, 6, rng)) run(w);
    return res;
}

inline Result functoriality(const Context& ctx) {
    Result res{"functoriality", 5};
    detail::Recorder rec{res};
    oracle::Oracle o(ctx.seed, ctx.dim_bound);
    std::mt19937_64 rng(ctx.seed + 1);
    auto ws = sample_weights(2, 8, rng);
    ws.push_back(make_weight({0, 0}, 0));
    ws.push_back(make_weight({1, 0}, 0));
    int pairs = 0;
    for (std::size_t i = 0; i < ws.size() && pairs < 24; ++i)
        for (std::size_t j = i; j < ws.size() && pairs < 24; ++j) {
            const auto &A = o.irreducible(ws[i]), &B = o.irreducible(ws[j]);
            if (static_cast<long>(A.dim()) * B.dim() > ctx.dim_bound) continue;
            ++pairs;
            auto got = omega(o.decompose_tensor(A, B));
            auto want = tensor_quotient(omega(single(irr_label(ws[i]))), omega(single(irr_label(ws[j]))));
            rec.check(got == want, [&] {
                return format_weight(ws[i]) + " (x) " + format_weight(ws[j]) + ": oracle " + detail::show(got) +
                       " rho " + detail::show(want);
            });
        }
    rec.check(pairs >= 20, [&] { return "only " + std::to_string(pairs) + " pairs within the bound"; });
    return res;
}

inline Result bijectivity(const Context&) {
    Result res{"bijectivity", 6};
    detail::Recorder rec{res};
    for (int m : {2, 3}) {
        std::set<IndecompLabel> hit;
        long triples = 0;
        for (const auto& core : detail::dominant_cores(m - 1, -4, 4))
            for (long d = -4; d <= 4; ++d)
                for (long b = -4; b <= 4; ++b)
                    for (int p : {0, 1}) {
                        Triple t{d, b, core, p};
                        auto x = rho_inverse(t);
                        ++triples;
                        hit.insert(x);
                        rec.check(!is_negligible(x) && rho(x) == t, [&] {
                            return "rho(rho_inverse(t)) != t for t = " + to_json(t).dump();
                        });
                    }
        rec.check(static_cast<long>(hit.size()) == triples,
                  [&] { return "rho_inverse is not injective on the window at m = " + std::to_string(m); });
        // labels enumerated independently: every one landing in the window is hit and round-trips
        std::set<BlockId> blocks;
        for (const auto& x : hit) blocks.insert(x.block);
        for (const auto& B : blocks) {
            long c0 = -12, c1 = 12;
            for (long c = c0; c <= c1; ++c)
                for (long h = 0; h <= 4; ++h)
                    for (Kind k : {Kind::roof, Kind::bottom})
                        for (int p : {0, 1}) {
                            if (h == 0 && k == Kind::bottom) continue;
                            long lo = position_at(B, c);
                            IndecompLabel x = normalize({B, h ? k : Kind::irr, lo, free_step(B, lo, 2 * h), p});
                            auto t = rho(x);
                            bool in = std::abs(t.d) <= 4 && std::abs(t.b) <= 4 && !t.core.parts.empty() &&
                                      t.core.parts.front() <= 4 && t.core.parts.back() >= -4;
                            if (!in) continue;
                            rec.check(hit.count(x) && rho_inverse(t) == x,
                                      [&] { return "label " + format_label(x) + " does not round-trip"; });
                        }
        }
    }
    return res;
}

inline Result invariants(const Context& ctx) {
    Result res{"invariants", 7};
    detail::Recorder rec{res};
    std::mt19937_64 rng(ctx.seed + 2);
    std::uniform_int_distribution<int> pick_m(2, 3);
    std::uniform_int_distribution<long> twist(-5, 5);
    auto draw = [&](int m) { return detail::random_odd_zigzag(detail::random_block(m, rng), rng, 5); };
    for (int i = 0; i < 200; ++i) {
        int m = pick_m(rng);
        auto x = draw(m), y = draw(m), z = draw(m);
        auto X = single(x), Y = single(y), Z = single(z);
        auto xy = tensor_quotient(X, Y);
        std::string tag = format_label(x) + ", " + format_label(y);
        rec.check(superdimension(xy) == superdimension(x) * superdimension(y),
                  [&] { return "sdim not multiplicative on " + tag; });
        rec.check(xy == tensor_quotient(Y, X), [&] { return "not commutative on " + tag; });
        rec.check(tensor_quotient(xy, Z) == tensor_quotient(X, tensor_quotient(Y, Z)),
                  [&] { return "not associative on " + tag + ", " + format_label(z); });
        long k = twist(rng);
        auto t = rho(x);
        rec.check(rho(berezin_twist(x, k)) == Triple{t.d, t.b + k, t.core, mod2(t.parity + k)},
                  [&] { return "rho not Berezin equivariant on " + format_label(x); });
        rec.check(ds_of(xy, m - 1) == graded_tensor(ds_of(x), ds_of(y)), [&] { return "DS Kunneth fails on " + tag; });
        GradedGlObject sig{m - 1, {}};
        for (const auto& [l, c] : xy.summands) sig.add(ds_sigma_of(l), c);
        rec.check(sig == graded_tensor(ds_sigma_of(x), ds_sigma_of(y)),
                  [&] { return "DS_sigma Kunneth fails on " + tag; });
        // fiber separation inside one block
        auto w = detail::random_odd_zigzag(x.block, rng);
        if (normalize(w) != normalize(x))
            rec.check(ds_of(w) != ds_of(x) || ds_sigma_of(w) != ds_sigma_of(x),
                      [&] { return "(DS, DS_sigma) do not separate " + format_label(w) + " and " + format_label(x); });
    }
    return res;
}

using SuiteFn = std::function<Result(const Context&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"sl21-rules", sl21_rules},     {"lr-oracle", lr_oracle},       {"path-agreement", path_agreement},
        {"oracle-m2", oracle_m2},       {"functoriality", functoriality}, {"bijectivity", bijectivity},
        {"invariants", invariants},
    };
    return r;
}

inline Result run(const std::string& name, const Context& ctx) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            auto t0 = std::chrono::steady_clock::now();
            Result r;
            try {
                r = fn(ctx);
            } catch (const std::exception& e) {
                r = Result{name, 0};
                r.failures.push_back(std::string("exception: ") + e.what());
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }
    throw std::invalid_argument("unknown suite: " + name);
}

// Orientation facts measured on explicit modules.
inline Json calibration_report(const Context& ctx) {
    oracle::Oracle o(ctx.seed, ctx.dim_bound);
    Json rep{{"schema", 1}, {"seed", ctx.seed}};
    auto triv = make_weight({0, 0}, 0);
    auto factors = o.composition_factors(o.kac(triv));
    long vee = block_of(triv).second;
    long other = vee;
    for (const auto& [w, c] : factors)
        if (w != triv) other = block_of(w).second;
    rep["kac_second_factor_vee_offset"] = other - vee;
    rep["t_minus_moves_left"] = other < vee && t_shift(triv, -1) == [&] {
        for (const auto& [w, c] : factors)
            if (w != triv) return w;
        return triv;
    }();
    auto ber = make_weight({1, 1}, -1);
    rep["berezin_weight"] = to_json(ber);
    rep["delta_ber"] = berezin_charge(ber);
    auto R = o.decompose_tensor(o.irreducible(make_weight({1, 0}, 0)), o.irreducible(ber));
    rep["twist_by_ber_shifts_charge_by"] =
        R.summands.size() == 1 ? rho(R.summands.begin()->first).b - berezin_charge(make_weight({1, 0}, 0)) : 0;
    auto w = make_weight({1, 0}, 0);
    bool kac_killed = o.ds_matrix(o.kac(w)).pieces.empty();
    bool anti_killed = o.ds_matrix(o.antikac(w)).pieces.empty();
    bool kac_killed_sigma = o.ds_matrix(o.kac(w), true).pieces.empty();
    bool anti_killed_sigma = o.ds_matrix(o.antikac(w), true).pieces.empty();
    rep["ds_kills_kac"] = kac_killed;
    rep["ds_kills_antikac"] = anti_killed;
    rep["ds_sigma_kills_kac"] = kac_killed_sigma;
    rep["ds_sigma_kills_antikac"] = anti_killed_sigma;
    rep["ds_kernel_class"] = anti_killed && !kac_killed ? "C-" : kac_killed && !anti_killed ? "C+" : "undetermined";
    rep["consistent_with_library"] = other < vee && anti_killed && !kac_killed && !anti_killed_sigma &&
                                     kac_killed_sigma && rep["delta_ber"] == 1;
    return rep;
}

}  // namespace superq::suites
