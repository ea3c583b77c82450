#include "superq/oracle/oracle.hpp"
#include "superq/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace superq;
using namespace superq::oracle;

namespace {
Weight W(std::vector<long> e, long o) { return make_weight(std::move(e), o); }
}

TEST_CASE("induced modules respect the bracket", "[oracle]") {
    auto L0 = build_L0(3, {2, 1, 0}, 0);
    CHECK(L0.dim() == 8);
    CHECK(bracket_defect(L0, true).empty());
    auto K = kac_module(W({0, 0}, 0));
    CHECK(K.dim() == 4);
    CHECK(bracket_defect(K).empty());
    auto Kp = induce(build_L0(2, {1, 0}, 2), true);
    CHECK(bracket_defect(Kp).empty());
    CHECK(bracket_defect(tensor(K, Kp)).empty());
}

TEST_CASE("Kac module of the trivial weight", "[oracle]") {
    auto K = kac_module(W({0, 0}, 0));
    CHECK(radical_vectors(K, {0, 0, 0}).size() == 3);
    Oracle o(7);
    auto f = o.composition_factors(K);
    CHECK(f.size() == 2);
    CHECK(f.count(W({0, 0}, 0)) == 1);
    CHECK(f.count(W({0, -1}, 1)) == 1);
    CHECK(K.sdim() == 0);
    CHECK(o.irreducible(W({0, 0}, 0)).dim() == 1);
}

TEST_CASE("typical Kac modules are irreducible", "[oracle]") {
    auto w = W({2, 0}, 1);
    REQUIRE(atypicality(w) == 0);
    CHECK(oracle::irreducible(w).dim() == kac_module(w).dim());
}

TEST_CASE("DS kills AntiKac but not Kac", "[oracle]") {
    Oracle o(7);
    auto w = W({1, 0}, 0);
    REQUIRE(atypicality(w) == 1);
    auto dk = o.ds_matrix(o.kac(w));
    auto da = o.ds_matrix(o.antikac(w));
    CHECK(!dk.pieces.empty());
    CHECK(da.pieces.empty());
    auto L = o.irreducible(w);
    CHECK(L.sdim() == superdimension(irr_label(w)));
    CHECK(o.ds_matrix(L) == ds_of(irr_label(w)));
}

TEST_CASE("label modules are identified back", "[oracle]") {
    Oracle o(11);
    for (const BlockId& B : {BlockId{{0}}, BlockId{{0, 2}}}) {
        long v = B.crosses.size() == 1 ? 1 : -1;
        std::vector<IndecompLabel> xs = {{B, Kind::irr, v, v, 0}, {B, Kind::kac, v, v, 1}, {B, Kind::antikac, v, v, 0}};
        for (int len = 2; len <= 4; ++len)
            for (Kind k : {Kind::roof, Kind::bottom})
                for (int p : {0, 1}) xs.push_back({B, k, v, free_step(B, v, len - 1), p});
        for (const auto& x : xs) {
            auto M = o.label_module(x);
            CAPTURE(format_label(x));
            CHECK(bracket_defect(M).empty());
            CHECK(o.identify(M) == normalize(x));
            CHECK(Integer(M.sdim()) == superdimension(x));
            CHECK(o.ds_matrix(M) == ds_of(x));
            CHECK(o.ds_matrix(M, true) == ds_sigma_of(x));
        }
    }
}

TEST_CASE("oracle tensor products agree with the direct rule at m = 2", "[oracle]") {
    Oracle o(5);
    BlockId B{{0}};
    std::vector<IndecompLabel> xs = {{B, Kind::roof, 1, 3, 0}, {B, Kind::bottom, -1, 2, 1}, {B, Kind::irr, 2, 2, 0}};
    for (const auto& x : xs)
        for (const auto& y : xs) {
            CAPTURE(format_label(x), format_label(y));
            auto R = o.decompose_tensor(o.label_module(x), o.label_module(y));
            CHECK(omega(R) == tensor_direct(single(x), single(y)));
        }
}

TEST_CASE("V tensor V dual splits off a typical summand", "[oracle]") {
    Oracle o(5);
    auto R = o.decompose_tensor(o.irreducible(W({1, 0}, 0)), o.irreducible(W({0, 0}, -1)));
    CHECK(R.summands.size() == 2);
    CHECK(R.summands.count(irr_label(W({0, 0}, 0))) == 1);
    CHECK(superdimension(R) == 1);
}

TEST_CASE("non-negligible summands of mixed tensors have Berezin charge zero", "[oracle]") {
    Oracle o(5);
    for (int m : {2, 3}) {
        std::vector<long> e1(m, 0), z(m, 0);
        e1[0] = 1;
        auto V = o.irreducible(make_weight(e1, 0));
        auto Vd = o.irreducible(make_weight(z, -1));
        for (const auto& M : {tensor(V, V), tensor(V, Vd), tensor(Vd, Vd)}) {
            auto R = o.decompose(M);
            for (const auto& [x, c] : omega(R).summands) CHECK(rho(x).b == 0);
        }
    }
}

TEST_CASE("typical times V produces projective covers", "[oracle]") {
    Oracle o(5);
    auto V = o.irreducible(W({1, 0}, 0));
    int found = 0;
    for (long a = 0; a <= 3; ++a)
        for (long c = -2; c <= 2; ++c) {
            auto t = W({a, 0}, c);
            if (atypicality(t)) continue;
            auto R = o.decompose_tensor(o.irreducible(t), V);
            for (const auto& [x, n] : R.summands) {
                if (x.kind != Kind::proj) continue;
                ++found;
                CHECK(superdimension(x) == 0);
                CHECK(ds_of(x).pieces.empty());
            }
            CHECK(superdimension(R) == 0);
        }
    CHECK(found > 0);
}

TEST_CASE("DS is monoidal at the matrix level", "[oracle]") {
    Oracle o(5);
    BlockId B{{0}};
    auto M1 = o.label_module({B, Kind::roof, 1, 3, 0});
    auto M2 = o.label_module({B, Kind::bottom, -1, 2, 1});
    for (bool sigma : {false, true})
        CHECK(o.ds_matrix(tensor(M1, M2), sigma) == graded_tensor(o.ds_matrix(M1, sigma), o.ds_matrix(M2, sigma)));
}

TEST_CASE("Kac irreducibility matches typicality on sampled weights at m = 3", "[oracle]") {
    std::mt19937_64 rng(3);
    for (const auto& w : superq::suites::sample_weights(3, 20, rng)) {
        auto K = kac_module(w);
        CAPTURE(format_weight(w));
        CHECK(radical_vectors(K, weight_key(w)).empty() == (atypicality(w) == 0));
        CHECK(K.sdim() == 0);
        CHECK(bracket_defect(K).empty());
    }
}
