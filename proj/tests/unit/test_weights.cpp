#include <catch2/catch_amalgamated.hpp>

#include "superq/indecomposables.hpp"

#include <random>

using namespace superq;

namespace {

WeightDiagram diag(int m, std::map<long, Mark> labels) { return WeightDiagram{m, std::move(labels)}; }

}  // namespace

TEST_CASE("weight diagrams of small gl(2|1) weights") {
    CHECK(build_diagram(make_weight({0, 0}, 0)) == diag(2, {{-1, Mark::vee}, {0, Mark::cross}}));
    CHECK(build_diagram(make_weight({1, 1}, -1)) == diag(2, {{0, Mark::vee}, {1, Mark::cross}}));
    CHECK(build_diagram(make_weight({1, 0}, 0)) == diag(2, {{-1, Mark::vee}, {1, Mark::cross}}));
    CHECK(build_diagram(make_weight({1, 0}, 5)) ==
          diag(2, {{-6, Mark::circle}, {-1, Mark::cross}, {1, Mark::cross}}));
    CHECK(atypicality(make_weight({0, 0}, 0)) == 1);
    CHECK(atypicality(make_weight({1, 0}, 5)) == 0);
    for (int m = 2; m <= 5; ++m) CHECK(atypicality(make_weight(std::vector<long>(m, 1), -1)) == 1);
}

TEST_CASE("weights are validated") {
    CHECK_THROWS_AS(make_weight({0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_weight({0, 1}, 0), std::invalid_argument);
    CHECK_THROWS(core_weight(make_weight({1, 0}, 5)));
    CHECK_THROWS(weight_from_diagram(diag(2, {{0, Mark::cross}})));
}

TEST_CASE("diagram round trip and Berezin shift") {
    CHECK(weight_from_diagram(diag(2, {{-2, Mark::vee}, {0, Mark::cross}})) == make_weight({0, -1}, 1));
    CHECK(weight_from_diagram(diag(2, {{-6, Mark::circle}, {-1, Mark::cross}, {1, Mark::cross}})) ==
          make_weight({1, 0}, 5));
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 2 + trial % 3;
        std::vector<long> even(m);
        for (auto& x : even) x = dist(rng);
        std::sort(even.rbegin(), even.rend());
        Weight w = make_weight(even, dist(rng));
        CHECK(weight_from_diagram(build_diagram(w)) == w);
        long k = dist(rng);
        auto shifted = build_diagram(w);
        WeightDiagram moved{m, {}};
        for (auto [p, mk] : shifted.labels) moved.labels[p + k] = mk;
        CHECK(build_diagram(berezin_twist(w, k)) == moved);
    }
    CHECK(berezin_twist(make_weight({0, 0}, 0), 1) == make_weight({1, 1}, -1));
    CHECK(berezin_twist(make_weight({1, 0}, 0), -1) == make_weight({0, -1}, 1));
}

TEST_CASE("core weights") {
    CHECK(core_weight(make_weight({0, 0}, 0)) == RationalWeight{{0}});
    CHECK(core_weight(make_weight({1, 1}, -1)) == RationalWeight{{1}});
    CHECK(core_weight(make_weight({1, 0}, 0)) == RationalWeight{{1}});
    CHECK(core_weight(make_weight({0, 0, 0}, 0)) == RationalWeight{{0, 0}});
    CHECK(core_weight(make_weight({2, 0, 0}, 0)) == RationalWeight{{2, 0}});
}

TEST_CASE("blocks, translation and extensions") {
    CHECK(block_of(make_weight({0, 0}, 0)) == std::pair{BlockId{{0}}, -1L});
    CHECK(block_of(make_weight({1, 1}, -1)) == std::pair{BlockId{{1}}, 0L});
    CHECK(block_of(make_weight({1, 0}, 0)) == std::pair{BlockId{{1}}, -1L});
    CHECK(t_shift(make_weight({0, 0}, 0), -1) == make_weight({0, -1}, 1));
    CHECK(t_shift(make_weight({1, 0}, 0), 1) == make_weight({1, 1}, -1));
    // m = 3: the vee skips the crosses
    Weight triv3 = make_weight({0, 0, 0}, 0);
    CHECK(block_of(triv3) == std::pair{BlockId{{-1, 0}}, -2L});
    CHECK(block_of(t_shift(triv3, 1)).second == 1);
    CHECK(t_shift(t_shift(triv3, 1), -1) == triv3);
    CHECK(ext1_dim(make_weight({0, 0}, 0), make_weight({0, -1}, 1)) == 1);
    CHECK(ext1_dim(make_weight({0, -1}, 1), make_weight({0, 0}, 0)) == 1);
    CHECK(ext1_dim(make_weight({0, 0}, 0), make_weight({0, 0}, 0)) == 0);
    CHECK(ext1_dim(make_weight({0, 0}, 0), make_weight({1, 0}, 0)) == 0);
    CHECK(ext1_dim(make_weight({1, 0}, 5), make_weight({1, 0}, 5)) == 0);
}

TEST_CASE("Berezin charge is zero on mixed tensor weights") {
    CHECK(berezin_charge(make_weight({0, 0}, 0)) == 0);
    CHECK(berezin_charge(make_weight({1, 0}, 0)) == 0);
    CHECK(berezin_charge(make_weight({0, 0}, -1)) == 0);
    CHECK(berezin_charge(make_weight({1, 1}, -1)) == 1);
    for (int m = 2; m <= 5; ++m) {
        CHECK(berezin_charge(make_weight(std::vector<long>(m, 0), 0)) == 0);
        CHECK(berezin_charge(make_weight(std::vector<long>(m, 3), -3)) == 3);
    }
    CHECK(berezin_charge(make_weight({2, 0, 0}, 0)) == 0);
    CHECK(berezin_charge(make_weight({1, 1, 0}, 0)) == 0);
    CHECK(berezin_charge(make_weight({0, 0, 0}, -1)) == 0);
    CHECK(parity_class(make_weight({1, 1}, -1)) == 1);
}
