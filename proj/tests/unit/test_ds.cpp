#include <catch2/catch_amalgamated.hpp>

#include "superq/quotient.hpp"

using namespace superq;

namespace {

const BlockId B0{{0}};

IndecompLabel lab(Kind k, long lo, long hi, int parity = 0, BlockId b = B0) { return {b, k, lo, hi, parity}; }

GradedGlObject piece(long deg, std::vector<long> core, int parity) {
    GradedGlObject g{static_cast<int>(core.size()), {}};
    g.add({deg, RationalWeight{core}, parity}, 1);
    return g;
}

}  // namespace

TEST_CASE("ds of irreducibles") {
    CHECK(ds_of(irr_label(make_weight({0, 0}, 0))) == piece(0, {0}, 0));
    CHECK(ds_of(irr_label(make_weight({1, 1}, -1))) == piece(1, {1}, 1));
    CHECK(ds_of(irr_label(make_weight({2, 2}, -2))) == piece(2, {2}, 0));
    for (long v = -6; v <= 6; ++v) {
        if (v == 0) continue;
        CHECK(ds_of(lab(Kind::irr, v, v)) == ds_sigma_of(lab(Kind::irr, v, v)));
        auto next = free_step(B0, v, 1);
        CHECK(ds_of(lab(Kind::irr, next, next)).pieces.begin()->first.degree ==
              ds_of(lab(Kind::irr, v, v)).pieces.begin()->first.degree + 1);
    }
}

TEST_CASE("ds kernels and surviving endpoints") {
    CHECK(ds_of(lab(Kind::antikac, -1, -1)).pieces.empty());
    CHECK(ds_sigma_of(lab(Kind::kac, -1, -1)).pieces.empty());
    CHECK(ds_of(lab(Kind::proj, -1, -1)).pieces.empty());
    CHECK(ds_sigma_of(lab(Kind::proj, -1, -1)).pieces.empty());
    auto k = ds_of(lab(Kind::kac, -1, -1));
    CHECK(k.pieces.size() == 2);
    CHECK(signed_dimension(k) == 0);
    CHECK(ds_of(lab(Kind::roof, -3, -1)) == ds_of(lab(Kind::irr, -1, -1)));
    CHECK(ds_sigma_of(lab(Kind::roof, -3, -1)) == ds_of(lab(Kind::irr, -3, -3)));
    CHECK(ds_of(lab(Kind::bottom, -3, -1)) == ds_of(lab(Kind::irr, -3, -3)));
    CHECK(ds_sigma_of(lab(Kind::bottom, -3, -1)) == ds_of(lab(Kind::irr, -1, -1)));
}

TEST_CASE("graded tensor bookkeeping") {
    auto a = piece(2, {1, 0}, 1);
    CHECK(graded_tensor(a, graded_unit(2)) == a);
    auto b = piece(-1, {0, -1}, 1);
    GradedGlObject expect{2, {}};
    expect.add({1, RationalWeight{{1, -1}}, 0}, 1);
    expect.add({1, RationalWeight{{0, 0}}, 0}, 1);
    CHECK(graded_tensor(a, b) == expect);
}

TEST_CASE("ds preserves superdimension") {
    for (Kind k : {Kind::irr, Kind::kac, Kind::antikac, Kind::proj})
        for (long v : {-4L, -2L, 1L, 3L}) {
            auto x = lab(k, v, v, v > 0);
            CHECK(signed_dimension(ds_of(x)) == superdimension(x));
            CHECK(signed_dimension(ds_sigma_of(x)) == superdimension(x));
        }
    for (long lo = -4; lo <= -1; ++lo)
        for (long hi = lo; hi <= 4; ++hi) {
            if (hi == 0 || lo == 0) continue;
            for (Kind k : {Kind::roof, Kind::bottom}) {
                auto x = normalize(lab(k, lo, hi));
                CHECK(signed_dimension(ds_of(x)) == superdimension(x));
                CHECK(signed_dimension(ds_sigma_of(x)) == superdimension(x));
            }
        }
}
