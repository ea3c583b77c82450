#include <catch2/catch_amalgamated.hpp>

#include "superq/quotient.hpp"

using namespace superq;

namespace {

const BlockId B0{{0}};

IndecompLabel lab(Kind k, long lo, long hi, int parity = 0, BlockId b = B0) { return {b, k, lo, hi, parity}; }

QuotientObject obj(std::initializer_list<std::pair<IndecompLabel, int>> xs) {
    QuotientObject q;
    for (auto& [x, c] : xs) q.add(x, c);
    return q;
}

}  // namespace

TEST_CASE("negligibility and omega") {
    CHECK(is_negligible(lab(Kind::kac, -1, -1)));
    CHECK_FALSE(is_negligible(lab(Kind::irr, -1, -1)));
    CHECK(is_negligible(lab(Kind::roof, -4, -1)));
    CHECK(omega(obj({{lab(Kind::kac, -1, -1), 3}})).empty());
    auto x = obj({{lab(Kind::irr, -1, -1), 2}, {lab(Kind::proj, -1, -1), 5}});
    CHECK(omega(x) == obj({{lab(Kind::irr, -1, -1), 2}}));
    CHECK(omega(omega(x)) == omega(x));
}

TEST_CASE("mixed tensor data") {
    CHECK(mixed_tensor_data(make_weight({1, 0}, 0)) == std::pair{0L, Bipartition{{{1}}, {}}});
    CHECK(mixed_tensor_data(make_weight({1, 1}, -1)) == std::pair{1L, Bipartition{}});
    CHECK(mixed_tensor_data(make_weight({1, 1}, -2)) == std::pair{1L, Bipartition{{}, {{1}}}});
    CHECK(mixed_tensor_data(make_weight({0, 0, 0}, -1)) == std::pair{0L, Bipartition{{}, {{1}}}});
    CHECK(mixed_tensor_data(make_weight({2, 0, 0}, 0)) == std::pair{0L, Bipartition{{{2}}, {}}});
    for (int m = 2; m <= 4; ++m)
        for (long a = -3; a <= 3; ++a)
            for (long l = 0; l <= 2; ++l)
                for (long r = 0; r <= 2; ++r) {
                    if (m == 2 && l > 0 && r > 0) continue;
                    Bipartition bp;
                    if (l) bp.left.parts = {l};
                    if (r) bp.right.parts = {r};
                    Weight w = berezin_twist(mixed_tensor_weight(m, bp), a);
                    CHECK(mixed_tensor_data(w) == std::pair{a, bp});
                }
}

TEST_CASE("rho on small labels") {
    CHECK(rho(irr_label(make_weight({0, 0}, 0))) == Triple{0, 0, RationalWeight{{0}}, 0});
    CHECK(rho(irr_label(make_weight({1, 1}, -1))) == Triple{0, 1, RationalWeight{{0}}, 1});
    CHECK(rho(irr_label(make_weight({0, 0, 0}, 0))) == Triple{0, 0, RationalWeight{{0, 0}}, 0});
    // length 3 roof [-3,-1] anchored at the trivial weight, length 3 bottom anchored at its lower end
    CHECK(rho(lab(Kind::roof, -3, -1)) == Triple{-1, 0, RationalWeight{{0}}, 0});
    CHECK(rho(lab(Kind::bottom, -1, 2)) == Triple{1, 0, RationalWeight{{0}}, 0});
    CHECK(rho(lab(Kind::bottom, 1, 3)) == Triple{1, 1, RationalWeight{{-1}}, 1});
    CHECK_THROWS(rho(lab(Kind::kac, -1, -1)));
    // (-2, 0, (1), even) at m = 2: length 5 roof ending at the standard representation
    auto x = rho_inverse({-2, 0, RationalWeight{{1}}, 0});
    CHECK(x == lab(Kind::roof, -5, -1, 0, BlockId{{1}}));
    CHECK(rho(x) == Triple{-2, 0, RationalWeight{{1}}, 0});
}

TEST_CASE("rho is Berezin equivariant") {
    for (long k = -3; k <= 3; ++k)
        for (auto x : {lab(Kind::roof, -3, -1), lab(Kind::bottom, -1, 2, 1), lab(Kind::irr, -5, -5)}) {
            auto t = rho(x), u = rho(berezin_twist(x, k));
            CHECK(u == Triple{t.d, t.b + k, t.core, mod2(t.parity + k)});
        }
}

TEST_CASE("tensor products in the quotient") {
    auto unit = obj({{lab(Kind::irr, -1, -1), 1}});
    auto roof = obj({{lab(Kind::roof, -3, -1), 1}});
    CHECK(tensor_quotient(roof, unit) == roof);
    CHECK(tensor_direct(roof, unit) == roof);
    auto ber = single(irr_label(make_weight({1, 1}, -1)));
    auto ber_inv = single(irr_label(make_weight({-1, -1}, 1)));
    CHECK(tensor_quotient(ber, ber_inv) == unit);
    // gl(3|1): V (x) V^dual = unit + adjoint-type irreducible (a_B = 0, core (1,-1))
    auto v = single(irr_label(make_weight({1, 0, 0}, 0)));
    auto vd = single(irr_label(make_weight({0, 0, 0}, -1)));
    QuotientObject expect;
    expect.add(irr_label(make_weight({0, 0, 0}, 0)));
    expect.add(rho_inverse({0, 0, RationalWeight{{1, -1}}, 0}));
    CHECK(tensor_quotient(v, vd) == expect);
    CHECK(tensor_direct(v, vd) == expect);
    CHECK(superdimension(tensor_quotient(v, vd)) == 4);
}

TEST_CASE("sl(2|1) rules from the direct path") {
    auto name = [](const QuotientObject& q) {
        REQUIRE(q.summands.size() == 1);
        REQUIRE(q.summands.begin()->second == 1);
        return sl21_name(q.summands.begin()->first);
    };
    auto tens = [&](Sl21Label a, Sl21Label b) {
        return name(tensor_direct(single(sl21_representative(a)), single(sl21_representative(b))));
    };
    CHECK(tens({false, 1, 1}, {false, 1, 1}) == Sl21Label{false, 2, 2});
    CHECK(tens({true, 1, 0}, {true, 2, -1}) == Sl21Label{true, 3, -1});
    CHECK(tens({false, 1, 2}, {true, 1, 3}) == Sl21Label{false, 0, 4});
    CHECK(tens({false, 1, 2}, {true, 3, 3}) == Sl21Label{true, 2, 4});
    CHECK(tens({false, 3, 2}, {true, 1, 3}) == Sl21Label{false, 2, 4});
    CHECK(sl21_name(sl21_representative({true, 2, -3})) == Sl21Label{true, 2, -3});
}

TEST_CASE("sl reduction forgets the Berezin charge") {
    auto t = rho(lab(Kind::roof, -3, -1));
    auto u = rho(berezin_twist(lab(Kind::roof, -3, -1), 5));
    CHECK(t != u);
    CHECK(sl_reduce(t) == sl_reduce(u));
}
