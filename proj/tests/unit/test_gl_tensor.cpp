#include <catch2/catch_amalgamated.hpp>

#include "superq/gl_tensor.hpp"
#include "superq/testing/pieri.hpp"

using namespace superq;

TEST_CASE("lr coefficients on small shapes") {
    CHECK(lr_coefficient(Partition{{1}}, Partition{{1, 1}}, Partition{{2, 1}}) == 1);
    CHECK(lr_coefficient(Partition{{2, 1}}, Partition{{2, 1}}, Partition{{2, 2}}) == 0);
    CHECK(lr_coefficient(Partition{{2, 1}}, Partition{{2, 1}}, Partition{{3, 2, 1}}) == 2);
    CHECK(lr_coefficient(Partition{{3, 1}}, Partition{}, Partition{{3, 1}}) == 1);
    CHECK(lr_coefficient(Partition{{2}}, Partition{{2}}, Partition{{1, 1, 1, 1}}) == 0);
}

TEST_CASE("lr coefficients are symmetric and match Pieri expansion") {
    for (long n1 = 0; n1 <= 4; ++n1)
        for (long n2 = 0; n2 <= 4; ++n2)
            for (const auto& a : partitions_of(n1))
                for (const auto& b : partitions_of(n2)) {
                    auto ref = testing::schur_product(a, b);
                    for (const auto& nu : partitions_of(n1 + n2)) {
                        Integer c = lr_coefficient(a, b, nu);
                        CHECK(c == lr_coefficient(b, a, nu));
                        auto it = ref.find(nu.parts);
                        CHECK(c == (it == ref.end() ? Integer(0) : it->second));
                    }
                }
}

TEST_CASE("tensor_rational small cases") {
    auto r = tensor_rational(RationalWeight{{1, 0}}, RationalWeight{{1, 0}});
    CHECK(r == WeightMultiset{{RationalWeight{{2, 0}}, 1}, {RationalWeight{{1, 1}}, 1}});
    auto s = tensor_rational(RationalWeight{{3}}, RationalWeight{{-5}});
    CHECK(s == WeightMultiset{{RationalWeight{{-2}}, 1}});
    // V (x) V^* for gl(3): adjoint + trivial
    auto t = tensor_rational(RationalWeight{{1, 0, 0}}, RationalWeight{{0, 0, -1}});
    CHECK(t == WeightMultiset{{RationalWeight{{1, 0, -1}}, 1}, {RationalWeight{{0, 0, 0}}, 1}});
}

TEST_CASE("tensor_rational is dimension multiplicative and shift equivariant") {
    std::vector<RationalWeight> ws = {{{2, 0, -1}}, {{1, 1, 0}}, {{0, -1, -3}}, {{2, 2, 2}}, {{3, 1, -2}}};
    for (const auto& a : ws)
        for (const auto& b : ws) {
            auto prod = tensor_rational(a, b);
            Integer total = 0;
            for (auto& [nu, c] : prod) total += c * weyl_dim(nu);
            CHECK(total == weyl_dim(a) * weyl_dim(b));
            CHECK(prod == tensor_rational(b, a));
            auto shifted = tensor_rational(RationalWeight{{a.parts[0] + 2, a.parts[1] + 2, a.parts[2] + 2}}, b);
            WeightMultiset expect;
            for (auto& [nu, c] : prod) expect[RationalWeight{{nu.parts[0] + 2, nu.parts[1] + 2, nu.parts[2] + 2}}] = c;
            CHECK(shifted == expect);
        }
}

TEST_CASE("weyl dimensions") {
    CHECK(weyl_dim(RationalWeight{{7}}) == 1);
    CHECK(weyl_dim(RationalWeight{{1, 0}}) == 2);
    CHECK(weyl_dim(RationalWeight{{2, 1, 0}}) == 8);
    CHECK(weyl_dim(RationalWeight{{4, 3, 2}}) == 8);
    Integer count = 0;
    for (auto& [w, c] : gl_character(RationalWeight{{2, 1, 0}})) count += c;
    CHECK(count == 8);
}

TEST_CASE("bipartitions") {
    CHECK(wt_of_bipartition(2, Bipartition{{{1}}, {}}) == RationalWeight{{1, 0}});
    CHECK(wt_of_bipartition(2, Bipartition{{}, {{1}}}) == RationalWeight{{0, -1}});
    CHECK(wt_of_bipartition(1, Bipartition{}) == RationalWeight{{0}});
    CHECK(bipartition_of(RationalWeight{{2, -1}}) == Bipartition{{{2}}, {{1}}});
    CHECK(bipartition_of(RationalWeight{{0, 0}}) == Bipartition{});
    CHECK_THROWS(wt_of_bipartition(1, Bipartition{{{1}}, {{1}}}));
    RationalWeight w{{3, 1, 0, -2}};
    CHECK(wt_of_bipartition(4, bipartition_of(w)) == w);
}
