#include <random>

#include <gtest/gtest.h>

#include "prymcheck/curves.hpp"
#include "prymcheck/intersection.hpp"

using namespace prymcheck;

namespace {

DivisorClass cls(const std::shared_ptr<const ClassBasis>& b, std::vector<Integer> c) { return {b, std::move(c)}; }

} // namespace

TEST(Intersect, ProductOfGenusFourCurve) {
    auto B = product_curve_basis(4);
    auto f1 = DivisorClass::basis_element(B, "f1");
    auto f2 = DivisorClass::basis_element(B, "f2");
    auto delta = DivisorClass::basis_element(B, "Delta");
    EXPECT_EQ(intersect(delta, delta), -6);
    EXPECT_EQ(intersect(f1, f1), 0);
    EXPECT_EQ(intersect(f2, f2), 0);
    EXPECT_EQ(intersect(f1, f2), 1);
    EXPECT_EQ(intersect(cls(B, {18, 12, -2}), cls(B, {12, 6, -2})), 132);
}

TEST(Intersect, DiagonalConventionZeroDoesNotGive132) {
    auto B = product_curve_basis(4, 0);
    EXPECT_EQ(intersect(cls(B, {18, 12, -2}), cls(B, {12, 6, -2})), 228);
}

TEST(Intersect, BasisMismatchThrows) {
    auto a = product_curve_basis(4), b = product_curve_basis(4);
    EXPECT_THROW(intersect(DivisorClass::zero(a), DivisorClass::zero(b)), dimension_mismatch);
    EXPECT_THROW(DivisorClass(a, {1, 2}), dimension_mismatch);
    EXPECT_THROW(ClassBasis({"x", "y"}, {{0, 1}, {2, 0}}), inconsistent_input);
    EXPECT_THROW(ClassBasis({"x", "y"}, {{0, 1}}), dimension_mismatch);
    EXPECT_THROW(DivisorClass::basis_element(a, "g"), inconsistent_input);
}

TEST(Intersect, SymmetricAndBilinear) {
    std::mt19937 rng(8675309);
    std::uniform_int_distribution<int> c(-9, 9), sz(1, 5);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = static_cast<std::size_t>(sz(rng));
        std::vector<std::string> labels;
        std::vector<std::vector<Integer>> pairing(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back("e" + std::to_string(i));
            for (std::size_t j = 0; j <= i; ++j)
                pairing[i][j] = pairing[j][i] = c(rng);
        }
        auto B = std::make_shared<const ClassBasis>(labels, pairing);
        auto rnd = [&] {
            std::vector<Integer> v(n);
            for (auto& x : v)
                x = c(rng);
            return cls(B, v);
        };
        auto a = rnd(), b = rnd(), d = rnd();
        const int k = c(rng);
        ASSERT_EQ(intersect(a, b), intersect(b, a));
        ASSERT_EQ(intersect(a + d, b), intersect(a, b) + intersect(d, b));
        ASSERT_EQ(intersect(k * a, b), k * intersect(a, b));
        ASSERT_EQ(intersect(a - a, b), 0);
    }
}

TEST(Adjunction, Genus) {
    EXPECT_EQ(adjunction_genus(132), 67);
    EXPECT_EQ(adjunction_genus(-2), 0);
    EXPECT_EQ(adjunction_genus(0), 1);
    EXPECT_THROW(adjunction_genus(7), inconsistent_input);
}

TEST(Bidegree, Classes) {
    auto B = product_curve_basis(4);
    auto delta = DivisorClass::basis_element(B, "Delta");
    EXPECT_EQ(bidegree_class(B, 1, 2, 6), cls(B, {12, 6, 0}));
    EXPECT_EQ((bidegree_class(B, 1, 2, 6) - 2 * delta).str(), "12*f1 + 6*f2 - 2*Delta");
    EXPECT_EQ(bidegree_class(B, 0, 0, 6), DivisorClass::zero(B));
    EXPECT_EQ(bidegree_class(B, 1, 1, 6), product_canonical_class(B, 4));
    EXPECT_EQ(DivisorClass::zero(B).str(), "0");
    EXPECT_EQ((-1 * delta).str(), "-Delta");
    EXPECT_THROW(bidegree_class(B, -1, 0, 6), inconsistent_input);
}

TEST(Pipeline, ProductChainGivesBranchPoints) {
    auto B = product_curve_basis(4);
    auto D = bidegree_class(B, 1, 2, 6) - 2 * DivisorClass::basis_element(B, "Delta");
    auto K = product_canonical_class(B, 4);
    EXPECT_EQ((K + D).str(), "18*f1 + 12*f2 - 2*Delta");
    const Integer kd = intersect(K + D, D);
    EXPECT_EQ(kd, 132);
    const Integer g = adjunction_genus(kd);
    EXPECT_EQ(g, 67);
    EXPECT_EQ(riemann_hurwitz_branch(g, 4, 4), 108);
}
