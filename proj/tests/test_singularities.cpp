#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "prymcheck/cone_models.hpp"
#include "prymcheck/singularities.hpp"

using namespace prymcheck;

namespace {

CyclicDiagonalElement minus_one(std::size_t n) { return {2, std::vector<int>(n, 1)}; }

FiniteDiagonalGroup klein_group() { return FiniteDiagonalGroup::from_sign_vectors(cones::klein_sign_rows()); }

} // namespace

TEST(Age, Examples) {
    EXPECT_EQ(age(CyclicDiagonalElement(3, {0, 0, 0})), 0);
    EXPECT_EQ(age(minus_one(4)), 2);
    EXPECT_EQ(age(minus_one(2)), 1);
    EXPECT_EQ(age(CyclicDiagonalElement(5, {1, 2, 4})), Rational(7, 5));
}

TEST(Age, ExponentsAreReducedModOrder) {
    CyclicDiagonalElement g(3, {-1, 4, 3});
    EXPECT_EQ(g.exponents, (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(CyclicDiagonalElement(4, {2, 2}), CyclicDiagonalElement(2, {1, 1}));
    EXPECT_THROW(CyclicDiagonalElement(0, {1}), inconsistent_input);
    EXPECT_THROW(CyclicDiagonalElement::from_signs({1, 2}), inconsistent_input);
}

TEST(Age, ElementPlusInverseCountsNontrivialEigenvalues) {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> ord(1, 12), dim(1, 8);
    for (int t = 0; t < 500; ++t) {
        const int r = ord(rng);
        std::uniform_int_distribution<int> ex(0, r - 1);
        std::vector<int> a(static_cast<std::size_t>(dim(rng)));
        for (auto& x : a)
            x = ex(rng);
        CyclicDiagonalElement g(r, a);
        EXPECT_EQ(age(g) + age(g.inverse()), Rational(static_cast<long long>(g.nontrivial_eigenvalues())))
            << g.str();
    }
}

TEST(Group, KleinClosure) {
    auto G = klein_group();
    EXPECT_EQ(G.order(), 4u);
    EXPECT_TRUE(G.elements().front().is_identity());
    for (std::size_t i = 1; i < G.order(); ++i) {
        EXPECT_EQ(G.elements()[i].nontrivial_eigenvalues(), 4u);
        EXPECT_EQ(age(G.elements()[i]), 2);
    }
}

TEST(Group, MixedOrdersCloseUnderComposition) {
    FiniteDiagonalGroup G({{2, {1, 1, 0}}, {3, {0, 1, 2}}});
    EXPECT_EQ(G.order(), 6u);
    FiniteDiagonalGroup H({{6, {3, 5, 4}}}); // same cyclic group of order 6
    EXPECT_EQ(H.order(), 6u);
    for (const auto& g : G.elements())
        EXPECT_NE(std::find(H.elements().begin(), H.elements().end(), g), H.elements().end()) << g.str();
    EXPECT_THROW(FiniteDiagonalGroup({{2, {1, 1}}, {2, {1, 1, 1}}}), dimension_mismatch);
    EXPECT_THROW(FiniteDiagonalGroup({}), inconsistent_input);
}

TEST(Classify, Examples) {
    auto c4 = classify_quotient(FiniteDiagonalGroup({minus_one(4)}));
    EXPECT_EQ(c4.kind, QuotientClass::terminal);
    EXPECT_EQ(c4.minimum_age, 2);
    EXPECT_EQ(classify_quotient(klein_group()).kind, QuotientClass::terminal);
    EXPECT_EQ(classify_quotient(FiniteDiagonalGroup({minus_one(2)})).kind, QuotientClass::canonical_not_terminal);
    // 1/5(1,2): age of the generator is 3/5
    EXPECT_EQ(classify_quotient(FiniteDiagonalGroup({{5, {1, 2}}})).kind, QuotientClass::not_canonical);
    // 1/3(1,1,1): age 1
    EXPECT_EQ(classify_quotient(FiniteDiagonalGroup({{3, {1, 1, 1}}})).kind, QuotientClass::canonical_not_terminal);
}

TEST(Classify, PrimitiveEmbeddingsAreScanned) {
    // 1/5(1,1,3): generator age 1, but the square 1/5(2,2,1) has age 1 and the
    // cube 1/5(3,3,4) has age 2; the fourth power 1/5(4,4,2) has age 2. Minimum 1.
    auto c = classify_quotient(FiniteDiagonalGroup({{5, {1, 1, 3}}}));
    EXPECT_EQ(c.minimum_age, 1);
    // 1/7(1,2,4): every power has age 1 or 2
    auto d = classify_quotient(FiniteDiagonalGroup({{7, {1, 2, 4}}}));
    EXPECT_EQ(d.minimum_age, 1);
    EXPECT_EQ(d.kind, QuotientClass::canonical_not_terminal);
    // 1/7(1,1,1): the generator itself has the smallest age, 3/7
    EXPECT_EQ(classify_quotient(FiniteDiagonalGroup({{7, {1, 1, 1}}})).minimum_age, Rational(3, 7));
}

TEST(Classify, QuasiReflectionRejected) {
    FiniteDiagonalGroup G({{2, {1, 0, 0}}});
    EXPECT_EQ(quasi_reflections(G).size(), 1u);
    EXPECT_THROW(classify_quotient(G), quasi_reflection);
    // no generator is a reflection, but (1,1,0) + (1,1,1) = (0,0,1) is
    FiniteDiagonalGroup H({{2, {1, 1, 0}}, {2, {0, 1, 1}}, {2, {1, 1, 1}}});
    EXPECT_FALSE(quasi_reflections(H).empty());
    EXPECT_THROW(classify_quotient(H), quasi_reflection);
}

TEST(Classify, MinusOneOnCn) {
    for (std::size_t n = 2; n <= 8; ++n) {
        auto c = classify_quotient(FiniteDiagonalGroup({minus_one(n)}));
        EXPECT_EQ(c.minimum_age, Rational(static_cast<long long>(n), 2));
        EXPECT_EQ(c.kind == QuotientClass::terminal, n >= 3) << n;
    }
}

TEST(Classify, InvariantUnderCoordinatePermutation) {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> ord(2, 7), dim(2, 5), ngen(1, 2);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = static_cast<std::size_t>(dim(rng));
        std::vector<CyclicDiagonalElement> gens;
        for (int k = ngen(rng); k > 0; --k) {
            const int r = ord(rng);
            std::uniform_int_distribution<int> ex(0, r - 1);
            std::vector<int> a(n);
            for (auto& x : a)
                x = ex(rng);
            gens.emplace_back(r, a);
        }
        FiniteDiagonalGroup G(gens);
        if (!quasi_reflections(G).empty())
            continue;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<CyclicDiagonalElement> pgens;
        for (const auto& g : gens) {
            std::vector<int> a(n);
            for (std::size_t i = 0; i < n; ++i)
                a[i] = g.exponents[perm[i]];
            pgens.emplace_back(g.order, a);
        }
        auto c = classify_quotient(G);
        auto pc = classify_quotient(FiniteDiagonalGroup(pgens));
        ASSERT_EQ(c.kind, pc.kind);
        ASSERT_EQ(c.minimum_age, pc.minimum_age);
        // adding an element already in the group changes the generators, not the group
        std::vector<CyclicDiagonalElement> more = gens;
        more.push_back(G.elements().back());
        ASSERT_EQ(classify_quotient(FiniteDiagonalGroup(more)).minimum_age, c.minimum_age);
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

TEST(Classify, KleinAlternativeGenerators) {
    const auto& rows = cones::klein_sign_rows();
    std::vector<int> prod(rows[0].size());
    for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] = rows[0][i] * rows[1][i];
    auto a = classify_quotient(klein_group());
    auto b = classify_quotient(FiniteDiagonalGroup::from_sign_vectors({rows[0], prod}));
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.minimum_age, b.minimum_age);
}

TEST(Verdict, OnlyTerminalObstructs) {
    EXPECT_EQ(symplectic_resolution_verdict(QuotientClass::terminal).verdict,
              ResolutionVerdict::no_symplectic_desingularization);
    EXPECT_EQ(to_string(symplectic_resolution_verdict(QuotientClass::terminal).verdict),
              "no symplectic desingularization");
    EXPECT_EQ(to_string(symplectic_resolution_verdict(QuotientClass::canonical_not_terminal).verdict),
              "inconclusive by this criterion");
    EXPECT_EQ(symplectic_resolution_verdict(QuotientClass::not_canonical).verdict, ResolutionVerdict::inconclusive);
    EXPECT_FALSE(symplectic_resolution_verdict(QuotientClass::terminal).assumption.empty());
}

TEST(Group, AsActionGivesSameInvariants) {
    auto act = klein_group().as_action();
    EXPECT_EQ(act.ambient_dim, 6u);
    EXPECT_EQ(invariant_generators(act, 4).size(), 17u);
}
