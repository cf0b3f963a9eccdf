#include <gtest/gtest.h>

#include "prymcheck/curves.hpp"

using namespace prymcheck;

TEST(Pluecker, DualDegree) {
    EXPECT_EQ(pluecker_dual_degree(6, 6, 0), 18);
    EXPECT_EQ(pluecker_dual_degree(2, 0, 0), 2);
    EXPECT_EQ(pluecker_dual_degree(3, 0, 0), 6);
    EXPECT_EQ(pluecker_dual_degree(4, 0, 0), 12);
    EXPECT_THROW(pluecker_dual_degree(3, 4, 0), inconsistent_input);
    EXPECT_THROW(pluecker_dual_degree(-1, 0, 0), inconsistent_input);
}

TEST(Pluecker, SolveBitangentsFlexes) {
    EXPECT_EQ(pluecker_solve_bf(3, 6, 1), (BitangentsFlexes{0, 9}));
    EXPECT_EQ(pluecker_solve_bf(4, 12, 3), (BitangentsFlexes{28, 24}));
    auto sextic = pluecker_solve_bf(6, 18, 4);
    EXPECT_EQ(sextic, (BitangentsFlexes{96, 36}));
    EXPECT_TRUE(pluecker_equations_hold(6, 18, 4, sextic));
    EXPECT_FALSE(pluecker_equations_hold(6, 18, 4, {90, 36}));
    EXPECT_FALSE(pluecker_equations_hold(6, 18, 4, {90, 42}));
    EXPECT_THROW(pluecker_solve_bf(3, 6, 5), inconsistent_input);
}

TEST(Pluecker, StatedSexticBitangentsFitNoFlexCount) {
    // with b = 90 each displayed equation forces a different f
    const Integer from_genus = (18 - 1) * (18 - 2) / 2 - 4 - 90;
    const Integer twice_b = 2 * 90;
    const Integer rest = 18 * 17 - 6 - twice_b;
    EXPECT_EQ(from_genus, 42);
    EXPECT_EQ(rest % 3, 0);
    EXPECT_NE(rest / 3, from_genus);
}

TEST(Pluecker, FlexCountAgreesWithSolver) {
    EXPECT_EQ(flex_count(3, 0, 0), 9);
    EXPECT_EQ(flex_count(6, 6, 0), 36);
    EXPECT_EQ(flex_count(2, 0, 0), 0);
    struct Case {
        int d, delta, kappa;
    };
    for (auto c : {Case{3, 0, 0}, Case{4, 0, 0}, Case{6, 6, 0}, Case{5, 0, 0}, Case{4, 1, 0}, Case{3, 0, 1}}) {
        const Integer ds = pluecker_dual_degree(c.d, c.delta, c.kappa);
        const Integer g = plane_curve_genus(c.d, c.delta, c.kappa);
        auto bf = pluecker_solve_bf(c.d, ds, g);
        EXPECT_EQ(bf.f, flex_count(c.d, c.delta, c.kappa)) << c.d << " " << c.delta << " " << c.kappa;
        EXPECT_TRUE(pluecker_equations_hold(c.d, ds, g, bf));
        // the dual curve has the same geometric genus
        EXPECT_EQ((ds - 1) * (ds - 2) / 2 - bf.b - bf.f, g);
    }
}

TEST(Pluecker, DataConsistency) {
    PlueckerData p;
    p.d = 6;
    p.delta = 6;
    p.kappa = 0;
    p.g = 4;
    EXPECT_TRUE(p.consistent());
    p.g = 5;
    EXPECT_FALSE(p.consistent());
    p.g.reset();
    p.b = -1;
    EXPECT_FALSE(p.consistent());
}

TEST(RiemannHurwitz, Examples) {
    EXPECT_EQ(riemann_hurwitz_branch(4, 0, 6), 18);
    EXPECT_EQ(riemann_hurwitz_branch(4, 0, 4), 14);
    EXPECT_EQ(riemann_hurwitz_branch(67, 4, 4), 108);
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(riemann_hurwitz_branch(1, 1, n), 0);
    EXPECT_THROW(riemann_hurwitz_branch(0, 1, 2), inconsistent_input);
    EXPECT_THROW(riemann_hurwitz_branch(2, 0, 0), inconsistent_input);
}

TEST(RiemannHurwitz, ConstructedCoversSatisfyIdentity) {
    for (int gs = 0; gs <= 30; ++gs)
        for (int gt = 0; gt <= 5; ++gt)
            for (int n = 1; n <= 6; ++n) {
                try {
                    auto c = make_cover(gs, gt, n);
                    EXPECT_TRUE(c.riemann_hurwitz_holds());
                    EXPECT_GE(c.branch_degree, 0);
                } catch (const inconsistent_input&) {
                    EXPECT_LT(2 * gs - 2 - n * (2 * gt - 2), 0);
                }
            }
}

TEST(Theta, Examples) {
    EXPECT_EQ(theta_characteristics(4, ThetaParity::odd), 120);
    EXPECT_EQ(theta_characteristics(3, ThetaParity::odd), 28);
    EXPECT_EQ(theta_characteristics(1, ThetaParity::odd), 1);
    EXPECT_EQ(theta_characteristics(1, ThetaParity::even), 3);
    EXPECT_THROW(theta_characteristics(0, ThetaParity::odd), inconsistent_input);
}

TEST(Theta, OddPlusEvenIsAllSquareRoots) {
    for (int g = 1; g <= 8; ++g)
        EXPECT_EQ(theta_characteristics(g, ThetaParity::odd) + theta_characteristics(g, ThetaParity::even),
                  Integer(1) << (2 * g));
}

TEST(Moduli, DimensionCounts) {
    EXPECT_EQ(pgl_dim(3), 15);
    EXPECT_EQ(moduli_dimension_check(3, {2, 3}, pgl_dim(3)), 13);
    EXPECT_EQ(moduli_dimension_check(2, {3}, pgl_dim(2)), 1);
    EXPECT_EQ(moduli_dimension_check(3, {}, 0), 0);
}

TEST(Polystable, Examples) {
    PolystableSpec two{{0, 1}, {{0, 4}, {4, 0}}, -3};
    EXPECT_EQ(solve_polystable_degrees(two), (std::vector<Integer>{-2, -2}));
    auto rel = slope_relation(two, 0, 1);
    EXPECT_EQ(rel, (SlopeRelation{2, 2, 1})); // 2 d1 + 2 = d2
    EXPECT_TRUE(rel.holds(-2, -2));
    PolystableSpec three{{0, 0, 0}, {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}, -3};
    EXPECT_EQ(solve_polystable_degrees(three), (std::vector<Integer>{-2, -2, -2}));
    PolystableSpec one{{4}, {{0}}, -3};
    EXPECT_EQ(solve_polystable_degrees(one), (std::vector<Integer>{0}));
}

TEST(Polystable, SolutionSatisfiesSlopeEquations) {
    for (int g1 = 0; g1 <= 3; ++g1)
        for (int g2 = 0; g2 <= 3; ++g2)
            for (int c = 1; c <= 6; ++c)
                for (int chi = -12; chi <= 12; ++chi) {
                    PolystableSpec s{{g1, g2}, {{0, c}, {c, 0}}, chi};
                    if (s.slope_denominator(0) <= 0 || s.slope_denominator(1) <= 0)
                        continue;
                    std::vector<Integer> d;
                    try {
                        d = solve_polystable_degrees(s);
                    } catch (const inconsistent_input&) {
                        continue;
                    }
                    EXPECT_EQ(1 - g1 + d[0] + 1 - g2 + d[1], chi);
                    EXPECT_TRUE(slope_relation(s, 0, 1).holds(d[0], d[1]));
                }
}

TEST(Polystable, Errors) {
    EXPECT_THROW(solve_polystable_degrees({{0, 1}, {{0, 4}, {3, 0}}, -3}), inconsistent_input);
    EXPECT_THROW(solve_polystable_degrees({{0, 1}, {{0, 4}}, -3}), dimension_mismatch);
    EXPECT_THROW(solve_polystable_degrees({{0, 1}, {{0, 4}, {4, 0}}, -2}), inconsistent_input);
    EXPECT_THROW(solve_polystable_degrees({{0}, {{0}}, -2}), inconsistent_input); // denominator -2
    EXPECT_THROW(solve_polystable_degrees({{}, {}, 0}), inconsistent_input);
}

TEST(Fibration, Examples) {
    EXPECT_EQ(solve_unknown_count(12, {}, 1, 0), 12);
    EXPECT_EQ(solve_unknown_count(24, {{5, 2}}, 1, 0), 14);
    EXPECT_EQ(fibration_euler({{19, 1}}, 0), 19);
    EXPECT_EQ(fibration_euler({{12, 1}}, 0), 12);
    EXPECT_THROW(solve_unknown_count(13, {{5, 2}}, 2, 0), inconsistent_input);
    EXPECT_THROW(solve_unknown_count(12, {}, 0, 0), inconsistent_input);
    EXPECT_THROW(solve_unknown_count(2, {{5, 2}}, 1, 0), inconsistent_input);
}

TEST(Fibration, SolveInvertsEuler) {
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= 5; ++k)
            for (int smooth = -4; smooth <= 4; smooth += 2) {
                std::vector<FiberStratum> known{{k, 3}};
                std::vector<FiberStratum> all{{k, 3}, {n, smooth + 1}};
                EXPECT_EQ(solve_unknown_count(fibration_euler(all, smooth), known, smooth + 1, smooth), n);
            }
}
