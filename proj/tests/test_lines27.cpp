#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "prymcheck/lines27.hpp"

using namespace prymcheck;

namespace {

Line27 relabel(const Line27& l, const std::array<int, 7>& s) {
    switch (l.kind) {
    case Line27::Kind::E:
        return Line27::e(s[l.i]);
    case Line27::Kind::G:
        return Line27::g(s[l.i]);
    case Line27::Kind::F:
        return Line27::f(s[l.i], s[l.j]);
    }
    return l;
}

std::set<Triple> triangles(const Configuration27& c) {
    std::set<Triple> out;
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            for (std::size_t d = b + 1; d < c.size(); ++d)
                if (c.incident(a, b) && c.incident(a, d) && c.incident(b, d))
                    out.insert({a, b, d});
    return out;
}

} // namespace

TEST(Configuration, Basics) {
    auto c = build_configuration();
    EXPECT_EQ(c.size(), 27u);
    EXPECT_EQ(c.neighbors(c.index_of(Line27::e(1))).size(), 10u);
    EXPECT_FALSE(lines_meet(Line27::e(1), Line27::g(1)));
    EXPECT_TRUE(lines_meet(Line27::e(1), Line27::g(2)));
    EXPECT_TRUE(lines_meet(Line27::g(3), Line27::f(3, 5)));
    EXPECT_FALSE(lines_meet(Line27::g(3), Line27::f(1, 5)));
    EXPECT_TRUE(lines_meet(Line27::f(1, 2), Line27::f(3, 4)));
    EXPECT_FALSE(lines_meet(Line27::f(1, 2), Line27::f(2, 4)));
    EXPECT_EQ(Line27::f(5, 2).label(), "F25");
    EXPECT_THROW(build_configuration(2), unsupported_configuration);
}

TEST(Configuration, StronglyRegular) {
    auto c = build_configuration();
    for (std::size_t a = 0; a < c.size(); ++a) {
        EXPECT_FALSE(c.incident(a, a));
        EXPECT_EQ(c.neighbors(a).size(), 10u);
        for (std::size_t b = 0; b < c.size(); ++b) {
            ASSERT_EQ(c.incident(a, b), c.incident(b, a));
            if (a == b)
                continue;
            std::size_t common = 0;
            for (std::size_t d = 0; d < c.size(); ++d)
                common += c.incident(a, d) && c.incident(b, d);
            EXPECT_EQ(common, c.incident(a, b) ? 1u : 5u) << c.lines()[a].label() << " " << c.lines()[b].label();
        }
    }
}

TEST(Tritangents, CountsAndTypes) {
    auto c = build_configuration();
    auto t = tritangent_triples(c);
    EXPECT_EQ(t.size(), 45u);
    std::size_t fff = 0;
    for (const auto& x : t) {
        EXPECT_TRUE(c.incident(x[0], x[1]) && c.incident(x[0], x[2]) && c.incident(x[1], x[2]));
        fff += std::all_of(x.begin(), x.end(), [&](std::size_t i) { return c.lines()[i].kind == Line27::Kind::F; });
    }
    EXPECT_EQ(fff, 15u);
    EXPECT_EQ(t.size() - fff, 30u);
}

TEST(Tritangents, EqualTrianglesOfIncidenceGraph) {
    auto c = build_configuration();
    auto t = tritangent_triples(c);
    EXPECT_EQ(std::set<Triple>(t.begin(), t.end()), triangles(c));
}

TEST(Tritangents, FivePerLine) {
    auto c = build_configuration();
    auto t = tritangent_triples(c);
    for (std::size_t i = 0; i < c.size(); ++i)
        EXPECT_EQ(std::count_if(t.begin(), t.end(),
                                [&](const Triple& x) { return std::find(x.begin(), x.end(), i) != x.end(); }),
                  5);
}

TEST(Tritangents, StableUnderRelabeling) {
    auto c = build_configuration();
    auto t = tritangent_triples(c);
    std::set<Triple> base(t.begin(), t.end());
    std::array<int, 7> s{0, 1, 2, 3, 4, 5, 6};
    int perms = 0;
    do {
        if (++perms % 7 != 1) // every seventh of the 720 permutations
            continue;
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = 0; b < c.size(); ++b)
                ASSERT_EQ(c.incident(a, b), lines_meet(relabel(c.lines()[a], s), relabel(c.lines()[b], s)));
        std::set<Triple> mapped;
        for (const auto& x : t) {
            Triple y{c.index_of(relabel(c.lines()[x[0]], s)), c.index_of(relabel(c.lines()[x[1]], s)),
                     c.index_of(relabel(c.lines()[x[2]], s))};
            std::sort(y.begin(), y.end());
            mapped.insert(y);
        }
        ASSERT_EQ(mapped, base);
    } while (std::next_permutation(s.begin() + 1, s.end()));
    EXPECT_EQ(perms, 720);
}

TEST(DualStratification, Counts) {
    auto s = dual_stratification_counts(build_configuration());
    EXPECT_EQ(s, (DualStratification{27, 45, 5, 3}));
    EXPECT_EQ(s.dual_lines * s.triples_per_line, 135u);
    EXPECT_EQ(s.triple_points * s.lines_per_triple, 135u);
}
