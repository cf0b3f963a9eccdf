#pragma once

// The 27 lines on a smooth cubic surface as a labeled incidence graph.

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace prymcheck {

/// E_i (exceptional), G_j (conics through five points), F_ij (lines through
/// two points). Indices are 1-based, F always has i < j.
struct Line27 {
    enum class Kind { E, G, F };
    Kind kind;
    int i = 0;
    int j = 0;

    static Line27 e(int i) { return {Kind::E, i, 0}; }
    static Line27 g(int j) { return {Kind::G, j, 0}; }
    static Line27 f(int i, int j) { return {Kind::F, std::min(i, j), std::max(i, j)}; }

    bool touches(int k) const { return kind == Kind::F && (i == k || j == k); }

    std::string label() const {
        switch (kind) {
        case Kind::E:
            return "E" + std::to_string(i);
        case Kind::G:
            return "G" + std::to_string(i);
        case Kind::F:
            return "F" + std::to_string(i) + std::to_string(j);
        }
        return "?";
    }

    friend auto operator<=>(const Line27&, const Line27&) = default;
};

/// E_i.E_k = G_j.G_l = 0, E_i.G_j = 1 iff i != j, E_i.F_kl and G_i.F_kl = 1
/// iff i in {k,l}, F_ij.F_kl = 1 iff the pairs are disjoint.
inline bool lines_meet(const Line27& a, const Line27& b) {
    using K = Line27::Kind;
    if (a == b)
        return false;
    if (a.kind > b.kind)
        return lines_meet(b, a);
    if (a.kind == K::E && b.kind == K::E)
        return false;
    if (a.kind == K::G && b.kind == K::G)
        return false;
    if (a.kind == K::E && b.kind == K::G)
        return a.i != b.i;
    if (b.kind == K::F && a.kind != K::F)
        return b.touches(a.i);
    // F, F
    return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

class Configuration27 {
public:
    Configuration27() {
        for (int i = 1; i <= 6; ++i)
            lines_.push_back(Line27::e(i));
        for (int j = 1; j <= 6; ++j)
            lines_.push_back(Line27::g(j));
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                lines_.push_back(Line27::f(i, j));
        const std::size_t n = lines_.size();
        incidence_.assign(n, std::vector<bool>(n, false));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                incidence_[a][b] = lines_meet(lines_[a], lines_[b]);
    }

    const std::vector<Line27>& lines() const noexcept { return lines_; }
    std::size_t size() const noexcept { return lines_.size(); }
    bool incident(std::size_t a, std::size_t b) const { return incidence_.at(a).at(b); }

    std::size_t index_of(const Line27& l) const {
        auto it = std::find(lines_.begin(), lines_.end(), l);
        if (it == lines_.end())
            throw inconsistent_input("not one of the 27 lines");
        return static_cast<std::size_t>(it - lines_.begin());
    }

    std::vector<std::size_t> neighbors(std::size_t a) const {
        std::vector<std::size_t> out;
        for (std::size_t b = 0; b < size(); ++b)
            if (incident(a, b))
                out.push_back(b);
        return out;
    }

private:
    std::vector<Line27> lines_;
    std::vector<std::vector<bool>> incidence_;
};

/// Only the cubic surface (degree-3 del Pezzo) is modeled.
inline Configuration27 build_configuration(int del_pezzo_degree = 3) {
    if (del_pezzo_degree != 3)
        throw unsupported_configuration("only the 27 lines of a cubic surface are modeled (del Pezzo degree 3), got " +
                                        std::to_string(del_pezzo_degree));
    return {};
}

using Triple = std::array<std::size_t, 3>; // sorted line indices

/// Tritangent planes by label scheme: {E_i, G_j, F_ij} (i != j) and
/// {F_ij, F_kl, F_mn} for partitions of {1..6} into pairs.
inline std::vector<Triple> tritangent_triples(const Configuration27& c) {
    std::set<Triple> out;
    auto add = [&](const Line27& a, const Line27& b, const Line27& d) {
        Triple t{c.index_of(a), c.index_of(b), c.index_of(d)};
        std::sort(t.begin(), t.end());
        out.insert(t);
    };
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j)
                add(Line27::e(i), Line27::g(j), Line27::f(i, j));
    for (int b = 2; b <= 6; ++b) {
        std::vector<int> rest;
        for (int k = 2; k <= 6; ++k)
            if (k != b)
                rest.push_back(k);
        // rest has 4 elements; pair rest[0] with each of the other three
        for (int m = 1; m <= 3; ++m) {
            std::vector<int> last;
            for (int k = 1; k <= 3; ++k)
                if (k != m)
                    last.push_back(rest[k]);
            add(Line27::f(1, b), Line27::f(rest[0], rest[m]), Line27::f(last[0], last[1]));
        }
    }
    return {out.begin(), out.end()};
}

struct DualStratification {
    std::size_t dual_lines, triple_points, triples_per_line, lines_per_triple;
    friend bool operator==(const DualStratification&, const DualStratification&) = default;
};

/// Counts read off the configuration; throws if the double count
/// lines * per_line == triples * 3 fails or the per-line count varies.
inline DualStratification dual_stratification_counts(const Configuration27& c) {
    const auto triples = tritangent_triples(c);
    std::vector<std::size_t> per(c.size(), 0);
    for (const auto& t : triples)
        for (auto i : t)
            ++per[i];
    const auto [lo, hi] = std::minmax_element(per.begin(), per.end());
    if (*lo != *hi)
        throw inconsistent_input("tritangent count per line is not constant");
    DualStratification s{c.size(), triples.size(), *lo, 3};
    if (s.dual_lines * s.triples_per_line != s.triple_points * s.lines_per_triple)
        throw inconsistent_input("double count of line/point incidences fails");
    return s;
}

} // namespace prymcheck
