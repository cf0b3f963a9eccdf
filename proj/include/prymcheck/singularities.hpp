#pragma once

// Reid-Tai classification of abelian diagonal quotient singularities.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "invariants.hpp"
#include "lattice.hpp"

namespace prymcheck {

/// diag(zeta^{a_1}, ..., zeta^{a_n}) with zeta a primitive r-th root of unity.
struct CyclicDiagonalElement {
    int order = 1;
    std::vector<int> exponents;

    CyclicDiagonalElement() = default;
    CyclicDiagonalElement(int r, std::vector<int> a) : order(r), exponents(std::move(a)) {
        if (order < 1)
            throw inconsistent_input("element order must be >= 1");
        for (int& e : exponents)
            e = ((e % order) + order) % order;
    }

    /// From a vector of +-1 eigenvalues.
    static CyclicDiagonalElement from_signs(const std::vector<int>& signs) {
        std::vector<int> a;
        for (int s : signs) {
            if (s != 1 && s != -1)
                throw inconsistent_input("sign entries must be +-1");
            a.push_back(s == -1 ? 1 : 0);
        }
        return {2, std::move(a)};
    }

    std::size_t dimension() const noexcept { return exponents.size(); }

    bool is_identity() const {
        return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
    }

    std::size_t nontrivial_eigenvalues() const {
        return static_cast<std::size_t>(std::count_if(exponents.begin(), exponents.end(), [](int e) { return e != 0; }));
    }

    CyclicDiagonalElement power(int t) const {
        std::vector<int> a;
        for (int e : exponents)
            a.push_back(static_cast<int>((static_cast<long long>(e) * t) % order));
        return {order, std::move(a)};
    }

    CyclicDiagonalElement inverse() const { return power(order - 1); }

    /// Same element written with its exact order.
    CyclicDiagonalElement reduced() const {
        int g = order;
        for (int e : exponents)
            g = std::gcd(g, e);
        std::vector<int> a;
        for (int e : exponents)
            a.push_back(e / g);
        return {order / g, std::move(a)};
    }

    std::string str() const {
        std::string s = "1/" + std::to_string(order) + "(";
        for (std::size_t i = 0; i < exponents.size(); ++i)
            s += (i ? "," : "") + std::to_string(exponents[i]);
        return s + ")";
    }

    friend bool operator==(const CyclicDiagonalElement& a, const CyclicDiagonalElement& b) {
        auto x = a.reduced(), y = b.reduced();
        return x.order == y.order && x.exponents == y.exponents;
    }
};

/// (sum a_j) / r.
inline Rational age(const CyclicDiagonalElement& g) {
    long long s = std::accumulate(g.exponents.begin(), g.exponents.end(), 0LL);
    return Rational(Integer(s), Integer(g.order));
}

/// Finite abelian group generated by diagonal elements; `elements` is the
/// full closure, identity first.
class FiniteDiagonalGroup {
public:
    explicit FiniteDiagonalGroup(std::vector<CyclicDiagonalElement> gens) : generators_(std::move(gens)) {
        if (generators_.empty())
            throw inconsistent_input("group needs at least one generator");
        const std::size_t n = generators_.front().dimension();
        long long L = 1;
        for (const auto& g : generators_) {
            if (g.dimension() != n)
                throw dimension_mismatch("group generators act on different dimensions");
            L = std::lcm(L, static_cast<long long>(g.order));
        }
        common_order_ = static_cast<int>(L);
        // closure in (Z/L)^n
        std::set<std::vector<int>> seen{std::vector<int>(n, 0)};
        std::vector<std::vector<int>> frontier{std::vector<int>(n, 0)};
        std::vector<std::vector<int>> lifted;
        for (const auto& g : generators_) {
            std::vector<int> v;
            for (int e : g.exponents)
                v.push_back(e * (common_order_ / g.order));
            lifted.push_back(std::move(v));
        }
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& x : frontier)
                for (const auto& g : lifted) {
                    std::vector<int> y(n);
                    for (std::size_t i = 0; i < n; ++i)
                        y[i] = (x[i] + g[i]) % common_order_;
                    if (seen.insert(y).second)
                        next.push_back(y);
                }
            frontier = std::move(next);
        }
        elements_.emplace_back(common_order_, std::vector<int>(n, 0));
        for (const auto& v : seen)
            if (std::any_of(v.begin(), v.end(), [](int e) { return e != 0; }))
                elements_.push_back(CyclicDiagonalElement(common_order_, v).reduced());
        elements_.front() = elements_.front().reduced();
    }

    static FiniteDiagonalGroup from_sign_vectors(const std::vector<std::vector<int>>& rows) {
        std::vector<CyclicDiagonalElement> gens;
        for (const auto& r : rows)
            gens.push_back(CyclicDiagonalElement::from_signs(r));
        return FiniteDiagonalGroup(std::move(gens));
    }

    const std::vector<CyclicDiagonalElement>& generators() const noexcept { return generators_; }
    const std::vector<CyclicDiagonalElement>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t dimension() const noexcept { return generators_.front().dimension(); }

    /// Same group as a DiagonalAction (one finite factor per generator).
    DiagonalAction as_action() const {
        DiagonalAction a;
        a.ambient_dim = dimension();
        for (const auto& g : generators_)
            if (g.order >= 2)
                a.finite_factors.push_back({g.order, g.exponents});
        return a;
    }

private:
    std::vector<CyclicDiagonalElement> generators_;
    std::vector<CyclicDiagonalElement> elements_;
    int common_order_ = 1;
};

enum class QuotientClass { terminal, canonical_not_terminal, not_canonical };

inline std::string_view to_string(QuotientClass c) {
    switch (c) {
    case QuotientClass::terminal:
        return "terminal";
    case QuotientClass::canonical_not_terminal:
        return "canonical_not_terminal";
    case QuotientClass::not_canonical:
        return "not_canonical";
    }
    return "?";
}

struct Classification {
    QuotientClass kind;
    Rational minimum_age;
    CyclicDiagonalElement minimizer; // element (in some primitive embedding) attaining it
};

/// Elements fixing a hyperplane pointwise (exactly one nontrivial eigenvalue).
inline std::vector<CyclicDiagonalElement> quasi_reflections(const FiniteDiagonalGroup& G) {
    std::vector<CyclicDiagonalElement> out;
    for (const auto& g : G.elements())
        if (g.nontrivial_eigenvalues() == 1)
            out.push_back(g);
    return out;
}

/// Reid-Tai: terminal iff every nontrivial element has age > 1 in every
/// primitive embedding, canonical iff >= 1.
inline Classification classify_quotient(const FiniteDiagonalGroup& G) {
    if (auto q = quasi_reflections(G); !q.empty())
        throw quasi_reflection("group contains the quasi-reflection " + q.front().str() +
                               "; the age criterion does not apply");
    std::optional<Classification> best;
    for (const auto& g : G.elements()) {
        if (g.is_identity())
            continue;
        for (int t = 1; t < g.order; ++t) {
            if (std::gcd(t, g.order) != 1)
                continue;
            auto h = g.power(t);
            Rational a = age(h);
            if (!best || a < best->minimum_age)
                best = Classification{QuotientClass::terminal, a, h};
        }
    }
    if (!best) // trivial group: smooth point
        return {QuotientClass::terminal, Rational(0), G.elements().front()};
    if (best->minimum_age > 1)
        best->kind = QuotientClass::terminal;
    else if (best->minimum_age == 1)
        best->kind = QuotientClass::canonical_not_terminal;
    else
        best->kind = QuotientClass::not_canonical;
    return *best;
}

enum class ResolutionVerdict { no_symplectic_desingularization, inconclusive };

inline std::string_view to_string(ResolutionVerdict v) {
    return v == ResolutionVerdict::no_symplectic_desingularization ? "no symplectic desingularization"
                                                                   : "inconclusive by this criterion";
}

/// Terminal + Q-factorial => every resolution has discrepant exceptional
/// divisors, so none is crepant and none is symplectic.
struct Verdict {
    ResolutionVerdict verdict;
    /// Q-factoriality is assumed, not computed (finite quotients of smooth
    /// germs are Q-factorial).
    std::string assumption = "Q-factoriality of finite quotient singularities";
};

inline Verdict symplectic_resolution_verdict(QuotientClass c) {
    return {c == QuotientClass::terminal ? ResolutionVerdict::no_symplectic_desingularization
                                         : ResolutionVerdict::inconclusive};
}

} // namespace prymcheck
