#pragma once

// Plücker formulas, Riemann-Hurwitz, theta characteristics, moduli counts,
// polystable degrees and Euler characteristics of fibrations over a curve.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace prymcheck {

namespace detail {

inline Integer require_nonnegative(Integer v, const char* what) {
    if (v < 0)
        throw inconsistent_input(std::string(what) + " is negative (" + v.str() + ")");
    return v;
}

} // namespace detail

// ---------------------------------------------------------------- Plücker

/// Plane-curve numerical data; absent fields are unknown.
struct PlueckerData {
    std::optional<Integer> d, delta, kappa, g, d_star, b, f;

    /// Non-negativity, and the genus formula when d, delta, kappa, g are all known.
    bool consistent() const {
        for (const auto* v : {&d, &delta, &kappa, &g, &d_star, &b, &f})
            if (*v && **v < 0)
                return false;
        if (d && delta && kappa && g)
            return *g == (*d - 1) * (*d - 2) / 2 - *delta - *kappa;
        return true;
    }
};

/// d* = d(d-1) - 2 delta - 3 kappa.
inline Integer pluecker_dual_degree(const Integer& d, const Integer& delta, const Integer& kappa) {
    if (d < 0 || delta < 0 || kappa < 0)
        throw inconsistent_input("Plücker inputs must be non-negative");
    return detail::require_nonnegative(d * (d - 1) - 2 * delta - 3 * kappa, "dual degree");
}

struct BitangentsFlexes {
    Integer b, f;
    friend bool operator==(const BitangentsFlexes&, const BitangentsFlexes&) = default;
};

/// Solves the dual pair
///   g = (d*-1)(d*-2)/2 - b - f,   d = d*(d*-1) - 2b - 3f
/// for (b, f). The system is unimodular, so the integer solution is unique.
inline BitangentsFlexes pluecker_solve_bf(const Integer& d, const Integer& d_star, const Integer& g) {
    if (d < 0 || d_star < 0 || g < 0)
        throw inconsistent_input("Plücker inputs must be non-negative");
    const Integer S = (d_star - 1) * (d_star - 2) / 2 - g; // b + f
    const Integer T = d_star * (d_star - 1) - d;           // 2b + 3f
    BitangentsFlexes r{3 * S - T, T - 2 * S};
    if (r.b < 0 || r.f < 0)
        throw inconsistent_input("no non-negative (b, f): got b = " + r.b.str() + ", f = " + r.f.str());
    return r;
}

/// Re-substitution of both equations solved by pluecker_solve_bf.
inline bool pluecker_equations_hold(const Integer& d, const Integer& d_star, const Integer& g,
                                    const BitangentsFlexes& bf) {
    return g == (d_star - 1) * (d_star - 2) / 2 - bf.b - bf.f && d == d_star * (d_star - 1) - 2 * bf.b - 3 * bf.f;
}

/// f = 3d(d-2) - 6 delta - 8 kappa.
inline Integer flex_count(const Integer& d, const Integer& delta, const Integer& kappa) {
    if (d < 0 || delta < 0 || kappa < 0)
        throw inconsistent_input("Plücker inputs must be non-negative");
    return detail::require_nonnegative(3 * d * (d - 2) - 6 * delta - 8 * kappa, "flex count");
}

inline Integer plane_curve_genus(const Integer& d, const Integer& delta, const Integer& kappa) {
    return (d - 1) * (d - 2) / 2 - delta - kappa;
}

// ---------------------------------------------------------------- covers

/// Degree-n cover of curves. Constructed only through make_cover, so the
/// Riemann-Hurwitz identity always holds.
struct CoverData {
    Integer degree, g_source, g_target, branch_degree;

    bool riemann_hurwitz_holds() const {
        return 2 * g_source - 2 == degree * (2 * g_target - 2) + branch_degree;
    }
};

/// deg R = 2 g_s - 2 - n (2 g_t - 2).
inline Integer riemann_hurwitz_branch(const Integer& g_source, const Integer& g_target, const Integer& degree) {
    if (degree < 1)
        throw inconsistent_input("cover degree must be >= 1");
    if (g_source < 0 || g_target < 0)
        throw inconsistent_input("genera must be non-negative");
    return detail::require_nonnegative(2 * g_source - 2 - degree * (2 * g_target - 2), "branch degree");
}

inline CoverData make_cover(const Integer& g_source, const Integer& g_target, const Integer& degree) {
    return {degree, g_source, g_target, riemann_hurwitz_branch(g_source, g_target, degree)};
}

// ---------------------------------------------------------------- thetas

enum class ThetaParity { odd, even };

inline Integer theta_characteristics(int g, ThetaParity parity) {
    if (g < 1)
        throw inconsistent_input("genus must be >= 1");
    Integer half = Integer(1) << (g - 1);
    Integer full = Integer(1) << g;
    return parity == ThetaParity::odd ? half * (full - 1) : half * (full + 1);
}

// ---------------------------------------------------------------- moduli

inline Integer pgl_dim(int n) { return Integer(n + 1) * (n + 1) - 1; }

/// Dimension of the family of complete intersections of the given degrees in
/// P^n modulo a group of dimension group_dim.
inline Integer moduli_dimension_check(int n, const std::vector<int>& degrees, const Integer& group_dim) {
    Integer total = 0;
    for (int d : degrees)
        total += binomial(n + d, n) - 1;
    return total - group_dim;
}

// ---------------------------------------------------------------- polystable

struct PolystableSpec {
    std::vector<int> genera;
    std::vector<std::vector<int>> intersections; // symmetric, diagonal ignored
    Integer total_chi;

    std::size_t size() const noexcept { return genera.size(); }

    void validate() const {
        if (genera.empty())
            throw inconsistent_input("polystable spec needs at least one component");
        if (intersections.size() != genera.size())
            throw dimension_mismatch("intersection table size differs from component count");
        for (std::size_t i = 0; i < size(); ++i) {
            if (intersections[i].size() != size())
                throw dimension_mismatch("intersection table is not square");
            for (std::size_t j = 0; j < size(); ++j)
                if (intersections[i][j] != intersections[j][i])
                    throw inconsistent_input("intersection table is not symmetric");
        }
    }

    /// C_i . C = 2 g_i - 2 + sum_{j != i} C_i . C_j.
    Integer slope_denominator(std::size_t i) const {
        Integer c = 2 * genera[i] - 2;
        for (std::size_t j = 0; j < size(); ++j)
            if (j != i)
                c += intersections[i][j];
        return c;
    }
};

/// Equal slopes (1 - g_i + d_i)/(C_i.C) plus sum (1 - g_i + d_i) = total_chi.
inline std::vector<Integer> solve_polystable_degrees(const PolystableSpec& spec) {
    spec.validate();
    Integer sum = 0;
    std::vector<Integer> c;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        c.push_back(spec.slope_denominator(i));
        if (c.back() <= 0)
            throw inconsistent_input("slope denominator of component " + std::to_string(i) + " is not positive");
        sum += c.back();
    }
    std::vector<Integer> d;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        Integer num = spec.total_chi * c[i];
        if (num % sum != 0)
            throw inconsistent_input("no integer degrees: chi of component " + std::to_string(i) + " is " +
                                     num.str() + "/" + sum.str());
        d.push_back(num / sum - 1 + spec.genera[i]);
    }
    return d;
}

/// The equal-slope condition between components i and j written as
/// a d_i + b = c d_j with gcd(a, b, c) = 1 and c > 0.
struct SlopeRelation {
    Integer a, b, c;
    bool holds(const Integer& di, const Integer& dj) const { return a * di + b == c * dj; }
    friend bool operator==(const SlopeRelation&, const SlopeRelation&) = default;
};

inline SlopeRelation slope_relation(const PolystableSpec& spec, std::size_t i, std::size_t j) {
    spec.validate();
    // c_j (1 - g_i + d_i) = c_i (1 - g_j + d_j)
    const Integer ci = spec.slope_denominator(i), cj = spec.slope_denominator(j);
    SlopeRelation r{cj, cj * (1 - spec.genera[i]) - ci * (1 - spec.genera[j]), ci};
    Integer g = gcd(gcd(r.a, r.b), r.c);
    if (g != 0) {
        if (r.c < 0)
            g = -g;
        r.a /= g;
        r.b /= g;
        r.c /= g;
    }
    return r;
}

// ---------------------------------------------------------------- fibrations

struct FiberStratum {
    Integer count;
    Integer fiber_chi;
};

/// chi of a fibration over a curve of Euler number base_chi: singular fibers
/// contribute count * fiber_chi, the remaining base points smooth_fiber_chi.
inline Integer fibration_euler(const std::vector<FiberStratum>& strata, const Integer& smooth_fiber_chi,
                               const Integer& base_chi = 2) {
    Integer total = base_chi * smooth_fiber_chi;
    for (const auto& s : strata) {
        if (s.count < 0)
            throw inconsistent_input("stratum count must be non-negative");
        total += s.count * (s.fiber_chi - smooth_fiber_chi);
    }
    return total;
}

/// Inverse of fibration_euler for a single stratum of unknown size.
inline Integer solve_unknown_count(const Integer& total_chi, const std::vector<FiberStratum>& known,
                                   const Integer& unknown_fiber_chi, const Integer& smooth_fiber_chi,
                                   const Integer& base_chi = 2) {
    const Integer rest = total_chi - fibration_euler(known, smooth_fiber_chi, base_chi);
    const Integer step = unknown_fiber_chi - smooth_fiber_chi;
    if (step == 0)
        throw inconsistent_input("unknown stratum has the smooth fiber's chi; count is undetermined");
    if (rest % step != 0 || rest / step < 0)
        throw inconsistent_input("no non-negative integer count: " + rest.str() + "/" + step.str());
    return rest / step;
}

} // namespace prymcheck
