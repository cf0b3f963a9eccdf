#pragma once

// Euler characteristic of a fibration stratified by singular fibers:
// chi(total) = sum over strata of chi(base stratum) * chi(fiber).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "curves.hpp"
#include "errors.hpp"
#include "intersection.hpp"
#include "lattice.hpp"
#include "lines27.hpp"

namespace prymcheck {

enum class Provenance { paper, derived, trivial };

inline std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::paper:
        return "PAPER";
    case Provenance::derived:
        return "DERIVED";
    case Provenance::trivial:
        return "TRIVIAL";
    }
    return "?";
}

inline Provenance provenance_from_string(std::string_view s) {
    if (s == "PAPER")
        return Provenance::paper;
    if (s == "DERIVED")
        return Provenance::derived;
    if (s == "TRIVIAL")
        return Provenance::trivial;
    throw schema_error("unknown provenance '" + std::string(s) + "'");
}

enum class LedgerMode { paper, derived };

inline std::string_view to_string(LedgerMode m) { return m == LedgerMode::paper ? "paper" : "derived"; }

struct StratumEntry {
    std::string label;
    int dimension = 0;
    std::optional<Integer> chi_base; // unknown for strata whose fiber chi is 0
    Integer chi_fiber = 0;
    Provenance base_provenance = Provenance::paper;
    Provenance fiber_provenance = Provenance::paper;
    std::string recipe;   // how chi_base was obtained, empty if not derived
    std::string upstream; // operation whose output fixes chi_base

    std::optional<Integer> contribution() const {
        if (chi_fiber == 0)
            return Integer(0);
        if (!chi_base)
            return std::nullopt;
        return *chi_base * chi_fiber;
    }
};

/// Labels and dimensions a ledger must cover.
struct LedgerSchema {
    std::string name;
    std::vector<std::pair<std::string, int>> strata; // (label, dimension)
    std::string zero_rule; // why the remaining strata contribute 0
};

/// Singular members of the anticanonical system pulled back to the K3
/// double cover of a cubic surface: a,b surfaces, c..h curves, i..s points.
inline LedgerSchema cubic_schema() {
    LedgerSchema s{"cubic", {}, "positive-dimensional Prym strata have chi 0; only 0-dimensional strata of the fiber count"};
    for (char c = 'a'; c <= 's'; ++c) {
        int dim = c <= 'b' ? 2 : c <= 'h' ? 1 : 0;
        s.strata.emplace_back(std::string(1, c), dim);
    }
    return s;
}

/// Degree-2 del Pezzo analogue: only the three contributing point strata
/// are recorded (tritangent-type, bitangent-nodal, pairs of lines).
inline LedgerSchema dp2_schema() {
    return {"dp2", {{"k2", 0}, {"o2", 0}, {"s2", 0}}, "only the contributing point strata are listed"};
}

struct Ledger {
    LedgerSchema schema;
    LedgerMode mode = LedgerMode::paper;
    std::vector<StratumEntry> entries;

    const StratumEntry& at(const std::string& label) const {
        for (const auto& e : entries)
            if (e.label == label)
                return e;
        throw incomplete_ledger("ledger '" + schema.name + "' has no entry '" + label + "'");
    }

    /// Every schema label exactly once, no foreign labels, dimensions match.
    void validate() const {
        std::map<std::string, int> seen;
        for (const auto& e : entries) {
            if (e.dimension < 0 || e.dimension > 2)
                throw incomplete_ledger("entry '" + e.label + "' has dimension outside 0..2");
            if (++seen[e.label] > 1)
                throw incomplete_ledger("entry '" + e.label + "' appears twice");
        }
        for (const auto& [label, dim] : schema.strata) {
            auto it = seen.find(label);
            if (it == seen.end())
                throw incomplete_ledger("ledger '" + schema.name + "' is missing stratum '" + label + "'");
            if (at(label).dimension != dim)
                throw incomplete_ledger("stratum '" + label + "' has dimension " + std::to_string(at(label).dimension) +
                                        ", expected " + std::to_string(dim));
        }
        if (seen.size() != schema.strata.size())
            throw incomplete_ledger("ledger '" + schema.name + "' has labels outside its schema");
    }
};

inline Integer total_chi(const Ledger& ledger) {
    ledger.validate();
    Integer t = 0;
    for (const auto& e : ledger.entries) {
        auto c = e.contribution();
        if (!c)
            throw incomplete_ledger("stratum '" + e.label + "' has nonzero fiber chi but no base chi");
        t += *c;
    }
    return t;
}

// ------------------------------------------------------------ derivations

/// Every number the derivations need, each computed by another module.
struct DerivationContext {
    Integer dual_cubic_degree;     // deg Y*, singular fibers of a pencil of plane sections
    Integer dual_branch_degree;    // deg B*, branch of the projection B -> P^1 (6:1)
    Integer bitangents;            // b of the projected sextic, from the Plücker pair
    Integer flexes;                // f of the same
    Integer tangent_branch_points; // branch of D -> B (4:1), via the B x B chain
    Integer canonical_degree_D;
    Integer genus_D;
    Integer odd_thetas_g4;
    Integer odd_thetas_g3;
    Integer quartic_bitangents;
    Integer conic_tangency_branch; // branch of the 4:1 projection B -> P^1 from a line
    Integer lines;
    Integer tritangent_planes;
};

/// chi(P^2 blown up in n points) = 3 + n.
inline Integer blowup_points_euler(int n) { return 3 + Integer(n); }

/// genus of B = 4, canonical degree of B = 6, plane projection: sextic with 6 nodes.
inline DerivationContext default_context(int diag_f = 1) {
    DerivationContext c;
    // pencil of plane sections of Y through a line, base points blown up: Bl_9 P^2
    c.dual_cubic_degree = solve_unknown_count(blowup_points_euler(9), {}, 1, 0);
    c.dual_branch_degree = riemann_hurwitz_branch(4, 0, 6);
    const Integer d_star = pluecker_dual_degree(6, 6, 0);
    const auto bf = pluecker_solve_bf(6, d_star, 4);
    c.bitangents = bf.b;
    c.flexes = bf.f;
    auto basis = product_curve_basis(4, diag_f);
    auto delta = DivisorClass::basis_element(basis, "Delta");
    auto D = bidegree_class(basis, 1, 2, 6) - 2 * delta;
    auto K = product_canonical_class(basis, 4);
    c.canonical_degree_D = intersect(K + D, D);
    c.genus_D = adjunction_genus(c.canonical_degree_D);
    c.tangent_branch_points = riemann_hurwitz_branch(c.genus_D, 4, 4);
    c.odd_thetas_g4 = theta_characteristics(4, ThetaParity::odd);
    c.odd_thetas_g3 = theta_characteristics(3, ThetaParity::odd);
    c.quartic_bitangents = pluecker_solve_bf(4, pluecker_dual_degree(4, 0, 0), 3).b;
    c.conic_tangency_branch = riemann_hurwitz_branch(4, 0, 4);
    auto conf = build_configuration();
    c.lines = conf.size();
    c.tritangent_planes = tritangent_triples(conf).size();
    return c;
}

/// o) = deg c) * deg Y* - 2 * p), with deg c) the bitangent count.
inline Integer nodal_bitangent_count(const Integer& bitangents, const Integer& dual_cubic_degree,
                                     const Integer& tangent_branch_points) {
    return bitangents * dual_cubic_degree - 2 * tangent_branch_points;
}

struct DerivedEntry {
    Integer chi_base;
    Integer chi_fiber;
    Provenance base_provenance;
    Provenance fiber_provenance;
    std::string recipe;
    std::string upstream;
};

namespace detail {

inline const std::map<std::string, Integer>& paper_fibers() {
    static const std::map<std::string, Integer> m{{"k", 2}, {"n", 3}, {"o", 1}, {"s", 1},
                                                  {"k2", 2}, {"o2", 1}, {"s2", 1}};
    return m;
}

inline const std::map<std::string, Integer>& paper_bases() {
    static const std::map<std::string, Integer> m{{"k", 120}, {"n", 378}, {"o", 864}, {"s", 45},
                                                  {"k2", 28}, {"o2", 128}, {"s2", 28}};
    return m;
}

} // namespace detail

/// Base chi recomputed from the other modules; fiber chi stays the stated
/// value. Labels without a recipe throw in strict mode and fall back to the
/// stated numbers otherwise.
inline DerivedEntry derive_entry(const std::string& label, const DerivationContext& c, bool strict = true) {
    auto fiber = [&] {
        auto it = detail::paper_fibers().find(label);
        return it == detail::paper_fibers().end() ? Integer(0) : it->second;
    };
    const Integer f = fiber();
    if (label == "k")
        return {c.odd_thetas_g4, f, Provenance::derived, Provenance::paper, "theta_characteristics(4, odd)",
                "theta_characteristics"};
    if (label == "n")
        return {c.conic_tangency_branch * c.lines, f, Provenance::derived, Provenance::paper,
                "riemann_hurwitz_branch(4, 0, 4) * 27", "riemann_hurwitz_branch"};
    if (label == "o")
        return {nodal_bitangent_count(c.bitangents, c.dual_cubic_degree, c.tangent_branch_points), f,
                Provenance::derived, Provenance::paper,
                "b * deg(Y*) - 2 * RH(g(D), 4, 4), b from pluecker_solve_bf(6, 18, 4)", "pluecker_solve_bf b-value"};
    if (label == "s")
        return {c.tritangent_planes, f, Provenance::derived, Provenance::paper, "tritangent_triples count",
                "tritangent_triples"};
    if (label == "k2")
        return {c.odd_thetas_g3, f, Provenance::derived, Provenance::paper, "theta_characteristics(3, odd)",
                "theta_characteristics"};
    if (label == "s2")
        return {c.quartic_bitangents, f, Provenance::derived, Provenance::paper, "pluecker_solve_bf(4, 12, 3).b",
                "pluecker_solve_bf"};
    if (strict)
        throw underivable_entry("stratum '" + label + "' has no derivation recipe");
    auto it = detail::paper_bases().find(label);
    if (it == detail::paper_bases().end())
        throw underivable_entry("stratum '" + label + "' has neither a recipe nor a stated value");
    return {it->second, f, Provenance::paper, Provenance::paper, "", ""};
}

namespace detail {

inline Ledger build_ledger(const LedgerSchema& schema, LedgerMode mode, const DerivationContext* ctx) {
    Ledger L{schema, mode, {}};
    for (const auto& [label, dim] : schema.strata) {
        StratumEntry e;
        e.label = label;
        e.dimension = dim;
        auto base = paper_bases().find(label);
        if (base == paper_bases().end()) {
            e.chi_fiber = 0;
            e.fiber_provenance = Provenance::paper;
            e.recipe = schema.zero_rule;
        } else if (mode == LedgerMode::paper || !ctx) {
            e.chi_base = base->second;
            e.chi_fiber = paper_fibers().at(label);
        } else {
            auto d = derive_entry(label, *ctx, false);
            e.chi_base = d.chi_base;
            e.chi_fiber = d.chi_fiber;
            e.base_provenance = d.base_provenance;
            e.fiber_provenance = d.fiber_provenance;
            e.recipe = d.recipe;
            e.upstream = d.upstream;
        }
        L.entries.push_back(std::move(e));
    }
    return L;
}

} // namespace detail

inline Ledger paper_cubic_ledger() { return detail::build_ledger(cubic_schema(), LedgerMode::paper, nullptr); }
inline Ledger paper_dp2_ledger() { return detail::build_ledger(dp2_schema(), LedgerMode::paper, nullptr); }

inline Ledger derived_cubic_ledger(const DerivationContext& c) {
    return detail::build_ledger(cubic_schema(), LedgerMode::derived, &c);
}
inline Ledger derived_dp2_ledger(const DerivationContext& c) {
    return detail::build_ledger(dp2_schema(), LedgerMode::derived, &c);
}

struct Discrepancy {
    std::string label;
    std::string field; // chi_base or chi_fiber
    std::optional<Integer> paper_value, derived_value;
    std::string upstream_cause;
};

/// Every entry whose base or fiber chi differs between the two ledgers.
inline std::vector<Discrepancy> discrepancy_report(const Ledger& paper, const Ledger& derived) {
    paper.validate();
    derived.validate();
    std::vector<Discrepancy> out;
    for (const auto& p : paper.entries) {
        const auto& d = derived.at(p.label);
        if (p.chi_base != d.chi_base)
            out.push_back({p.label, "chi_base", p.chi_base, d.chi_base, d.upstream});
        if (p.chi_fiber != d.chi_fiber)
            out.push_back({p.label, "chi_fiber", p.chi_fiber, d.chi_fiber, d.upstream});
    }
    return out;
}

// ------------------------------------------------------------ fiber checks

/// Solutions of 2p = q in the 4-torsion (Z/4)^2 of an elliptic curve, q a
/// 2-torsion point given in 4-torsion coordinates.
inline int count_half_points(int q1, int q2) {
    if ((2 * q1) % 4 != 0 || (2 * q2) % 4 != 0)
        throw inconsistent_input("q must be 2-torsion");
    int n = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if ((2 * a - q1) % 4 == 0 && (2 * b - q2) % 4 == 0)
                ++n;
    return n;
}

/// Classes of {-r..r} under d ~ -d.
inline int sign_classes(int r) {
    std::set<int> classes;
    for (int d = -r; d <= r; ++d)
        classes.insert(std::abs(d));
    return static_cast<int>(classes.size());
}

struct FiberPointChecks {
    int half_points_nonzero_q; // 2p = q, q != 0
    int half_points_zero_q;    // 2p = 0
    int s_equivalence_classes; // d in {0, +-1, +-2} modulo d ~ -d
};

inline FiberPointChecks fiber_point_checks() { return {count_half_points(2, 0), count_half_points(0, 0), sign_classes(2)}; }

/// deg Y* + deg B*.
inline Integer discriminant_degree(const DerivationContext& c) { return c.dual_cubic_degree + c.dual_branch_degree; }

} // namespace prymcheck
