#pragma once

// Invariant monomials of diagonal actions: Hilbert bases, binomial relations,
// fixed loci of coordinate involutions and presentation isomorphisms.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace prymcheck {

struct FiniteFactor {
    int modulus = 2;
    std::vector<int> weights;
};

/// (C*)^k x (finite abelian) acting diagonally on C^n.
struct DiagonalAction {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<int>> torus_weights; // k rows of length n
    std::vector<FiniteFactor> finite_factors;
    std::vector<std::string> variable_names; // optional, for labels

    void validate() const {
        for (const auto& row : torus_weights)
            if (row.size() != ambient_dim)
                throw dimension_mismatch("torus weight row has " + std::to_string(row.size()) +
                                         " entries, expected " + std::to_string(ambient_dim));
        for (const auto& f : finite_factors) {
            if (f.modulus < 2)
                throw inconsistent_input("finite factor modulus must be >= 2");
            if (f.weights.size() != ambient_dim)
                throw dimension_mismatch("finite weight row length mismatch");
        }
        if (!variable_names.empty() && variable_names.size() != ambient_dim)
            throw dimension_mismatch("variable_names length mismatch");
    }

    bool is_invariant(const Monomial& e) const {
        if (e.size() != ambient_dim)
            throw dimension_mismatch("monomial/action dimension mismatch");
        for (const auto& row : torus_weights) {
            long long s = 0;
            for (std::size_t i = 0; i < ambient_dim; ++i)
                s += static_cast<long long>(row[i]) * e[i];
            if (s != 0)
                return false;
        }
        for (const auto& f : finite_factors) {
            long long s = 0;
            for (std::size_t i = 0; i < ambient_dim; ++i)
                s += static_cast<long long>(f.weights[i]) * e[i];
            if (((s % f.modulus) + f.modulus) % f.modulus != 0)
                return false;
        }
        return true;
    }

    /// Krull dimension of the quotient: rank of the character lattice
    /// annihilated by the torus (finite factors do not change it).
    std::size_t quotient_dimension() const {
        if (torus_weights.empty())
            return ambient_dim;
        return integer_kernel(IntegerMatrix::from_rows(torus_weights, ambient_dim)).size();
    }
};

/// u = v between products of generators; exponent vectors index generators.
struct BinomialRelation {
    Monomial lhs;
    Monomial rhs;
    std::string family;
};

struct MonoidPresentation {
    std::size_t ambient_dim = 0;
    std::vector<Monomial> generators; // ambient exponent vectors
    std::vector<std::string> labels;
    std::vector<BinomialRelation> relations;

    std::size_t size() const noexcept { return generators.size(); }

    /// Ambient monomial of a product of generators.
    Monomial expand(const Monomial& word) const {
        if (word.size() != generators.size())
            throw dimension_mismatch("relation word length does not match generator count");
        Monomial out(ambient_dim);
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] != 0)
                out *= generators[i].pow(word[i]);
        return out;
    }

    bool relation_holds(const BinomialRelation& r) const { return expand(r.lhs) == expand(r.rhs); }

    std::string label(std::size_t i) const {
        return i < labels.size() ? labels[i] : "g" + std::to_string(i);
    }

    std::string word_str(const Monomial& w) const {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < size(); ++i)
            names.push_back(label(i));
        return w.str(names);
    }
};

// ---------------------------------------------------------------------------
// Enumeration

/// All invariant monomials of total degree in [1, max_degree], graded-lex sorted.
inline std::vector<Monomial> invariant_monomials(const DiagonalAction& action, int max_degree) {
    action.validate();
    std::vector<Monomial> out;
    if (action.ambient_dim == 0 || max_degree < 1)
        return out;
    const std::size_t n = action.ambient_dim;
    // Track weights incrementally to keep the inner loop cheap.
    const std::size_t k = action.torus_weights.size();
    const std::size_t f = action.finite_factors.size();
    std::vector<int> exps(n, 0);
    std::vector<long long> acc(k + f, 0);

    auto leafcheck = [&](const std::vector<long long>& s) {
        for (std::size_t i = 0; i < k; ++i)
            if (s[i] != 0)
                return false;
        for (std::size_t j = 0; j < f; ++j) {
            long long m = action.finite_factors[j].modulus;
            if (((s[k + j] % m) + m) % m != 0)
                return false;
        }
        return true;
    };
    auto weight = [&](std::size_t row, std::size_t var) -> long long {
        return row < k ? action.torus_weights[row][var] : action.finite_factors[row - k].weights[var];
    };

    // recursive lambda over variables
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var == n) {
            if (remaining < max_degree && leafcheck(acc))
                out.emplace_back(exps);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
            for (std::size_t r = 0; r < k + f; ++r)
                acc[r] += weight(r, var);
        }
        for (std::size_t r = 0; r < k + f; ++r)
            acc[r] -= weight(r, var) * (remaining + 1);
        exps[var] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Hilbert basis

struct HilbertBasisResult {
    std::vector<Monomial> generators;
    bool saturated = true;
    int certified_degree = 0; // every invariant of degree <= this factors
    std::optional<Monomial> witness; // irreducible invariant above the bound
};

/// Degree-bounded Hilbert basis with a saturation certificate at twice the
/// bound. Never throws on non-saturation; see invariant_generators.
inline HilbertBasisResult hilbert_basis(const DiagonalAction& action, int degree_bound) {
    if (degree_bound < 1)
        throw inconsistent_input("degree_bound must be >= 1");
    HilbertBasisResult res;
    res.certified_degree = 2 * degree_bound;
    for (const Monomial& m : invariant_monomials(action, 2 * degree_bound)) {
        bool reducible = std::any_of(res.generators.begin(), res.generators.end(),
                                     [&](const Monomial& g) { return g.divides(m); });
        if (reducible)
            continue;
        if (m.degree() > degree_bound) {
            res.saturated = false;
            res.witness = m;
            res.certified_degree = m.degree() - 1;
            break;
        }
        res.generators.push_back(m);
    }
    return res;
}

inline std::vector<std::string> monomial_labels(const DiagonalAction& action,
                                                const std::vector<Monomial>& gens) {
    std::vector<std::string> labels;
    labels.reserve(gens.size());
    for (const auto& g : gens)
        labels.push_back(g.str(action.variable_names));
    return labels;
}

/// Minimal generators of the monoid of invariant monomials.
/// Throws not_saturated when an irreducible invariant of degree in
/// (degree_bound, 2*degree_bound] exists.
inline MonoidPresentation invariant_generators(const DiagonalAction& action, int degree_bound = 8) {
    HilbertBasisResult hb = hilbert_basis(action, degree_bound);
    if (!hb.saturated)
        throw not_saturated("invariant ring not generated in degree <= " + std::to_string(degree_bound) +
                            ": irreducible invariant " + hb.witness->str(action.variable_names) +
                            " of degree " + std::to_string(hb.witness->degree()));
    MonoidPresentation p;
    p.ambient_dim = action.ambient_dim;
    p.generators = std::move(hb.generators);
    p.labels = monomial_labels(action, p.generators);
    return p;
}

// ---------------------------------------------------------------------------
// Factorizations and relations

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

inline void factor_rec(const std::vector<Monomial>& gens, const Monomial& rest, std::size_t start,
                       std::vector<int>& word, std::vector<Monomial>& out) {
    if (rest.is_one()) {
        out.emplace_back(word);
        return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
        if (!gens[i].divides(rest))
            continue;
        ++word[i];
        factor_rec(gens, gens[i].quotient_of(rest), i, word, out);
        --word[i];
    }
}

/// Generator-degree then lexicographic order on words (canonical representative choice).
inline bool word_less(const Monomial& a, const Monomial& b) { return a < b; }

} // namespace detail

/// Every way of writing `target` as a product of generators.
inline std::vector<Monomial> factorizations(const std::vector<Monomial>& gens, const Monomial& target) {
    std::vector<Monomial> out;
    std::vector<int> word(gens.size(), 0);
    if (target.is_one()) {
        out.emplace_back(word);
        return out;
    }
    detail::factor_rec(gens, target, 0, word, out);
    return out;
}

/// Largest generator-degree of the two sides.
inline int relation_degree(const BinomialRelation& r) { return std::max(r.lhs.degree(), r.rhs.degree()); }

inline std::map<int, int> relation_degree_profile(const std::vector<BinomialRelation>& rels) {
    std::map<int, int> prof;
    for (const auto& r : rels)
        ++prof[relation_degree(r)];
    return prof;
}

/// Minimal binomial relations among `gens.generators`, complete up to ambient
/// degree `degree_bound`.
///
/// Fibers of the monoid map are processed by ambient degree. Inside a fiber two
/// factorizations are already connected by lower-degree relations exactly when
/// they share a generator; one relation per extra connected component is
/// added, linking the component's smallest word to the fiber's smallest word.
inline MonoidPresentation toric_relations(const DiagonalAction& action, const MonoidPresentation& gens,
                                          int degree_bound = 8) {
    if (gens.ambient_dim != action.ambient_dim)
        throw dimension_mismatch("presentation and action live in different ambient spaces");
    for (const auto& g : gens.generators)
        if (!action.is_invariant(g))
            throw inconsistent_input("generator " + g.str(action.variable_names) + " is not invariant");
    MonoidPresentation out = gens;
    out.relations.clear();

    for (const Monomial& b : invariant_monomials(action, degree_bound)) {
        std::vector<Monomial> fiber = factorizations(gens.generators, b);
        if (fiber.size() < 2)
            continue;
        std::sort(fiber.begin(), fiber.end(), detail::word_less);
        detail::UnionFind uf(fiber.size());
        std::vector<std::optional<std::size_t>> first_with(gens.size());
        for (std::size_t w = 0; w < fiber.size(); ++w)
            for (std::size_t g = 0; g < gens.size(); ++g) {
                if (fiber[w][g] == 0)
                    continue;
                if (first_with[g])
                    uf.unite(*first_with[g], w);
                else
                    first_with[g] = w;
            }
        // uf roots are the smallest index of each component (unite keeps min)
        for (std::size_t w = 1; w < fiber.size(); ++w)
            if (uf.find(w) == w)
                out.relations.push_back({fiber[0], fiber[w], "degree-" + std::to_string(b.degree())});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Congruence closure

/// Is p ~ q in the congruence generated by `rels`? Breadth-first search over
/// single rewriting steps, ignoring words of generator-degree > degree_bound.
inline bool congruent(const std::vector<BinomialRelation>& rels, const Monomial& p, const Monomial& q,
                      int degree_bound) {
    if (p == q)
        return true;
    std::unordered_set<Monomial, MonomialHash> seen{p};
    std::deque<Monomial> queue{p};
    while (!queue.empty()) {
        Monomial cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& r : rels) {
            for (int dir = 0; dir < 2; ++dir) {
                const Monomial& from = dir ? r.rhs : r.lhs;
                const Monomial& to = dir ? r.lhs : r.rhs;
                if (!from.divides(cur))
                    continue;
                Monomial next = from.quotient_of(cur) * to;
                if (next.degree() > degree_bound)
                    continue;
                if (next == q)
                    return true;
                if (seen.insert(next).second)
                    queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

/// Relations whose removal does not change the generated congruence.
inline std::vector<std::size_t> redundant_relations(const std::vector<BinomialRelation>& rels,
                                                    int degree_bound) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        std::vector<BinomialRelation> others;
        for (std::size_t j = 0; j < rels.size(); ++j)
            if (j != i)
                others.push_back(rels[j]);
        if (congruent(others, rels[i].lhs, rels[i].rhs, degree_bound))
            out.push_back(i);
    }
    return out;
}

/// Size of a minimal generating subset of a family of relations that are
/// ambient identities: sum over fibers of (connected words - 1).
inline std::size_t spanning_relation_count(const MonoidPresentation& pres,
                                           const std::vector<BinomialRelation>& family) {
    std::map<Monomial, std::vector<const BinomialRelation*>> by_fiber;
    for (const auto& r : family) {
        if (!pres.relation_holds(r))
            throw inconsistent_input("relation " + pres.word_str(r.lhs) + " = " + pres.word_str(r.rhs) +
                                     " is not an ambient identity");
        by_fiber[pres.expand(r.lhs)].push_back(&r);
    }
    std::size_t total = 0;
    for (const auto& [b, rels] : by_fiber) {
        std::map<Monomial, std::size_t> idx;
        for (const auto* r : rels) {
            idx.emplace(r->lhs, idx.size());
            idx.emplace(r->rhs, idx.size());
        }
        detail::UnionFind uf(idx.size());
        for (const auto* r : rels)
            if (uf.unite(idx[r->lhs], idx[r->rhs]))
                ++total;
    }
    return total;
}

inline std::vector<BinomialRelation> family(const MonoidPresentation& p, const std::string& name) {
    std::vector<BinomialRelation> out;
    for (const auto& r : p.relations)
        if (r.family == name)
            out.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------
// Coordinate involutions and fixed loci

/// x_i -> sign[i] * x_{image[i]}.
struct CoordinateInvolution {
    std::vector<std::size_t> image;
    std::vector<int> signs; // empty = all +1

    static CoordinateInvolution identity(std::size_t n) {
        CoordinateInvolution c;
        c.image.resize(n);
        std::iota(c.image.begin(), c.image.end(), 0);
        return c;
    }

    int sign(std::size_t i) const { return signs.empty() ? 1 : signs[i]; }

    void validate(std::size_t n) const {
        if (image.size() != n)
            throw dimension_mismatch("involution acts on " + std::to_string(image.size()) +
                                     " variables, expected " + std::to_string(n));
        if (!signs.empty() && signs.size() != n)
            throw dimension_mismatch("involution sign vector length mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (image[i] >= n)
                throw inconsistent_input("involution image out of range");
            if (image[image[i]] != i)
                throw inconsistent_input("coordinate map is not an involution");
            if (sign(i) != 1 && sign(i) != -1)
                throw inconsistent_input("involution signs must be +-1");
            if (sign(i) * sign(image[i]) != 1)
                throw inconsistent_input("involution signs do not square to the identity");
        }
    }

    Monomial apply(const Monomial& m) const {
        std::vector<int> e(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            e[image[i]] += m[i];
        return Monomial(std::move(e));
    }
};

struct FixedLocusResult {
    MonoidPresentation presentation;
    /// source generator index -> generator index in `presentation`
    std::vector<std::size_t> generator_image;
};

/// Substitute the fixed-locus equations x_i = sign_i x_{image(i)} into the
/// generators and relations of `pres`, merging generators that coincide.
inline FixedLocusResult fixed_locus_presentation(const DiagonalAction& action, const MonoidPresentation& pres,
                                                 const CoordinateInvolution& inv) {
    const std::size_t n = action.ambient_dim;
    inv.validate(n);
    if (pres.ambient_dim != n)
        throw dimension_mismatch("presentation and action live in different ambient spaces");
    for (const auto& g : pres.generators)
        if (!action.is_invariant(inv.apply(g)))
            throw not_normalizing("involution maps generator " + g.str(action.variable_names) +
                                  " outside the invariant ring");

    // substitute: variables with image < index are rewritten
    auto substitute = [&](const Monomial& g) -> std::optional<std::pair<Monomial, int>> {
        std::vector<int> e(n, 0);
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i] == 0)
                continue;
            std::size_t j = inv.image[i];
            if (j == i) {
                if (inv.sign(i) == -1)
                    return std::nullopt; // x_i = -x_i forces x_i = 0
                e[i] += g[i];
            } else if (j < i) {
                e[j] += g[i];
                if (inv.sign(i) == -1 && g[i] % 2 == 1)
                    sign = -sign;
            } else {
                e[i] += g[i];
            }
        }
        return std::make_pair(Monomial(std::move(e)), sign);
    };

    FixedLocusResult res;
    MonoidPresentation& out = res.presentation;
    out.ambient_dim = n;
    constexpr std::size_t vanished = static_cast<std::size_t>(-1);
    std::vector<int> gen_sign;
    for (std::size_t i = 0; i < pres.size(); ++i) {
        auto s = substitute(pres.generators[i]);
        if (!s) {
            res.generator_image.push_back(vanished);
            continue;
        }
        auto it = std::find(out.generators.begin(), out.generators.end(), s->first);
        if (it == out.generators.end()) {
            res.generator_image.push_back(out.generators.size());
            out.generators.push_back(s->first);
            out.labels.push_back(pres.label(i));
            gen_sign.push_back(s->second);
        } else {
            std::size_t k = static_cast<std::size_t>(it - out.generators.begin());
            if (gen_sign[k] != s->second)
                throw unsupported_configuration("generators " + pres.label(i) + " and " + out.labels[k] +
                                                " coincide up to sign on the fixed locus");
            res.generator_image.push_back(k);
        }
    }

    auto map_word = [&](const Monomial& w) -> std::optional<std::pair<Monomial, int>> {
        std::vector<int> e(out.size(), 0);
        int sign = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0)
                continue;
            if (res.generator_image[i] == vanished)
                return std::nullopt;
            e[res.generator_image[i]] += w[i];
            if (gen_sign[res.generator_image[i]] == -1 && w[i] % 2 == 1)
                sign = -sign;
        }
        return std::make_pair(Monomial(std::move(e)), sign);
    };

    std::set<std::pair<Monomial, Monomial>> seen;
    for (const auto& r : pres.relations) {
        auto l = map_word(r.lhs), rr = map_word(r.rhs);
        if (!l && !rr)
            continue;
        if (!l || !rr)
            throw unsupported_configuration("relation degenerates to a monomial equation on the fixed locus");
        if (l->second != rr->second)
            throw unsupported_configuration("relation acquires a sign on the fixed locus");
        if (l->first == rr->first)
            continue;
        auto key = std::minmax(l->first, rr->first);
        if (!seen.insert(key).second)
            continue;
        out.relations.push_back({l->first, rr->first, r.family});
    }
    return res;
}

// ---------------------------------------------------------------------------
// Isomorphism of presentations

struct IsomorphismCertificate {
    bool isomorphic = false;
    std::string reason;
    /// relation (in the source presentation's words) that fails to map into
    /// the target congruence
    std::optional<BinomialRelation> counterexample;
    bool counterexample_in_first = true;
    std::size_t relations_checked = 0;

    explicit operator bool() const noexcept { return isomorphic; }
};

/// Does the generator bijection a -> b identify the congruences of a and b?
/// Checked in both directions by closure, up to generator-degree `degree_bound`.
inline IsomorphismCertificate presentations_isomorphic(const MonoidPresentation& a, const MonoidPresentation& b,
                                                       const std::vector<std::size_t>& generator_map,
                                                       int degree_bound = 12) {
    IsomorphismCertificate cert;
    if (a.size() != b.size()) {
        cert.reason = "generator counts differ (" + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")";
        return cert;
    }
    if (generator_map.size() != a.size()) {
        cert.reason = "generator map has wrong length";
        return cert;
    }
    std::vector<std::size_t> inverse(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (generator_map[i] >= b.size() || inverse[generator_map[i]] != a.size()) {
            cert.reason = "generator map is not a bijection";
            return cert;
        }
        inverse[generator_map[i]] = i;
    }
    auto push = [](const Monomial& w, const std::vector<std::size_t>& m) {
        std::vector<int> e(w.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i)
            e[m[i]] += w[i];
        return Monomial(std::move(e));
    };
    auto check = [&](const MonoidPresentation& from, const MonoidPresentation& to,
                     const std::vector<std::size_t>& m, bool first) {
        for (const auto& r : from.relations) {
            ++cert.relations_checked;
            if (!congruent(to.relations, push(r.lhs, m), push(r.rhs, m), degree_bound)) {
                cert.counterexample = r;
                cert.counterexample_in_first = first;
                cert.reason = "relation " + from.word_str(r.lhs) + " = " + from.word_str(r.rhs) +
                              " does not hold in the " + (first ? "second" : "first") + " presentation";
                return false;
            }
        }
        return true;
    };
    if (!check(a, b, generator_map, true) || !check(b, a, inverse, false))
        return cert;
    cert.isomorphic = true;
    cert.reason = "all " + std::to_string(cert.relations_checked) + " relations map into the other congruence";
    return cert;
}

/// Relations of `full` that the relations of `listed` do not imply, with
/// `generator_map` sending generators of `full` to those of `listed`.
inline std::vector<BinomialRelation> unimplied_relations(const MonoidPresentation& full,
                                                         const MonoidPresentation& listed,
                                                         const std::vector<std::size_t>& generator_map,
                                                         int degree_bound = 12) {
    if (generator_map.size() != full.size())
        throw dimension_mismatch("generator map has wrong length");
    auto push = [&](const Monomial& w) {
        std::vector<int> e(listed.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i)
            e.at(generator_map[i]) += w[i];
        return Monomial(std::move(e));
    };
    std::vector<BinomialRelation> out;
    for (const auto& r : full.relations)
        if (!congruent(listed.relations, push(r.lhs), push(r.rhs), degree_bound))
            out.push_back(r);
    return out;
}

/// Generator bijection induced by a variable map between ambient spaces:
/// generator i of a goes to the generator of b with the same monomial.
inline std::optional<std::vector<std::size_t>> dictionary_by_ambient(const MonoidPresentation& a,
                                                                     const MonoidPresentation& b,
                                                                     const std::vector<std::size_t>& var_map) {
    if (var_map.size() != a.ambient_dim)
        throw dimension_mismatch("variable map length mismatch");
    std::vector<std::size_t> out;
    for (const auto& g : a.generators) {
        std::vector<int> e(b.ambient_dim, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0)
                continue;
            if (var_map[i] >= b.ambient_dim)
                return std::nullopt;
            e[var_map[i]] += g[i];
        }
        auto it = std::find(b.generators.begin(), b.generators.end(), Monomial(e));
        if (it == b.generators.end())
            return std::nullopt;
        out.push_back(static_cast<std::size_t>(it - b.generators.begin()));
    }
    return out;
}

inline std::optional<std::vector<std::size_t>> dictionary_by_labels(const MonoidPresentation& a,
                                                                    const MonoidPresentation& b,
                                                                    const std::map<std::string, std::string>& names) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto n = names.find(a.label(i));
        if (n == names.end())
            return std::nullopt;
        auto it = std::find(b.labels.begin(), b.labels.end(), n->second);
        if (it == b.labels.end())
            return std::nullopt;
        out.push_back(static_cast<std::size_t>(it - b.labels.begin()));
    }
    return out;
}

} // namespace prymcheck
