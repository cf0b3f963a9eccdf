#pragma once

// Explicit tangent-cone models: actions, involutions, and presentations
// regenerated from their index schemes.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "invariants.hpp"

namespace prymcheck::cones {

namespace detail {

inline std::string bits(std::initializer_list<int> b) {
    std::string s;
    for (int x : b)
        s += static_cast<char>('0' + x);
    return s;
}

/// Builds a presentation from labelled ambient generators and adds equalities
/// by label, dropping trivial and repeated ones.
class Builder {
public:
    Builder(std::size_t ambient_dim) { p_.ambient_dim = ambient_dim; }

    void generator(const std::string& label, const Monomial& m) {
        index_[label] = p_.generators.size();
        p_.generators.push_back(m);
        p_.labels.push_back(label);
    }

    Monomial word(const std::vector<std::string>& labels) const {
        std::vector<int> e(p_.size(), 0);
        for (const auto& l : labels)
            ++e[index_.at(l)];
        return Monomial(std::move(e));
    }

    void equal(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs,
               const std::string& family) {
        Monomial l = word(lhs), r = word(rhs);
        if (l == r)
            return;
        auto key = std::minmax(l, r);
        if (!seen_.insert({key.first, key.second, family}).second)
            return;
        p_.relations.push_back({key.first, key.second, family});
    }

    /// a = b = c = ... as consecutive equalities.
    void chain(const std::vector<std::vector<std::string>>& terms, const std::string& family) {
        for (std::size_t i = 0; i + 1 < terms.size(); ++i)
            equal(terms[i], terms[i + 1], family);
    }

    MonoidPresentation take() { return std::move(p_); }

private:
    MonoidPresentation p_;
    std::map<std::string, std::size_t> index_;
    std::set<std::tuple<Monomial, Monomial, std::string>> seen_;
};

inline Monomial mono(std::size_t n, std::initializer_list<std::size_t> vars) {
    std::vector<int> e(n, 0);
    for (auto v : vars)
        ++e[v];
    return Monomial(std::move(e));
}

} // namespace detail

// ---------------------------------------------------------------------------
// C* acting with weight +1 on x_1..x_4 and -1 on the dual y_1..y_4.

inline DiagonalAction segre_action() {
    DiagonalAction a;
    a.ambient_dim = 8;
    a.torus_weights = {{1, 1, 1, 1, -1, -1, -1, -1}};
    a.variable_names = {"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"};
    return a;
}

/// Same action with two extra invariant coordinates z1, z2 in front.
inline DiagonalAction segre_action_with_moduli() {
    DiagonalAction a;
    a.ambient_dim = 10;
    a.torus_weights = {{0, 0, 1, 1, 1, 1, -1, -1, -1, -1}};
    a.variable_names = {"z1", "z2", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"};
    return a;
}

/// u_ij = x_i y_j with the 2x2-minor relations u_ij u_kl = u_kj u_il.
inline MonoidPresentation segre_cone() {
    detail::Builder b(8);
    auto u = [](int i, int j) { return "u_" + std::to_string(i) + std::to_string(j); };
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            b.generator(u(i, j), detail::mono(8, {std::size_t(i - 1), std::size_t(3 + j)}));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l)
                    b.equal({u(i, j), u(k, l)}, {u(k, j), u(i, l)}, "minors");
    return b.take();
}

/// (x, y) -> (y2, y1, y4, y3, x2, x1, x4, x3); fixed locus x1=y2, x2=y1, x3=y4, x4=y3.
inline CoordinateInvolution segre_involution() {
    CoordinateInvolution c;
    c.image = {5, 4, 7, 6, 1, 0, 3, 2};
    return c;
}

// ---------------------------------------------------------------------------
// -1 on C^4.

inline DiagonalAction sign_action(std::size_t n) {
    DiagonalAction a;
    a.ambient_dim = n;
    a.finite_factors = {{2, std::vector<int>(n, 1)}};
    for (std::size_t i = 1; i <= n; ++i)
        a.variable_names.push_back("w" + std::to_string(i));
    return a;
}

/// v_ij = w_i w_j (i <= j) with v_ij v_kl = v_kj v_il.
inline MonoidPresentation veronese_cone() {
    detail::Builder b(4);
    auto v = [](int i, int j) {
        if (i > j)
            std::swap(i, j);
        return "v_" + std::to_string(i) + std::to_string(j);
    };
    for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= 4; ++j)
            b.generator(v(i, j), detail::mono(4, {std::size_t(i - 1), std::size_t(j - 1)}));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l)
                    b.equal({v(i, j), v(k, l)}, {v(k, j), v(i, l)}, "veronese");
    return b.take();
}

// ---------------------------------------------------------------------------
// (C*)^2 on W_12 x W_13 x W_23 x duals, each W_ij = C^2.
//
// Variable order: x12^0 x12^1 x13^0 x13^1 x23^0 x23^1, then the y's likewise.
// Blocks are numbered 0 = "12", 1 = "13", 2 = "23".

inline constexpr std::array<const char*, 3> block_names{"12", "13", "23"};

inline std::size_t x_var(int block, int k) { return std::size_t(2 * block + k); }
inline std::size_t y_var(int block, int k) { return std::size_t(6 + 2 * block + k); }

inline DiagonalAction triple_action() {
    DiagonalAction a;
    a.ambient_dim = 12;
    //            x12     x13     x23     y12       y13       y23
    a.torus_weights = {{1, 1, 1, 1, 0, 0, -1, -1, -1, -1, 0, 0},
                       {0, 0, 1, 1, 1, 1, 0, 0, -1, -1, -1, -1}};
    for (const char* side : {"x", "y"})
        for (const char* blk : block_names)
            for (int k = 0; k < 2; ++k)
                a.variable_names.push_back(std::string(side) + blk + "^" + std::to_string(k));
    return a;
}

inline std::string u_label(int block, int k, int l) {
    return std::string("u_") + block_names[block] + "^" + detail::bits({k, l});
}
inline std::string v_label(int k, int l, int m) { return "v^" + detail::bits({k, l, m}); }
inline std::string w_label(int k, int l, int m) { return "w^" + detail::bits({k, l, m}); }

namespace detail {

inline void triple_generators(Builder& b) {
    for (int blk = 0; blk < 3; ++blk)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                b.generator(u_label(blk, k, l), mono(12, {x_var(blk, k), y_var(blk, l)}));
    // v^{klm} = x13^k y12^l y23^m ; w^{klm} = y13^k x12^l x23^m
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int m = 0; m < 2; ++m)
                b.generator(v_label(k, l, m), mono(12, {x_var(1, k), y_var(0, l), y_var(2, m)}));
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int m = 0; m < 2; ++m)
                b.generator(w_label(k, l, m), mono(12, {y_var(1, k), x_var(0, l), x_var(2, m)}));
}

template <class F>
void for_bits6(F f) {
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int m = 0; m < 2; ++m)
                for (int k2 = 0; k2 < 2; ++k2)
                    for (int l2 = 0; l2 < 2; ++l2)
                        for (int m2 = 0; m2 < 2; ++m2)
                            f(k, l, m, k2, l2, m2);
}

} // namespace detail

/// 12 quadratic u's, 16 cubic v/w's and the relation families "u" (u^00 u^11 =
/// u^01 u^10), "v", "w" (the chained Segre-cube quadrics) and "vwu"
/// (v w = u_13 u_12 u_23).
///
/// The cubic family is written so that each equation is an identity of
/// ambient monomials: v^{klm} w^{k'l'm'} = u_13^{kk'} u_12^{l'l} u_23^{m'm}.
inline MonoidPresentation triple_cone() {
    detail::Builder b(12);
    detail::triple_generators(b);
    for (int blk = 0; blk < 3; ++blk)
        b.equal({u_label(blk, 0, 0), u_label(blk, 1, 1)}, {u_label(blk, 0, 1), u_label(blk, 1, 0)}, "u");
    for (auto lab : {&v_label, &w_label}) {
        const std::string fam = lab == &v_label ? "v" : "w";
        detail::for_bits6([&](int k, int l, int m, int k2, int l2, int m2) {
            b.chain({{lab(k, l, m), lab(k2, l2, m2)},
                     {lab(k2, l, m), lab(k, l2, m2)},
                     {lab(k, l2, m), lab(k2, l, m2)},
                     {lab(k, l, m2), lab(k2, l2, m)}},
                    fam);
        });
    }
    detail::for_bits6([&](int k, int l, int m, int k2, int l2, int m2) {
        b.equal({v_label(k, l, m), w_label(k2, l2, m2)},
                {u_label(1, k, k2), u_label(0, l2, l), u_label(2, m2, m)}, "vwu");
    });
    return b.take();
}

/// The cubic family with the superscripts in the order u_12^{ll'} u_23^{mm'}.
/// Only the equations with l = l' and m = m' are ambient identities.
inline std::vector<BinomialRelation> triple_cubic_relations_unswapped(const MonoidPresentation& cone) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < cone.size(); ++i)
        idx[cone.label(i)] = i;
    std::vector<BinomialRelation> out;
    detail::for_bits6([&](int k, int l, int m, int k2, int l2, int m2) {
        std::vector<int> lhs(cone.size(), 0), rhs(cone.size(), 0);
        ++lhs[idx.at(v_label(k, l, m))];
        ++lhs[idx.at(w_label(k2, l2, m2))];
        ++rhs[idx.at(u_label(1, k, k2))];
        ++rhs[idx.at(u_label(0, l, l2))];
        ++rhs[idx.at(u_label(2, m, m2))];
        out.push_back({Monomial(lhs), Monomial(rhs), "vwu-unswapped"});
    });
    return out;
}

/// x_ij^k <-> y_ij^{1-k}; fixed locus y_ij^1 = x_ij^0, y_ij^0 = x_ij^1.
inline CoordinateInvolution triple_involution() {
    CoordinateInvolution c;
    c.image.resize(12);
    for (int blk = 0; blk < 3; ++blk)
        for (int k = 0; k < 2; ++k) {
            c.image[x_var(blk, k)] = y_var(blk, 1 - k);
            c.image[y_var(blk, 1 - k)] = x_var(blk, k);
        }
    return c;
}

// ---------------------------------------------------------------------------
// Z2 x Z2 on C^6 = <(1,1,-1,-1,-1,-1), (-1,-1,1,1,-1,-1)>.
// Variable order r_1^0 r_1^1 r_2^0 r_2^1 r_3^0 r_3^1.

inline const std::vector<std::vector<int>>& klein_sign_rows() {
    static const std::vector<std::vector<int>> rows{{1, 1, -1, -1, -1, -1}, {-1, -1, 1, 1, -1, -1}};
    return rows;
}

/// Diagonal action of a group generated by +-1 sign vectors, as mod-2 weights.
inline DiagonalAction sign_vector_action(const std::vector<std::vector<int>>& rows) {
    DiagonalAction a;
    a.ambient_dim = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        FiniteFactor f{2, {}};
        for (int s : r) {
            if (s != 1 && s != -1)
                throw inconsistent_input("sign vector entries must be +-1");
            f.weights.push_back(s == -1 ? 1 : 0);
        }
        a.finite_factors.push_back(std::move(f));
    }
    return a;
}

inline DiagonalAction klein_action() {
    DiagonalAction a = sign_vector_action(klein_sign_rows());
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < 2; ++j)
            a.variable_names.push_back("r_" + std::to_string(i) + "^" + std::to_string(j));
    return a;
}

inline std::string s_label(int i, int j, int k) {
    if (j > k)
        std::swap(j, k);
    return "s_" + std::to_string(i) + "^" + detail::bits({j, k});
}
inline std::string t_label(int i, int j, int k) { return "t^" + detail::bits({i, j, k}); }

/// s_i^{jk} = r_i^j r_i^k, t^{ijk} = r_1^i r_2^j r_3^k with the families
/// "s" ((s_i^01)^2 = s_i^00 s_i^11) and "t" (t t' = s_1 s_2 s_3).
inline MonoidPresentation klein_cone() {
    detail::Builder b(6);
    auto r = [](int i, int j) { return std::size_t(2 * (i - 1) + j); };
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = j; k < 2; ++k)
                b.generator(s_label(i, j, k), detail::mono(6, {r(i, j), r(i, k)}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                b.generator(t_label(i, j, k), detail::mono(6, {r(1, i), r(2, j), r(3, k)}));
    for (int i = 1; i <= 3; ++i)
        b.equal({s_label(i, 0, 1), s_label(i, 0, 1)}, {s_label(i, 0, 0), s_label(i, 1, 1)}, "s");
    detail::for_bits6([&](int i, int j, int k, int i2, int j2, int k2) {
        b.equal({t_label(i, j, k), t_label(i2, j2, k2)}, {s_label(1, i, i2), s_label(2, j, j2), s_label(3, k, k2)},
                "t");
    });
    return b.take();
}

/// u_13 -> s_1, u_12 -> s_2, u_23 -> s_3, v^{klm} -> t^{klm}.
///
/// On the fixed locus v^{klm} = x13^k x12^{1-l} x23^{1-m}, so r_1^k = x13^k,
/// r_2^l = x12^{1-l}, r_3^m = x23^{1-m}; hence u_13^{ab} -> s_1^{a,1-b} while
/// u_12^{ab} -> s_2^{1-a,b} and u_23^{ab} -> s_3^{1-a,b}.
inline std::map<std::string, std::string> triple_fixed_to_klein_names() {
    std::map<std::string, std::string> m;
    const std::array<int, 3> pair_of_block{2, 1, 3};
    for (int blk = 0; blk < 3; ++blk)
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c)
                m[u_label(blk, a, c)] = blk == 1 ? s_label(pair_of_block[blk], a, 1 - c)
                                                 : s_label(pair_of_block[blk], 1 - a, c);
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int n = 0; n < 2; ++n)
                m[v_label(k, l, n)] = t_label(k, l, n);
    return m;
}

} // namespace prymcheck::cones
