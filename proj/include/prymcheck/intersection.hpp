#pragma once

// Divisor classes over a fixed basis with a symmetric intersection pairing.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace prymcheck {

class ClassBasis {
public:
    ClassBasis(std::vector<std::string> labels, std::vector<std::vector<Integer>> pairing)
        : labels_(std::move(labels)), pairing_(std::move(pairing)) {
        const std::size_t n = labels_.size();
        if (pairing_.size() != n)
            throw dimension_mismatch("pairing size differs from label count");
        for (std::size_t i = 0; i < n; ++i) {
            if (pairing_[i].size() != n)
                throw dimension_mismatch("pairing is not square");
            for (std::size_t j = 0; j < i; ++j)
                if (pairing_[i][j] != pairing_[j][i])
                    throw inconsistent_input("pairing is not symmetric");
        }
    }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Integer& pairing(std::size_t i, std::size_t j) const { return pairing_.at(i).at(j); }

    std::size_t index(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label)
                return i;
        throw inconsistent_input("unknown class label '" + label + "'");
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Integer>> pairing_;
};

class DivisorClass {
public:
    DivisorClass(std::shared_ptr<const ClassBasis> basis, std::vector<Integer> coeffs)
        : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
        if (!basis_)
            throw inconsistent_input("divisor class needs a basis");
        if (coeffs_.size() != basis_->size())
            throw dimension_mismatch("coefficient count differs from basis size");
    }

    static DivisorClass zero(std::shared_ptr<const ClassBasis> basis) {
        const std::size_t n = basis->size();
        return {std::move(basis), std::vector<Integer>(n)};
    }

    static DivisorClass basis_element(std::shared_ptr<const ClassBasis> basis, const std::string& label) {
        auto c = zero(basis);
        c.coeffs_[basis->index(label)] = 1;
        return c;
    }

    const ClassBasis& basis() const noexcept { return *basis_; }
    const std::shared_ptr<const ClassBasis>& basis_ptr() const noexcept { return basis_; }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        a.same_basis(b);
        auto r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-1) * b; }
    friend DivisorClass operator*(const Integer& k, const DivisorClass& a) {
        auto r = a;
        for (auto& c : r.coeffs_)
            c *= k;
        return r;
    }
    friend DivisorClass operator*(int k, const DivisorClass& a) { return Integer(k) * a; }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Integer& c = coeffs_[i];
            if (c == 0)
                continue;
            if (!out.empty())
                out += c < 0 ? " - " : " + ";
            else if (c < 0)
                out += "-";
            Integer a = c < 0 ? Integer(-c) : c;
            if (a != 1)
                out += a.str() + "*";
            out += basis_->labels()[i];
        }
        return out.empty() ? "0" : out;
    }

    void same_basis(const DivisorClass& o) const {
        if (basis_ != o.basis_)
            throw dimension_mismatch("divisor classes live over different bases");
    }

private:
    std::shared_ptr<const ClassBasis> basis_;
    std::vector<Integer> coeffs_;
};

inline Integer intersect(const DivisorClass& a, const DivisorClass& b) {
    a.same_basis(b);
    Integer s = 0;
    const auto& B = a.basis();
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j)
            s += a[i] * B.pairing(i, j) * b[j];
    return s;
}

/// 2g - 2 = deg K.
inline Integer adjunction_genus(const Integer& canonical_degree) {
    if (canonical_degree % 2 != 0)
        throw inconsistent_input("canonical degree must be even, got " + canonical_degree.str());
    return (canonical_degree + 2) / 2;
}

/// Basis {f1, f2, Delta} on C x C for a curve of the given genus. f_i are the
/// fibers of the two projections; diag_f is Delta.f_i (1 for the diagonal).
inline std::shared_ptr<const ClassBasis> product_curve_basis(int genus, int diag_f = 1) {
    const Integer self = 2 - 2 * Integer(genus);
    return std::make_shared<const ClassBasis>(
        std::vector<std::string>{"f1", "f2", "Delta"},
        std::vector<std::vector<Integer>>{{0, 1, diag_f}, {1, 0, diag_f}, {diag_f, diag_f, self}});
}

/// Restriction of a bidegree-(p, q) form to C x C, deg of the hyperplane
/// class on C equal to h: q h f1 + p h f2.
inline DivisorClass bidegree_class(const std::shared_ptr<const ClassBasis>& basis, int p, int q, int h) {
    if (p < 0 || q < 0 || h < 0)
        throw inconsistent_input("bidegree inputs must be non-negative");
    return Integer(q * h) * DivisorClass::basis_element(basis, "f1") +
           Integer(p * h) * DivisorClass::basis_element(basis, "f2");
}

/// K_{C x C} = (2g - 2)(f1 + f2).
inline DivisorClass product_canonical_class(const std::shared_ptr<const ClassBasis>& basis, int genus) {
    const int k = 2 * genus - 2;
    return k * (DivisorClass::basis_element(basis, "f1") + DivisorClass::basis_element(basis, "f2"));
}

} // namespace prymcheck
