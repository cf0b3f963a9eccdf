#pragma once

// Exact arithmetic, exponent-vector monomials and integer kernels.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace prymcheck {

// Expression templates off: values behave like plain integers in ?:, auto
// and string conversions.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

/// Element of N^n. Exponents are kept as plain ints: degrees in this toolkit
/// stay tiny, only derived counts need big integers.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) { check(); }
    Monomial(std::initializer_list<int> exps) : exps_(exps) { check(); }

    static Monomial unit(std::size_t n, std::size_t i) {
        Monomial m(n);
        m.exps_.at(i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    std::span<const int> exponents() const noexcept { return exps_; }

    int degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_one() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    /// True iff this divides `other` (componentwise <=).
    bool divides(const Monomial& other) const {
        same_dim(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i])
                return false;
        return true;
    }

    /// other / *this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& other) const {
        same_dim(other);
        Monomial q(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            q.exps_[i] = other.exps_[i] - exps_[i];
            if (q.exps_[i] < 0)
                throw inconsistent_input("monomial quotient: not divisible");
        }
        return q;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.same_dim(b);
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r.exps_[i] = a.exps_[i] + b.exps_[i];
        return r;
    }

    Monomial& operator*=(const Monomial& b) { return *this = *this * b; }

    Monomial pow(int k) const {
        Monomial r(size());
        for (std::size_t i = 0; i < size(); ++i)
            r.exps_[i] = exps_[i] * k;
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic order: total degree first, then the first
    /// differing exponent (larger exponent on an earlier variable is larger).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0)
            return c;
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
            if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0)
                return c;
        return a.size() <=> b.size();
    }

    std::string str(std::span<const std::string> names = {}) const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0)
                continue;
            if (!out.empty())
                out += '*';
            out += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (exps_[i] > 1)
                out += '^' + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

private:
    void check() const {
        for (int e : exps_)
            if (e < 0)
                throw inconsistent_input("monomial exponents must be non-negative");
    }
    void same_dim(const Monomial& o) const {
        if (o.size() != size())
            throw dimension_mismatch("monomial dimension mismatch: " + std::to_string(size()) +
                                     " vs " + std::to_string(o.size()));
    }

    std::vector<int> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int e : m.exponents())
            h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
        return h;
    }
};

inline Monomial monomial_multiply(const Monomial& a, const Monomial& b) { return a * b; }

/// Dense exact integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw dimension_mismatch("IntegerMatrix: ragged rows");
            for (long long v : r)
                a_.emplace_back(v);
        }
    }

    template <class Row>
    static IntegerMatrix from_rows(const std::vector<Row>& rows, std::size_t cols) {
        IntegerMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw dimension_mismatch("IntegerMatrix: ragged rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = Integer(rows[i][j]);
        }
        return m;
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Integer> apply(std::span<const Integer> v) const {
        if (v.size() != cols_)
            throw dimension_mismatch("matrix-vector product: length mismatch");
        std::vector<Integer> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

namespace detail {

// Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0.
inline std::tuple<Integer, Integer, Integer> xgcd(Integer a, Integer b) {
    Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Integer q = a / b;
        Integer r = a - q * b;
        a = b;
        b = r;
        Integer s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

} // namespace detail

/// Z-basis of {v in Z^n : M v = 0}.
///
/// Column-style Hermite elimination: M is reduced by unimodular column
/// operations, mirrored on an n x n identity U, until it is in column echelon
/// form; the columns of U whose image column in M vanished span the kernel.
inline std::vector<std::vector<Integer>> integer_kernel(const IntegerMatrix& M) {
    const std::size_t r = M.rows(), n = M.cols();
    IntegerMatrix A = M;
    IntegerMatrix U = IntegerMatrix::identity(n);

    auto col_combine = [&](std::size_t p, std::size_t q, const Integer& a, const Integer& b,
                           const Integer& c, const Integer& d) {
        // (col_p, col_q) <- (a col_p + b col_q, c col_p + d col_q), ad - bc = +-1
        for (IntegerMatrix* X : {&A, &U}) {
            for (std::size_t i = 0; i < X->rows(); ++i) {
                Integer xp = (*X)(i, p), xq = (*X)(i, q);
                (*X)(i, p) = a * xp + b * xq;
                (*X)(i, q) = c * xp + d * xq;
            }
        }
    };

    std::size_t pivot_col = 0;
    for (std::size_t row = 0; row < r && pivot_col < n; ++row) {
        for (std::size_t j = pivot_col + 1; j < n; ++j) {
            if (A(row, j) == 0)
                continue;
            Integer x = A(row, pivot_col), y = A(row, j);
            auto [g, s, t] = detail::xgcd(x, y);
            // new pivot = s x + t y = g ; new col j = (-y/g) x + (x/g) y = 0
            col_combine(pivot_col, j, s, t, -y / g, x / g);
        }
        if (A(row, pivot_col) != 0)
            ++pivot_col;
    }

    std::vector<std::vector<Integer>> basis;
    for (std::size_t j = pivot_col; j < n; ++j) {
        std::vector<Integer> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = U(i, j);
        // sign normalization: first nonzero entry positive
        auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
        if (it != v.end() && *it < 0)
            for (auto& x : v)
                x = -x;
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t integer_rank(const IntegerMatrix& M) { return M.cols() - integer_kernel(M).size(); }

inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

} // namespace prymcheck
