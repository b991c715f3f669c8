#pragma once

// Dense polynomials over Rational in the indeterminates x and lambda.
//
// UniPoly carries one tagged indeterminate; BiPoly is a dense matrix indexed
// by (degree in x, degree in lambda). Both trim trailing zeros at
// construction, so equality is structural.

#include "specnum/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specnum {

enum class Var { x, lambda };

inline std::string_view to_string(Var v) { return v == Var::x ? "x" : "lambda"; }

inline Var parse_var(std::string_view name) {
    if (name == "x") return Var::x;
    if (name == "lambda" || name == "λ") return Var::lambda;
    throw std::invalid_argument("unknown indeterminate '" + std::string(name) + "'");
}

inline Var other(Var v) { return v == Var::x ? Var::lambda : Var::x; }

class UniPoly {
public:
    explicit UniPoly(Var var = Var::x) : var_(var) {}
    UniPoly(Var var, std::vector<Rational> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }
    UniPoly(Var var, std::initializer_list<Rational> coeffs) : var_(var), c_(coeffs) { trim(); }

    static UniPoly constant(Var var, const Rational& c) { return UniPoly(var, {c}); }
    static UniPoly monomial(Var var, const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return UniPoly(var, std::move(v));
    }
    static UniPoly indeterminate(Var var) { return monomial(var, 1, 1); }

    Var var() const { return var_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::span<const Rational> coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational eval(const Rational& v) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    /// p(q(var)); q must use the same indeterminate unless it is constant.
    UniPoly compose(const UniPoly& q) const {
        UniPoly acc(result_var(q));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(acc.var_, *it);
        return acc;
    }

    UniPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(k));
        return UniPoly(var_, std::move(d));
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        var_ = result_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    UniPoly& operator*=(const Rational& s) {
        if (s.is_zero()) c_.clear();
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.result_var(b));
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Constants compare equal regardless of tag; otherwise the tag is part of the value.
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_ != b.c_) return false;
        return a.is_constant() || a.var_ == b.var_;
    }

private:
    Var result_var(const UniPoly& o) const {
        if (o.is_constant()) return var_;
        if (is_constant()) return o.var_;
        if (var_ != o.var_) throw std::invalid_argument("UniPoly: indeterminate mismatch");
        return var_;
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Var var_;
    std::vector<Rational> c_;
};

inline UniPoly pow(const UniPoly& base, unsigned e) {
    UniPoly r = UniPoly::constant(base.var(), 1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const Rational& c) : BiPoly(std::vector<std::vector<Rational>>{{c}}) {}  // NOLINT
    BiPoly(const UniPoly& p) {                                                        // NOLINT
        const auto cs = p.coeffs();
        if (p.var() == Var::x) {
            resize(cs.size(), cs.empty() ? 0 : 1);
            for (std::size_t i = 0; i < cs.size(); ++i) at(i, 0) = cs[i];
        } else {
            resize(cs.empty() ? 0 : 1, cs.size());
            for (std::size_t j = 0; j < cs.size(); ++j) at(0, j) = cs[j];
        }
        trim();
    }
    /// rows[i][j] is the coefficient of x^i lambda^j; ragged rows are zero-padded.
    explicit BiPoly(const std::vector<std::vector<Rational>>& rows) {
        std::size_t cols = 0;
        for (const auto& r : rows) cols = std::max(cols, r.size());
        resize(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) at(i, j) = rows[i][j];
        trim();
    }

    static BiPoly x() { return BiPoly(UniPoly::indeterminate(Var::x)); }
    static BiPoly lambda() { return BiPoly(UniPoly::indeterminate(Var::lambda)); }

    bool is_zero() const { return data_.empty(); }
    int deg_x() const { return static_cast<int>(rows_) - 1; }
    int deg_lambda() const { return static_cast<int>(cols_) - 1; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational coeff(std::size_t i, std::size_t j) const {
        return (i < rows_ && j < cols_) ? data_[i * cols_ + j] : Rational(0);
    }

    /// Coefficient of x^i, as a polynomial in lambda.
    UniPoly x_coefficient(std::size_t i) const {
        std::vector<Rational> v;
        for (std::size_t j = 0; i < rows_ && j < cols_; ++j) v.push_back(at(i, j));
        return UniPoly(Var::lambda, std::move(v));
    }
    /// Coefficient of lambda^j, as a polynomial in x.
    UniPoly lambda_coefficient(std::size_t j) const {
        std::vector<Rational> v;
        for (std::size_t i = 0; j < cols_ && i < rows_; ++i) v.push_back(at(i, j));
        return UniPoly(Var::x, std::move(v));
    }

    /// Exact substitution of a rational for one indeterminate.
    UniPoly substitute(Var which, const Rational& value) const {
        if (which == Var::x) {
            UniPoly acc(Var::lambda);
            for (std::size_t i = rows_; i-- > 0;) acc = acc * UniPoly::constant(Var::lambda, value) + x_coefficient(i);
            return acc;
        }
        UniPoly acc(Var::x);
        for (std::size_t j = cols_; j-- > 0;) acc = acc * UniPoly::constant(Var::x, value) + lambda_coefficient(j);
        return acc;
    }

    /// Substitutes a polynomial (in either indeterminate) for one indeterminate.
    BiPoly substitute(Var which, const UniPoly& value) const {
        const BiPoly v(value);
        BiPoly acc;
        if (which == Var::x) {
            for (std::size_t i = rows_; i-- > 0;) acc = acc * v + BiPoly(x_coefficient(i));
        } else {
            for (std::size_t j = cols_; j-- > 0;) acc = acc * v + BiPoly(lambda_coefficient(j));
        }
        return acc;
    }

    /// Returns the value as a UniPoly when it involves at most one indeterminate.
    UniPoly to_unipoly(Var preferred = Var::x) const {
        if (rows_ <= 1 && cols_ <= 1) return UniPoly::constant(preferred, coeff(0, 0));
        if (cols_ <= 1) return lambda_coefficient(0);
        if (rows_ <= 1) return x_coefficient(0);
        throw std::invalid_argument("BiPoly: value depends on both x and lambda");
    }

    /// Derivative with respect to x.
    BiPoly derivative_x() const {
        std::vector<std::vector<Rational>> m;
        for (std::size_t i = 1; i < rows_; ++i) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < cols_; ++j) row.push_back(at(i, j) * Rational(i));
            m.push_back(std::move(row));
        }
        return BiPoly(m);
    }

    std::vector<std::vector<Rational>> matrix() const {
        std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
        return m;
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& c : r.data_) c = -c;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        if (o.is_zero()) return *this;
        if (o.rows_ > rows_ || o.cols_ > cols_) grow(std::max(rows_, o.rows_), std::max(cols_, o.cols_));
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) at(i, j) += o.at(i, j);
        trim();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) { return *this += -o; }
    BiPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            *this = BiPoly();
            return *this;
        }
        for (auto& c : data_) c *= s;
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.resize(a.rows_ + b.rows_ - 1, a.cols_ + b.cols_ - 1);
        for (std::size_t i1 = 0; i1 < a.rows_; ++i1)
            for (std::size_t j1 = 0; j1 < a.cols_; ++j1) {
                const Rational& c = a.at(i1, j1);
                if (c.is_zero()) continue;
                for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
                    for (std::size_t j2 = 0; j2 < b.cols_; ++j2) r.at(i1 + i2, j1 + j2) += c * b.at(i2, j2);
            }
        r.trim();
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

private:
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void resize(std::size_t rows, std::size_t cols) {
        rows_ = rows;
        cols_ = cols;
        data_.assign(rows * cols, Rational(0));
    }
    void grow(std::size_t rows, std::size_t cols) {
        BiPoly g;
        g.resize(rows, cols);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) g.at(i, j) = at(i, j);
        *this = std::move(g);
    }
    void trim() {
        std::size_t rows = 0, cols = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) {
                    rows = std::max(rows, i + 1);
                    cols = std::max(cols, j + 1);
                }
        if (rows == rows_ && cols == cols_) return;
        if (rows == 0) {
            *this = BiPoly();
            return;
        }
        BiPoly t;
        t.resize(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(i, j) = at(i, j);
        *this = std::move(t);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// prod_{j<n} (base - j * scale * lambda); the empty product is 1.
inline BiPoly falling_factorial(const BiPoly& base, unsigned n, const Rational& scale = 1) {
    BiPoly r(Rational(1));
    for (unsigned j = 0; j < n; ++j) r *= base - BiPoly::lambda() * (scale * Rational(j));
    return r;
}

inline BiPoly falling_factorial(const Rational& base, unsigned n, const Rational& scale = 1) {
    return falling_factorial(BiPoly(base), n, scale);
}

/// Substitution into a UniPoly; the tag must match the polynomial's indeterminate.
inline Rational substitute(const UniPoly& p, Var which, const Rational& value) {
    if (!p.is_constant() && which != p.var())
        throw std::invalid_argument("substitute: polynomial does not track '" + std::string(to_string(which)) + "'");
    return p.eval(value);
}

inline UniPoly substitute(const BiPoly& p, Var which, const Rational& value) { return p.substitute(which, value); }

inline BiPoly substitute(const BiPoly& p, Var which, const UniPoly& value) { return p.substitute(which, value); }

/// Embeds a polynomial in lambda times a polynomial in x.
inline BiPoly product(const UniPoly& a, const UniPoly& b) { return BiPoly(a) * BiPoly(b); }

}  // namespace specnum
