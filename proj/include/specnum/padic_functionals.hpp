#pragma once

// Bosonic (Volkenborn) and fermionic p-adic integrals on polynomial integrands.
//
// On polynomials both integrals are linear functionals fixed by their
// moments: y^k integrates to B_k against mu_1 and to E*_k against mu_{-1}.
// Integrands in several variables are integrated one variable at a time.

#include "specnum/families.hpp"
#include "specnum/polynomial.hpp"
#include "specnum/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specnum {

enum class Measure { bosonic, fermionic };

inline std::string_view to_string(Measure m) { return m == Measure::bosonic ? "bosonic" : "fermionic"; }

inline Measure parse_measure(std::string_view name) {
    if (name == "bosonic") return Measure::bosonic;
    if (name == "fermionic") return Measure::fermionic;
    throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

inline constexpr unsigned kMaxIntegrandDegree = 64;

/// Moments of mu_1 (B_k) or mu_{-1} (E*_k) for k <= kMaxIntegrandDegree.
inline const std::vector<Rational>& moments(Measure m) {
    static const std::vector<Rational> bernoulli = classical_bernoulli_numbers(kMaxIntegrandDegree);
    static const std::vector<Rational> euler = classical_euler_numbers(kMaxIntegrandDegree);
    return m == Measure::bosonic ? bernoulli : euler;
}

/// A polynomial in the integration variable y with coefficients in Q[x, lambda].
class PolyIntegrand {
public:
    PolyIntegrand() = default;
    explicit PolyIntegrand(std::vector<BiPoly> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static PolyIntegrand constant(const BiPoly& c) { return PolyIntegrand({c}); }
    static PolyIntegrand y() { return PolyIntegrand({BiPoly(), BiPoly(Rational(1))}); }
    /// y + c
    static PolyIntegrand y_plus(const BiPoly& c) { return PolyIntegrand({c, BiPoly(Rational(1))}); }
    static PolyIntegrand from_rationals(const std::vector<Rational>& coeffs) {
        std::vector<BiPoly> c;
        for (const auto& q : coeffs) c.emplace_back(q);
        return PolyIntegrand(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BiPoly>& coeffs() const { return c_; }
    BiPoly coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BiPoly(); }

    /// f(y0) for a fixed value of y.
    BiPoly at(const BiPoly& y0) const {
        BiPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y0 + *it;
        return acc;
    }

    /// f(shift + scale * y)
    PolyIntegrand affine(const BiPoly& shift, const Rational& scale) const {
        const PolyIntegrand inner({shift, BiPoly(scale)});
        PolyIntegrand acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }
    PolyIntegrand shifted(const BiPoly& by) const { return affine(by, Rational(1)); }

    /// d/dy
    PolyIntegrand derivative() const {
        std::vector<BiPoly> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(k));
        return PolyIntegrand(std::move(d));
    }

    PolyIntegrand operator-() const {
        PolyIntegrand r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend PolyIntegrand operator+(const PolyIntegrand& a, const PolyIntegrand& b) {
        std::vector<BiPoly> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
        return PolyIntegrand(std::move(c));
    }
    friend PolyIntegrand operator-(const PolyIntegrand& a, const PolyIntegrand& b) { return a + (-b); }
    friend PolyIntegrand operator*(const PolyIntegrand& a, const PolyIntegrand& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BiPoly> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return PolyIntegrand(std::move(c));
    }
    friend PolyIntegrand operator*(PolyIntegrand a, const Rational& s) {
        for (auto& c : a.c_) c *= s;
        a.normalize();
        return a;
    }

    friend bool operator==(const PolyIntegrand&, const PolyIntegrand&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (degree() > static_cast<int>(kMaxIntegrandDegree))
            throw std::length_error("integrand degree exceeds " + std::to_string(kMaxIntegrandDegree));
    }

    std::vector<BiPoly> c_;
};

inline PolyIntegrand pow(const PolyIntegrand& base, unsigned e) {
    PolyIntegrand r = PolyIntegrand::constant(BiPoly(Rational(1)));
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

/// Applies the moment rule y^k -> moment_k.
inline BiPoly integrate(const PolyIntegrand& f, Measure m) {
    const auto& mu = moments(m);
    BiPoly acc;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k)
        if (!mu[k].is_zero()) acc += f.coeffs()[k] * mu[k];
    return acc;
}

inline BiPoly bosonic_integral(const PolyIntegrand& f) { return integrate(f, Measure::bosonic); }
inline BiPoly fermionic_integral(const PolyIntegrand& f) { return integrate(f, Measure::fermionic); }

/// (x + y + 1/2)^n, or (y + 1/2)^n when x is not symbolic.
inline PolyIntegrand shifted_power_integrand(unsigned n, bool x_symbolic = true) {
    const BiPoly shift = (x_symbolic ? BiPoly::x() : BiPoly()) + BiPoly(Rational(1, 2));
    return pow(PolyIntegrand::y_plus(shift), n);
}

/// (x + y + 1/2)_{n,lambda}, or (y + 1/2)_{n,lambda} when x is not symbolic.
inline PolyIntegrand shifted_falling_integrand(unsigned n, bool x_symbolic = true) {
    const BiPoly shift = (x_symbolic ? BiPoly::x() : BiPoly()) + BiPoly(Rational(1, 2));
    PolyIntegrand r = PolyIntegrand::constant(BiPoly(Rational(1)));
    for (unsigned j = 0; j < n; ++j) r = r * PolyIntegrand::y_plus(shift - BiPoly::lambda() * Rational(j));
    return r;
}

/// Integral of (x + y + 1/2)_{n,lambda} in y.
inline BiPoly degenerate_witt(unsigned n, bool x_symbolic, Measure m) {
    return integrate(shifted_falling_integrand(n, x_symbolic), m);
}

// ---------------------------------------------------------------------------
// Several integration variables

/// Sparse polynomial in y_0..y_{r-1} with coefficients in Q[x, lambda].
class MultiIntegrand {
public:
    using Exponents = std::vector<unsigned>;

    explicit MultiIntegrand(unsigned variables) : vars_(variables) {}

    static MultiIntegrand constant(unsigned variables, const BiPoly& c) {
        MultiIntegrand m(variables);
        if (!c.is_zero()) m.terms_[Exponents(variables, 0)] = c;
        return m;
    }
    static MultiIntegrand variable(unsigned variables, unsigned index) {
        if (index >= variables) throw std::out_of_range("MultiIntegrand: variable index out of range");
        MultiIntegrand m(variables);
        Exponents e(variables, 0);
        e[index] = 1;
        m.terms_[e] = BiPoly(Rational(1));
        return m;
    }

    unsigned variables() const { return vars_; }
    const std::map<Exponents, BiPoly>& terms() const { return terms_; }

    friend MultiIntegrand operator+(MultiIntegrand a, const MultiIntegrand& b) {
        a.check(b);
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend MultiIntegrand operator*(const MultiIntegrand& a, const MultiIntegrand& b) {
        a.check(b);
        MultiIntegrand r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.vars_);
                for (unsigned i = 0; i < a.vars_; ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > kMaxIntegrandDegree)
                        throw std::length_error("integrand degree exceeds " + std::to_string(kMaxIntegrandDegree));
                }
                r.add_term(e, ca * cb);
            }
        return r;
    }

    /// Integrates out variable `index` against the given measure.
    MultiIntegrand eliminate(unsigned index, Measure m) const {
        if (index >= vars_) throw std::out_of_range("MultiIntegrand: variable index out of range");
        const auto& mu = moments(m);
        MultiIntegrand r(vars_ - 1);
        for (const auto& [e, c] : terms_) {
            const Rational& w = mu[e[index]];
            if (w.is_zero()) continue;
            Exponents rest(e);
            rest.erase(rest.begin() + index);
            r.add_term(rest, c * w);
        }
        return r;
    }

    /// The constant term, for an integrand with no variables left.
    BiPoly value() const {
        if (vars_ != 0) throw std::logic_error("MultiIntegrand: variables remain");
        const auto it = terms_.find(Exponents{});
        return it == terms_.end() ? BiPoly() : it->second;
    }

private:
    void check(const MultiIntegrand& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("MultiIntegrand: variable count mismatch");
    }
    void add_term(const Exponents& e, const BiPoly& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else if (c.is_zero()) {
            terms_.erase(it);
        }
    }

    unsigned vars_;
    std::map<Exponents, BiPoly> terms_;
};

/// Integrates every variable against the same measure. Without an explicit
/// order, the last variable is eliminated first.
inline BiPoly iterated_integral(const MultiIntegrand& f, Measure m,
                                std::optional<std::vector<unsigned>> elimination_order = std::nullopt) {
    const unsigned r = f.variables();
    std::vector<unsigned> order(r);
    if (elimination_order) {
        order = *elimination_order;
        std::vector<unsigned> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<unsigned> expected(r);
        std::iota(expected.begin(), expected.end(), 0u);
        if (sorted != expected) throw std::invalid_argument("iterated_integral: order must permute the variables");
    } else {
        for (unsigned i = 0; i < r; ++i) order[i] = r - 1 - i;
    }
    // Indices shift down as variables are removed.
    std::vector<unsigned> live(r);
    std::iota(live.begin(), live.end(), 0u);
    MultiIntegrand cur = f;
    for (unsigned v : order) {
        const auto pos = static_cast<unsigned>(std::find(live.begin(), live.end(), v) - live.begin());
        cur = cur.eliminate(pos, m);
        live.erase(live.begin() + pos);
    }
    return cur.value();
}

/// y_0 + ... + y_{r-1} + r/2
inline MultiIntegrand shifted_sum(unsigned r) {
    MultiIntegrand s = MultiIntegrand::constant(r, BiPoly(Rational(r, 2)));
    for (unsigned i = 0; i < r; ++i) s = s + MultiIntegrand::variable(r, i);
    return s;
}

/// (y_0 + ... + y_{r-1} + r/2)^n
inline MultiIntegrand shifted_sum_power(unsigned r, unsigned n) {
    const MultiIntegrand s = shifted_sum(r);
    MultiIntegrand p = MultiIntegrand::constant(r, BiPoly(Rational(1)));
    for (unsigned k = 0; k < n; ++k) p = p * s;
    return p;
}

/// (y_0 + ... + y_{r-1} + r/2)_{n,lambda}
inline MultiIntegrand shifted_sum_falling(unsigned r, unsigned n) {
    const MultiIntegrand s = shifted_sum(r);
    MultiIntegrand p = MultiIntegrand::constant(r, BiPoly(Rational(1)));
    for (unsigned j = 0; j < n; ++j) p = p * (s + MultiIntegrand::constant(r, BiPoly::lambda() * Rational(-static_cast<long>(j))));
    return p;
}

}  // namespace specnum
