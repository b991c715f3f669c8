#pragma once

// Truncated formal power series in t.
//
// A Series<R> stores raw Taylor coefficients a_0..a_N (f = sum a_k t^k) over
// one of the coefficient rings Q, Q[x], Q[lambda], Q[x, lambda]. The
// "number" read at index n is n! * a_n; the factorial is applied only by
// extract_number, so multiplication stays a plain Cauchy product.

#include "specnum/polynomial.hpp"
#include "specnum/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specnum {

enum class Ring { Q, Qx, Qlambda, Qxlambda };

inline std::string_view to_string(Ring r) {
    switch (r) {
        case Ring::Q: return "Q";
        case Ring::Qx: return "Q[x]";
        case Ring::Qlambda: return "Q[lambda]";
        case Ring::Qxlambda: return "Q[x,lambda]";
    }
    return "?";
}

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static bool admits(Ring r) { return r == Ring::Q; }
    static Ring default_ring() { return Ring::Q; }
    static Rational from_rational(Ring, const Rational& q) { return q; }
    static std::optional<Rational> as_constant(const Rational& v) { return v; }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
};

template <>
struct RingTraits<UniPoly> {
    static bool admits(Ring r) { return r == Ring::Qx || r == Ring::Qlambda; }
    static Ring default_ring() { return Ring::Qx; }
    static UniPoly from_rational(Ring r, const Rational& q) {
        return UniPoly::constant(r == Ring::Qx ? Var::x : Var::lambda, q);
    }
    static std::optional<Rational> as_constant(const UniPoly& v) {
        if (!v.is_constant()) return std::nullopt;
        return v.coeff(0);
    }
    static bool is_zero(const UniPoly& v) { return v.is_zero(); }
};

template <>
struct RingTraits<BiPoly> {
    static bool admits(Ring r) { return r == Ring::Qxlambda; }
    static Ring default_ring() { return Ring::Qxlambda; }
    static BiPoly from_rational(Ring, const Rational& q) { return BiPoly(q); }
    static std::optional<Rational> as_constant(const BiPoly& v) {
        if (v.rows() > 1 || v.cols() > 1) return std::nullopt;
        return v.coeff(0, 0);
    }
    static bool is_zero(const BiPoly& v) { return v.is_zero(); }
};

template <class R>
class Series {
    using Traits = RingTraits<R>;

public:
    /// The zero series of the given order.
    Series(Ring ring, unsigned order) : ring_(ring), c_(order + 1, Traits::from_rational(ring, 0)) {
        if (!Traits::admits(ring)) throw std::invalid_argument("Series: ring tag does not match coefficient type");
    }
    Series(Ring ring, std::vector<R> coeffs) : ring_(ring), c_(std::move(coeffs)) {
        if (!Traits::admits(ring)) throw std::invalid_argument("Series: ring tag does not match coefficient type");
        if (c_.empty()) throw std::invalid_argument("Series: needs at least the constant coefficient");
    }

    static Series constant(Ring ring, unsigned order, const Rational& value) {
        Series s(ring, order);
        s.c_[0] = Traits::from_rational(ring, value);
        return s;
    }
    /// The series t (requires order >= 1 to be nonzero).
    static Series t(Ring ring, unsigned order) {
        Series s(ring, order);
        if (order >= 1) s.c_[1] = Traits::from_rational(ring, 1);
        return s;
    }

    Ring ring() const { return ring_; }
    unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
    const R& coeff(unsigned k) const {
        if (k > order()) throw std::out_of_range("Series: index beyond truncation order");
        return c_[k];
    }
    const std::vector<R>& coeffs() const { return c_; }

    /// Index of the first nonzero coefficient; empty for the zero series.
    std::optional<unsigned> valuation() const {
        for (unsigned k = 0; k < c_.size(); ++k)
            if (!Traits::is_zero(c_[k])) return k;
        return std::nullopt;
    }

    Series truncated(unsigned order) const {
        if (order >= this->order()) return *this;
        return Series(ring_, std::vector<R>(c_.begin(), c_.begin() + order + 1));
    }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Series operator+(const Series& a, const Series& b) {
        a.check_ring(b);
        const unsigned n = std::min(a.order(), b.order());
        std::vector<R> c;
        c.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) c.push_back(a.c_[k] + b.c_[k]);
        return Series(a.ring_, std::move(c));
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(Series a, const Rational& s) {
        for (auto& c : a.c_) c *= s;
        return a;
    }
    friend Series operator*(const Rational& s, Series a) { return std::move(a) * s; }

    friend bool operator==(const Series& a, const Series& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

    void check_ring(const Series& o) const {
        if (ring_ != o.ring_)
            throw std::invalid_argument("Series: ring mismatch (" + std::string(to_string(ring_)) + " vs " +
                                        std::string(to_string(o.ring_)) + ")");
    }

private:
    Ring ring_;
    std::vector<R> c_;
};

/// Truncated Cauchy product; the result order is the smaller input order.
template <class R>
Series<R> series_mul(const Series<R>& f, const Series<R>& g) {
    f.check_ring(g);
    const unsigned n = std::min(f.order(), g.order());
    Series<R> r(f.ring(), n);
    std::vector<R> c(r.coeffs());
    for (unsigned i = 0; i <= n; ++i) {
        if (RingTraits<R>::is_zero(f.coeff(i))) continue;
        for (unsigned j = 0; i + j <= n; ++j) c[i + j] += f.coeff(i) * g.coeff(j);
    }
    return Series<R>(f.ring(), std::move(c));
}

template <class R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) {
    return series_mul(f, g);
}

/// Quotient q with q * g = f through order(f) - valuation(g).
///
/// The leading coefficient of g must be a nonzero rational constant and f must
/// vanish below the valuation of g.
template <class R>
Series<R> series_div(const Series<R>& f, const Series<R>& g) {
    using Traits = RingTraits<R>;
    f.check_ring(g);
    const auto v = g.valuation();
    if (!v) throw std::domain_error("series_div: division by the zero series");
    const auto lead = Traits::as_constant(g.coeff(*v));
    if (!lead) throw std::domain_error("series_div: leading coefficient of the divisor is not a unit");
    for (unsigned k = 0; k < *v && k <= f.order(); ++k)
        if (!Traits::is_zero(f.coeff(k)))
            throw std::domain_error("series_div: dividend valuation below divisor valuation");
    const unsigned order = std::min(f.order(), g.order());
    if (order < *v) throw std::domain_error("series_div: truncation order below divisor valuation");
    const unsigned n = order - *v;
    const Rational inv = Rational(1) / *lead;
    std::vector<R> q;
    q.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        R acc = f.coeff(k + *v);
        for (unsigned j = 1; j <= k; ++j) acc -= g.coeff(*v + j) * q[k - j];
        acc *= inv;
        q.push_back(std::move(acc));
    }
    return Series<R>(f.ring(), std::move(q));
}

/// f^r by binary powering; r = 0 gives the constant series 1.
template <class R>
Series<R> series_pow(const Series<R>& f, unsigned r) {
    Series<R> result = Series<R>::constant(f.ring(), f.order(), 1);
    Series<R> base = f;
    while (r > 0) {
        if (r & 1u) result = series_mul(result, base);
        r >>= 1;
        if (r > 0) base = series_mul(base, base);
    }
    return result;
}

/// n! * a_n.
template <class R>
R extract_number(const Series<R>& f, unsigned n) {
    if (n > f.order()) throw std::out_of_range("extract_number: index beyond truncation order");
    R v = f.coeff(n);
    v *= Rational(factorial(n));
    return v;
}

/// Applies a coefficient map, producing a series over another ring.
template <class To, class From, class Fn>
Series<To> map_coeffs(const Series<From>& f, Ring ring, Fn&& fn) {
    std::vector<To> c;
    c.reserve(f.order() + 1);
    for (const auto& a : f.coeffs()) c.push_back(fn(a));
    return Series<To>(ring, std::move(c));
}

/// Embeds a series over Q into Q[x] or Q[lambda].
inline Series<UniPoly> lift(const Series<Rational>& f, Ring ring) {
    const Var var = ring == Ring::Qx ? Var::x : Var::lambda;
    return map_coeffs<UniPoly>(f, ring, [var](const Rational& a) { return UniPoly::constant(var, a); });
}

/// Embeds a series over Q, Q[x] or Q[lambda] into Q[x, lambda].
inline Series<BiPoly> lift(const Series<UniPoly>& f) {
    return map_coeffs<BiPoly>(f, Ring::Qxlambda, [](const UniPoly& a) { return BiPoly(a); });
}
inline Series<BiPoly> lift(const Series<Rational>& f) {
    return map_coeffs<BiPoly>(f, Ring::Qxlambda, [](const Rational& a) { return BiPoly(a); });
}

/// Coefficientwise substitution of a rational for lambda (or x).
inline Series<Rational> substitute(const Series<UniPoly>& f, const Rational& value) {
    return map_coeffs<Rational>(f, Ring::Q, [&](const UniPoly& a) { return a.eval(value); });
}
inline Series<UniPoly> substitute(const Series<BiPoly>& f, Var which, const Rational& value) {
    const Ring ring = which == Var::x ? Ring::Qlambda : Ring::Qx;
    return map_coeffs<UniPoly>(f, ring, [&](const BiPoly& a) { return a.substitute(which, value); });
}

// ---------------------------------------------------------------------------
// Builders

/// exp(u t): a_k = u^k / k!.
inline Series<Rational> build_exp(const Rational& u, unsigned order) {
    std::vector<Rational> c;
    Rational term = 1;
    for (unsigned k = 0; k <= order; ++k) {
        if (k > 0) term = term * u / Rational(k);
        c.push_back(term);
    }
    return Series<Rational>(Ring::Q, std::move(c));
}

/// exp(x t) over Q[x]: a_k = x^k / k!.
inline Series<UniPoly> build_exp_x(unsigned order) {
    std::vector<UniPoly> c;
    for (unsigned k = 0; k <= order; ++k)
        c.push_back(UniPoly::monomial(Var::x, Rational(BigInt(1), factorial(k)), k));
    return Series<UniPoly>(Ring::Qx, std::move(c));
}

/// (1 + lambda t)^(u / lambda) over Q[lambda]: a_k = (u)_{k,lambda} / k!.
inline Series<UniPoly> build_degenerate_exp(const Rational& u, unsigned order) {
    std::vector<UniPoly> c;
    for (unsigned k = 0; k <= order; ++k) {
        UniPoly a = falling_factorial(u, k).to_unipoly(Var::lambda);
        a *= Rational(BigInt(1), factorial(k));
        c.push_back(std::move(a));
    }
    return Series<UniPoly>(Ring::Qlambda, std::move(c));
}

/// (1 + lambda t)^(x / lambda) over Q[x, lambda].
inline Series<BiPoly> build_degenerate_exp_x(unsigned order) {
    std::vector<BiPoly> c;
    BiPoly ff(Rational(1));
    for (unsigned k = 0; k <= order; ++k) {
        if (k > 0) ff *= BiPoly::x() - BiPoly::lambda() * Rational(k - 1);
        c.push_back(ff * Rational(BigInt(1), factorial(k)));
    }
    return Series<BiPoly>(Ring::Qxlambda, std::move(c));
}

/// lambda^{-1} log(1 + lambda t) over Q[lambda]: a_0 = 0, a_k = (-1)^{k-1} lambda^{k-1} / k.
inline Series<UniPoly> build_log1p_scaled(unsigned order) {
    if (order < 1) throw std::invalid_argument("build_log1p_scaled: order must be at least 1");
    std::vector<UniPoly> c{UniPoly(Var::lambda)};
    for (unsigned k = 1; k <= order; ++k)
        c.push_back(UniPoly::monomial(Var::lambda, Rational((k % 2 == 1) ? 1 : -1, static_cast<long>(k)), k - 1));
    return Series<UniPoly>(Ring::Qlambda, std::move(c));
}

}  // namespace specnum
