#pragma once

// Named special-number and special-polynomial families, each read off its
// generating function with the series engine.
//
// Table functions (`*_polys`, `*_numbers`) return indices 0..n_max from a
// single series evaluation; the single-index functions are conveniences on
// top of them. Degenerate families keep lambda as a formal indeterminate.

#include "specnum/polynomial.hpp"
#include "specnum/rational.hpp"
#include "specnum/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specnum {

// ---------------------------------------------------------------------------
// Kernels over Q

/// e^{t/2} - e^{-t/2}
inline Series<Rational> half_exp_difference(unsigned order) {
    return build_exp(Rational(1, 2), order) - build_exp(Rational(-1, 2), order);
}

/// e^{t/2} + e^{-t/2}
inline Series<Rational> half_exp_sum(unsigned order) {
    return build_exp(Rational(1, 2), order) + build_exp(Rational(-1, 2), order);
}

/// t / (e^{t/2} - e^{-t/2}) through t^order.
inline Series<Rational> type2_bernoulli_kernel(unsigned order) {
    return series_div(Series<Rational>::t(Ring::Q, order + 1), half_exp_difference(order + 1));
}

/// 2 / (e^{t/2} + e^{-t/2}) = sech(t/2) through t^order.
inline Series<Rational> type2_euler_kernel(unsigned order) {
    return series_div(Series<Rational>::constant(Ring::Q, order, 2), half_exp_sum(order));
}

/// e_lambda^{1/2}(t) - e_lambda^{-1/2}(t)
inline Series<UniPoly> degenerate_half_difference(unsigned order) {
    return build_degenerate_exp(Rational(1, 2), order) - build_degenerate_exp(Rational(-1, 2), order);
}

/// e_lambda^{1/2}(t) + e_lambda^{-1/2}(t)
inline Series<UniPoly> degenerate_half_sum(unsigned order) {
    return build_degenerate_exp(Rational(1, 2), order) + build_degenerate_exp(Rational(-1, 2), order);
}

namespace detail {

template <class R>
std::vector<R> extract_all(const Series<R>& f, unsigned n_max) {
    std::vector<R> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(extract_number(f, n));
    return out;
}

inline std::vector<Rational> at_x(const std::vector<UniPoly>& polys, const Rational& x) {
    std::vector<Rational> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.eval(x));
    return out;
}

inline std::vector<UniPoly> at_x(const std::vector<BiPoly>& polys, const Rational& x) {
    std::vector<UniPoly> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.substitute(Var::x, x));
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical families

/// B_n(x) from t e^{xt} / (e^t - 1).
inline std::vector<UniPoly> classical_bernoulli_polys(unsigned n_max) {
    const unsigned order = n_max + 1;
    const auto num = series_mul(lift(Series<Rational>::t(Ring::Q, order), Ring::Qx), build_exp_x(order));
    const auto den = lift(build_exp(1, order) - Series<Rational>::constant(Ring::Q, order, 1), Ring::Qx);
    return detail::extract_all(series_div(num, den), n_max);
}
inline UniPoly classical_bernoulli_poly(unsigned n) { return classical_bernoulli_polys(n)[n]; }
inline std::vector<Rational> classical_bernoulli_numbers(unsigned n_max) {
    const unsigned order = n_max + 1;
    const auto f = series_div(Series<Rational>::t(Ring::Q, order),
                              build_exp(1, order) - Series<Rational>::constant(Ring::Q, order, 1));
    return detail::extract_all(f, n_max);
}

/// E*_n(x) from 2 e^{xt} / (e^t + 1).
inline std::vector<UniPoly> classical_euler_polys(unsigned n_max) {
    const auto num = build_exp_x(n_max) * Rational(2);
    const auto den = lift(build_exp(1, n_max) + Series<Rational>::constant(Ring::Q, n_max, 1), Ring::Qx);
    return detail::extract_all(series_div(num, den), n_max);
}
inline UniPoly classical_euler_poly(unsigned n) { return classical_euler_polys(n)[n]; }
inline std::vector<Rational> classical_euler_numbers(unsigned n_max) {
    const auto f = series_div(Series<Rational>::constant(Ring::Q, n_max, 2),
                              build_exp(1, n_max) + Series<Rational>::constant(Ring::Q, n_max, 1));
    return detail::extract_all(f, n_max);
}

// ---------------------------------------------------------------------------
// Type 2 families

/// b_n(x) from t e^{xt} / (e^{t/2} - e^{-t/2}).
inline std::vector<UniPoly> type2_bernoulli_polys(unsigned n_max) {
    const unsigned order = n_max + 1;
    const auto num = series_mul(lift(Series<Rational>::t(Ring::Q, order), Ring::Qx), build_exp_x(order));
    return detail::extract_all(series_div(num, lift(half_exp_difference(order), Ring::Qx)), n_max);
}
inline UniPoly type2_bernoulli_poly(unsigned n) { return type2_bernoulli_polys(n)[n]; }
inline std::vector<Rational> type2_bernoulli_numbers(unsigned n_max) {
    return detail::extract_all(type2_bernoulli_kernel(n_max), n_max);
}
inline Rational type2_bernoulli_number(unsigned n) { return type2_bernoulli_numbers(n)[n]; }

/// E_n(x) from 2 e^{xt} / (e^{t/2} + e^{-t/2}).
inline std::vector<UniPoly> type2_euler_polys(unsigned n_max) {
    const auto num = build_exp_x(n_max) * Rational(2);
    return detail::extract_all(series_div(num, lift(half_exp_sum(n_max), Ring::Qx)), n_max);
}
inline UniPoly type2_euler_poly(unsigned n) { return type2_euler_polys(n)[n]; }
inline std::vector<Rational> type2_euler_numbers(unsigned n_max) {
    return detail::extract_all(type2_euler_kernel(n_max), n_max);
}
inline Rational type2_euler_number(unsigned n) { return type2_euler_numbers(n)[n]; }

/// b_n^{(r)}: coefficients of (t / (e^{t/2} - e^{-t/2}))^r.
inline std::vector<Rational> type2_bernoulli_order_numbers(unsigned n_max, unsigned r) {
    if (r < 1) throw std::invalid_argument("order r must be positive");
    return detail::extract_all(series_pow(type2_bernoulli_kernel(n_max), r), n_max);
}
inline Rational type2_bernoulli_order(unsigned n, unsigned r) { return type2_bernoulli_order_numbers(n, r)[n]; }

/// E_n^{(r)}: coefficients of sech(t/2)^r.
inline std::vector<Rational> type2_euler_order_numbers(unsigned n_max, unsigned r) {
    if (r < 1) throw std::invalid_argument("order r must be positive");
    return detail::extract_all(series_pow(type2_euler_kernel(n_max), r), n_max);
}
inline Rational type2_euler_order(unsigned n, unsigned r) { return type2_euler_order_numbers(n, r)[n]; }

/// T(m, r) for m = 0..m_max: r! sum T(m,r) t^m/m! = (e^{t/2} - e^{-t/2})^r. Zero for m < r.
inline std::vector<Rational> central_factorial_T_column(unsigned m_max, unsigned r) {
    if (r < 1) throw std::invalid_argument("central_factorial_T: r must be positive");
    const auto f = series_pow(half_exp_difference(m_max), r);
    auto col = detail::extract_all(f, m_max);
    const Rational inv_rfact(BigInt(1), factorial(r));
    for (auto& v : col) v *= inv_rfact;
    return col;
}
inline Rational central_factorial_T(unsigned m, unsigned r) { return central_factorial_T_column(m, r)[m]; }

/// d_n from log(1 + t) / t, checked against (-1)^n n! / (n + 1).
inline std::vector<Rational> daehee_numbers(unsigned n_max) {
    const unsigned order = n_max + 1;
    const auto log1p = substitute(build_log1p_scaled(order), Rational(1));
    auto d = detail::extract_all(series_div(log1p, Series<Rational>::t(Ring::Q, order)), n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        const Rational closed(BigInt(n % 2 == 0 ? 1 : -1) * factorial(n), BigInt(n + 1));
        if (d[n] != closed) throw std::logic_error("daehee: series and closed form disagree");
    }
    return d;
}
inline Rational daehee(unsigned n) { return daehee_numbers(n)[n]; }

// ---------------------------------------------------------------------------
// Degenerate families

/// S_{1,lambda}(n, l): coefficient of x^l in (x)_{n,lambda}; zero for l > n.
inline UniPoly degenerate_stirling1(unsigned n, unsigned l) {
    if (l > n) return UniPoly(Var::lambda);
    return falling_factorial(BiPoly::x(), n).x_coefficient(l);
}

/// Row n of the degenerate Stirling numbers of the first kind, l = 0..n.
inline std::vector<UniPoly> degenerate_stirling1_row(unsigned n) {
    const BiPoly ff = falling_factorial(BiPoly::x(), n);
    std::vector<UniPoly> row;
    for (unsigned l = 0; l <= n; ++l) row.push_back(ff.x_coefficient(l));
    return row;
}

/// B_{n,lambda}(x) from lambda^{-1} log(1 + lambda t) e_lambda^x(t) / (e_lambda^{1/2}(t) - e_lambda^{-1/2}(t)).
inline std::vector<BiPoly> fully_degenerate_type2_bernoulli_polys(unsigned n_max) {
    const unsigned order = n_max + 1;
    const auto num = series_mul(lift(build_log1p_scaled(order)), build_degenerate_exp_x(order));
    return detail::extract_all(series_div(num, lift(degenerate_half_difference(order))), n_max);
}
inline BiPoly fully_degenerate_type2_bernoulli_poly(unsigned n) { return fully_degenerate_type2_bernoulli_polys(n)[n]; }
inline std::vector<UniPoly> fully_degenerate_type2_bernoulli_numbers(unsigned n_max) {
    const unsigned order = n_max + 1;
    const auto f = series_div(build_log1p_scaled(order), degenerate_half_difference(order));
    return detail::extract_all(f, n_max);
}

/// b_{n,lambda}(x) from t e_lambda^x(t) / (e_lambda^{1/2}(t) - e_lambda^{-1/2}(t)).
inline std::vector<BiPoly> carlitz_degenerate_type2_bernoulli_polys(unsigned n_max) {
    const unsigned order = n_max + 1;
    const auto num = series_mul(Series<BiPoly>::t(Ring::Qxlambda, order), build_degenerate_exp_x(order));
    return detail::extract_all(series_div(num, lift(degenerate_half_difference(order))), n_max);
}
inline BiPoly carlitz_degenerate_type2_bernoulli_poly(unsigned n) {
    return carlitz_degenerate_type2_bernoulli_polys(n)[n];
}
inline std::vector<UniPoly> carlitz_degenerate_type2_bernoulli_numbers(unsigned n_max) {
    const unsigned order = n_max + 1;
    const auto f = series_div(Series<UniPoly>::t(Ring::Qlambda, order), degenerate_half_difference(order));
    return detail::extract_all(f, n_max);
}

/// E_{n,lambda}(x) from 2 e_lambda^x(t) / (e_lambda^{1/2}(t) + e_lambda^{-1/2}(t)).
inline std::vector<BiPoly> degenerate_type2_euler_polys(unsigned n_max) {
    const auto num = build_degenerate_exp_x(n_max) * Rational(2);
    return detail::extract_all(series_div(num, lift(degenerate_half_sum(n_max))), n_max);
}
inline BiPoly degenerate_type2_euler_poly(unsigned n) { return degenerate_type2_euler_polys(n)[n]; }

/// 2 / (e_lambda^{1/2}(t) + e_lambda^{-1/2}(t)) over Q[lambda].
inline Series<UniPoly> degenerate_type2_euler_kernel(unsigned order) {
    return series_div(Series<UniPoly>::constant(Ring::Qlambda, order, 2), degenerate_half_sum(order));
}
inline std::vector<UniPoly> degenerate_type2_euler_numbers(unsigned n_max) {
    return detail::extract_all(degenerate_type2_euler_kernel(n_max), n_max);
}

/// E_{n,lambda}^{(r)}: coefficients of the r-th power of the degenerate sech kernel.
inline std::vector<UniPoly> degenerate_type2_euler_order_numbers(unsigned n_max, unsigned r) {
    if (r < 1) throw std::invalid_argument("order r must be positive");
    return detail::extract_all(series_pow(degenerate_type2_euler_kernel(n_max), r), n_max);
}
inline UniPoly degenerate_type2_euler_order(unsigned n, unsigned r) {
    return degenerate_type2_euler_order_numbers(n, r)[n];
}

// ---------------------------------------------------------------------------
// Family identifiers

enum class Family {
    classical_bernoulli,
    classical_euler,
    type2_bernoulli,
    type2_euler,
    type2_bernoulli_order_r,
    type2_euler_order_r,
    fully_degenerate_type2_bernoulli,
    carlitz_degenerate_type2_bernoulli,
    degenerate_type2_euler,
    degenerate_type2_euler_order_r,
    degenerate_stirling1,
    central_factorial_T,
    daehee,
};

inline constexpr Family kAllFamilies[] = {
    Family::classical_bernoulli,
    Family::classical_euler,
    Family::type2_bernoulli,
    Family::type2_euler,
    Family::type2_bernoulli_order_r,
    Family::type2_euler_order_r,
    Family::fully_degenerate_type2_bernoulli,
    Family::carlitz_degenerate_type2_bernoulli,
    Family::degenerate_type2_euler,
    Family::degenerate_type2_euler_order_r,
    Family::degenerate_stirling1,
    Family::central_factorial_T,
    Family::daehee,
};

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::classical_bernoulli: return "classical_bernoulli";
        case Family::classical_euler: return "classical_euler";
        case Family::type2_bernoulli: return "type2_bernoulli";
        case Family::type2_euler: return "type2_euler";
        case Family::type2_bernoulli_order_r: return "type2_bernoulli_order_r";
        case Family::type2_euler_order_r: return "type2_euler_order_r";
        case Family::fully_degenerate_type2_bernoulli: return "fully_degenerate_type2_bernoulli";
        case Family::carlitz_degenerate_type2_bernoulli: return "carlitz_degenerate_type2_bernoulli";
        case Family::degenerate_type2_euler: return "degenerate_type2_euler";
        case Family::degenerate_type2_euler_order_r: return "degenerate_type2_euler_order_r";
        case Family::degenerate_stirling1: return "degenerate_stirling1";
        case Family::central_factorial_T: return "central_factorial_T";
        case Family::daehee: return "daehee";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies)
        if (to_string(f) == name) return f;
    return std::nullopt;
}

/// Families whose members take an order parameter r. central_factorial_T
/// takes r as its second index.
inline bool takes_order(Family f) {
    return f == Family::type2_bernoulli_order_r || f == Family::type2_euler_order_r ||
           f == Family::degenerate_type2_euler_order_r || f == Family::central_factorial_T;
}
inline bool has_x(Family f) {
    switch (f) {
        case Family::classical_bernoulli:
        case Family::classical_euler:
        case Family::type2_bernoulli:
        case Family::type2_euler:
        case Family::fully_degenerate_type2_bernoulli:
        case Family::carlitz_degenerate_type2_bernoulli:
        case Family::degenerate_type2_euler: return true;
        default: return false;
    }
}
inline bool has_lambda(Family f) {
    switch (f) {
        case Family::fully_degenerate_type2_bernoulli:
        case Family::carlitz_degenerate_type2_bernoulli:
        case Family::degenerate_type2_euler:
        case Family::degenerate_type2_euler_order_r:
        case Family::degenerate_stirling1: return true;
        default: return false;
    }
}

/// A family tag together with its order, present exactly for order-r families.
class FamilyId {
public:
    explicit FamilyId(Family f, std::optional<unsigned> r = std::nullopt) : family_(f), r_(r) {
        if (takes_order(f) != r.has_value())
            throw std::invalid_argument("FamilyId: order r must be given exactly for order-r families");
        if (r && *r < 1) throw std::invalid_argument("FamilyId: order r must be positive");
    }
    Family family() const { return family_; }
    std::optional<unsigned> order() const { return r_; }

private:
    Family family_;
    std::optional<unsigned> r_;
};

}  // namespace specnum
