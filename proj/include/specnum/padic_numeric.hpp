#pragma once

// Finite-stage Riemann sums for the bosonic and fermionic p-adic integrals.
//
// Sums are evaluated exactly in Q through power-sum recurrences, then compared
// p-adically with the exact functional value. PadicApprox is the presentation
// form of a p-adic integral rational at a fixed precision.

#include "specnum/padic_functionals.hpp"
#include "specnum/polynomial.hpp"
#include "specnum/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace specnum {

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_odd_prime(unsigned long p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

/// v with q = p^v * (unit); q must be nonzero.
inline long padic_valuation(const Rational& q, unsigned long p) {
    if (q.is_zero()) throw std::domain_error("padic_valuation: valuation of zero is infinite");
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
    const BigInt prime(p);
    BigInt num = q.numerator(), den = q.denominator(), rest;
    const long vn = static_cast<long>(mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
    return vn - vd;
}

inline BigInt ipow(unsigned long p, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

/// A p-adic integer known modulo p^known, stored as a residue modulo p^K.
struct PadicApprox {
    unsigned long p;
    unsigned K;
    BigInt residue;  // in [0, p^K)
    unsigned known;  // <= K

    /// Reduces q modulo p^K; q must be p-integral.
    static PadicApprox from_rational(const Rational& q, unsigned long p, unsigned K, unsigned known) {
        require_odd_prime(p);
        if (known > K) throw std::invalid_argument("PadicApprox: known precision exceeds K");
        if (!q.is_zero() && padic_valuation(q, p) < 0)
            throw std::domain_error("PadicApprox: value is not a p-adic integer");
        const BigInt modulus = ipow(p, K);
        BigInt inv;
        const BigInt den = q.denominator();
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0 && K > 0)
            throw std::domain_error("PadicApprox: denominator not invertible");
        BigInt r = q.numerator() * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
        return PadicApprox{p, K, K == 0 ? BigInt(0) : r, known};
    }

    BigInt modulus() const { return ipow(p, K); }
};

namespace detail {

inline void require_p_integral_coeffs(const UniPoly& f, unsigned long p) {
    for (const auto& c : f.coeffs())
        if (mpz_divisible_ui_p(c.denominator().get_mpz_t(), p))
            throw std::invalid_argument("coefficient " + c.str() + " has a denominator divisible by p");
}

}  // namespace detail

/// S_k = sum_{x=0}^{M-1} x^k for k = 0..k_max, from M^{k+1} = sum_{j<=k} C(k+1, j) S_j.
inline std::vector<BigInt> power_sums(const BigInt& M, unsigned k_max) {
    std::vector<BigInt> s;
    BigInt Mpow = M;
    for (unsigned k = 0; k <= k_max; ++k) {
        BigInt acc = Mpow;
        for (unsigned j = 0; j < k; ++j) acc -= binomial(k + 1, j) * s[j];
        s.push_back(BigInt(acc / (k + 1)));
        Mpow *= M;
    }
    return s;
}

/// A_k = sum_{x=0}^{M-1} (-1)^x x^k for k = 0..k_max, from
/// 2 A_k + sum_{j<k} C(k, j) A_j = [k = 0] - (-1)^M M^k.
inline std::vector<BigInt> alternating_power_sums(const BigInt& M, unsigned k_max) {
    std::vector<BigInt> a;
    const int sign_m = mpz_odd_p(M.get_mpz_t()) ? -1 : 1;
    BigInt Mpow = 1;
    for (unsigned k = 0; k <= k_max; ++k) {
        BigInt acc = (k == 0 ? 1 : 0) - sign_m * Mpow;
        for (unsigned j = 0; j < k; ++j) acc -= binomial(k, j) * a[j];
        a.push_back(BigInt(acc / 2));
        Mpow *= M;
    }
    return a;
}

/// (1/p^N) sum_{x=0}^{p^N - 1} f(x), exactly.
inline Rational volkenborn_riemann(const UniPoly& f, unsigned long p, unsigned N) {
    require_odd_prime(p);
    if (N < 1) throw std::invalid_argument("volkenborn_riemann: N must be at least 1");
    detail::require_p_integral_coeffs(f, p);
    const BigInt M = ipow(p, N);
    const auto s = power_sums(M, static_cast<unsigned>(std::max(f.degree(), 0)));
    Rational acc;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) acc += f.coeffs()[k] * Rational(s[k]);
    return acc / Rational(M);
}

/// sum_{x=0}^{p^N - 1} (-1)^x f(x), exactly.
inline Rational fermionic_riemann(const UniPoly& f, unsigned long p, unsigned N) {
    require_odd_prime(p);
    if (N < 1) throw std::invalid_argument("fermionic_riemann: N must be at least 1");
    detail::require_p_integral_coeffs(f, p);
    const BigInt M = ipow(p, N);
    const auto a = alternating_power_sums(M, static_cast<unsigned>(std::max(f.degree(), 0)));
    Rational acc;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) acc += f.coeffs()[k] * Rational(a[k]);
    return acc;
}

inline Rational riemann_sum(const UniPoly& f, unsigned long p, unsigned N, Measure m) {
    return m == Measure::bosonic ? volkenborn_riemann(f, p, N) : fermionic_riemann(f, p, N);
}

/// Exact value of the integral of a rational polynomial.
inline Rational exact_integral(const UniPoly& f, Measure m) {
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    return integrate(PolyIntegrand::from_rationals(c), m).substitute(Var::x, Rational(0)).eval(0);
}

/// Largest p-adic precision loss c such that the stage-N error has valuation
/// at least N - c.
///
/// With M = p^N the stage-N errors expand as
///   bosonic:   sum_k a_k sum_{j<k} C(k+1, j) B_j M^{k-j} / (k+1)
///   fermionic: sum_k a_k sum_{j<k} C(k, j) E*_j M^{k-j} / 2
/// and every term carries at least one factor M, so c is the worst negative
/// valuation among the coefficients multiplying M^{k-j}.
inline long precision_loss(const UniPoly& f, unsigned long p, Measure m) {
    const auto& mu = moments(m);
    long c = 0;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        const Rational& a = f.coeffs()[k];
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (mu[j].is_zero()) continue;
            const Rational term = m == Measure::bosonic
                                      ? a * Rational(binomial(k + 1, j)) * mu[j] / Rational(k + 1)
                                      : a * Rational(binomial(k, j)) * mu[j] / Rational(2);
            c = std::max(c, -padic_valuation(term, p));
        }
    }
    return c;
}

struct ConvergenceRow {
    unsigned N;
    Rational approx;
    Rational error;                  // approx - exact
    std::optional<long> valuation;   // empty when the error is exactly zero
    long bound;                      // N - c
};

struct ConvergenceReport {
    Measure measure;
    unsigned long p;
    Rational exact;
    long loss;  // c
    std::vector<ConvergenceRow> rows;

    /// Valuations never decrease in N and every row meets its bound.
    bool converges() const {
        std::optional<long> prev;
        bool prev_exact = false;
        for (const auto& r : rows) {
            if (!r.valuation) {
                prev_exact = true;
                continue;
            }
            if (prev_exact) return false;
            if (*r.valuation < r.bound) return false;
            if (prev && *r.valuation < *prev) return false;
            prev = r.valuation;
        }
        return true;
    }
};

inline constexpr unsigned kMaxRiemannStage = 6;

/// Riemann sums at stages 1..N_max against the exact integral.
inline ConvergenceReport convergence_check(const UniPoly& f, unsigned long p, Measure m, unsigned N_max) {
    require_odd_prime(p);
    if (N_max < 1 || N_max > kMaxRiemannStage)
        throw std::invalid_argument("convergence_check: N_max must be in 1.." + std::to_string(kMaxRiemannStage));
    detail::require_p_integral_coeffs(f, p);
    ConvergenceReport rep{m, p, exact_integral(f, m), precision_loss(f, p, m), {}};
    for (unsigned N = 1; N <= N_max; ++N) {
        const Rational approx = riemann_sum(f, p, N, m);
        const Rational err = approx - rep.exact;
        std::optional<long> v;
        if (!err.is_zero()) v = padic_valuation(err, p);
        rep.rows.push_back({N, approx, err, v, static_cast<long>(N) - rep.loss});
    }
    return rep;
}

}  // namespace specnum
