#pragma once

// Identity verification harness.
//
// Every catalog entry reduces one identity to exact equality of Rational,
// UniPoly or BiPoly values over a parameter grid. Identities involving lambda
// are compared as polynomials in lambda, never at sampled values. Grid points
// are visited in lexicographic order of the parameter tuple and the first
// mismatch is reported as the witness.

#include "specnum/families.hpp"
#include "specnum/padic_functionals.hpp"
#include "specnum/polynomial.hpp"
#include "specnum/rational.hpp"
#include "specnum/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specnum {

struct Range {
    long lo = 0;
    long hi = 0;
    friend bool operator==(const Range&, const Range&) = default;
};

/// Parameter ranges for one catalog entry; absent fields are unused by it.
struct Grid {
    std::optional<Range> n;
    std::optional<Range> r;
    std::optional<Range> m;
    std::optional<std::vector<long>> d;
    friend bool operator==(const Grid&, const Grid&) = default;
};

struct GridCaps {
    long n_max_plain = 20;
    long n_max_degenerate = 12;
    long r_max = 4;
    long m_max = 50;
};

enum class Status { pass, fail, error };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::error: return "error";
    }
    return "?";
}

using Params = std::vector<std::pair<std::string, long>>;

struct Witness {
    Params params;
    std::string relation;
    Value lhs;
    Value rhs;
};

struct TheoremReport {
    std::string id;
    std::string title;
    Grid grid;
    Status status = Status::pass;
    std::size_t checked = 0;
    std::optional<Witness> witness;
    std::optional<std::string> error;
    std::vector<std::string> warnings;
    double elapsed_ms = 0;
};

/// Test hook applied to rational family values before they enter an identity.
/// Arguments: family name, n, r (0 when the family has no order), value.
using ValueHook = std::function<Rational(std::string_view, unsigned, unsigned, const Rational&)>;

struct SuiteConfig {
    std::vector<std::string> ids;                 // empty: the whole catalog
    std::map<std::string, Grid> grids;            // per-id overrides
    bool allow_exceed_caps = false;
    GridCaps caps;
    ValueHook hook;
};

namespace suite_detail {

struct Mismatch {
    Witness witness;
};

class Checker {
public:
    explicit Checker(const SuiteConfig& cfg) : cfg_(cfg) {}

    template <class A, class B>
    void equal(const Params& params, std::string_view relation, const A& lhs, const B& rhs) {
        ++checked_;
        const Value l = to_value(lhs), r = to_value(rhs);
        if (!(l == r)) throw Mismatch{Witness{params, std::string(relation), l, r}};
    }

    std::size_t checked() const { return checked_; }

    Rational hooked(std::string_view family, unsigned n, unsigned r, Rational v) const {
        return cfg_.hook ? cfg_.hook(family, n, r, v) : v;
    }
    std::vector<Rational> hooked(std::string_view family, unsigned r, std::vector<Rational> v) const {
        if (!cfg_.hook) return v;
        for (unsigned n = 0; n < v.size(); ++n) v[n] = cfg_.hook(family, n, r, v[n]);
        return v;
    }

private:
    static Value to_value(const Rational& v) { return v; }
    static Value to_value(const UniPoly& v) { return v; }
    static Value to_value(const BiPoly& v) { return v; }

    const SuiteConfig& cfg_;
    std::size_t checked_ = 0;
};

inline std::vector<long> values(const std::optional<Range>& r) {
    std::vector<long> v;
    if (r)
        for (long k = r->lo; k <= r->hi; ++k) v.push_back(k);
    return v;
}
inline std::vector<long> odd_values(const std::optional<Range>& r) {
    std::vector<long> v;
    for (long k : values(r))
        if (k % 2 != 0) v.push_back(k);
    return v;
}

inline unsigned u(long v) { return static_cast<unsigned>(v); }
inline long hi(const std::optional<Range>& r) { return r ? r->hi : -1; }

const UniPoly kX = UniPoly::indeterminate(Var::x);
const UniPoly kLambda = UniPoly::indeterminate(Var::lambda);

inline UniPoly xlin(const Rational& c0, const Rational& c1) { return UniPoly(Var::x, {c0, c1}); }

inline Rational sign(long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

/// Compositions of n into r nonnegative parts, lexicographic.
inline void for_each_composition(long n, long r, const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> parts(r, 0);
    std::function<void(long, long)> rec = [&](long idx, long left) {
        if (idx == r - 1) {
            parts[idx] = left;
            fn(parts);
            return;
        }
        for (long k = 0; k <= left; ++k) {
            parts[idx] = k;
            rec(idx + 1, left - k);
        }
    };
    if (r >= 1) rec(0, n);
}

/// Test integrands of degree k: y^k and (x + y + 1/2)^k.
inline std::vector<std::pair<std::string, PolyIntegrand>> sample_integrands(unsigned k) {
    return {{"y^k", pow(PolyIntegrand::y(), k)}, {"(x+y+1/2)^k", shifted_power_integrand(k)}};
}

/// (base)_{n, 2 lambda} as a polynomial in lambda.
inline UniPoly falling_2lambda(long base, unsigned n) {
    return falling_factorial(Rational(base), n, Rational(2)).to_unipoly(Var::lambda);
}

// ---------------------------------------------------------------------------
// Verifiers

inline void distribution_bernoulli(const Grid& g, Checker& c) {
    const auto b = type2_bernoulli_polys(u(hi(g.n)));
    for (long n : values(g.n))
        for (long d : *g.d) {
            UniPoly rhs(Var::x);
            for (long a = 0; a < d; ++a)
                rhs += b[n].compose(xlin(Rational(2 * a + 1 - d, 2 * d), Rational(1, d)));
            rhs *= pow(Rational(d), n - 1);
            c.equal({{"n", n}, {"d", d}}, "b_n(x) = d^(n-1) sum_a b_n((x+a+(1-d)/2)/d)", b[n], rhs);
        }
}

inline void distribution_euler(const Grid& g, Checker& c) {
    const auto e = type2_euler_polys(u(hi(g.n)));
    for (long n : values(g.n))
        for (long d : *g.d) {
            UniPoly rhs(Var::x);
            for (long a = 0; a < d; ++a)
                rhs += e[n].compose(xlin(Rational(2 * a + 1 - d, 2 * d), Rational(1, d))) * sign(a);
            rhs *= pow(Rational(d), n);
            c.equal({{"n", n}, {"d", d}}, "E_n(x) = d^n sum_a (-1)^a E_n((x+a+(1-d)/2)/d)", e[n], rhs);
        }
}

inline void convolution(const Grid& g, Checker& c, bool euler) {
    const std::string_view base = euler ? "type2_euler" : "type2_bernoulli";
    const std::string_view ordered = euler ? "type2_euler_order_r" : "type2_bernoulli_order_r";
    const unsigned nmax = u(hi(g.n));
    const auto numbers = c.hooked(base, 0, euler ? type2_euler_numbers(nmax) : type2_bernoulli_numbers(nmax));
    for (long n : values(g.n))
        for (long r : values(g.r)) {
            const auto col = euler ? type2_euler_order_numbers(u(n), u(r)) : type2_bernoulli_order_numbers(u(n), u(r));
            const Rational lhs = c.hooked(ordered, u(n), u(r), col[n]);
            Rational rhs;
            for_each_composition(n, r, [&](const std::vector<long>& parts) {
                Rational term(multinomial(n, parts));
                for (long i : parts) term *= numbers[i];
                rhs += term;
            });
            c.equal({{"n", n}, {"r", r}}, "order-r number = multinomial convolution", lhs, rhs);
        }
}

inline void central_factorial_delta(const Grid& g, Checker& c) {
    const unsigned nmax = u(hi(g.n));
    for (long n : values(g.n))
        for (long r : values(g.r)) {
            if (r > n) continue;
            const auto b = c.hooked("type2_bernoulli_order_r", u(r), type2_bernoulli_order_numbers(nmax, u(r)));
            const auto T = c.hooked("central_factorial_T", u(r), central_factorial_T_column(nmax, u(r)));
            Rational lhs;
            for (long m = r; m <= n; ++m) lhs += Rational(binomial(n, m)) * T[m] * b[n - m];
            c.equal({{"n", n}, {"r", r}}, "sum_m C(n,m) T(m,r) b^(r)_(n-m) = [n = r]", lhs, Rational(n == r ? 1 : 0));
        }
}

inline void power_sum(const Grid& g, Checker& c) {
    const auto b = type2_bernoulli_polys(u(hi(g.n)) + 1);
    for (long n : values(g.n))
        for (long m : values(g.m)) {
            BigInt lhs = 0;
            for (long k = 1; k <= m; ++k) {
                BigInt t;
                mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(2 * k - 1), static_cast<unsigned long>(n));
                lhs += t;
            }
            const Rational rhs = pow(Rational(2), n) * (b[n + 1].eval(m) - b[n + 1].eval(0)) / Rational(n + 1);
            c.equal({{"n", n}, {"m", m}}, "1^n + 3^n + ... + (2m-1)^n", Rational(lhs), rhs);
        }
}

inline void alternating_power_sum(const Grid& g, Checker& c) {
    const auto e = type2_euler_polys(u(hi(g.n)));
    for (long n : values(g.n))
        for (long m : odd_values(g.m)) {
            BigInt lhs = 0;
            for (long l = 0; l < m; ++l) {
                BigInt t;
                mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(2 * l + 1), static_cast<unsigned long>(n));
                if (l % 2 == 0) lhs += t;
                else lhs -= t;
            }
            const Rational rhs = pow(Rational(2), n - 1) * (e[n].eval(m) + e[n].eval(0));
            c.equal({{"n", n}, {"m", m}}, "sum_l (-1)^l (2l+1)^n = 2^(n-1)(E_n(m) + E_n)", Rational(lhs), rhs);
        }
}

inline void degenerate_expansions(const Grid& g, Checker& c, bool euler) {
    const unsigned nmax = u(hi(g.n));
    const Measure m = euler ? Measure::fermionic : Measure::bosonic;
    const auto big = euler ? degenerate_type2_euler_polys(nmax) : fully_degenerate_type2_bernoulli_polys(nmax);
    const auto plain = euler ? type2_euler_polys(nmax) : type2_bernoulli_polys(nmax);
    for (long n : values(g.n)) {
        const Params p{{"n", n}};
        c.equal(p, "Witt formula", degenerate_witt(u(n), true, m), big[n]);

        BiPoly stirling;
        const auto row = degenerate_stirling1_row(u(n));
        for (long l = 0; l <= n; ++l) stirling += product(row[l], plain[l]);
        c.equal(p, "sum_l S1_lambda(n,l) f_l(x)", stirling, big[n]);

        BiPoly conv;
        for (long k = 0; k <= n; ++k)
            conv += BiPoly(big[k].substitute(Var::x, Rational(0))) * falling_factorial(BiPoly::x(), u(n - k)) *
                    Rational(binomial(n, k));
        c.equal(p, "sum_m C(n,m) F_(m,lambda) (x)_(n-m,lambda)", conv, big[n]);
    }
}

inline void daehee_expansion(const Grid& g, Checker& c) {
    const unsigned nmax = u(hi(g.n));
    const auto B = fully_degenerate_type2_bernoulli_numbers(nmax);
    const auto b = carlitz_degenerate_type2_bernoulli_numbers(nmax);
    const auto d = daehee_numbers(nmax);
    for (long n : values(g.n)) {
        const Params p{{"n", n}};
        c.equal(p, "Witt formula at x = 0", degenerate_witt(u(n), false, Measure::bosonic), BiPoly(B[n]));
        UniPoly rhs(Var::lambda);
        for (long l = 0; l <= n; ++l)
            rhs += UniPoly::monomial(Var::lambda, Rational(binomial(n, l)) * d[l], u(l)) * b[n - l];
        c.equal(p, "B_(n,lambda) = sum_l C(n,l) lambda^l d_l b_(n-l,lambda)", B[n], rhs);
    }
}

inline void degenerate_power_sum(const Grid& g, Checker& c) {
    const auto b = carlitz_degenerate_type2_bernoulli_polys(u(hi(g.n)) + 1);
    for (long n : values(g.n))
        for (long m : values(g.m)) {
            const UniPoly diff = b[n + 1].substitute(Var::x, Rational(m)) - b[n + 1].substitute(Var::x, Rational(0));
            const UniPoly lhs = diff * (pow(Rational(2), n) / Rational(n + 1));
            UniPoly rhs(Var::lambda);
            for (long l = 0; l < m; ++l) rhs += falling_2lambda(2 * l + 1, u(n));
            c.equal({{"n", n}, {"m", m}}, "2^n/(n+1) (b_(n+1,lambda)(m) - b_(n+1,lambda)) = sum_l (2l+1)_(n,2lambda)",
                    lhs, rhs);
        }
}

inline void degenerate_alternating_sum(const Grid& g, Checker& c) {
    const auto e = degenerate_type2_euler_polys(u(hi(g.n)));
    for (long n : values(g.n))
        for (long m : odd_values(g.m)) {
            const UniPoly sum = e[n].substitute(Var::x, Rational(m)) + e[n].substitute(Var::x, Rational(0));
            const UniPoly lhs = sum * pow(Rational(2), n - 1);
            UniPoly rhs(Var::lambda);
            for (long l = 0; l < m; ++l) rhs += falling_2lambda(2 * l + 1, u(n)) * sign(l);
            c.equal({{"n", n}, {"m", m}}, "2^(n-1)(E_(n,lambda)(m) + E_(n,lambda)) = sum_l (-1)^l (2l+1)_(n,2lambda)",
                    lhs, rhs);
        }
}

inline void euler_delta(const Grid& g, Checker& c) {
    const unsigned nmax = u(hi(g.n));
    for (long n : values(g.n))
        for (long r : values(g.r)) {
            const auto E = c.hooked("type2_euler_order_r", u(r), type2_euler_order_numbers(nmax, u(r)));
            Rational lhs;
            for (long m = 0; m <= n; ++m)
                for (long j = 0; j <= r; ++j)
                    lhs += Rational(binomial(r, j) * binomial(n, m)) * pow(Rational(2 * j - r, 2), m) * E[n - m];
            c.equal({{"n", n}, {"r", r}}, "double sum = 2^r [n = 0]", lhs, n == 0 ? pow(Rational(2), r) : Rational(0));
        }
}

inline void witt(const Grid& g, Checker& c, Measure m) {
    const auto f = m == Measure::bosonic ? type2_bernoulli_polys(u(hi(g.n))) : type2_euler_polys(u(hi(g.n)));
    for (long n : values(g.n))
        c.equal({{"n", n}}, "integral of (x+y+1/2)^n", integrate(shifted_power_integrand(u(n)), m), BiPoly(f[n]));
}

inline void iterated_witt(const Grid& g, Checker& c, Measure m) {
    for (long n : values(g.n))
        for (long r : values(g.r)) {
            const auto nums = m == Measure::bosonic ? type2_bernoulli_order_numbers(u(n), u(r))
                                                    : type2_euler_order_numbers(u(n), u(r));
            c.equal({{"n", n}, {"r", r}}, "iterated integral of (y_1+...+y_r+r/2)^n",
                    iterated_integral(shifted_sum_power(u(r), u(n)), m), BiPoly(nums[n]));
        }
}

inline void degenerate_iterated_witt(const Grid& g, Checker& c) {
    for (long n : values(g.n))
        for (long r : values(g.r)) {
            const auto nums = degenerate_type2_euler_order_numbers(u(n), u(r));
            c.equal({{"n", n}, {"r", r}}, "iterated fermionic integral of (y_1+...+y_r+r/2)_(n,lambda)",
                    iterated_integral(shifted_sum_falling(u(r), u(n)), Measure::fermionic), BiPoly(nums[n]));
        }
}

inline void distribution_lemma(const Grid& g, Checker& c, Measure m) {
    for (long n : values(g.n))
        for (long d : *g.d)
            for (const auto& [name, f] : sample_integrands(u(n))) {
                BiPoly rhs;
                for (long a = 0; a < d; ++a) {
                    const BiPoly part = integrate(f.affine(BiPoly(Rational(a)), Rational(d)), m);
                    rhs += m == Measure::bosonic ? part : part * sign(a);
                }
                if (m == Measure::bosonic) rhs *= Rational(1, d);
                c.equal({{"n", n}, {"d", d}}, name, integrate(f, m), rhs);
            }
}

inline void unit_shift(const Grid& g, Checker& c, Measure m) {
    for (long n : values(g.n))
        for (const auto& [name, f] : sample_integrands(u(n))) {
            const BiPoly shifted = integrate(f.shifted(BiPoly(Rational(1))), m);
            if (m == Measure::bosonic)
                c.equal({{"n", n}}, name + ": I(f(y+1)) - I(f) = f'(0)", shifted - integrate(f, m), f.coeff(1));
            else
                c.equal({{"n", n}}, name + ": I(f(y+1)) + I(f) = 2 f(0)", shifted + integrate(f, m),
                        f.coeff(0) * Rational(2));
        }
}

inline void integer_shift(const Grid& g, Checker& c) {
    for (long n : values(g.n))
        for (long m : values(g.m))
            for (const auto& [name, f] : sample_integrands(u(n))) {
                BiPoly rhs = bosonic_integral(f);
                const PolyIntegrand df = f.derivative();
                for (long l = 0; l < m; ++l) rhs += df.at(BiPoly(Rational(l)));
                c.equal({{"n", n}, {"m", m}}, name + ": I(f(y+m)) = sum_l f'(l) + I(f)",
                        bosonic_integral(f.shifted(BiPoly(Rational(m)))), rhs);
            }
}

inline void odd_shift(const Grid& g, Checker& c) {
    for (long n : values(g.n))
        for (long d : *g.d)
            for (const auto& [name, f] : sample_integrands(u(n))) {
                BiPoly rhs;
                for (long l = 0; l < d; ++l) rhs += f.at(BiPoly(Rational(l))) * (sign(l) * Rational(2));
                c.equal({{"n", n}, {"d", d}}, name + ": I(f(y+d)) + I(f) = 2 sum_l (-1)^l f(l)",
                        fermionic_integral(f.shifted(BiPoly(Rational(d)))) + fermionic_integral(f), rhs);
            }
}

inline void binomial_expansion(const Grid& g, Checker& c, bool euler) {
    const unsigned nmax = u(hi(g.n));
    const auto polys = euler ? type2_euler_polys(nmax) : type2_bernoulli_polys(nmax);
    const auto nums = c.hooked(euler ? "type2_euler" : "type2_bernoulli", 0,
                               euler ? type2_euler_numbers(nmax) : type2_bernoulli_numbers(nmax));
    for (long n : values(g.n)) {
        UniPoly rhs(Var::x);
        for (long l = 0; l <= n; ++l) rhs += UniPoly::monomial(Var::x, Rational(binomial(n, l)) * nums[l], u(n - l));
        c.equal({{"n", n}}, "f_n(x) = sum_l C(n,l) x^(n-l) f_l", polys[n], rhs);
    }
}

inline void half_shift_oracle(const Grid& g, Checker& c) {
    const unsigned nmax = u(hi(g.n));
    const auto b = type2_bernoulli_polys(nmax), e = type2_euler_polys(nmax);
    const auto B = classical_bernoulli_polys(nmax), E = classical_euler_polys(nmax);
    const UniPoly shift = xlin(Rational(1, 2), 1);
    for (long n : values(g.n)) {
        c.equal({{"n", n}}, "b_n(x) = B_n(x + 1/2)", b[n], B[n].compose(shift));
        c.equal({{"n", n}}, "E_n(x) = E*_n(x + 1/2)", e[n], E[n].compose(shift));
    }
}

inline void parity(const Grid& g, Checker& c) {
    const unsigned nmax = u(hi(g.n));
    const auto b = type2_bernoulli_polys(nmax), e = type2_euler_polys(nmax);
    const UniPoly minus_x = xlin(0, -1);
    for (long n : values(g.n)) {
        c.equal({{"n", n}}, "b_n(-x) = (-1)^n b_n(x)", b[n].compose(minus_x), b[n] * sign(n));
        c.equal({{"n", n}}, "E_n(-x) = (-1)^n E_n(x)", e[n].compose(minus_x), e[n] * sign(n));
    }
}

inline void degeneration(const Grid& g, Checker& c) {
    const unsigned nmax = u(hi(g.n));
    const auto b = type2_bernoulli_polys(nmax), e = type2_euler_polys(nmax);
    const auto full = fully_degenerate_type2_bernoulli_polys(nmax);
    const auto carlitz = carlitz_degenerate_type2_bernoulli_polys(nmax);
    const auto deul = degenerate_type2_euler_polys(nmax);
    std::vector<std::vector<UniPoly>> deg_order;
    std::vector<std::vector<Rational>> plain_order;
    for (long r : values(g.r)) {
        deg_order.push_back(degenerate_type2_euler_order_numbers(nmax, u(r)));
        plain_order.push_back(type2_euler_order_numbers(nmax, u(r)));
    }
    const Rational zero(0);
    for (long n : values(g.n)) {
        const Params p{{"n", n}};
        c.equal(p, "B_(n,lambda)(x) at lambda = 0", full[n].substitute(Var::lambda, zero), b[n]);
        c.equal(p, "b_(n,lambda)(x) at lambda = 0", carlitz[n].substitute(Var::lambda, zero), b[n]);
        c.equal(p, "E_(n,lambda)(x) at lambda = 0", deul[n].substitute(Var::lambda, zero), e[n]);
        const auto row = degenerate_stirling1_row(u(n));
        for (long l = 0; l <= n; ++l)
            c.equal({{"n", n}, {"l", l}}, "S1_lambda(n,l) at lambda = 0", row[l].eval(zero), Rational(l == n ? 1 : 0));
        const auto rs = values(g.r);
        for (std::size_t i = 0; i < rs.size(); ++i)
            c.equal({{"n", n}, {"r", rs[i]}}, "E^(r)_(n,lambda) at lambda = 0", deg_order[i][n].eval(zero),
                    plain_order[i][n]);
    }
}

}  // namespace suite_detail

// ---------------------------------------------------------------------------
// Catalog

enum class DSet { none, any, odd };

struct CatalogEntry {
    std::string id;
    std::string title;
    Grid defaults;
    bool degenerate;
    DSet d_kind;
    bool odd_m;
    std::function<void(const Grid&, suite_detail::Checker&)> run;
};

inline const std::vector<CatalogEntry>& catalog() {
    using namespace suite_detail;
    static const std::vector<CatalogEntry> entries = [] {
        const std::vector<long> bos_d{1, 2, 3, 5}, fer_d{1, 3, 5};
        auto n = [](long lo, long hi) { return std::optional<Range>(Range{lo, hi}); };
        std::vector<CatalogEntry> e;
        e.push_back({"T2.3", "distribution relation for type 2 Bernoulli polynomials", {n(0, 10), {}, {}, bos_d}, false,
                     DSet::any, false, distribution_bernoulli});
        e.push_back({"T2.4", "type 2 Bernoulli numbers of order r as multinomial convolutions",
                     {n(0, 10), n(1, 4), {}, {}}, false, DSet::none, false,
                     [](const Grid& g, Checker& c) { convolution(g, c, false); }});
        e.push_back({"T2.5", "central factorial numbers against order-r type 2 Bernoulli numbers",
                     {n(1, 12), n(1, 4), {}, {}}, false, DSet::none, false, central_factorial_delta});
        e.push_back({"T2.6", "sums of powers of the first m odd integers", {n(0, 10), {}, n(1, 50), {}}, false,
                     DSet::none, false, power_sum});
        e.push_back({"T2.7", "fully degenerate type 2 Bernoulli polynomial expansions", {n(0, 8), {}, {}, {}}, true,
                     DSet::none, false, [](const Grid& g, Checker& c) { degenerate_expansions(g, c, false); }});
        e.push_back({"T2.8", "fully degenerate type 2 Bernoulli numbers via Daehee numbers", {n(0, 8), {}, {}, {}},
                     true, DSet::none, false, daehee_expansion});
        e.push_back({"T2.9", "generalized falling factorial sums over odd integers", {n(0, 8), {}, n(1, 9), {}}, true,
                     DSet::none, false, degenerate_power_sum});
        e.push_back({"T2.11", "alternating sums of powers of odd integers", {n(0, 10), {}, n(1, 49), {}}, false,
                     DSet::none, true, alternating_power_sum});
        e.push_back({"T2.13", "distribution relation for type 2 Euler polynomials", {n(0, 10), {}, {}, fer_d}, false,
                     DSet::odd, false, distribution_euler});
        e.push_back({"T2.14", "type 2 Euler numbers of order r as multinomial convolutions",
                     {n(0, 10), n(1, 4), {}, {}}, false, DSet::none, false,
                     [](const Grid& g, Checker& c) { convolution(g, c, true); }});
        e.push_back({"T2.15", "binomial double sum over order-r type 2 Euler numbers", {n(0, 10), n(1, 4), {}, {}},
                     false, DSet::none, false, euler_delta});
        e.push_back({"T2.16", "degenerate type 2 Euler polynomial expansions", {n(0, 8), {}, {}, {}}, true,
                     DSet::none, false, [](const Grid& g, Checker& c) { degenerate_expansions(g, c, true); }});
        e.push_back({"T2.17", "alternating generalized falling factorial sums over odd integers",
                     {n(0, 8), {}, n(1, 9), {}}, true, DSet::none, true, degenerate_alternating_sum});
        e.push_back({"L2.1", "bosonic Witt formula for type 2 Bernoulli polynomials", {n(0, 12), {}, {}, {}}, false,
                     DSet::none, false, [](const Grid& g, Checker& c) { witt(g, c, Measure::bosonic); }});
        e.push_back({"L2.2", "bosonic distribution lemma", {n(0, 8), {}, {}, bos_d}, false, DSet::any, false,
                     [](const Grid& g, Checker& c) { distribution_lemma(g, c, Measure::bosonic); }});
        e.push_back({"L2.10", "fermionic Witt formula for type 2 Euler polynomials", {n(0, 12), {}, {}, {}}, false,
                     DSet::none, false, [](const Grid& g, Checker& c) { witt(g, c, Measure::fermionic); }});
        e.push_back({"L2.12", "fermionic distribution lemma", {n(0, 8), {}, {}, fer_d}, false, DSet::odd, false,
                     [](const Grid& g, Checker& c) { distribution_lemma(g, c, Measure::fermionic); }});
        e.push_back({"EQ8", "bosonic unit shift", {n(0, 10), {}, {}, {}}, false, DSet::none, false,
                     [](const Grid& g, Checker& c) { unit_shift(g, c, Measure::bosonic); }});
        e.push_back({"EQ10", "fermionic unit shift", {n(0, 10), {}, {}, {}}, false, DSet::none, false,
                     [](const Grid& g, Checker& c) { unit_shift(g, c, Measure::fermionic); }});
        e.push_back({"EQ22", "iterated bosonic Witt formula for order-r type 2 Bernoulli numbers",
                     {n(0, 8), n(1, 4), {}, {}}, false, DSet::none, false,
                     [](const Grid& g, Checker& c) { iterated_witt(g, c, Measure::bosonic); }});
        e.push_back({"EQ26", "binomial expansion of type 2 Bernoulli polynomials", {n(0, 16), {}, {}, {}}, false,
                     DSet::none, false, [](const Grid& g, Checker& c) { binomial_expansion(g, c, false); }});
        e.push_back({"EQ39", "bosonic integer shift", {n(0, 8), {}, n(1, 6), {}}, false, DSet::none, false,
                     integer_shift});
        e.push_back({"EQ44", "binomial expansion of type 2 Euler polynomials", {n(0, 16), {}, {}, {}}, false,
                     DSet::none, false, [](const Grid& g, Checker& c) { binomial_expansion(g, c, true); }});
        e.push_back({"EQ45", "fermionic odd shift", {n(0, 8), {}, {}, fer_d}, false, DSet::odd, false, odd_shift});
        e.push_back({"EQ52", "iterated fermionic Witt formula for order-r type 2 Euler numbers",
                     {n(0, 8), n(1, 4), {}, {}}, false, DSet::none, false,
                     [](const Grid& g, Checker& c) { iterated_witt(g, c, Measure::fermionic); }});
        e.push_back({"EQ63", "iterated fermionic Witt formula for order-r degenerate type 2 Euler numbers",
                     {n(0, 8), n(1, 4), {}, {}}, true, DSet::none, false, degenerate_iterated_witt});
        e.push_back({"ORACLE", "type 2 polynomials as half-shifted classical polynomials", {n(0, 16), {}, {}, {}},
                     false, DSet::none, false, half_shift_oracle});
        e.push_back({"PARITY", "parity of type 2 polynomials", {n(0, 16), {}, {}, {}}, false, DSet::none, false,
                     parity});
        e.push_back({"DEGEN0", "degenerate families at lambda = 0", {n(0, 12), n(1, 4), {}, {}}, true, DSet::none,
                     false, degeneration});
        return e;
    }();
    return entries;
}

inline const CatalogEntry* find_entry(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

/// Checks a grid against the entry's parameters and caps. Returns warnings
/// for caps exceeded with allow_exceed_caps; throws otherwise.
inline std::vector<std::string> validate_grid(const CatalogEntry& e, const Grid& g, const SuiteConfig& cfg) {
    std::vector<std::string> warnings;
    auto cap = [&](const std::string& what, long value, long limit) {
        if (value <= limit) return;
        const std::string msg = e.id + ": " + what + " = " + std::to_string(value) + " exceeds cap " +
                                std::to_string(limit);
        if (!cfg.allow_exceed_caps) throw std::invalid_argument(msg);
        warnings.push_back(msg);
    };
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument(e.id + ": " + what);
    };
    auto range_ok = [](const std::optional<Range>& r, long min) { return r && r->lo >= min && r->lo <= r->hi; };

    need(range_ok(g.n, 0), "n range must satisfy 0 <= lo <= hi");
    cap("n", g.n->hi, e.degenerate ? cfg.caps.n_max_degenerate : cfg.caps.n_max_plain);
    if (e.defaults.r) {
        need(range_ok(g.r, 1), "r range must satisfy 1 <= lo <= hi");
        cap("r", g.r->hi, cfg.caps.r_max);
    }
    if (e.defaults.m) {
        need(range_ok(g.m, 1), "m range must satisfy 1 <= lo <= hi");
        cap("m", g.m->hi, cfg.caps.m_max);
    }
    if (e.d_kind != DSet::none) {
        need(g.d && !g.d->empty(), "d values required");
        const std::vector<long> allowed = e.d_kind == DSet::odd ? std::vector<long>{1, 3, 5}
                                                                : std::vector<long>{1, 2, 3, 5};
        for (long d : *g.d) {
            need(d >= 1, "d must be positive");
            if (e.d_kind == DSet::odd) need(d % 2 == 1, "d must be odd");
            if (std::find(allowed.begin(), allowed.end(), d) == allowed.end()) {
                const std::string msg = e.id + ": d = " + std::to_string(d) + " outside the documented set";
                if (!cfg.allow_exceed_caps) throw std::invalid_argument(msg);
                warnings.push_back(msg);
            }
        }
    }
    return warnings;
}

/// Verifies one catalog entry over a grid (the entry's defaults when absent).
/// Throws std::invalid_argument for unknown ids and invalid grids.
inline TheoremReport verify(std::string_view id, const std::optional<Grid>& grid = std::nullopt,
                            const SuiteConfig& cfg = {}) {
    const CatalogEntry* e = find_entry(id);
    if (!e) throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
    TheoremReport rep;
    rep.id = e->id;
    rep.title = e->title;
    rep.grid = grid.value_or(e->defaults);
    rep.warnings = validate_grid(*e, rep.grid, cfg);

    const auto start = std::chrono::steady_clock::now();
    suite_detail::Checker checker(cfg);
    try {
        e->run(rep.grid, checker);
        rep.status = Status::pass;
    } catch (const suite_detail::Mismatch& m) {
        rep.status = Status::fail;
        rep.witness = m.witness;
    }
    rep.checked = checker.checked();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/// Runs the configured entries in catalog order. Errors are reported per
/// entry; unknown ids become error reports.
inline std::vector<TheoremReport> verify_all(const SuiteConfig& cfg = {}) {
    std::vector<std::string> ids = cfg.ids;
    if (ids.empty())
        for (const auto& e : catalog()) ids.push_back(e.id);
    std::vector<TheoremReport> out;
    for (const auto& e : catalog()) {
        if (std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
        const auto it = cfg.grids.find(e.id);
        const std::optional<Grid> grid = it == cfg.grids.end() ? std::nullopt : std::optional<Grid>(it->second);
        try {
            out.push_back(verify(e.id, grid, cfg));
        } catch (const std::exception& ex) {
            TheoremReport rep;
            rep.id = e.id;
            rep.title = e.title;
            rep.grid = grid.value_or(e.defaults);
            rep.status = Status::error;
            rep.error = ex.what();
            out.push_back(std::move(rep));
        }
    }
    for (const auto& id : ids)
        if (!find_entry(id)) {
            TheoremReport rep;
            rep.id = id;
            rep.status = Status::error;
            rep.error = "unknown identity id '" + id + "'";
            out.push_back(std::move(rep));
        }
    return out;
}

inline bool all_passed(const std::vector<TheoremReport>& reps) {
    return std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.status == Status::pass; });
}

// ---------------------------------------------------------------------------
// JSON

inline Json grid_to_json(const Grid& g) {
    Json j = Json::object();
    auto range = [](const Range& r) { return Json{{"lo", r.lo}, {"hi", r.hi}}; };
    if (g.n) j["n"] = range(*g.n);
    if (g.r) j["r"] = range(*g.r);
    if (g.m) j["m"] = range(*g.m);
    if (g.d) j["d"] = *g.d;
    return j;
}

inline Json report_to_json(const TheoremReport& r, bool include_timing = true) {
    Json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["grid"] = grid_to_json(r.grid);
    j["status"] = to_string(r.status);
    j["checked"] = r.checked;
    if (r.witness) {
        Json params = Json::object();
        for (const auto& [k, v] : r.witness->params) params[k] = v;
        j["witness"] = {{"params", params},
                        {"relation", r.witness->relation},
                        {"lhs", value_to_json(r.witness->lhs)},
                        {"rhs", value_to_json(r.witness->rhs)}};
    } else {
        j["witness"] = nullptr;
    }
    if (r.error) j["error"] = *r.error;
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline Json reports_to_json(const std::vector<TheoremReport>& reps, bool include_timing = true) {
    Json a = Json::array();
    for (const auto& r : reps) a.push_back(report_to_json(r, include_timing));
    return a;
}

}  // namespace specnum
