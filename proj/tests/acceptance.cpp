// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any
// criterion fails. All comparisons are exact.

#include "oracles.hpp"

#include "specnum/cli.hpp"
#include "specnum/families.hpp"
#include "specnum/identity_suite.hpp"
#include "specnum/padic_functionals.hpp"
#include "specnum/padic_numeric.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace specnum;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

void require_pass(Outcome& o, const std::string& id, const std::optional<Grid>& grid = std::nullopt) {
    const auto rep = verify(id, grid);
    std::string what = id + " " + std::string(to_string(rep.status));
    if (rep.witness) what += " at " + report_to_json(rep, false)["witness"]["params"].dump();
    o.require(rep.status == Status::pass && rep.checked > 0, what);
}

Grid nr(long n_hi, long r_lo, long r_hi) { return Grid{Range{0, n_hi}, Range{r_lo, r_hi}, {}, {}}; }

Outcome oracle_shift() {
    Outcome o;
    const auto b = type2_bernoulli_polys(16), e = type2_euler_polys(16);
    const auto B = classical_bernoulli_polys(16), E = classical_euler_polys(16);
    for (unsigned n = 0; n <= 16; ++n) {
        const auto tag = " n=" + std::to_string(n);
        o.require(b[n] == oracle::shift(oracle::bernoulli_poly(n), Rational(1, 2)), "b_n vs recurrence B_n(x+1/2)" + tag);
        o.require(e[n] == oracle::shift(oracle::euler_poly(n), Rational(1, 2)), "E_n vs recurrence E*_n(x+1/2)" + tag);
        o.require(b[n] == oracle::shift(B[n], Rational(1, 2)), "b_n vs B_n(x+1/2)" + tag);
        o.require(e[n] == oracle::shift(E[n], Rational(1, 2)), "E_n vs E*_n(x+1/2)" + tag);
    }
    return o;
}

Outcome witt_formulas() {
    Outcome o;
    require_pass(o, "L2.1");
    require_pass(o, "L2.10");
    for (const char* id : {"EQ22", "EQ52", "EQ63"}) {
        require_pass(o, id, nr(12, 1, 2));
        require_pass(o, id, nr(8, 3, 4));
    }
    const auto fully = fully_degenerate_type2_bernoulli_polys(12);
    const auto deul = degenerate_type2_euler_polys(12);
    for (unsigned n = 0; n <= 12; ++n) {
        o.require(degenerate_witt(n, true, Measure::bosonic) == fully[n], "degenerate bosonic Witt n=" + std::to_string(n));
        o.require(degenerate_witt(n, true, Measure::fermionic) == deul[n],
                  "degenerate fermionic Witt n=" + std::to_string(n));
    }
    return o;
}

Outcome distribution() {
    Outcome o;
    require_pass(o, "T2.3", Grid{Range{0, 10}, {}, {}, std::vector<long>{1, 2, 3, 5}});
    require_pass(o, "T2.13", Grid{Range{0, 10}, {}, {}, std::vector<long>{1, 3, 5}});
    return o;
}

Outcome convolutions() {
    Outcome o;
    require_pass(o, "T2.4", nr(10, 1, 4));
    require_pass(o, "T2.14", nr(10, 1, 4));
    require_pass(o, "T2.5", Grid{Range{1, 12}, Range{1, 4}, {}, {}});
    require_pass(o, "T2.15", nr(10, 1, 4));
    return o;
}

Outcome odd_power_sums() {
    Outcome o;
    require_pass(o, "T2.6", Grid{Range{0, 10}, {}, Range{1, 50}, {}});
    require_pass(o, "T2.11", Grid{Range{0, 10}, {}, Range{1, 49}, {}});
    const auto b3 = type2_bernoulli_poly(3);
    const auto e2 = type2_euler_poly(2);
    auto odd_sum = [&](long m) { return Rational(4, 3) * (b3.eval(m) - b3.eval(0)); };
    o.require(odd_sum(2) == 10, "1 + 9 = 10");
    o.require(Rational(2) * (e2.eval(3) + e2.eval(0)) == 17, "1 - 9 + 25 = 17");
    return o;
}

Outcome degenerate_identities() {
    Outcome o;
    for (const char* id : {"T2.7", "T2.8", "T2.16"}) require_pass(o, id, Grid{Range{0, 8}, {}, {}, {}});
    require_pass(o, "T2.9", Grid{Range{0, 8}, {}, Range{1, 9}, {}});
    require_pass(o, "T2.17", Grid{Range{0, 8}, {}, Range{1, 9}, {}});
    return o;
}

Outcome degeneration() {
    Outcome o;
    require_pass(o, "DEGEN0", nr(12, 1, 4));
    return o;
}

Outcome padic_convergence() {
    Outcome o;
    for (unsigned long p : {5UL, 7UL})
        for (unsigned k = 0; k <= 4; ++k)
            for (Measure m : {Measure::bosonic, Measure::fermionic}) {
                const UniPoly f = UniPoly::monomial(Var::x, 1, k);
                const auto rep = convergence_check(f, p, m, 4);
                const std::string tag = std::string(to_string(m)) + " x^" + std::to_string(k) + " p=" +
                                        std::to_string(p);
                o.require(rep.converges(), tag + " valuations decrease or miss the bound");
                o.require(rep.exact == exact_integral(f, m), tag + " exact value");
                for (const auto& row : rep.rows) {
                    // the stage sum against a direct enumeration
                    const long M = ipow(p, row.N).get_si();
                    Rational direct;
                    for (long x = 0; x < M; ++x) {
                        const Rational v = pow(Rational(x), k);
                        direct += m == Measure::bosonic ? v : (x % 2 == 0 ? v : -v);
                    }
                    if (m == Measure::bosonic) direct /= Rational(M);
                    o.require(row.approx == direct, tag + " stage " + std::to_string(row.N) + " sum");
                }
            }
    const Rational s = volkenborn_riemann(UniPoly::monomial(Var::x, 1, 2), 5, 2);
    o.require(s == 196, "stage-2 sum of x^2 at p = 5 is 196");
    o.require(padic_valuation(s - Rational(1, 6), 5) >= 2, "196 = 1/6 mod 25");
    const Rational t = fermionic_riemann(UniPoly::monomial(Var::x, 1, 1), 5, 3);
    o.require(t == 62, "alternating stage-3 sum of x at p = 5 is 62");
    o.require(PadicApprox::from_rational(Rational(-1, 2), 5, 3, 3).residue == 62, "62 = -1/2 mod 125");
    return o;
}

Outcome suite_determinism() {
    Outcome o;
    std::string first;
    for (int pass = 0; pass < 2; ++pass) {
        std::ostringstream out, err;
        const int code = run_cli(std::vector<std::string>{"verify", "all", "--omit-timing"}, out, err);
        o.require(code == 0, "verify all exit code " + std::to_string(code) + " " + err.str());
        if (pass == 0) first = out.str();
        else o.require(out.str() == first, "runs differ");
    }
    o.require(Json::parse(first).size() == catalog().size(), "report count");
    return o;
}

struct Criterion {
    int number;
    const char* name;
    double budget_ms;  // 0: no budget
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "oracle shift: type 2 polynomials are half-shifted classical polynomials, n <= 16", 2000, oracle_shift},
        {2, "Witt formulas: functional route equals generating-function route", 10000, witt_formulas},
        {3, "distribution relations for d in {1,2,3,5} and odd d in {1,3,5}, n <= 10", 0, distribution},
        {4, "order-r convolutions and delta identities, r <= 4", 0, convolutions},
        {5, "odd power sums and alternating odd power sums against brute force", 0, odd_power_sums},
        {6, "degenerate identities as polynomial identities in lambda", 0, degenerate_identities},
        {7, "degenerate families reduce to their counterparts at lambda = 0", 0, degeneration},
        {8, "p-adic Riemann sums converge with the computed precision loss", 5000, padic_convergence},
        {9, "verify all: exit 0, under 60 s, byte-identical reruns", 60000, suite_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.budget_ms > 0 && ms >= c.budget_ms) {
            o.ok = false;
            o.detail = "over budget";
        }
        std::printf("%s criterion %d: %s (%.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, ms,
                    o.ok ? "" : " -- ", o.detail.c_str());
        if (!o.ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
