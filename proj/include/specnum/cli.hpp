#pragma once

// Command-line front end: gen, verify, padic.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 verification failure.

#include "specnum/families.hpp"
#include "specnum/identity_suite.hpp"
#include "specnum/padic_numeric.hpp"
#include "specnum/serialize.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace specnum {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int usage = 2;
inline constexpr int failed = 3;
}  // namespace exit_code

/// Raised for invalid user input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace cli_detail {

inline constexpr unsigned kMaxGenN = 64;
inline constexpr unsigned long kMaxPrime = 97;

inline const char* kFormatsHelp =
    "Values are exact. Rationals print as \"num/den\" (\"0/1\" for zero).\n"
    "JSON: one top-level array of records. A polynomial in one variable is an\n"
    "array of coefficients indexed by degree, with \"var\" and \"degree\"; a\n"
    "polynomial in x and lambda is a matrix whose row index is the x-degree and\n"
    "column index the lambda-degree, with \"deg_x\" and \"deg_lambda\" (-1 for zero).\n"
    "CSV: header row, comma separated. One-variable polynomials print as\n"
    "var[c0;c1;...], two-variable ones as [[row0];[row1];...] with rows indexed\n"
    "by x-degree.";

/// "symbolic" or a rational.
inline std::optional<Rational> parse_point(const std::string& name, const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("--" + name + " must be 'symbolic' or a rational, got '" + text + "'");
    }
}

inline Value specialize(const UniPoly& p, const std::optional<Rational>& at) {
    if (at) return p.eval(*at);
    return p;
}

inline Value specialize(const BiPoly& b, const std::optional<Rational>& x, const std::optional<Rational>& lambda) {
    if (x && lambda) return b.substitute(Var::x, *x).eval(*lambda);
    if (x) return b.substitute(Var::x, *x);
    if (lambda) return b.substitute(Var::lambda, *lambda);
    return b;
}

struct GenRow {
    unsigned n;
    std::optional<std::pair<std::string, unsigned>> extra;  // ("r", r) or ("l", l)
    Value value;
};

struct GenRequest {
    Family family;
    unsigned n_max;
    std::optional<unsigned> r;
    std::optional<Rational> x, lambda;
};

inline std::vector<GenRow> generate(const GenRequest& q) {
    std::vector<GenRow> rows;
    const unsigned N = q.n_max;
    auto uni = [&](const std::vector<UniPoly>& ps, const std::optional<Rational>& at) {
        for (unsigned n = 0; n <= N; ++n) rows.push_back({n, std::nullopt, specialize(ps[n], at)});
    };
    auto rat = [&](const std::vector<Rational>& vs, std::optional<unsigned> r) {
        for (unsigned n = 0; n <= N; ++n)
            rows.push_back({n, r ? std::optional(std::pair<std::string, unsigned>("r", *r)) : std::nullopt, vs[n]});
    };
    auto bi = [&](const std::vector<BiPoly>& ps) {
        for (unsigned n = 0; n <= N; ++n) rows.push_back({n, std::nullopt, specialize(ps[n], q.x, q.lambda)});
    };
    switch (q.family) {
        case Family::classical_bernoulli: uni(classical_bernoulli_polys(N), q.x); break;
        case Family::classical_euler: uni(classical_euler_polys(N), q.x); break;
        case Family::type2_bernoulli: uni(type2_bernoulli_polys(N), q.x); break;
        case Family::type2_euler: uni(type2_euler_polys(N), q.x); break;
        case Family::type2_bernoulli_order_r: rat(type2_bernoulli_order_numbers(N, *q.r), q.r); break;
        case Family::type2_euler_order_r: rat(type2_euler_order_numbers(N, *q.r), q.r); break;
        case Family::central_factorial_T: rat(central_factorial_T_column(N, *q.r), q.r); break;
        case Family::daehee: rat(daehee_numbers(N), std::nullopt); break;
        case Family::fully_degenerate_type2_bernoulli: bi(fully_degenerate_type2_bernoulli_polys(N)); break;
        case Family::carlitz_degenerate_type2_bernoulli: bi(carlitz_degenerate_type2_bernoulli_polys(N)); break;
        case Family::degenerate_type2_euler: bi(degenerate_type2_euler_polys(N)); break;
        case Family::degenerate_type2_euler_order_r: {
            const auto ps = degenerate_type2_euler_order_numbers(N, *q.r);
            for (unsigned n = 0; n <= N; ++n)
                rows.push_back({n, std::pair<std::string, unsigned>("r", *q.r), specialize(ps[n], q.lambda)});
            break;
        }
        case Family::degenerate_stirling1:
            for (unsigned n = 0; n <= N; ++n) {
                const auto row = degenerate_stirling1_row(n);
                for (unsigned l = 0; l <= n; ++l)
                    rows.push_back({n, std::pair<std::string, unsigned>("l", l), specialize(row[l], q.lambda)});
            }
            break;
    }
    return rows;
}

inline std::string index_name(Family f) { return f == Family::central_factorial_T ? "m" : "n"; }

inline void emit_gen(const GenRequest& q, const std::vector<GenRow>& rows, const std::string& format,
                     std::ostream& out) {
    const std::string idx = index_name(q.family);
    if (format == "csv") {
        out << idx;
        if (takes_order(q.family)) out << ",r";
        if (q.family == Family::degenerate_stirling1) out << ",l";
        out << ",value\n";
        for (const auto& row : rows) {
            out << row.n;
            if (row.extra) out << ',' << row.extra->second;
            out << ',' << value_to_csv(row.value) << '\n';
        }
        return;
    }
    Json a = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["family"] = to_string(q.family);
        j[idx] = row.n;
        if (row.extra) j[row.extra->first] = row.extra->second;
        if (has_x(q.family)) j["x"] = q.x ? q.x->str() : "symbolic";
        if (has_lambda(q.family)) j["lambda"] = q.lambda ? q.lambda->str() : "symbolic";
        const Json value = value_to_json(row.value);
        for (const auto& [k, v] : value.items()) j[k] = v;
        a.push_back(std::move(j));
    }
    out << a.dump(2) << '\n';
}

inline Grid apply_overrides(const CatalogEntry& e, std::optional<long> n_max, std::optional<long> r_max,
                            std::optional<long> m_max, const std::vector<long>& d) {
    Grid g = e.defaults;
    if (n_max) g.n->hi = *n_max;
    if (r_max && g.r) g.r->hi = *r_max;
    if (m_max && g.m) g.m->hi = *m_max;
    if (!d.empty() && g.d) g.d = d;
    return g;
}

inline std::vector<Rational> parse_coefficients(const std::string& text) {
    std::vector<Rational> cs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        try {
            cs.push_back(Rational::parse(item));
        } catch (const std::exception&) {
            throw UsageError("--f: malformed coefficient '" + item + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cs;
}

}  // namespace cli_detail

/// Runs the command line; args excludes the program name. The hook, if set,
/// is passed to the identity suite (used to exercise the failure path).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const ValueHook& hook = {}) {
    using namespace cli_detail;

    CLI::App app{"Exact special numbers, p-adic integrals and identity verification", "specnum"};
    app.footer(kFormatsHelp);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Tabulate a family for n = 0..n-max");
    std::string family_name, gen_format = "json", x_text = "symbolic", lambda_text = "symbolic";
    unsigned n_max_gen = 0;
    std::optional<unsigned> r_gen;
    std::string family_list;
    for (Family f : kAllFamilies) family_list += std::string(family_list.empty() ? "" : ", ") + std::string(to_string(f));
    gen->add_option("family", family_name, "One of: " + family_list)->required();
    gen->add_option("--n-max", n_max_gen, "Largest index (<= 64)")->required();
    gen->add_option("--r", r_gen, "Order, for the order-r families and central_factorial_T");
    auto* x_opt = gen->add_option("--x", x_text, "Rational value for x, or 'symbolic' (default)");
    auto* lambda_opt = gen->add_option("--lambda", lambda_text, "Rational value for lambda, or 'symbolic' (default)");
    gen->add_option("--format", gen_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // verify
    auto* ver = app.add_subcommand("verify", "Verify catalog identities exactly");
    std::vector<std::string> ids;
    std::optional<long> n_max_v, r_max_v, m_max_v;
    std::vector<long> d_values;
    bool allow_exceed = false, omit_timing = false;
    std::string verify_format = "json";
    ver->add_option("ids", ids, "Identity ids, or 'all'")->required();
    ver->add_option("--n-max", n_max_v, "Override the upper end of the n range");
    ver->add_option("--r-max", r_max_v, "Override the upper end of the r range");
    ver->add_option("--m-max", m_max_v, "Override the upper end of the m range");
    ver->add_option("--d", d_values, "Override the d values")->delimiter(',');
    ver->add_flag("--allow-exceed-caps", allow_exceed, "Run grids beyond the default caps, with warnings");
    ver->add_flag("--omit-timing", omit_timing, "Leave elapsed_ms out of the reports");
    ver->add_option("--format", verify_format, "json")->check(CLI::IsMember({"json"}));

    // padic
    auto* pad = app.add_subcommand("padic", "Riemann sums of a p-adic integral against its exact value");
    std::string kind, f_text, padic_format = "json";
    unsigned long p = 0;
    unsigned N_max = 0;
    pad->add_option("kind", kind, "bosonic or fermionic")->required()->check(CLI::IsMember({"bosonic", "fermionic"}));
    pad->add_option("--f", f_text, "Coefficients a0,a1,... of f(x) = sum a_k x^k")->required();
    pad->add_option("--p", p, "Odd prime <= 97")->required();
    pad->add_option("--N-max", N_max, "Largest stage N (1..6)")->required();
    pad->add_option("--format", padic_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (*gen) {
            const auto family = parse_family(family_name);
            if (!family) throw UsageError("unknown family '" + family_name + "'");
            if (n_max_gen > kMaxGenN) throw UsageError("--n-max must be at most " + std::to_string(kMaxGenN));
            if (takes_order(*family) != r_gen.has_value())
                throw UsageError(takes_order(*family) ? "--r is required for " + family_name
                                                      : "--r does not apply to " + family_name);
            if (r_gen && *r_gen < 1) throw UsageError("--r must be positive");
            if (x_opt->count() && !has_x(*family)) throw UsageError("--x does not apply to " + family_name);
            if (lambda_opt->count() && !has_lambda(*family))
                throw UsageError("--lambda does not apply to " + family_name);
            GenRequest q{*family, n_max_gen, r_gen, parse_point("x", x_text), parse_point("lambda", lambda_text)};
            emit_gen(q, generate(q), gen_format, out);
            return exit_code::ok;
        }

        if (*ver) {
            SuiteConfig cfg;
            cfg.allow_exceed_caps = allow_exceed;
            cfg.hook = hook;
            const bool all = std::find(ids.begin(), ids.end(), "all") != ids.end();
            if (all && ids.size() > 1) throw UsageError("'all' cannot be combined with other ids");
            if (!all) {
                for (const auto& id : ids)
                    if (!find_entry(id)) throw UsageError("unknown identity id '" + id + "'");
                cfg.ids = ids;
            }
            for (const auto& e : catalog()) {
                if (!all && std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
                const Grid g = apply_overrides(e, n_max_v, r_max_v, m_max_v, d_values);
                try {
                    validate_grid(e, g, cfg);
                } catch (const std::invalid_argument& ex) {
                    throw UsageError(ex.what());
                }
                cfg.grids[e.id] = g;
            }
            const auto reports = verify_all(cfg);
            out << reports_to_json(reports, !omit_timing).dump(2) << '\n';
            for (const auto& r : reports)
                if (r.status == Status::error) return exit_code::internal;
            return all_passed(reports) ? exit_code::ok : exit_code::failed;
        }

        if (*pad) {
            if (p > kMaxPrime || p < 3 || !is_prime(p)) throw UsageError("--p must be an odd prime <= 97");
            if (N_max < 1 || N_max > kMaxRiemannStage) throw UsageError("--N-max must be in 1..6");
            const auto cs = parse_coefficients(f_text);
            for (const auto& c : cs)
                if (mpz_divisible_ui_p(c.denominator().get_mpz_t(), p))
                    throw UsageError("--f: coefficient " + c.str() + " has a denominator divisible by p");
            const UniPoly f(Var::x, cs);
            if (f.degree() > static_cast<int>(kMaxIntegrandDegree))
                throw UsageError("--f: degree exceeds " + std::to_string(kMaxIntegrandDegree));
            const auto rep = convergence_check(f, p, parse_measure(kind), N_max);

            auto residue = [&](const ConvergenceRow& row) -> std::optional<std::string> {
                if (!row.approx.is_zero() && padic_valuation(row.approx, p) < 0) return std::nullopt;
                return PadicApprox::from_rational(row.approx, p, row.N, row.N).residue.get_str();
            };
            auto valuation = [](const ConvergenceRow& row) {
                return row.valuation ? std::to_string(*row.valuation) : std::string("inf");
            };
            if (padic_format == "csv") {
                out << "N,approx,residue,error_valuation,bound,exact,loss\n";
                for (const auto& row : rep.rows)
                    out << row.N << ',' << row.approx.str() << ',' << residue(row).value_or("") << ','
                        << valuation(row) << ',' << row.bound << ',' << rep.exact.str() << ',' << rep.loss << '\n';
            } else {
                Json a = Json::array();
                for (const auto& row : rep.rows) {
                    Json j;
                    j["measure"] = kind;
                    j["p"] = p;
                    j["N"] = row.N;
                    j["approx"] = row.approx.str();
                    const auto res = residue(row);
                    j["residue"] = res ? Json(*res) : Json(nullptr);
                    j["modulus"] = ipow(p, row.N).get_str();
                    j["error"] = row.error.str();
                    if (row.valuation) j["error_valuation"] = *row.valuation;
                    else j["error_valuation"] = "inf";
                    j["bound"] = row.bound;
                    j["exact"] = rep.exact.str();
                    j["loss"] = rep.loss;
                    a.push_back(std::move(j));
                }
                out << a.dump(2) << '\n';
            }
            return exit_code::ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
    return exit_code::usage;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace specnum
