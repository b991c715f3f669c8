#include "specnum/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace specnum;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const ValueHook& hook = {}) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err, hook);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> v;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) v.push_back(cell);
    return v;
}

}  // namespace

TEST_CASE("gen examples", "[cli]") {
    const auto csv = run({"gen", "type2_bernoulli", "--n-max", "4", "--x", "0", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(lines(csv.out) == std::vector<std::string>{"n,value", "0,1/1", "1,0/1", "2,-1/12", "3,0/1", "4,7/240"});

    const auto daehee = run({"gen", "daehee", "--n-max", "2", "--format", "json"});
    REQUIRE(daehee.code == 0);
    const auto dj = Json::parse(daehee.out);
    REQUIRE(dj.size() == 3);
    CHECK(dj[0]["value"] == "1/1");
    CHECK(dj[1]["value"] == "-1/2");
    CHECK(dj[2]["value"] == "2/3");

    const auto carlitz = run({"gen", "carlitz_degenerate_type2_bernoulli", "--n-max", "2", "--x", "symbolic",
                              "--lambda", "symbolic", "--format", "json"});
    REQUIRE(carlitz.code == 0);
    const auto cj = Json::parse(carlitz.out);
    // x^2 - lambda^2/6 - 1/12, rows indexed by the power of x
    const BiPoly expected({{Rational(-1, 12), 0, Rational(-1, 6)}, {}, {1}});
    CHECK(std::get<BiPoly>(value_from_json(cj[2])) == expected);
    CHECK(cj[2]["deg_x"] == 2);
    CHECK(cj[2]["deg_lambda"] == 2);
}

TEST_CASE("gen with parameters", "[cli]") {
    const auto t = run({"gen", "central_factorial_T", "--n-max", "4", "--r", "2", "--format", "csv"});
    REQUIRE(t.code == 0);
    CHECK(lines(t.out) == std::vector<std::string>{"m,r,value", "0,2,0/1", "1,2,0/1", "2,2,1/1", "3,2,0/1", "4,2,1/1"});

    const auto s = run({"gen", "degenerate_stirling1", "--n-max", "2", "--lambda", "0", "--format", "csv"});
    REQUIRE(s.code == 0);
    CHECK(lines(s.out) ==
          std::vector<std::string>{"n,l,value", "0,0,1/1", "1,0,0/1", "1,1,1/1", "2,0,0/1", "2,1,0/1", "2,2,1/1"});

    const auto order = run({"gen", "type2_euler_order_r", "--n-max", "2", "--r", "2", "--format", "csv"});
    REQUIRE(order.code == 0);
    CHECK(lines(order.out).back() == "2,2,-1/2");

    // x substituted, lambda symbolic: a polynomial in lambda
    const auto half = run({"gen", "carlitz_degenerate_type2_bernoulli", "--n-max", "1", "--x", "0", "--format", "csv"});
    CHECK(lines(half.out).back() == "1,lambda[0/1;1/2]");
}

TEST_CASE("gen usage errors", "[cli]") {
    CHECK(run({"gen", "nope", "--n-max", "3"}).code == 2);
    CHECK(run({"gen", "daehee", "--n-max", "3", "--x", "1"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli", "--n-max", "3", "--lambda", "1"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli", "--n-max", "3", "--x", "a/b"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli", "--n-max", "3", "--x", "1/0"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli_order_r", "--n-max", "3"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli_order_r", "--n-max", "3", "--r", "0"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli", "--n-max", "3", "--r", "2"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli", "--n-max", "65"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli", "--n-max", "3", "--format", "xml"}).code == 2);
    CHECK(run({"gen", "type2_bernoulli"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("row index is the x-degree") != std::string::npos);
}

TEST_CASE("CSV and JSON encode identical values", "[cli][property]") {
    for (Family f : kAllFamilies) {
        std::vector<std::vector<std::string>> variants{{}};
        if (has_x(f)) variants.push_back({"--x", "-3/2"});
        if (has_lambda(f)) variants.push_back({"--lambda", "1/3"});
        if (has_x(f) && has_lambda(f)) variants.push_back({"--x", "2", "--lambda", "-1/5"});
        for (const auto& extra : variants) {
            std::vector<std::string> base{"gen", std::string(to_string(f)), "--n-max", "6"};
            if (takes_order(f)) base.insert(base.end(), {"--r", "3"});
            base.insert(base.end(), extra.begin(), extra.end());
            auto csv_args = base, json_args = base;
            csv_args.insert(csv_args.end(), {"--format", "csv"});
            json_args.insert(json_args.end(), {"--format", "json"});
            const auto csv = run(csv_args), json = run(json_args);
            INFO(to_string(f) << " " << extra.size());
            REQUIRE(csv.code == 0);
            REQUIRE(json.code == 0);
            const auto rows = lines(csv.out);
            const auto records = Json::parse(json.out);
            REQUIRE(records.size() + 1 == rows.size());
            for (std::size_t i = 0; i < records.size(); ++i) {
                const auto cells = split(rows[i + 1]);
                const Value from_csv = value_from_csv(cells.back());
                REQUIRE(from_csv == value_from_json(records[i]));
                REQUIRE(value_to_csv(from_csv) == cells.back());
                REQUIRE(std::to_string(records[i].value("n", records[i].value("m", -1))) == cells.front());
            }
        }
    }
}

TEST_CASE("verify exit codes", "[cli]") {
    const auto t26 = run({"verify", "T2.6", "--n-max", "10", "--m-max", "50"});
    CHECK(t26.code == 0);
    const auto j = Json::parse(t26.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["status"] == "pass");
    CHECK(j[0]["checked"] == 11 * 50);

    CHECK(run({"verify", "BOGUS"}).code == 2);
    CHECK(run({"verify", "T2.6", "BOGUS"}).code == 2);
    CHECK(run({"verify", "all", "T2.6"}).code == 2);
    CHECK(run({"verify", "L2.1", "--n-max", "21"}).code == 2);
    CHECK(run({"verify", "T2.13", "--d", "2"}).code == 2);
    CHECK(run({"verify", "T2.3", "--d", "1,2,7"}).code == 2);
    CHECK(run({"verify", "T2.3", "--n-max", "3", "--d", "1,2,7", "--allow-exceed-caps"}).code == 0);

    const auto corrupted = run({"verify", "T2.5"}, [](std::string_view family, unsigned n, unsigned r, const Rational& v) {
        return family == "central_factorial_T" && n == 3 && r == 1 ? v + Rational(1, 2) : v;
    });
    CHECK(corrupted.code == 3);
    const auto cj = Json::parse(corrupted.out);
    CHECK(cj[0]["status"] == "fail");
    CHECK(cj[0]["witness"]["params"]["n"] == 3);
}

TEST_CASE("verify all is deterministic", "[cli]") {
    const auto a = run({"verify", "all", "--omit-timing"});
    const auto b = run({"verify", "all", "--omit-timing"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).size() == catalog().size());
    CHECK(a.out.find("elapsed_ms") == std::string::npos);
    CHECK(run({"verify", "EQ8"}).out.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("padic examples", "[cli]") {
    const auto bos = run({"padic", "bosonic", "--f", "0,1", "--p", "5", "--N-max", "3"});
    REQUIRE(bos.code == 0);
    const auto bj = Json::parse(bos.out);
    REQUIRE(bj.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(bj[i]["exact"] == "-1/2");
        CHECK(bj[i]["error_valuation"].get<long>() >= i + 1);
    }

    const auto fer = run({"padic", "fermionic", "--f", "0,1", "--p", "5", "--N-max", "3"});
    REQUIRE(fer.code == 0);
    const auto fj = Json::parse(fer.out);
    CHECK(fj[2]["exact"] == "-1/2");
    CHECK(fj[2]["residue"] == "62");
    CHECK(fj[2]["modulus"] == "125");

    const auto one = run({"padic", "bosonic", "--f", "1", "--p", "7", "--N-max", "2", "--format", "csv"});
    REQUIRE(one.code == 0);
    CHECK(lines(one.out) == std::vector<std::string>{"N,approx,residue,error_valuation,bound,exact,loss",
                                                     "1,1/1,1,inf,1,1/1,0", "2,1/1,1,inf,2,1/1,0"});

    // x^4 at p = 5: stage sums carry B_4's denominator, so the residue is absent
    const auto q = run({"padic", "bosonic", "--f", "0,0,0,0,1", "--p", "5", "--N-max", "2"});
    REQUIRE(q.code == 0);
    CHECK(Json::parse(q.out)[0]["exact"] == "-1/30");
    CHECK(Json::parse(q.out)[0]["residue"].is_null());
}

TEST_CASE("padic usage errors", "[cli]") {
    CHECK(run({"padic", "bosonic", "--f", "1/5", "--p", "5", "--N-max", "2"}).code == 2);
    CHECK(run({"padic", "bosonic", "--f", "1", "--p", "9", "--N-max", "2"}).code == 2);
    CHECK(run({"padic", "bosonic", "--f", "1", "--p", "2", "--N-max", "2"}).code == 2);
    CHECK(run({"padic", "bosonic", "--f", "1", "--p", "101", "--N-max", "2"}).code == 2);
    CHECK(run({"padic", "bosonic", "--f", "1", "--p", "5", "--N-max", "7"}).code == 2);
    CHECK(run({"padic", "bosonic", "--f", "1", "--p", "5", "--N-max", "0"}).code == 2);
    CHECK(run({"padic", "bosonic", "--f", "1,,2", "--p", "5", "--N-max", "2"}).code == 2);
    CHECK(run({"padic", "umbral", "--f", "1", "--p", "5", "--N-max", "2"}).code == 2);
}
