#include "specnum/identity_suite.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace specnum;

namespace {

Grid grid_n(long lo, long hi) { return Grid{Range{lo, hi}, {}, {}, {}}; }

}  // namespace

TEST_CASE("catalog ids are unique and known", "[suite]") {
    std::set<std::string> seen;
    for (const auto& e : catalog()) {
        CHECK(seen.insert(e.id).second);
        CHECK(e.defaults.n);
    }
    CHECK(seen.size() == 29);
    for (const char* id : {"T2.3", "T2.5", "T2.9", "T2.17", "L2.1", "L2.12", "EQ8", "EQ39", "EQ63", "DEGEN0"})
        CHECK(seen.count(id) == 1);
    CHECK(find_entry("T9.9") == nullptr);
}

TEST_CASE("every entry passes on its default grid", "[suite]") {
    for (const auto& e : catalog()) {
        INFO(e.id);
        const auto rep = verify(e.id);
        CHECK(rep.status == Status::pass);
        CHECK(rep.checked > 0);
        CHECK_FALSE(rep.witness);
    }
}

TEST_CASE("degenerate odd power sum at one point", "[suite]") {
    const auto rep = verify("T2.9", Grid{Range{1, 1}, {}, Range{2, 2}, {}});
    CHECK(rep.status == Status::pass);
    CHECK(rep.checked == 1);
    // 1 + 3 = 4 on both sides; confirm the numbers directly
    const auto b = carlitz_degenerate_type2_bernoulli_polys(2);
    const UniPoly lhs = b[2].substitute(Var::x, Rational(2)) - b[2].substitute(Var::x, Rational(0));
    CHECK(lhs == UniPoly::constant(Var::lambda, 4));
}

TEST_CASE("odd power sum at one point", "[suite]") {
    // 1^2 + 3^2 + 5^2 = 35
    const auto rep = verify("T2.6", Grid{Range{2, 2}, {}, Range{3, 3}, {}});
    CHECK(rep.status == Status::pass);
    CHECK(rep.checked == 1);
}

TEST_CASE("grid validation", "[suite]") {
    CHECK_THROWS_AS(verify("nope"), std::invalid_argument);
    CHECK_THROWS_AS(verify("L2.1", grid_n(0, 21)), std::invalid_argument);
    CHECK_THROWS_AS(verify("T2.7", grid_n(0, 13)), std::invalid_argument);
    CHECK_THROWS_AS(verify("T2.4", Grid{Range{0, 3}, Range{1, 5}, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(verify("T2.6", Grid{Range{0, 3}, {}, Range{1, 51}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(verify("T2.13", Grid{Range{0, 3}, {}, {}, std::vector<long>{2}}), std::invalid_argument);
    CHECK_THROWS_AS(verify("EQ45", Grid{Range{0, 3}, {}, {}, std::vector<long>{4}}), std::invalid_argument);
    CHECK_THROWS_AS(verify("T2.3", Grid{Range{0, 3}, {}, {}, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(verify("L2.1", grid_n(3, 2)), std::invalid_argument);

    SuiteConfig loose;
    loose.allow_exceed_caps = true;
    const auto rep = verify("L2.1", grid_n(20, 21), loose);
    CHECK(rep.status == Status::pass);
    CHECK(rep.warnings.size() == 1);
    // the parity restriction is structural, not a cap
    CHECK_THROWS_AS(verify("T2.13", Grid{Range{0, 3}, {}, {}, std::vector<long>{2}}, loose), std::invalid_argument);
    const auto d7 = verify("T2.13", Grid{Range{0, 4}, {}, {}, std::vector<long>{7}}, loose);
    CHECK(d7.status == Status::pass);
    CHECK(d7.warnings.size() == 1);
}

TEST_CASE("odd-m entries skip even m", "[suite]") {
    const auto rep = verify("T2.11", Grid{Range{0, 0}, {}, Range{1, 4}, {}});
    CHECK(rep.checked == 2);  // m = 1, 3
}

TEST_CASE("corrupted central factorial value is caught with a witness", "[suite]") {
    SuiteConfig cfg;
    cfg.hook = [](std::string_view family, unsigned n, unsigned r, const Rational& v) {
        return family == "central_factorial_T" && n == 4 && r == 2 ? v + Rational(1) : v;
    };
    const auto rep = verify("T2.5", std::nullopt, cfg);
    REQUIRE(rep.status == Status::fail);
    REQUIRE(rep.witness);
    // first failing point in lexicographic (n, r) order
    const Params expected{{"n", 4}, {"r", 2}};
    CHECK(rep.witness->params == expected);
    CHECK(std::get<Rational>(rep.witness->rhs) == 0);
    CHECK_FALSE(std::get<Rational>(rep.witness->lhs) == 0);

    const auto json = report_to_json(rep);
    CHECK(json["status"] == "fail");
    CHECK(json["witness"]["params"]["n"] == 4);
    CHECK(json["witness"]["lhs"]["kind"] == "rational");
}

TEST_CASE("corrupted type 2 Bernoulli number fails the convolution", "[suite]") {
    SuiteConfig cfg;
    cfg.hook = [](std::string_view family, unsigned n, unsigned, const Rational& v) {
        return family == "type2_bernoulli" && n == 2 ? v * Rational(2) : v;
    };
    const auto rep = verify("T2.4", std::nullopt, cfg);
    REQUIRE(rep.status == Status::fail);
    const Params expected{{"n", 2}, {"r", 1}};
    CHECK(rep.witness->params == expected);
}

TEST_CASE("verify_all filtering, ordering and determinism", "[suite]") {
    SuiteConfig cfg;
    cfg.ids = {"L2.10", "T2.3", "EQ8"};
    cfg.grids["T2.3"] = Grid{Range{0, 4}, {}, {}, std::vector<long>{1, 2}};
    const auto a = verify_all(cfg);
    REQUIRE(a.size() == 3);
    CHECK(a[0].id == "T2.3");
    CHECK(a[1].id == "L2.10");
    CHECK(a[2].id == "EQ8");
    CHECK(a[0].checked == 10);
    CHECK(all_passed(a));
    const auto b = verify_all(cfg);
    CHECK(reports_to_json(a, false).dump() == reports_to_json(b, false).dump());
    CHECK_FALSE(reports_to_json(a, false)[0].contains("elapsed_ms"));
    CHECK(reports_to_json(a, true)[0].contains("elapsed_ms"));

    SuiteConfig bad;
    bad.ids = {"T2.3", "X1"};
    const auto c = verify_all(bad);
    REQUIRE(c.size() == 2);
    CHECK(c[1].status == Status::error);
    CHECK_FALSE(all_passed(c));

    SuiteConfig over;
    over.ids = {"L2.1"};
    over.grids["L2.1"] = grid_n(0, 30);
    const auto d = verify_all(over);
    REQUIRE(d.size() == 1);
    CHECK(d[0].status == Status::error);
    CHECK(d[0].error);
}

TEST_CASE("single-point examples", "[suite]") {
    CHECK(verify("T2.5", Grid{Range{2, 2}, Range{2, 2}, {}, {}}).status == Status::pass);
    CHECK(central_factorial_T(2, 2) * type2_bernoulli_order(0, 2) == 1);

    const auto t215 = verify("T2.15", Grid{Range{0, 0}, Range{3, 3}, {}, {}});
    CHECK(t215.status == Status::pass);
    CHECK(t215.checked == 1);
    CHECK(verify("T2.11", Grid{Range{2, 2}, {}, Range{3, 3}, {}}).status == Status::pass);

    SuiteConfig cfg;
    cfg.ids = {"T2.14", "T2.4"};
    cfg.grids["T2.4"] = Grid{Range{0, 10}, Range{1, 2}, {}, {}};
    cfg.grids["T2.14"] = Grid{Range{0, 10}, Range{1, 2}, {}, {}};
    const auto reps = verify_all(cfg);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].id == "T2.4");
    CHECK(reps[1].checked == 22);
    CHECK(all_passed(reps));
}
