/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/errors.hpp"
#include "dsv/property.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dsv;

namespace {

DecimalReal d(const char* s) { return DecimalReal::from_string(s); }

OracleVerdict run_oracle(const Property& p, const Dataset& ds) {
    REQUIRE(p.oracle.has_value());
    return (*p.oracle)(ds, distinct_labels(ds));
}

} // namespace

TEST_CASE("min_cardinality oracle") {
    Dataset fx = testing::fixture_dataset();
    CHECK(run_oracle(builtin_min_cardinality(100), fx) == OracleVerdict::violated);
    CHECK(run_oracle(builtin_min_cardinality(0), fx) == OracleVerdict::holds);
    CHECK(run_oracle(builtin_min_cardinality(10), fx) == OracleVerdict::holds);  // boundary
    CHECK(run_oracle(builtin_min_cardinality(11), fx) == OracleVerdict::violated);
    CHECK_THROWS_AS(builtin_min_cardinality(-1), error);
}

TEST_CASE("min_cardinality emission") {
    Property p = builtin_min_cardinality(100);
    CHECK(p.assertions == std::vector<std::string>{"(>= m T)"});
    REQUIRE(p.params.size() == 1);
    CHECK(p.params[0].name == "T");
    CHECK(param_literal(p.params[0].value) == "100");
    CHECK(param_sort(p.params[0].value) == "Int");
}

TEST_CASE("minmax oracle") {
    Dataset fx = testing::fixture_dataset();
    CHECK(run_oracle(builtin_minmax_normalized(d("-1"), d("1")), fx) == OracleVerdict::holds);
    // the matrix contains -0.092742, so [0, 1] fails
    CHECK(run_oracle(builtin_minmax_normalized(d("0"), d("1")), fx) ==
          OracleVerdict::violated);

    Dataset flat = testing::make_dataset({{"-1", "-1"}, {"-1", "-1"}}, {"0", "0"});
    CHECK(run_oracle(builtin_minmax_normalized(d("-1"), d("1")), flat) ==
          OracleVerdict::holds);  // cells equal to lo are inside

    CHECK_THROWS_AS(builtin_minmax_normalized(d("1"), d("1")), error);
    CHECK_THROWS_AS(builtin_minmax_normalized(d("2"), d("1")), error);
}

TEST_CASE("minmax emission quantifies rows by m and columns by n") {
    Property p = builtin_minmax_normalized(d("-1"), d("1"));
    REQUIRE(p.assertions.size() == 1);
    CHECK(p.assertions[0] ==
          "(not (exists ((i Int) (j Int)) (and (>= i 0) (< i m) (>= j 0) (< j n) "
          "(or (< (select (select D i) j) min) (> (select (select D i) j) max)))))");
}

TEST_CASE("coverage_expanded oracle on the example dataset") {
    Dataset fx = testing::fixture_dataset();
    // delta = 1: the corner (-1,-1) is farther than 1 from every row
    CHECK(run_oracle(builtin_coverage_expanded(d("1"), d("-1"), d("1"), fx.m(), fx.n()), fx) ==
          OracleVerdict::violated);
    // delta = 10 dwarfs the diameter of [-1,1]^2
    CHECK(run_oracle(builtin_coverage_expanded(d("10"), d("-1"), d("1"), fx.m(), fx.n()), fx) ==
          OracleVerdict::holds);
}

TEST_CASE("coverage_expanded oracle, farthest-corner closed form") {
    // single example at the center: the farthest point of [-1,1]^2 is a
    // corner at distance sqrt(2) ~= 1.41421
    Dataset center = testing::make_dataset({{"0", "0"}}, {"0"});
    CHECK(run_oracle(builtin_coverage_expanded(d("1.5"), d("-1"), d("1"), 1, 2), center) ==
          OracleVerdict::holds);
    CHECK(run_oracle(builtin_coverage_expanded(d("1.4"), d("-1"), d("1"), 1, 2), center) ==
          OracleVerdict::violated);
}

TEST_CASE("coverage preconditions and the expansion limit") {
    CHECK_THROWS_AS(builtin_coverage_expanded(d("0"), d("-1"), d("1"), 1, 2), error);
    CHECK_THROWS_AS(builtin_coverage_expanded(d("1"), d("1"), d("-1"), 1, 2), error);
    CHECK_THROWS_AS(builtin_coverage_expanded(d("1"), d("-1"), d("1"), 1, 9), error);
    CoverageExpandedOptions wide;
    wide.expansion_limit = 12;
    CHECK_NOTHROW(builtin_coverage_expanded(d("1"), d("-1"), d("1"), 1, 9, wide));
    CHECK_THROWS_AS(builtin_coverage_array(d("1"), d("1"), d("-1"), 2), error);
}

TEST_CASE("coverage_expanded emission expands rows and features") {
    Dataset two = testing::make_dataset({{"0", "0"}, {"0.5", "0.5"}}, {"0", "1"});
    Property p = builtin_coverage_expanded(d("1"), d("-1"), d("1"), two.m(), two.n());
    REQUIRE(p.assertions.size() == 1);
    const std::string& a = p.assertions[0];
    CHECK(a.find("(exists ((p0 Real) (p1 Real))") != std::string::npos);
    CHECK(a.find("(select (select D 0) 0)") != std::string::npos);
    CHECK(a.find("(select (select D 1) 1)") != std::string::npos);
    CHECK(a.find("(* delta delta)") != std::string::npos);
    CHECK(a.find("forall") == std::string::npos);  // no row quantifier
}

TEST_CASE("coverage_array emission keeps the array quantifier") {
    Property p = builtin_coverage_array(d("1"), d("-1"), d("1"), 2);
    REQUIRE(p.assertions.size() == 1);
    CHECK(p.assertions[0].find("(exists ((p (Array Int Real)))") != std::string::npos);
    CHECK(p.assertions[0].find("(forall ((i Int))") != std::string::npos);
    CHECK_FALSE(p.oracle.has_value());
}

TEST_CASE("balanced oracle") {
    Dataset fx = testing::fixture_dataset();
    // counts (1,1,8), threshold m/(beta*l) = 10/6: the classes with one
    // example are underrepresented
    CHECK(run_oracle(builtin_balanced(d("2")), fx) == OracleVerdict::violated);

    Dataset even = testing::make_dataset(
        {{"1"}, {"2"}, {"3"}, {"4"}, {"5"}, {"6"}, {"7"}, {"8"}, {"9"}, {"10"}},
        {"0", "0", "0", "0", "0", "1", "1", "1", "1", "1"});
    CHECK(run_oracle(builtin_balanced(d("1")), even) == OracleVerdict::holds);

    // counts (3,1), m=4, l=2, beta=2: threshold 1; count 1 is not < 1
    Dataset uneven = testing::make_dataset({{"1"}, {"2"}, {"3"}, {"4"}},
                                           {"0", "0", "0", "1"});
    CHECK(run_oracle(builtin_balanced(d("2")), uneven) == OracleVerdict::holds);
    CHECK(run_oracle(builtin_balanced(d("1")), uneven) == OracleVerdict::violated);

    CHECK_THROWS_AS(builtin_balanced(d("0.5")), error);
}

TEST_CASE("balanced emission clears the rational denominator") {
    Property p = builtin_balanced(d("1.5"));  // 15/10 reduces to 3/2
    REQUIRE(p.assertions.size() == 1);
    CHECK(p.assertions[0].find("(* 3 l (S O (select L i) m))") != std::string::npos);
    CHECK(p.assertions[0].find("(* 2 m)") != std::string::npos);
    REQUIRE(p.definitions.size() == 1);
    CHECK(p.definitions[0].find("define-fun-rec S") != std::string::npos);
    REQUIRE(p.params.size() == 1);
    CHECK_FALSE(p.params[0].declare);  // beta is metadata, not an SMT symbol

    Property whole = builtin_balanced(d("2"));
    CHECK(whole.assertions[0].find("(* 2 l (S O (select L i) m))") != std::string::npos);
    CHECK(whole.assertions[0].find("(* 1 m)") != std::string::npos);
}

TEST_CASE("no_contradictions oracle") {
    CHECK(run_oracle(builtin_no_contradictions(2), testing::fixture_dataset()) ==
          OracleVerdict::holds);
    Dataset clash = testing::make_dataset({{"1", "1"}, {"1", "1"}}, {"0", "1"});
    CHECK(run_oracle(builtin_no_contradictions(2), clash) == OracleVerdict::violated);
    Dataset dup = testing::make_dataset({{"1", "1"}, {"1", "1"}}, {"1", "1"});
    CHECK(run_oracle(builtin_no_contradictions(2), dup) == OracleVerdict::holds);
}

TEST_CASE("property files: tautology and cardinality") {
    Property taut = load_property_text("taut", "(assert true)", {});
    CHECK(taut.assertions == std::vector<std::string>{"true"});
    CHECK(taut.params.empty());

    Property card = load_property_text("card", "(assert (>= m 100))", {});
    CHECK(card.assertions == std::vector<std::string>{"(>= m 100)"});

    Property with_param =
        load_property_text("card", "(assert (>= m T))", {{"T", std::int64_t{100}}});
    REQUIRE(with_param.params.size() == 1);
    CHECK(with_param.params[0].name == "T");
}

TEST_CASE("property files: unused supplied parameters are dropped") {
    Property p = load_property_text("p", "(assert (>= m T))",
                                    {{"T", std::int64_t{5}}, {"other", std::int64_t{1}}});
    CHECK(p.params.size() == 1);
}

TEST_CASE("property files: unknown symbols list the candidates") {
    try {
        load_property_text("bad", "(assert (>= zorp 3))", {{"T", std::int64_t{1}}});
        FAIL("expected property_error");
    } catch (const property_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("zorp") != std::string::npos);
        CHECK(msg.find("m, n, l, D, O, L") != std::string::npos);
        CHECK(msg.find("T") != std::string::npos);
    }
}

TEST_CASE("property files: binders are in scope") {
    CHECK_NOTHROW(load_property_text(
        "ok", "(assert (not (exists ((i Int)) (and (>= i 0) (< (select O i) 1.0)))))", {}));
}

TEST_CASE("property files: only assert commands") {
    CHECK_THROWS_AS(load_property_text("bad", "(check-sat)", {}), property_error);
    CHECK_THROWS_AS(load_property_text("bad", "(declare-const x Int)", {}), property_error);
    CHECK_THROWS_AS(load_property_text("bad", "(define-fun-rec f ((x Int)) Int x)", {}),
                    property_error);
    CHECK_THROWS_AS(load_property_text("bad", "", {}), property_error);
    CHECK_THROWS_AS(load_property_text("bad", "(assert true extra)", {}), property_error);
}

TEST_CASE("property files: unbalanced parentheses carry a position") {
    try {
        load_property_text("bad", "(assert (= m 10)", {});
        FAIL("expected property_error");
    } catch (const property_error& e) {
        CHECK(std::string(e.what()).find("unbalanced") != std::string::npos);
    }
}

TEST_CASE("shipped property files load") {
    Property minmax = load_property_file(testing::data_path() + "/properties/minmax_normalized.smt2",
                                         {{"min", d("-1")}, {"max", d("1")}});
    CHECK(minmax.name == "minmax_normalized");
    CHECK(minmax.params.size() == 2);

    Property card = load_property_file(testing::data_path() + "/properties/min_cardinality.smt2",
                                       {{"T", std::int64_t{100}}});
    CHECK(card.params.size() == 1);
}

TEST_CASE("append_property merges parameters and definitions") {
    SmtScript script = environment_script(2);
    Property a = builtin_minmax_normalized(d("-1"), d("1"));
    Property b = builtin_coverage_array(d("1"), d("-1"), d("1"), 2);  // same min/max
    append_property(script, a);
    append_property(script, b);
    CHECK(script.declares("min"));
    CHECK(script.declares("delta"));
    CHECK(std::count(script.assertions.begin(), script.assertions.end(),
                     "(= min (- 1.0))") == 1);

    Property clash = builtin_minmax_normalized(d("-2"), d("1"));
    CHECK_THROWS_AS(append_property(script, clash), property_error);

    SmtScript twice = environment_script(2);
    append_property(twice, builtin_balanced(d("2")));
    Property renamed = builtin_balanced(d("2"));
    renamed.name = "balanced2";
    append_property(twice, renamed);
    CHECK(twice.definitions.size() == 1);  // the recursive counter is defined once
}

TEST_CASE("specification validation") {
    CHECK_THROWS_AS(make_specification({}), error);
    Property a = builtin_min_cardinality(1);
    Property b = builtin_min_cardinality(2);
    CHECK_THROWS_AS(make_specification({a, a}), error);
    b.name = "min_cardinality2";
    CHECK_NOTHROW(make_specification({a, b}));
}

TEST_CASE("monotonicity of min_cardinality and minmax widening (oracle level)") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 60; ++iter) {
        Dataset ds = testing::random_dataset(rng, 25, 3);
        LabelSet ls = distinct_labels(ds);
        std::uniform_int_distribution<std::int64_t> t_dist(0, 30);
        std::int64_t t = t_dist(rng);
        if ((*builtin_min_cardinality(t).oracle)(ds, ls) == OracleVerdict::holds)
            for (std::int64_t smaller : {std::int64_t{0}, t / 2, t - 1})
                if (smaller >= 0)
                    CHECK((*builtin_min_cardinality(smaller).oracle)(ds, ls) ==
                          OracleVerdict::holds);

        if ((*builtin_minmax_normalized(d("-0.5"), d("0.5")).oracle)(ds, ls) ==
            OracleVerdict::holds)
            CHECK((*builtin_minmax_normalized(d("-1"), d("1")).oracle)(ds, ls) ==
                  OracleVerdict::holds);
    }
}
