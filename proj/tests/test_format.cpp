#include <doctest.h>

#include "slit/format.hpp"
#include "slit/schur_gf.hpp"
#include "test_helpers.hpp"

using namespace slit;
using namespace slit::testing;

TEST_SUITE("printing") {
  TEST_CASE("integer-cleared fraction form") {
    // Canonical monic form of (1-t^2)/(1-2t^2) has fractional coefficients;
    // printing restores the integer form uniquely.
    const RationalFunction g =
        gf_skew_route(SlitProblem(WeightedStepSet::unit_dyck(), 2, 0, 0)).value;
    CHECK(format_rational_function(g, OutputFormat::plain) == "(1 - t^2)/(1 - 2*t^2)");
    CHECK(format_rational_function(g, OutputFormat::latex) ==
          "\\frac{1 - t^{2}}{1 - 2t^{2}}");

    CHECK(format_rational_function(rf({1, 0, -1}, {0, 0, 1}), OutputFormat::plain) ==
          "(1 - t^2)/(t^2)");
    CHECK(format_rational_function(RationalFunction(), OutputFormat::plain) == "(0)/(1)");
    CHECK(format_rational_function(RationalFunction::constant(rat(-3, 2)), OutputFormat::plain) ==
          "(-3)/(2)");
  }

  TEST_CASE("cleared form is scale-invariant") {
    const ClearedFraction a = integer_cleared(rf({0, 1}, {1, -2}));
    CHECK(a.num == poly({0, 1}));
    CHECK(a.den == poly({1, -2}));
    const ClearedFraction b =
        integer_cleared(RationalFunction(poly({0, 1}).scaled(rat(1, 3)),
                                         poly({1, -2}).scaled(rat(1, 3))));
    CHECK(b.num == a.num);
    CHECK(b.den == a.den);
  }

  TEST_CASE("partitions") {
    CHECK(format_partition(Partition({3, 1, 0}), OutputFormat::plain) == "(3,1)");
    CHECK(format_partition(Partition({3, 3, 1}), OutputFormat::latex) == "(3^{2},1)");
    CHECK(format_partition(Partition(), OutputFormat::plain) == "()");
    CHECK(format_skew_shape(gf_skew_shape(3, 1, 1, 1, 2), OutputFormat::plain) == "(3,1)/(2)");
    CHECK(format_skew_shape(gf_skew_shape(3, 2, 2, 1, 2), OutputFormat::latex) ==
          "(3^{2},1)/(2)");
  }

  TEST_CASE("json coefficients are strings") {
    const nlohmann::json j = rational_function_to_json(rf({0, 1}, {1, -2}));
    CHECK(j["numerator"] == nlohmann::json({"0", "1"}));
    CHECK(j["denominator"] == nlohmann::json({"1", "-2"}));
    CHECK(rational_function_to_json(RationalFunction())["numerator"] ==
          nlohmann::json({"0"}));
  }
}

TEST_SUITE("problem files") {
  TEST_CASE("round trip through json") {
    const SlitProblem prob(
        WeightedStepSet({rat(1, 2), rat(0), rat(3)}, {rat(2, 7)}), 4, 1, 3);
    const nlohmann::json j = problem_to_json(prob);
    const SlitProblem back = problem_from_json(j);
    CHECK(back.steps == prob.steps);
    CHECK(back.w == prob.w);
    CHECK(back.u == prob.u);
    CHECK(back.v == prob.v);

    // Nested form, as emitted by the gf subcommand.
    const SlitProblem nested = problem_from_json(nlohmann::json{{"problem", j}});
    CHECK(nested.steps == prob.steps);
  }

  TEST_CASE("malformed input is a parse error") {
    CHECK_THROWS_AS(problem_from_json(nlohmann::json{{"alpha", 1}}), ParseError);
    nlohmann::json bad = problem_to_json(SlitProblem(WeightedStepSet::unit_dyck(), 1, 0, 0));
    bad["p"] = {"1"};
    CHECK_THROWS_AS(problem_from_json(bad), ParseError);
    bad = problem_to_json(SlitProblem(WeightedStepSet::unit_dyck(), 1, 0, 0));
    bad["w"] = 0;
    CHECK_THROWS_AS(problem_from_json(bad), DomainError);
    CHECK_THROWS_AS(load_problem_file("/nonexistent/problem.json"), ParseError);
  }

  TEST_CASE("format names") {
    CHECK(parse_output_format("plain") == OutputFormat::plain);
    CHECK(parse_output_format("latex") == OutputFormat::latex);
    CHECK(parse_output_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_output_format("yaml"), ParseError);
  }
}
