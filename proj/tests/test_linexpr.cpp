#include <catch2/catch_amalgamated.hpp>

#include "jpsq/linexpr.hpp"

using jpsq::LinExpr;
using Catch::Matchers::WithinAbs;

TEST_CASE("parses constants, variables and signs", "[linexpr]") {
  CHECK(LinExpr::parse("0.5").constant() == 0.5);
  CHECK(LinExpr::parse("  -1.25 ").constant() == -1.25);
  CHECK(LinExpr::parse("1e-3").constant() == 1e-3);

  auto e = LinExpr::parse("0.5 + dPhiZ");
  CHECK(e.constant() == 0.5);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().at("dPhiZ") == 1.0);

  auto f = LinExpr::parse("-PhiDelta + dPhiX");
  CHECK(f.constant() == 0.0);
  CHECK(f.terms().at("PhiDelta") == -1.0);
  CHECK(f.terms().at("dPhiX") == 1.0);

  auto g = LinExpr::parse("2*a - b*3 + 1 - 0.5");
  CHECK(g.terms().at("a") == 2.0);
  CHECK(g.terms().at("b") == -3.0);
  CHECK(g.constant() == 0.5);

  // repeated variables accumulate
  auto h = LinExpr::parse("x + x - 2*x");
  CHECK(h.is_constant());
  CHECK(h.constant() == 0.0);
}

TEST_CASE("parse errors", "[linexpr]") {
  CHECK_THROWS_AS(LinExpr::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(LinExpr::parse("  "), std::invalid_argument);
  CHECK_THROWS_AS(LinExpr::parse("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(LinExpr::parse("a b"), std::invalid_argument);
  CHECK_THROWS_AS(LinExpr::parse("2*"), std::invalid_argument);
  CHECK_THROWS_AS(LinExpr::parse("*a"), std::invalid_argument);
  CHECK_THROWS_AS(LinExpr::parse("2**a"), std::invalid_argument);
  CHECK_THROWS_AS(LinExpr::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("evaluation and missing variables", "[linexpr]") {
  auto e = LinExpr::parse("0.5 + dPhiZ - 2*dPhiX");
  CHECK_THAT(e.evaluate({{"dPhiZ", 0.002}, {"dPhiX", 0.001}}),
             WithinAbs(0.5, 1e-15));
  CHECK_THAT(e.evaluate({{"dPhiZ", -0.01}, {"dPhiX", 0.0}, {"unused", 9.0}}),
             WithinAbs(0.49, 1e-15));
  CHECK_THROWS_AS(e.evaluate({{"dPhiZ", 0.0}}), std::invalid_argument);
}

TEST_CASE("arithmetic and printing round-trip", "[linexpr]") {
  auto a = LinExpr::parse("0.5 + x");
  auto b = LinExpr::parse("-0.25 + x - y");
  auto c = a - b;  // 0.75 + y
  CHECK(c.constant() == 0.75);
  CHECK(c.variables() == std::set<std::string>{"y"});

  auto scaled = 2.0 * LinExpr::variable("z") + LinExpr(1.0);
  CHECK(scaled.str() == "1 + 2*z");
  CHECK(LinExpr::parse(scaled.str()).distance(scaled) == 0.0);

  auto neg = -LinExpr::parse("1 - q");
  CHECK(LinExpr::parse("-1 + q") == neg);
  CHECK(LinExpr::parse(neg.str()).distance(neg) == 0.0);

  CHECK(LinExpr{}.str() == "0");
}
