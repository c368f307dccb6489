#include <cmath>
#include <memory>
#include <random>

#include "doctest.h"

#include "dimjac/errors.hpp"
#include "dimjac/lang/evaluator.hpp"
#include "dimjac/lang/format.hpp"
#include "dimjac/lang/parser.hpp"
#include "dimjac/lang/token.hpp"

using namespace dimjac;
using namespace dimjac::lang;

namespace {

UnitSystemPtr load_data(const char* name) {
  return std::make_shared<const UnitSystem>(
      UnitSystem::load(std::string(DIMJAC_DATA_DIR) + "/" + name));
}

std::string tree(std::string_view input) { return describe(*parse(input)); }

}  // namespace

TEST_CASE("tokenize") {
  auto t = tokenize("4.3 L/min");
  REQUIRE(t.size() == 4);
  CHECK(t[0] == Token{TokenKind::kNumber, "4.3", 0});
  CHECK(t[1] == Token{TokenKind::kIdent, "L", 4});
  CHECK(t[2] == Token{TokenKind::kSlash, "/", 5});
  CHECK(t[3] == Token{TokenKind::kIdent, "min", 6});
  CHECK(tokenize("").empty());
  CHECK(tokenize("  \t\n").empty());
  try {
    tokenize("3 @ m");
    FAIL("expected a lex error");
  } catch (const LexError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("tokenize numbers") {
  CHECK(tokenize("3/43")[0].text == "3/43");
  CHECK(tokenize("3 / 43").size() == 3);
  CHECK(tokenize("1e-3")[0].text == "1e-3");
  auto em = tokenize("2em");
  REQUIRE(em.size() == 2);
  CHECK(em[1].text == "em");
  CHECK(tokenize(".5")[0].text == ".5");
  CHECK_THROWS_AS(tokenize("1e99999"), LexError);
  CHECK_THROWS_AS(tokenize("1.2.3"), LexError);
}

TEST_CASE("tokenize unicode") {
  auto t = tokenize("6 atm·L/mol");
  REQUIRE(t.size() == 6);
  CHECK(t[2].kind == TokenKind::kStar);
  CHECK(t[3].offset == 7);
  CHECK(tokenize("2 µm")[1].text == "µm");
  CHECK(tokenize("3 − 1")[1].kind == TokenKind::kMinus);
  CHECK_THROWS_AS(tokenize("\xff"), LexError);
  CHECK_THROWS_AS(tokenize("\xc0\x80"), LexError);
}

TEST_CASE("parse precedence") {
  CHECK(tree("300 cm^3 / (4.3 L/min)") == "Div(Lit(300,cm^3),Lit(4.3,L/min))");
  CHECK(tree("1 atm + 1 K") == "Add(Lit(1,atm),Lit(1,K))");
  CHECK(tree("1 + 2 * 3") == "Add(Lit(1),Mul(Lit(2),Lit(3)))");
  CHECK(tree("1 - 2 - 3") == "Sub(Sub(Lit(1),Lit(2)),Lit(3))");
  CHECK(tree("8 / 4 / 2") == "Div(Div(Lit(8),Lit(4)),Lit(2))");
  CHECK(tree("-2 m^2") == "Neg(Lit(2,m^2))");
  CHECK(tree("-2 * 3") == "Neg(Mul(Lit(2),Lit(3)))");
  CHECK(tree("2 * -3") == "Mul(Lit(2),Neg(Lit(3)))");
  CHECK(tree("(2 m)^2") == "Pow(Lit(2,m),2)");
  CHECK(tree("2 m / s") == "Lit(2,m/s)");
  CHECK(tree("2 m / 4") == "Div(Lit(2,m),Lit(4))");
  CHECK(tree("m*kg^-2") == "Lit(1,m*kg^-2)");
  CHECK(tree("3 m·s") == "Lit(3,m*s)");
}

TEST_CASE("parse errors name what was expected") {
  try {
    parse("2 *");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.expected() == "number, unit or '('");
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("(1 m"), ParseError);
  CHECK_THROWS_AS(parse("1 m)"), ParseError);
  CHECK_THROWS_AS(parse("(2) (3)"), ParseError);
  CHECK_THROWS_AS(parse("2 m^x"), ParseError);
  CHECK_THROWS_AS(parse("2 m^1.5"), ParseError);
  CHECK_THROWS_AS(parse("2 m^65"), ParseError);
  CHECK_THROWS_AS(parse(std::string(1000, '(') + "1" + std::string(1000, ')')),
                  ParseError);
  CHECK_THROWS_AS(parse(std::string(5000, '-') + "1"), ParseError);
}

TEST_CASE("cup fill time") {
  auto kitchen = load_data("kitchen.json");
  auto exact = evaluate<Rational>("(300 cm^3)/(4.3 L/min)", kitchen);
  // Oracle: 300 cm^3 / 4300 cm^3 per minute.
  CHECK(exact.magnitude() == Rational(300) / Rational(4300));
  CHECK(exact.dim() == DimVector{0, 1, 0, 0, 0});
  CHECK(format_quantity(exact) == "3/43 min");
  auto approx = evaluate<double>("300 cm^3 / (4.3 L/min)", kitchen);
  CHECK(std::abs(approx.magnitude() - 0.0698) < 1e-4);
  auto si = load_data("si.json");
  CHECK(std::abs(convert(approx, si).magnitude() - 4.186) < 1e-3);
  CHECK(format_quantity(convert(exact, si)) == "180/43 s");
}

TEST_CASE("gas expressions") {
  auto gas = load_data("gas.json");
  auto u = evaluate<Rational>("(2 atm)*(3 L)/(1 mol)", gas);
  CHECK(format_quantity(u) == "6 atm·L/mol");
  CHECK(format_quantity(u, FormatStyle::kBase) == "6 atm·L/mol");
  CHECK(format_quantity(evaluate<Rational>("0.3 L", gas)) == "3/10 L");
  CHECK(format_quantity(evaluate<double>("0.3 L", gas)) == "0.3 L");
  CHECK(format_quantity(evaluate<double>("300 mL", gas)) == "0.3 L");
  CHECK(format_quantity(evaluate<Rational>("2 mol/2 mol", gas)) == "1");
  CHECK(format_quantity(evaluate<Rational>("1/(2 L)", gas)) == "1/2 L^-1");
  CHECK(format_quantity(evaluate<Rational>("3 L^2/K^2", gas)) == "3 L^2/K^2");
  try {
    evaluate<Rational>("1 atm + 1 K", gas);
    FAIL("expected a dimension error");
  } catch (const DimensionMismatch& e) {
    CHECK(std::string(e.what()) == "cannot add P and T");
  }
  CHECK_THROWS_AS(evaluate<Rational>("1 furlong", gas), UnknownUnit);
  CHECK_THROWS_AS(evaluate<Rational>("1 L / (0 L)", gas), DivisionByZero);
  CHECK_THROWS_AS(evaluate<double>("1 L / (0 L)", gas), DivisionByZero);
  CHECK_THROWS_AS(evaluate<Rational>("1/0 L", gas), ZeroDenominator);
  CHECK_THROWS_AS(evaluate<double>("1e300 L * 1e300 L", gas), NumericOverflow);
  CHECK_THROWS_AS(evaluate<Rational>("((((7^64)^64)^64)^64)", gas),
                  NumericOverflow);
}

TEST_CASE("canonical style prefers derived units of matching dimension") {
  auto kitchen = load_data("kitchen.json");
  CHECK(format_quantity(evaluate<Rational>("300 cm^3", kitchen)) == "3/10 L");
  CHECK(format_quantity(evaluate<Rational>("300 cm^3", kitchen),
                        FormatStyle::kBase) == "300 cm^3");
  CHECK(format_quantity(evaluate<Rational>("2 m", kitchen)) == "200 cm");
  CHECK(format_quantity(evaluate<Rational>("-1 atm/min", kitchen)) ==
        "-1 atm/min");
}

TEST_CASE("evaluated dimension matches exponent bookkeeping") {
  auto gas = load_data("gas.json");
  std::mt19937_64 rng(21);
  const char* units[] = {"atm", "L", "mol", "K"};
  std::uniform_int_distribution<int> pick(0, 3), ex(-3, 3), len(1, 4);
  for (int i = 0; i < 300; ++i) {
    std::string text;
    DimVector expected = DimVector::zero(4);
    int factors = len(rng);
    for (int f = 0; f < factors; ++f) {
      int u = pick(rng), e = ex(rng);
      if (e == 0) e = 1;
      bool divide = f > 0 && (rng() & 1u);
      if (f > 0) text += divide ? " / " : " * ";
      text += "(2 " + std::string(units[u]) + "^" + std::to_string(e) + ")";
      DimVector d = DimVector::axis(4, static_cast<std::size_t>(u)) * e;
      expected = divide ? expected - d : expected + d;
    }
    CHECK(evaluate<Rational>(text, gas).dim() == expected);
  }
}

TEST_CASE("fractions after a caret split") {
  auto t = tokenize("m^2/3");
  REQUIRE(t.size() == 5);
  CHECK(t[2].text == "2");
  CHECK(t[3].kind == TokenKind::kSlash);
  CHECK(t[4].offset == 4);
  CHECK(tree("2 m^2/3") == "Div(Lit(2,m^2),Lit(3))");
  CHECK(tree("2 m^-2/3") == "Div(Lit(2,m^-2),Lit(3))");
}
