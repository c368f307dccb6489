#include <cmath>
#include <limits>
#include <memory>
#include <random>

#include "doctest.h"

#include "dimjac/errors.hpp"
#include "dimjac/measurand/dim_vector.hpp"
#include "dimjac/measurand/line.hpp"
#include "dimjac/measurand/quantity.hpp"
#include "dimjac/measurand/rational.hpp"
#include "dimjac/measurand/unit_system.hpp"

using namespace dimjac;

namespace {

UnitSystemPtr load_data(const char* name) {
  return std::make_shared<const UnitSystem>(
      UnitSystem::load(std::string(DIMJAC_DATA_DIR) + "/" + name));
}

UnitSystemPtr rank_system(std::size_t k) {
  std::vector<UnitSystem::BaseSpec> base;
  for (std::size_t i = 0; i < k; ++i)
    base.push_back({"L" + std::to_string(i), "u" + std::to_string(i), Rational(1)});
  return std::make_shared<const UnitSystem>(std::move(base),
                                            std::vector<DerivedUnit>{});
}

Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (;;) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

}  // namespace

TEST_CASE("rationals parse exactly") {
  CHECK(parse_rational("4.3") == Rational(43, 10));
  CHECK(parse_rational("3/43") == Rational(3, 43));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("12E2") == Rational(1200));
  CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(parse_rational("1.2.3"), DocumentError);
  CHECK_THROWS_AS(parse_rational(""), DocumentError);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(-7)) == "-7");
}

TEST_CASE("to_double rounds to nearest") {
  // 1/3 and 2/3: strtod of a long decimal expansion is the oracle.
  CHECK(to_double(Rational(1, 3)) == std::strtod("0.33333333333333333333333", nullptr));
  CHECK(to_double(Rational(2, 3)) == std::strtod("0.66666666666666666666667", nullptr));
  CHECK(to_double(Rational(43, 10)) == 4.3);
  CHECK(to_double(Rational(-1, 10)) == -0.1);
  CHECK(to_double(Rational(0)) == 0.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    double x = dist(rng);
    CHECK(to_double(exact_rational(x)) == x);
    CHECK(to_double(decimal_rational(x)) == x);
  }
  CHECK(decimal_rational(0.001) == Rational(1, 1000));
}

TEST_CASE("rational powers") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-2), -1) == Rational(-1, 2));
  CHECK(pow(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pow(Rational(0), -1), DivisionByZero);
}

TEST_CASE("dimension vectors form a group") {
  DimVector a{1, 0, -1}, b{0, 2, 3};
  CHECK(a + b == DimVector{1, 2, 2});
  CHECK(a - a == DimVector::zero(3));
  CHECK(-a == DimVector{-1, 0, 1});
  CHECK(a * 3 == DimVector{3, 0, -3});
  CHECK(a.to_string() == "(1,0,-1)");
  CHECK(DimVector::axis(3, 1) == DimVector{0, 1, 0});
  CHECK_THROWS_AS(a + DimVector({1, 2}), DimensionMismatch);
  CHECK(DimVector::zero(0).is_zero());
}

TEST_CASE("ratio maps") {
  Line line("length");
  auto u = line.reference<double>();
  CHECK(ratio(2.0 * u, 4.0 * u) == 0.5);
  CHECK(ratio(line.zero<double>(), 4.0 * u) == 0.0);
  auto a = 1.0 * u, b = 2.0 * u, c = 4.0 * u;
  CHECK(ratio(a, b) * ratio(b, c) * ratio(c, a) == 1.0);
  CHECK_THROWS_AS(ratio(u, line.zero<double>()), ZeroDenominator);
  Line other("time");
  CHECK_THROWS_AS(ratio(u, other.reference<double>()), LineMismatch);
  CHECK_THROWS_AS(u + other.reference<double>(), LineMismatch);
}

TEST_CASE("two out of three holds exactly") {
  std::mt19937_64 rng(11);
  Line line("L");
  auto u = line.reference<Rational>();
  for (int i = 0; i < 500; ++i) {
    auto a = random_rational(rng, true) * u;
    auto b = random_rational(rng, true) * u;
    auto c = random_rational(rng, true) * u;
    CHECK(ratio(a, b) * ratio(b, c) * ratio(c, a) == 1);
  }
}

TEST_CASE("ratios are invariant under generator rescaling") {
  std::mt19937_64 rng(3);
  Line line("L");
  for (int i = 0; i < 200; ++i) {
    Rational lambda = random_rational(rng, true);
    Line moved = line.rescaled(lambda);
    auto a = random_rational(rng) * line.reference<Rational>();
    auto b = random_rational(rng, true) * line.reference<Rational>();
    Rational before = ratio(a, b);
    CHECK(ratio(a.on(moved), b.on(moved)) == before);
    CHECK(ratio(a.on(moved), b) == before);
    CHECK(ratio(a + b.on(moved), b) == before + 1);
  }
}

TEST_CASE("potential multiplication and inversion") {
  auto sys = rank_system(2);
  ExactQuantity x(Rational(2), {1, 0}, sys), y(Rational(3), {0, 1}, sys);
  auto xy = potential_mul(x, y);
  CHECK(xy.magnitude() == 6);
  CHECK(xy.dim() == DimVector{1, 1});
  CHECK(potential_mul(x, ExactQuantity::one(sys)) == x);

  ExactQuantity w(Rational(4), {2, -1}, sys);
  auto inv = potential_inv(w);
  CHECK(inv.magnitude() == Rational(1, 4));
  CHECK(inv.dim() == DimVector{-2, 1});
  CHECK(potential_mul(w, inv) == ExactQuantity::one(sys));
  CHECK(potential_inv(ExactQuantity::one(sys)) == ExactQuantity::one(sys));
  auto sys1 = rank_system(1);
  auto neg = potential_inv(Quantity(-2.0, {1}, sys1));
  CHECK(neg.magnitude() == -0.5);
  CHECK(neg.dim() == DimVector{-1});
  CHECK_THROWS_AS(potential_inv(ExactQuantity::zero({1, 0}, sys)),
                  DivisionByZero);
  CHECK_THROWS_AS(potential_mul(x, ExactQuantity::one(rank_system(3))),
                  SystemMismatch);
  CHECK_THROWS_AS(ExactQuantity(Rational(1), {1}, sys), DimensionMismatch);
}

TEST_CASE("gas energy carries atm L per mol") {
  auto gas = load_data("gas.json");
  ExactQuantity p(Rational(2), {1, 0, 0, 0}, gas);
  ExactQuantity v(Rational(3), {0, 1, 0, 0}, gas);
  ExactQuantity n(Rational(1), {0, 0, 1, 0}, gas);
  auto u = potential_mul(potential_mul(p, v), potential_inv(n));
  CHECK(u.magnitude() == 6);
  CHECK(u.dim() == DimVector{1, 1, -1, 0});
  CHECK(gas->render_dim(u.dim()) == "P·V/N");
}

TEST_CASE("homogeneous addition") {
  auto gas = load_data("gas.json");
  ExactQuantity p1(Rational(1), {1, 0, 0, 0}, gas), p2(Rational(2), {1, 0, 0, 0}, gas);
  CHECK(potential_add(p1, p2).magnitude() == 3);
  CHECK(potential_add(p1, ExactQuantity::zero(p1.dim(), gas)) == p1);
  ExactQuantity t(Rational(1), {0, 0, 0, 1}, gas);
  try {
    potential_add(p1, t);
    FAIL("expected a dimension error");
  } catch (const DimensionMismatch& e) {
    CHECK(std::string(e.what()) == "cannot add P and T");
  }
}

TEST_CASE("zero-rank spaces are scalar arithmetic") {
  auto sys = rank_system(0);
  ExactQuantity a(Rational(3), DimVector{}, sys), b(Rational(4), DimVector{}, sys);
  CHECK(potential_add(a, b).magnitude() == 7);
  CHECK(potential_mul(a, b).magnitude() == 12);
  CHECK(sys->render_dim(DimVector{}) == "1");
}

TEST_CASE("unit systems validate registrations") {
  using Spec = UnitSystem::BaseSpec;
  CHECK_THROWS_AS(UnitSystem({{"L", "m", Rational(0)}}, {}), InvalidArgument);
  CHECK_THROWS_AS(UnitSystem({{"L", "m", Rational(1)}, {"L", "s", Rational(1)}}, {}),
                  InvalidArgument);
  CHECK_THROWS_AS(
      UnitSystem({Spec{"L", "m", Rational(1)}}, {{"cm", {1}, Rational(-1)}}),
      InvalidArgument);
  CHECK_THROWS_AS(
      UnitSystem({Spec{"L", "m", Rational(1)}}, {{"m", {1}, Rational(1)}}),
      InvalidArgument);
  CHECK_THROWS_AS(
      UnitSystem({Spec{"L", "m", Rational(1)}}, {{"x", {1, 0}, Rational(1)}}),
      InvalidArgument);
  CHECK_THROWS_AS(UnitSystem({Spec{"L", "2m", Rational(1)}}, {}), InvalidArgument);
  UnitSystem ok({Spec{"L", "m", Rational(1)}}, {{"cm", {1}, Rational(1, 100)}});
  CHECK(ok.find("cm")->scale == Rational(1, 100));
  CHECK(ok.find("m")->dim == DimVector{1});
  CHECK_FALSE(ok.find("M"));
}

TEST_CASE("unit system documents") {
  CHECK_THROWS_AS(UnitSystem::load("/nonexistent/system.json"), IoError);
  CHECK_THROWS_AS(UnitSystem::from_json(nlohmann::json::array()), DocumentError);
  CHECK_THROWS_AS(UnitSystem::from_json({{"base", 3}}), DocumentError);
  auto si = load_data("si.json");
  auto again = UnitSystem::from_json(si->to_json());
  CHECK(again == *si);
}

TEST_CASE("trivialization of the cup volume") {
  auto gas = load_data("gas.json");
  ExactQuantity v(Rational(3, 10), {0, 1, 0, 0}, gas);
  auto t = trivialize(*gas, v);
  CHECK(t.value == Rational(3, 10));
  CHECK(t.dim == DimVector{0, 1, 0, 0});
  auto one = trivialize(*gas, ExactQuantity::one(gas));
  CHECK(one.value == 1);
  CHECK(one.dim.is_zero());
  CHECK(untrivialize(gas, t) == v);
}

TEST_CASE("conversion factors follow base unit ratios") {
  auto kitchen = load_data("kitchen.json");
  auto si = load_data("si.json");
  // Oracle: 1 cm = 1/100 m, 1 min = 60 s, 1 atm = 101325 Pa.
  CHECK(kitchen->conversion_factor({3, 0, 0, 0, 0}, *si) == Rational(1, 1000000));
  CHECK(kitchen->conversion_factor({0, 1, 0, 0, 0}, *si) == 60);
  CHECK(kitchen->conversion_factor({-3, 0, 1, 0, 0}, *si) ==
        Rational(101325) * 1000000);
  CHECK(si->conversion_factor({1, -1, 0, 0, 0}, *kitchen) == Rational(6000));

  ExactQuantity cup(Rational(300), {3, 0, 0, 0, 0}, kitchen);
  auto in_si = convert(cup, si);
  CHECK(in_si.magnitude() == Rational(3, 10000));
  CHECK(convert(in_si, kitchen) == cup);
  CHECK(convert(cup, kitchen) == cup);

  ExactQuantity fill(Rational(3, 43), {0, 1, 0, 0, 0}, kitchen);
  CHECK(convert(fill, si).magnitude() == Rational(180, 43));
  Quantity fill_d(to_double(Rational(3, 43)), {0, 1, 0, 0, 0}, kitchen);
  CHECK(std::abs(convert(fill_d, si).magnitude() - 4.186) < 1e-3);

  auto gas = load_data("gas.json");
  CHECK_THROWS_AS(convert(cup, gas), IncompatibleSystems);
  CHECK_THROWS_AS(trivialize(*gas, cup), SystemMismatch);
}

TEST_CASE("float round trip stays within one ulp") {
  auto kitchen = load_data("kitchen.json");
  auto si = load_data("si.json");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mag(-1e3, 1e3);
  std::uniform_int_distribution<int> ex(-3, 3);
  for (int i = 0; i < 1000; ++i) {
    Quantity q(mag(rng), {ex(rng), ex(rng), ex(rng), ex(rng), ex(rng)}, kitchen);
    double back = convert(convert(q, si), kitchen).magnitude();
    double x = q.magnitude();
    CHECK(std::abs(back - x) <=
          std::abs(std::nextafter(x, std::numeric_limits<double>::infinity()) - x));
  }
}

TEST_CASE("rescaled generators change nothing observable") {
  auto kitchen = load_data("kitchen.json");
  auto si = load_data("si.json");
  std::vector<Rational> lambdas{Rational(3), Rational(-2, 7), Rational(5, 11),
                                Rational(1, 1000), Rational(13)};
  auto moved = std::make_shared<const UnitSystem>(
      si->with_rescaled_generators(lambdas));
  CHECK(*moved == *si);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> ex(-2, 2);
  for (int i = 0; i < 200; ++i) {
    DimVector g{ex(rng), ex(rng), ex(rng), ex(rng), ex(rng)};
    CHECK(kitchen->conversion_factor(g, *moved) ==
          kitchen->conversion_factor(g, *si));
    ExactQuantity q(random_rational(rng), g, kitchen);
    CHECK(convert(q, moved).magnitude() == convert(q, si).magnitude());
  }
}

TEST_CASE("trivialization is a homomorphism") {
  auto kitchen = load_data("kitchen.json");
  auto si = load_data("si.json");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> ex(-3, 3);
  auto dim = [&] {
    return DimVector{ex(rng), ex(rng), ex(rng), ex(rng), ex(rng)};
  };
  for (int i = 0; i < 100; ++i) {
    ExactQuantity x(random_rational(rng), dim(), kitchen);
    ExactQuantity y(random_rational(rng), dim(), kitchen);
    auto txy = trivialize(*si, potential_mul(x, y));
    auto tx = trivialize(*si, x), ty = trivialize(*si, y);
    CHECK(txy.value == tx.value * ty.value);
    CHECK(txy.dim == tx.dim + ty.dim);
  }
}

TEST_CASE("zero of one dimension absorbs into the sum dimension") {
  auto sys = rank_system(3);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    DimVector g{static_cast<int>(rng() % 5) - 2, 1, 0}, h{0, static_cast<int>(rng() % 5) - 2, 3};
    ExactQuantity a(random_rational(rng), h, sys);
    auto product = ExactQuantity::zero(g, sys) * a;
    CHECK(product.is_zero());
    CHECK(product.dim() == g + h);
  }
}
