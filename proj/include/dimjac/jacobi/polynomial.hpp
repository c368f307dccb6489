#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dimjac/measurand/rational.hpp"

namespace dimjac {

using Exponents = std::vector<int>;

/// Exact multivariate polynomial over Q in a fixed number of variables.
/// Negative exponents are allowed, which makes the same type serve as a
/// Laurent polynomial in a designated ratio variable; `is_polynomial` tells
/// the two apart. Terms are kept canonical: no zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(std::size_t nvars, Exponents exponents,
                             const Rational& c = Rational(1));

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant term.
  Rational constant_term() const;
  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const;
  /// True when no exponent is negative.
  bool is_polynomial() const;
  /// True when some term has a positive power of variable i.
  bool depends_on(std::size_t i) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  /// Nonnegative powers of anything; negative powers of a monomial only.
  Polynomial pow(int exponent) const;

  Polynomial derivative(std::size_t i) const;

  /// Sets x_i = 0 for every index in `zero`. Throws InvalidArgument when a
  /// term has a negative power of such a variable.
  Polynomial substitute_zero(std::span<const std::size_t> zero) const;

  /// Re-embeds into `nvars` variables; variable i goes to index map[i].
  Polynomial embed(std::size_t nvars, std::span<const std::size_t> map) const;

  double evaluate(std::span<const double> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Text such as "-1/2*q^2*p + z - 3" with the given variable names.
  std::string to_string(std::span<const std::string> names) const;

  bool operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  void add_term(const Exponents& e, const Rational& c);
  void require_same(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

using LaurentPolynomial = Polynomial;

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Default names: x1..xn.
std::vector<std::string> default_names(std::size_t n);

}  // namespace dimjac
