#include "dimjac/jacobi/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "dimjac/errors.hpp"

namespace dimjac {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e));
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponents exponents,
                                const Rational& c) {
  if (exponents.size() != nvars)
    throw InvalidArgument("exponent vector does not match variable count");
  Polynomial p(nvars);
  p.add_term(exponents, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw InvalidArgument("polynomials over " + std::to_string(nvars_) +
                          " and " + std::to_string(other.nvars_) +
                          " variables");
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

bool Polynomial::depends_on(std::size_t i) const {
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) return true;
  return false;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same(other);
  Polynomial r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& [e, coef] : r.terms_) coef *= c;
  return r;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1)
      throw InvalidArgument("only a monomial has a Laurent inverse");
    const auto& [e, c] = *terms_.begin();
    Exponents inv(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) inv[i] = -e[i];
    return monomial(nvars_, std::move(inv), Rational(1 / c)).pow(-exponent);
  }
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1u) {
    if (e & 1u) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    r.add_term(d, c * e[i]);
  }
  return r;
}

Polynomial Polynomial::substitute_zero(std::span<const std::size_t> zero) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    bool vanishes = false;
    for (std::size_t i : zero) {
      if (e[i] < 0)
        throw InvalidArgument("cannot set an inverted variable to zero");
      if (e[i] > 0) vanishes = true;
    }
    if (!vanishes) r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::embed(std::size_t nvars,
                             std::span<const std::size_t> map) const {
  if (map.size() != nvars_)
    throw InvalidArgument("embedding map does not match variable count");
  Polynomial r(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents moved(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) moved.at(map[i]) += e[i];
    r.add_term(moved, c);
  }
  return r;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_)
    throw InvalidArgument("evaluation point has the wrong dimension");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = to_double(c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) term *= std::pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_)
    throw InvalidArgument("evaluation point has the wrong dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) term *= dimjac::pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_)
    throw InvalidArgument("variable names do not match variable count");
  if (terms_.empty()) return "0";
  // Highest total degree first, ties in reverse lexicographic exponent order.
  std::vector<const Terms::value_type*> order;
  for (const auto& term : terms_) order.push_back(&term);
  auto total = [](const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    int da = total(a->first), db = total(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += dimjac::to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += dimjac::to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace dimjac
