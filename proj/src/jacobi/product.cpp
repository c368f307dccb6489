#include "dimjac/jacobi/product.hpp"

#include <algorithm>
#include <numeric>

#include "dimjac/errors.hpp"

namespace dimjac {

namespace {

std::vector<std::size_t> first_map(std::size_t n1) {
  std::vector<std::size_t> map(n1);
  std::iota(map.begin(), map.end(), 0);
  return map;
}

std::vector<std::size_t> second_map(std::size_t n1, std::size_t n2) {
  std::vector<std::size_t> map(n2);
  std::iota(map.begin(), map.end(), n1);
  return map;
}

Polynomial t_power(std::size_t n1, std::size_t n2, int k) {
  std::size_t dim = n1 + n2 + 1;
  Exponents e(dim, 0);
  e[dim - 1] = k;
  return Polynomial::monomial(dim, e);
}

}  // namespace

Polynomial base_function_first(const Polynomial& f, std::size_t n1, std::size_t n2) {
  return f.embed(n1 + n2 + 1, first_map(n1));
}

Polynomial base_function_second(const Polynomial& f, std::size_t n1, std::size_t n2) {
  return f.embed(n1 + n2 + 1, second_map(n1, n2));
}

Polynomial pullback_first(const Polynomial& s, std::size_t n1, std::size_t n2) {
  return base_function_first(s, n1, n2);
}

Polynomial pullback_second(const Polynomial& s, std::size_t n1, std::size_t n2) {
  return base_function_second(s, n1, n2) * t_power(n1, n2, -1);
}

Polynomial ratio_first_second(const Polynomial& a, const Rational& b,
                              std::size_t n1, std::size_t n2) {
  if (b == 0) throw DivisionByZero("ratio by a vanishing section");
  return base_function_first(a, n1, n2) * t_power(n1, n2, 1) * Rational(1 / b);
}

Polynomial ratio_second_first(const Polynomial& b, const Rational& a,
                              std::size_t n1, std::size_t n2) {
  if (a == 0) throw DivisionByZero("ratio by a vanishing section");
  return base_function_second(b, n1, n2) * t_power(n1, n2, -1) * Rational(1 / a);
}

LichnerowiczStructure product_jacobi(const LichnerowiczStructure& l1,
                                     const LichnerowiczStructure& l2) {
  if (auto c = is_jacobi_pair(l1); !c.ok)
    throw NotJacobi("first factor is not a Jacobi pair: " + c.witness);
  if (auto c = is_jacobi_pair(l2); !c.ok)
    throw NotJacobi("second factor is not a Jacobi pair: " + c.witness);
  std::size_t n1 = l1.dimension(), n2 = l2.dimension();
  std::size_t dim = n1 + n2 + 1;
  auto m1 = first_map(n1), m2 = second_map(n1, n2);
  Polynomial t = t_power(n1, n2, 1);

  MultiVector r1 = l1.r().embed(dim, m1);
  MultiVector r2 = l2.r().embed(dim, m2);
  const std::size_t t_index[] = {dim - 1};
  MultiVector dt = MultiVector::basis(dim, t_index, Polynomial::constant(dim, Rational(1)));

  MultiVector pi = l1.pi().embed(dim, m1) + l2.pi().embed(dim, m2) * t +
                   wedge(r2 * (t * t) - r1 * t, dt);

  std::vector<std::string> names = l1.names();
  auto taken = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  for (const auto& n : l2.names()) {
    std::string name = n;
    while (taken(name)) name += "_2";
    names.push_back(name);
  }
  std::string ratio = "t";
  while (taken(ratio)) ratio += "_";
  names.push_back(ratio);
  return LichnerowiczStructure(pi, r1, names);
}

}  // namespace dimjac
