#include "dimjac/jacobi/multivector.hpp"

#include <bit>

#include "dimjac/errors.hpp"

namespace dimjac {

using Mask = MultiVector::Mask;

int popcount(Mask mask) { return std::popcount(mask); }

namespace {

// Bits of `mask` strictly below / above bit i.
int count_below(Mask mask, std::size_t i) {
  return std::popcount(mask & ((Mask(1) << i) - 1));
}
int count_above(Mask mask, std::size_t i) {
  return std::popcount(mask & ~((Mask(2) << i) - 1));
}

// Sign of xi_A * xi_B = sign * xi_{A|B}; 0 when they overlap.
int product_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
    inversions += count_above(a, j);
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

MultiVector::MultiVector(std::size_t n, int degree) : n_(n), degree_(degree) {
  if (n > kMaxDimension)
    throw InvalidArgument("charts of dimension above " +
                          std::to_string(kMaxDimension) + " are not supported");
  if (degree < 0)
    throw DegreeOverflow("multivector degree " + std::to_string(degree) +
                         " on a chart of dimension " + std::to_string(n));
}

void MultiVector::add(Mask mask, const Polynomial& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(mask, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) components_.erase(it);
}

MultiVector MultiVector::function(const Polynomial& f) {
  MultiVector m(f.nvars(), 0);
  m.add(0, f);
  return m;
}

MultiVector MultiVector::vector_field(std::span<const Polynomial> components) {
  std::size_t n = components.size();
  MultiVector m(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (components[i].nvars() != n && !components[i].is_zero())
      throw InvalidArgument("vector field components over the wrong chart");
    if (!components[i].is_zero()) m.add(Mask(1) << i, components[i]);
  }
  return m;
}

MultiVector MultiVector::basis(std::size_t n, std::span<const std::size_t> indices,
                               const Polynomial& f) {
  MultiVector m(n, static_cast<int>(indices.size()));
  Mask mask = 0;
  int sign = 1;
  for (std::size_t i : indices) {
    if (i >= n) throw InvalidArgument("coordinate index out of range");
    if (mask & (Mask(1) << i)) return m;
    if (count_above(mask, i) % 2) sign = -sign;
    mask |= Mask(1) << i;
  }
  m.add(mask, f * Rational(sign));
  return m;
}

Polynomial MultiVector::component(Mask mask) const {
  auto it = components_.find(mask);
  return it == components_.end() ? Polynomial(n_) : it->second;
}

Polynomial MultiVector::component(std::span<const std::size_t> indices) const {
  if (indices.size() != static_cast<std::size_t>(degree_))
    throw InvalidArgument("index tuple does not match the degree");
  Mask mask = 0;
  int sign = 1;
  for (std::size_t i : indices) {
    if (i >= n_) throw InvalidArgument("coordinate index out of range");
    if (mask & (Mask(1) << i)) return Polynomial(n_);
    if (count_above(mask, i) % 2) sign = -sign;
    mask |= Mask(1) << i;
  }
  return component(mask) * Rational(sign);
}

MultiVector MultiVector::operator+(const MultiVector& other) const {
  if (n_ != other.n_ || degree_ != other.degree_)
    throw InvalidArgument("adding multivectors of different shape");
  MultiVector r = *this;
  for (const auto& [mask, f] : other.components_) r.add(mask, f);
  return r;
}

MultiVector MultiVector::operator-() const {
  MultiVector r(n_, degree_);
  for (const auto& [mask, f] : components_) r.add(mask, -f);
  return r;
}

MultiVector MultiVector::operator-(const MultiVector& other) const {
  return *this + (-other);
}

MultiVector MultiVector::operator*(const Polynomial& f) const {
  MultiVector r(n_, degree_);
  for (const auto& [mask, g] : components_) r.add(mask, g * f);
  return r;
}

MultiVector MultiVector::operator*(const Rational& c) const {
  MultiVector r(n_, degree_);
  for (const auto& [mask, g] : components_) r.add(mask, g * c);
  return r;
}

Polynomial MultiVector::apply(const Polynomial& f) const {
  if (degree_ != 1) throw InvalidArgument("only vector fields act on functions");
  Polynomial r(n_);
  for (const auto& [mask, g] : components_) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
    r += g * f.derivative(i);
  }
  return r;
}

MultiVector MultiVector::contract(const Polynomial& f) const {
  if (degree_ == 0) throw InvalidArgument("cannot contract a function");
  MultiVector r(n_, degree_ - 1);
  for (const auto& [mask, g] : components_) {
    for (Mask rest = mask; rest; rest &= rest - 1) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
      Polynomial df = f.derivative(i);
      if (df.is_zero()) continue;
      Polynomial term = g * df;
      if (count_below(mask, i) % 2) term = -term;
      r.add(mask & ~(Mask(1) << i), term);
    }
  }
  return r;
}

Polynomial MultiVector::evaluate(std::span<const Polynomial> functions) const {
  if (functions.size() != static_cast<std::size_t>(degree_))
    throw InvalidArgument("evaluation needs exactly one differential per slot");
  if (degree_ == 0) return component(0);
  MultiVector r = contract(functions[0]);
  return r.evaluate(functions.subspan(1));
}

MultiVector MultiVector::embed(std::size_t n, std::span<const std::size_t> map) const {
  if (map.size() != n_) throw InvalidArgument("embedding map does not match chart");
  MultiVector r(n, degree_);
  for (const auto& [mask, f] : components_) {
    std::vector<std::size_t> indices;
    for (Mask rest = mask; rest; rest &= rest - 1)
      indices.push_back(map[static_cast<std::size_t>(std::countr_zero(rest))]);
    r = r + basis(n, indices, f.embed(n, map));
  }
  return r;
}

std::string MultiVector::term_string(Mask mask, const Polynomial& coefficient,
                                     std::span<const std::string> names) {
  std::string basis_text;
  for (Mask rest = mask; rest; rest &= rest - 1) {
    if (!basis_text.empty()) basis_text += "∧";
    basis_text += "∂" + names[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  std::string coef = coefficient.to_string(names);
  if (coefficient.terms().size() > 1) coef = "(" + coef + ")";
  if (basis_text.empty()) return coef;
  if (coef == "1") return basis_text;
  if (coef == "-1") return "-" + basis_text;
  return coef + " " + basis_text;
}

std::string MultiVector::to_string(std::span<const std::string> names) const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [mask, f] : components_) {
    if (!out.empty()) out += " + ";
    out += term_string(mask, f, names);
  }
  return out;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  if (a.dimension() != b.dimension())
    throw InvalidArgument("wedge of multivectors on different charts");
  std::size_t n = a.dimension();
  int degree = a.degree() + b.degree();
  if (static_cast<std::size_t>(degree) > n)
    throw DegreeOverflow("wedge of degree " + std::to_string(degree) +
                         " exceeds the chart dimension " + std::to_string(n));
  MultiVector r(n, degree);
  for (const auto& [ma, fa] : a.components())
    for (const auto& [mb, fb] : b.components()) {
      int sign = product_sign(ma, mb);
      if (sign != 0) r.add(ma | mb, fa * fb * Rational(sign));
    }
  return r;
}

MultiVector schouten(const MultiVector& a, const MultiVector& b) {
  if (a.dimension() != b.dimension())
    throw InvalidArgument("Schouten bracket of multivectors on different charts");
  std::size_t n = a.dimension();
  int degree = a.degree() + b.degree() - 1;
  if (degree < 0) return MultiVector(n, 0);
  if (static_cast<std::size_t>(degree) > n) return MultiVector(n, static_cast<int>(n));
  MultiVector r(n, degree);
  for (const auto& [ma, fa] : a.components())
    for (const auto& [mb, fb] : b.components())
      for (std::size_t i = 0; i < n; ++i) {
        Mask bit = Mask(1) << i;
        // Right derivative of xi_A times d/dx_i of the B coefficient.
        if (ma & bit) {
          Polynomial db = fb.derivative(i);
          int sign = product_sign(ma & ~bit, mb);
          if (sign != 0 && !db.is_zero()) {
            if (count_above(ma, i) % 2) sign = -sign;
            r.add((ma & ~bit) | mb, fa * db * Rational(sign));
          }
        }
        // Minus d/dx_i of the A coefficient times the left derivative of xi_B.
        if (mb & bit) {
          Polynomial da = fa.derivative(i);
          int sign = product_sign(ma, mb & ~bit);
          if (sign != 0 && !da.is_zero()) {
            if (count_below(mb, i) % 2) sign = -sign;
            r.add(ma | (mb & ~bit), da * fb * Rational(-sign));
          }
        }
      }
  return r;
}

}  // namespace dimjac
