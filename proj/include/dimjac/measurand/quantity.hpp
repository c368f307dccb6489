#pragma once

#include <memory>
#include <string>
#include <utility>

#include "dimjac/errors.hpp"
#include "dimjac/measurand/dim_vector.hpp"
#include "dimjac/measurand/magnitude.hpp"
#include "dimjac/measurand/unit_system.hpp"

namespace dimjac {

/// Element of the dimensioned field of a measurand space: a magnitude in the
/// base units of `system` and its dimension. Immutable.
template <Magnitude M>
class BasicQuantity {
 public:
  BasicQuantity(M magnitude, DimVector dim, UnitSystemPtr system)
      : magnitude_(std::move(magnitude)),
        dim_(std::move(dim)),
        system_(std::move(system)) {
    if (!system_) throw InvalidArgument("a quantity needs a unit system");
    if (dim_.rank() != system_->rank())
      throw DimensionMismatch("dimension " + dim_.to_string() +
                              " does not fit a rank-" +
                              std::to_string(system_->rank()) + " system");
  }

  static BasicQuantity one(UnitSystemPtr system) {
    auto rank = system->rank();
    return BasicQuantity(M(1), DimVector::zero(rank), std::move(system));
  }
  static BasicQuantity zero(DimVector dim, UnitSystemPtr system) {
    return BasicQuantity(M(0), std::move(dim), std::move(system));
  }

  const M& magnitude() const noexcept { return magnitude_; }
  const DimVector& dim() const noexcept { return dim_; }
  const UnitSystemPtr& system() const noexcept { return system_; }
  bool is_zero() const { return magnitude_ == 0; }

 private:
  M magnitude_;
  DimVector dim_;
  UnitSystemPtr system_;
};

using Quantity = BasicQuantity<double>;
using ExactQuantity = BasicQuantity<Rational>;

/// (value, dimension) image of a quantity under a choice of units.
template <Magnitude M>
struct Trivialized {
  M value;
  DimVector dim;
  bool operator==(const Trivialized&) const = default;
};

inline bool same_system(const UnitSystemPtr& a, const UnitSystemPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace detail {

template <Magnitude M>
void require_same_system(const BasicQuantity<M>& x, const BasicQuantity<M>& y) {
  if (!same_system(x.system(), y.system()))
    throw SystemMismatch("quantities belong to different unit systems");
}

}  // namespace detail

/// Tensor product: magnitudes multiply, dimensions add.
template <Magnitude M>
BasicQuantity<M> potential_mul(const BasicQuantity<M>& x,
                               const BasicQuantity<M>& y) {
  detail::require_same_system(x, y);
  return BasicQuantity<M>(M(x.magnitude() * y.magnitude()), x.dim() + y.dim(),
                          x.system());
}

/// Addition within one homogeneous component.
template <Magnitude M>
BasicQuantity<M> potential_add(const BasicQuantity<M>& x,
                               const BasicQuantity<M>& y) {
  detail::require_same_system(x, y);
  if (x.dim() != y.dim())
    throw DimensionMismatch("cannot add " + x.system()->render_dim(x.dim()) +
                            " and " + y.system()->render_dim(y.dim()));
  return BasicQuantity<M>(M(x.magnitude() + y.magnitude()), x.dim(), x.system());
}

template <Magnitude M>
BasicQuantity<M> potential_neg(const BasicQuantity<M>& x) {
  return BasicQuantity<M>(M(-x.magnitude()), x.dim(), x.system());
}

template <Magnitude M>
BasicQuantity<M> potential_sub(const BasicQuantity<M>& x,
                               const BasicQuantity<M>& y) {
  detail::require_same_system(x, y);
  if (x.dim() != y.dim())
    throw DimensionMismatch("cannot subtract " +
                            y.system()->render_dim(y.dim()) + " from " +
                            x.system()->render_dim(x.dim()));
  return BasicQuantity<M>(M(x.magnitude() - y.magnitude()), x.dim(), x.system());
}

template <Magnitude M>
BasicQuantity<M> potential_inv(const BasicQuantity<M>& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of a zero quantity");
  return BasicQuantity<M>(M(M(1) / x.magnitude()), -x.dim(), x.system());
}

template <Magnitude M>
BasicQuantity<M> potential_div(const BasicQuantity<M>& x,
                               const BasicQuantity<M>& y) {
  detail::require_same_system(x, y);
  if (y.is_zero()) throw DivisionByZero("division by a zero quantity");
  return potential_mul(x, potential_inv(y));
}

/// Integer power; negative exponents require a nonzero magnitude.
template <Magnitude M>
BasicQuantity<M> potential_pow(const BasicQuantity<M>& x, int exponent) {
  if (exponent < 0 && x.is_zero())
    throw DivisionByZero("zero quantity raised to a negative power");
  M result(1);
  M base = x.magnitude();
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  while (e) {
    if (e & 1u) result = M(result * base);
    base = M(base * base);
    e >>= 1u;
  }
  if (exponent < 0) result = M(M(1) / result);
  return BasicQuantity<M>(result, x.dim() * exponent, x.system());
}

/// Image of x under the choice of units `units`: x = units_g ⊙ value.
template <Magnitude M>
Trivialized<M> trivialize(const UnitSystem& units, const BasicQuantity<M>& x) {
  if (!x.system()->same_measurand_space(units))
    throw SystemMismatch("quantity and choice of units describe different "
                         "measurand spaces");
  Rational factor = x.system()->conversion_factor(x.dim(), units);
  M value = factor == 1 ? x.magnitude() : scale_exact(x.magnitude(), factor);
  return Trivialized<M>{std::move(value), x.dim()};
}

/// Inverse of trivialize.
template <Magnitude M>
BasicQuantity<M> untrivialize(const UnitSystemPtr& units, Trivialized<M> t) {
  return BasicQuantity<M>(std::move(t.value), std::move(t.dim), units);
}

/// Re-expresses x in `target`'s units; dimension unchanged.
template <Magnitude M>
BasicQuantity<M> convert(const BasicQuantity<M>& x, const UnitSystemPtr& target) {
  if (!x.system()->same_measurand_space(*target))
    throw IncompatibleSystems("cannot convert between unit systems over "
                              "different base measurands");
  return untrivialize(target, trivialize(*target, x));
}

template <Magnitude M>
bool operator==(const BasicQuantity<M>& a, const BasicQuantity<M>& b) {
  return a.magnitude() == b.magnitude() && a.dim() == b.dim() &&
         same_system(a.system(), b.system());
}

template <Magnitude M>
BasicQuantity<M> operator*(const BasicQuantity<M>& x, const BasicQuantity<M>& y) {
  return potential_mul(x, y);
}
template <Magnitude M>
BasicQuantity<M> operator+(const BasicQuantity<M>& x, const BasicQuantity<M>& y) {
  return potential_add(x, y);
}

}  // namespace dimjac
