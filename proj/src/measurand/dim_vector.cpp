#include "dimjac/measurand/dim_vector.hpp"

#include <algorithm>

#include "dimjac/errors.hpp"

namespace dimjac {

namespace {

void require_same_rank(const DimVector& a, const DimVector& b) {
  if (a.rank() != b.rank())
    throw DimensionMismatch("dimension vectors of rank " +
                            std::to_string(a.rank()) + " and " +
                            std::to_string(b.rank()) + " cannot be combined");
}

}  // namespace

DimVector DimVector::axis(std::size_t rank, std::size_t index) {
  DimVector v = zero(rank);
  v.exponents_.at(index) = 1;
  return v;
}

bool DimVector::is_zero() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](int e) { return e == 0; });
}

DimVector DimVector::operator+(const DimVector& other) const {
  DimVector r = *this;
  r += other;
  return r;
}

DimVector& DimVector::operator+=(const DimVector& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    exponents_[i] += other.exponents_[i];
  return *this;
}

DimVector DimVector::operator-(const DimVector& other) const {
  return *this + (-other);
}

DimVector DimVector::operator-() const { return *this * -1; }

DimVector DimVector::operator*(int factor) const {
  DimVector r = *this;
  for (int& e : r.exponents_) e *= factor;
  return r;
}

std::string DimVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exponents_[i]);
  }
  return out + ")";
}

}  // namespace dimjac
