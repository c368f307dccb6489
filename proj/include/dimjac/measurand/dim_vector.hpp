#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dimjac {

/// Element of the dimension group Z^k. The rank k is fixed by the measurand
/// space a vector belongs to; mixing ranks is a programming error and throws
/// DimensionMismatch.
class DimVector {
 public:
  DimVector() = default;
  DimVector(std::initializer_list<int> exponents) : exponents_(exponents) {}
  explicit DimVector(std::vector<int> exponents)
      : exponents_(std::move(exponents)) {}

  static DimVector zero(std::size_t rank) {
    return DimVector(std::vector<int>(rank, 0));
  }
  static DimVector axis(std::size_t rank, std::size_t index);

  std::size_t rank() const noexcept { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const int> exponents() const noexcept { return exponents_; }
  bool is_zero() const noexcept;

  DimVector operator+(const DimVector& other) const;
  DimVector operator-(const DimVector& other) const;
  DimVector operator-() const;
  DimVector operator*(int factor) const;
  DimVector& operator+=(const DimVector& other);

  bool operator==(const DimVector&) const = default;
  auto operator<=>(const DimVector&) const = default;

  /// "(1,0,-1)"
  std::string to_string() const;

 private:
  std::vector<int> exponents_;
};

}  // namespace dimjac
