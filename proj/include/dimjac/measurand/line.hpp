#pragma once

#include <memory>
#include <string>

#include "dimjac/errors.hpp"
#include "dimjac/measurand/magnitude.hpp"

namespace dimjac {

template <Magnitude M>
class LineElement;

/// A one-dimensional real vector space with no preferred unit.
///
/// Internally every element is a coefficient times a hidden nonzero
/// generator. The generator never leaves this class: callers obtain elements
/// as multiples of `reference()` and compare them through `ratio`, which is
/// invariant under `rescaled`.
class Line {
 public:
  explicit Line(std::string label);

  const std::string& label() const noexcept { return label_; }

  /// The same abstract line represented with its generator multiplied by
  /// `lambda` (nonzero). Elements move across with `LineElement::on`.
  Line rescaled(const Rational& lambda) const;

  /// Some nonzero element. Which one is unspecified.
  template <Magnitude M>
  LineElement<M> reference() const;

  template <Magnitude M>
  LineElement<M> zero() const;

  /// Lines are equal when they are the same abstract line, whatever their
  /// internal generator.
  bool operator==(const Line& other) const noexcept {
    return label_ == other.label_;
  }

 private:
  template <Magnitude M>
  friend class LineElement;
  template <Magnitude M>
  friend M ratio(const LineElement<M>& a, const LineElement<M>& b);

  std::string label_;
  Rational generator_{1};
};

template <Magnitude M>
class LineElement {
 public:
  const Line& line() const noexcept { return line_; }
  bool is_zero() const { return coefficient_ == 0; }

  LineElement operator*(const M& scalar) const {
    return LineElement(line_, M(coefficient_ * scalar));
  }
  friend LineElement operator*(const M& scalar, const LineElement& e) {
    return e * scalar;
  }
  LineElement operator+(const LineElement& other) const {
    require_same_line(other);
    return LineElement(line_, M(coefficient_ + other.on(line_).coefficient_));
  }
  LineElement operator-() const { return LineElement(line_, M(-coefficient_)); }
  LineElement operator-(const LineElement& other) const {
    return *this + (-other);
  }

  /// This element re-expressed on another representation of the same line.
  LineElement on(const Line& representation) const {
    require_same_line(representation);
    if (representation.generator_ == line_.generator_)
      return LineElement(representation, coefficient_);
    Rational change = line_.generator_ / representation.generator_;
    return LineElement(representation, scale_exact(coefficient_, change));
  }

 private:
  friend class Line;
  template <Magnitude N>
  friend N ratio(const LineElement<N>& a, const LineElement<N>& b);

  LineElement(Line line, M coefficient)
      : line_(std::move(line)), coefficient_(std::move(coefficient)) {}

  void require_same_line(const LineElement& other) const {
    require_same_line(other.line_);
  }
  void require_same_line(const Line& other) const {
    if (!(line_ == other))
      throw LineMismatch("elements of lines '" + line_.label() + "' and '" +
                         other.label() + "' cannot be combined");
  }

  Line line_;
  M coefficient_;
};

template <Magnitude M>
LineElement<M> Line::reference() const {
  return LineElement<M>(*this, M(1));
}

template <Magnitude M>
LineElement<M> Line::zero() const {
  return LineElement<M>(*this, M(0));
}

/// The unique scalar l with a = l * b.
template <Magnitude M>
M ratio(const LineElement<M>& a, const LineElement<M>& b) {
  if (!(a.line_ == b.line_))
    throw LineMismatch("ratio of elements of lines '" + a.line_.label() +
                       "' and '" + b.line_.label() + "'");
  if (b.is_zero()) throw ZeroDenominator("ratio with a zero denominator");
  if (a.line_.generator_ == b.line_.generator_)
    return M(a.coefficient_ / b.coefficient_);
  // Different internal representations of the same line.
  Rational change = a.line_.generator_ / b.line_.generator_;
  return scale_exact(M(a.coefficient_ / b.coefficient_), change);
}

}  // namespace dimjac
