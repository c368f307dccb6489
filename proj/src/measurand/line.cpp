#include "dimjac/measurand/line.hpp"

namespace dimjac {

Line::Line(std::string label) : label_(std::move(label)) {}

Line Line::rescaled(const Rational& lambda) const {
  if (lambda == 0) throw InvalidArgument("a line generator must be nonzero");
  Line copy = *this;
  copy.generator_ *= lambda;
  copy.generator_.canonicalize();
  return copy;
}

}  // namespace dimjac
