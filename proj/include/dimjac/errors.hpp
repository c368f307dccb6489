#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dimjac {

/// Base of every error raised by the library. The CLI maps each subclass
/// family onto an exit code (see ErrorKind).
enum class ErrorKind {
  kDimension,   // dimensional homogeneity and unit-system mismatches
  kParse,       // lexing/parsing of expressions, polynomials and documents
  kStructural,  // inputs that violate a structural requirement (non-Jacobi, ...)
  kIo,
  kDomain,      // arithmetic domain errors (division by zero, singular matrix)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define DIMJAC_DEFINE_ERROR(Name, Kind)                                      \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

DIMJAC_DEFINE_ERROR(DimensionMismatch, kDimension)
DIMJAC_DEFINE_ERROR(SystemMismatch, kDimension)
DIMJAC_DEFINE_ERROR(IncompatibleSystems, kDimension)
DIMJAC_DEFINE_ERROR(LineMismatch, kDimension)
DIMJAC_DEFINE_ERROR(UnknownUnit, kDimension)
DIMJAC_DEFINE_ERROR(ZeroDenominator, kDomain)
DIMJAC_DEFINE_ERROR(DivisionByZero, kDomain)
DIMJAC_DEFINE_ERROR(SingularMatrix, kDomain)
DIMJAC_DEFINE_ERROR(NumericOverflow, kDomain)
DIMJAC_DEFINE_ERROR(InvalidArgument, kStructural)
DIMJAC_DEFINE_ERROR(DegreeOverflow, kStructural)
DIMJAC_DEFINE_ERROR(NotJacobi, kStructural)
DIMJAC_DEFINE_ERROR(NotZInvariant, kStructural)
DIMJAC_DEFINE_ERROR(InvalidState, kStructural)
DIMJAC_DEFINE_ERROR(IoError, kIo)
DIMJAC_DEFINE_ERROR(DocumentError, kParse)

#undef DIMJAC_DEFINE_ERROR

/// Lexical error carrying the byte offset of the offending character.
class LexError : public Error {
 public:
  LexError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::kParse, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar error; `expected` names what the parser was looking for.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected,
             const std::string& found)
      : Error(ErrorKind::kParse, "expected " + expected + " but found " +
                                     found + " at offset " +
                                     std::to_string(offset)),
        offset_(offset),
        expected_(expected) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace dimjac
