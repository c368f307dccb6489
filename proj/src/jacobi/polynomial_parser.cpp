#include <algorithm>
#include "dimjac/jacobi/polynomial_parser.hpp"

#include <charconv>

#include "dimjac/errors.hpp"
#include "dimjac/lang/token.hpp"

namespace dimjac {

namespace {

using lang::Token;
using lang::TokenKind;

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> names)
      : tokens_(lang::tokenize(text)), names_(names), end_(text.size()) {}

  Polynomial run() {
    auto p = expression();
    if (pos_ < tokens_.size()) fail("operator or end of input");
    return p;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(PolynomialParser& p) : parser(p) {
      if (++parser.depth_ > 200)
        throw ParseError(parser.offset(), "shallower nesting", "deep nesting");
    }
    ~DepthGuard() { --parser.depth_; }
    PolynomialParser& parser;
  };

  bool next_is(TokenKind kind) const {
    return pos_ < tokens_.size() && tokens_[pos_].kind == kind;
  }
  std::size_t offset() const {
    return pos_ < tokens_.size() ? tokens_[pos_].offset : end_;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < tokens_.size() ? "'" + tokens_[pos_].text + "'"
                                              : "end of input";
    throw ParseError(offset(), expected, found);
  }

  bool starts_primary() const {
    return next_is(TokenKind::kNumber) || next_is(TokenKind::kIdent) ||
           next_is(TokenKind::kLParen);
  }

  Polynomial expression() {
    DepthGuard guard(*this);
    Polynomial sum = term();
    while (next_is(TokenKind::kPlus) || next_is(TokenKind::kMinus)) {
      bool plus = tokens_[pos_++].kind == TokenKind::kPlus;
      Polynomial rhs = term();
      if (plus)
        sum += rhs;
      else
        sum -= rhs;
    }
    return sum;
  }

  Polynomial term() {
    Polynomial product = factor();
    for (;;) {
      if (next_is(TokenKind::kStar)) {
        ++pos_;
        product = multiply(product, factor());
      } else if (next_is(TokenKind::kSlash)) {
        std::size_t at = offset();
        ++pos_;
        Polynomial divisor = factor();
        if (!divisor.is_constant() || divisor.is_zero())
          throw ParseError(at, "division by a nonzero constant",
                           "a non-constant or zero divisor");
        product = product * Rational(1 / divisor.constant_term());
      } else if (starts_primary()) {
        product = multiply(product, power());
      } else {
        return product;
      }
    }
  }

  Polynomial multiply(const Polynomial& a, const Polynomial& b) const {
    if (a.degree() + b.degree() > kMaxPolynomialDegree)
      throw ParseError(offset(), "degree at most " +
                                     std::to_string(kMaxPolynomialDegree),
                       "a larger degree");
    double bound = std::min(
        static_cast<double>(a.terms().size()) * static_cast<double>(b.terms().size()),
        monomial_count(a.nvars(), a.degree() + b.degree()));
    check_terms(bound);
    return a * b;
  }

  // Number of monomials of total degree <= d in n variables, saturating.
  static double monomial_count(std::size_t n, int d) {
    double c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      c = c * (d + static_cast<double>(k)) / static_cast<double>(k);
      if (c > 1e18) break;
    }
    return c;
  }

  // Number of terms of a sum of s terms raised to the e, saturating.
  static double multiset_count(std::size_t s, int e) {
    double c = 1;
    for (int k = 1; k <= e; ++k) {
      c = c * (static_cast<double>(s) - 1 + k) / k;
      if (c > 1e18) break;
    }
    return c;
  }

  void check_terms(double bound) const {
    if (bound > kMaxPolynomialTerms)
      throw ParseError(offset(), "an expansion of at most " +
                                     std::to_string(static_cast<long>(kMaxPolynomialTerms)) +
                                     " terms",
                       "a larger expansion");
  }

  Polynomial factor() {
    DepthGuard guard(*this);
    if (next_is(TokenKind::kMinus)) {
      ++pos_;
      return -factor();
    }
    if (next_is(TokenKind::kPlus)) {
      ++pos_;
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!next_is(TokenKind::kCaret)) return base;
    ++pos_;
    bool negative = false;
    if (next_is(TokenKind::kMinus) || next_is(TokenKind::kPlus))
      negative = tokens_[pos_++].kind == TokenKind::kMinus;
    if (!next_is(TokenKind::kNumber)) fail("integer exponent");
    const Token& t = tokens_[pos_];
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail("integer exponent");
    if (value > kMaxPolynomialExponent)
      throw ParseError(t.offset, "exponent at most " +
                                     std::to_string(kMaxPolynomialExponent),
                       t.text);
    ++pos_;
    if (negative && (base.terms().size() != 1))
      throw ParseError(t.offset, "a monomial base for a negative power",
                       "a sum");
    if (base.degree() * value > kMaxPolynomialDegree)
      throw ParseError(t.offset, "degree at most " +
                                     std::to_string(kMaxPolynomialDegree),
                       "a larger degree");
    if (!negative && value > 1)
      check_terms(std::min(monomial_count(base.nvars(), base.degree() * value),
                           multiset_count(base.terms().size(), value)));
    return base.pow(negative ? -value : value);
  }

  Polynomial primary() {
    std::size_t n = names_.size();
    if (next_is(TokenKind::kNumber)) {
      Rational c = parse_rational(tokens_[pos_++].text);
      return Polynomial::constant(n, c);
    }
    if (next_is(TokenKind::kIdent)) {
      const Token& t = tokens_[pos_];
      for (std::size_t i = 0; i < n; ++i)
        if (names_[i] == t.text) {
          ++pos_;
          return Polynomial::variable(n, i);
        }
      fail("a variable name");
    }
    if (next_is(TokenKind::kLParen)) {
      ++pos_;
      Polynomial inner = expression();
      if (!next_is(TokenKind::kRParen)) fail("')'");
      ++pos_;
      return inner;
    }
    fail("number, variable or '('");
  }

  std::vector<Token> tokens_;
  std::span<const std::string> names_;
  std::size_t end_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> names) {
  return PolynomialParser(text, names).run();
}

}  // namespace dimjac
