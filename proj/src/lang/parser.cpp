#include "dimjac/lang/parser.hpp"

#include <charconv>

#include "dimjac/errors.hpp"

namespace dimjac::lang {

UnitExprPtr UnitExpr::make_symbol(std::string s, std::size_t offset) {
  auto e = std::make_shared<UnitExpr>();
  e->kind = Kind::kSymbol;
  e->symbol = std::move(s);
  e->offset = offset;
  return e;
}

UnitExprPtr UnitExpr::make_power(UnitExprPtr base, int exponent) {
  auto e = std::make_shared<UnitExpr>();
  e->kind = Kind::kPower;
  e->offset = base->offset;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

UnitExprPtr UnitExpr::make_binary(Kind kind, UnitExprPtr lhs, UnitExprPtr rhs) {
  auto e = std::make_shared<UnitExpr>();
  e->kind = kind;
  e->offset = lhs->offset;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

std::string describe(const UnitExpr& e) {
  switch (e.kind) {
    case UnitExpr::Kind::kSymbol: return e.symbol;
    case UnitExpr::Kind::kPower:
      return describe(*e.lhs) + "^" + std::to_string(e.exponent);
    case UnitExpr::Kind::kProduct:
      return describe(*e.lhs) + "*" + describe(*e.rhs);
    case UnitExpr::Kind::kQuotient:
      return describe(*e.lhs) + "/" + describe(*e.rhs);
  }
  return {};
}

std::string describe(const QuantityExpr& e) {
  using K = QuantityExpr::Kind;
  auto binary = [&](const char* name) {
    return std::string(name) + "(" + describe(*e.lhs) + "," + describe(*e.rhs) +
           ")";
  };
  switch (e.kind) {
    case K::kLiteral:
      return "Lit(" + e.number + (e.unit ? "," + describe(*e.unit) : "") + ")";
    case K::kNeg: return "Neg(" + describe(*e.lhs) + ")";
    case K::kAdd: return binary("Add");
    case K::kSub: return binary("Sub");
    case K::kMul: return binary("Mul");
    case K::kDiv: return binary("Div");
    case K::kPow:
      return "Pow(" + describe(*e.lhs) + "," + std::to_string(e.exponent) + ")";
    case K::kParen: return describe(*e.lhs);
  }
  return {};
}

namespace {

using K = QuantityExpr::Kind;

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  QuantityExprPtr run() {
    if (tokens_.empty()) fail("expression");
    auto e = expression();
    if (!at_end()) fail("end of input");
    return e;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth)
        throw ParseError(parser.offset(), "shallower nesting",
                         "nesting deeper than " + std::to_string(kMaxDepth));
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }
  bool next_is(TokenKind kind, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->kind == kind;
  }
  std::size_t offset() const {
    if (!at_end()) return tokens_[pos_].offset;
    if (tokens_.empty()) return 0;
    const Token& last = tokens_.back();
    return last.offset + last.text.size();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = at_end() ? "end of input"
                                 : std::string(kind_name(peek()->kind)) + " '" +
                                       peek()->text + "'";
    throw ParseError(offset(), expected, found);
  }

  static QuantityExprPtr node(K kind, QuantityExprPtr lhs, QuantityExprPtr rhs,
                              std::size_t offset) {
    auto e = std::make_shared<QuantityExpr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    e->offset = offset;
    return e;
  }

  QuantityExprPtr expression() {
    DepthGuard guard(*this);
    auto lhs = unary();
    while (next_is(TokenKind::kPlus) || next_is(TokenKind::kMinus)) {
      const Token& op = tokens_[pos_++];
      auto rhs = unary();
      lhs = node(op.kind == TokenKind::kPlus ? K::kAdd : K::kSub, lhs, rhs,
                 op.offset);
    }
    return lhs;
  }

  QuantityExprPtr unary() {
    DepthGuard guard(*this);
    if (next_is(TokenKind::kMinus)) {
      std::size_t at = tokens_[pos_++].offset;
      return node(K::kNeg, unary(), nullptr, at);
    }
    return term();
  }

  QuantityExprPtr term() {
    auto lhs = factor();
    while (next_is(TokenKind::kStar) || next_is(TokenKind::kSlash)) {
      const Token& op = tokens_[pos_++];
      auto rhs = factor();
      lhs = node(op.kind == TokenKind::kStar ? K::kMul : K::kDiv, lhs, rhs,
                 op.offset);
    }
    return lhs;
  }

  // A sign directly after '*' or '/' ("2 * -3") negates that factor.
  QuantityExprPtr factor() {
    DepthGuard guard(*this);
    if (next_is(TokenKind::kMinus)) {
      std::size_t at = tokens_[pos_++].offset;
      return node(K::kNeg, factor(), nullptr, at);
    }
    return power();
  }

  QuantityExprPtr power() {
    auto base = primary();
    if (next_is(TokenKind::kCaret)) {
      std::size_t at = tokens_[pos_++].offset;
      auto e = node(K::kPow, base, nullptr, at);
      std::const_pointer_cast<QuantityExpr>(e)->exponent = integer_exponent();
      return e;
    }
    return base;
  }

  QuantityExprPtr primary() {
    if (next_is(TokenKind::kNumber)) {
      const Token& number = tokens_[pos_++];
      auto e = std::make_shared<QuantityExpr>();
      e->kind = K::kLiteral;
      e->number = number.text;
      e->offset = number.offset;
      if (next_is(TokenKind::kIdent)) e->unit = unit_expression();
      return e;
    }
    if (next_is(TokenKind::kIdent)) {
      auto e = std::make_shared<QuantityExpr>();
      e->kind = K::kLiteral;
      e->number = "1";
      e->offset = peek()->offset;
      e->unit = unit_expression();
      return e;
    }
    if (next_is(TokenKind::kLParen)) {
      std::size_t at = tokens_[pos_++].offset;
      auto inner = expression();
      if (!next_is(TokenKind::kRParen)) fail("')'");
      ++pos_;
      return node(K::kParen, inner, nullptr, at);
    }
    fail("number, unit or '('");
  }

  // unit_power (('*' | '/') unit_power)*, continuing only while an
  // identifier follows the operator.
  UnitExprPtr unit_expression() {
    auto lhs = unit_power();
    while ((next_is(TokenKind::kStar) || next_is(TokenKind::kSlash)) &&
           next_is(TokenKind::kIdent, 1)) {
      auto kind = tokens_[pos_++].kind == TokenKind::kStar
                      ? UnitExpr::Kind::kProduct
                      : UnitExpr::Kind::kQuotient;
      lhs = UnitExpr::make_binary(kind, lhs, unit_power());
    }
    return lhs;
  }

  UnitExprPtr unit_power() {
    if (!next_is(TokenKind::kIdent)) fail("unit symbol");
    const Token& symbol = tokens_[pos_++];
    auto e = UnitExpr::make_symbol(symbol.text, symbol.offset);
    if (next_is(TokenKind::kCaret)) {
      ++pos_;
      return UnitExpr::make_power(e, integer_exponent());
    }
    return e;
  }

  int integer_exponent() {
    bool negative = false;
    if (next_is(TokenKind::kMinus)) {
      negative = true;
      ++pos_;
    } else if (next_is(TokenKind::kPlus)) {
      ++pos_;
    }
    if (!next_is(TokenKind::kNumber)) fail("integer exponent");
    const Token& t = *peek();
    int value = 0;
    auto [end, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || end != t.text.data() + t.text.size())
      fail("integer exponent");
    if (value > kMaxExponent)
      throw ParseError(t.offset,
                       "exponent of magnitude at most " +
                           std::to_string(kMaxExponent),
                       t.text);
    ++pos_;
    return negative ? -value : value;
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

QuantityExprPtr parse(std::span<const Token> tokens) {
  return Parser(tokens).run();
}

QuantityExprPtr parse(std::string_view input) {
  auto tokens = tokenize(input);
  return parse(tokens);
}

}  // namespace dimjac::lang
