#include "dimjac/errors.hpp"
#include "dimjac/lang/token.hpp"
#include "dimjac/measurand/utf8.hpp"

namespace dimjac::lang {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (pos_ < input_.size()) {
      char c = input_[pos_];
      if (is_space(c)) {
        ++pos_;
        continue;
      }
      std::size_t start = pos_;
      switch (c) {
        case '+': tokens.push_back(single(TokenKind::kPlus)); continue;
        case '-': tokens.push_back(single(TokenKind::kMinus)); continue;
        case '*': tokens.push_back(single(TokenKind::kStar)); continue;
        case '/': tokens.push_back(single(TokenKind::kSlash)); continue;
        case '^': tokens.push_back(single(TokenKind::kCaret)); continue;
        case '(': tokens.push_back(single(TokenKind::kLParen)); continue;
        case ')': tokens.push_back(single(TokenKind::kRParen)); continue;
        default: break;
      }
      if (is_digit(c) || (c == '.' && pos_ + 1 < input_.size() &&
                          is_digit(input_[pos_ + 1]))) {
        tokens.push_back(number());
        continue;
      }
      auto decoded = utf8::decode(input_, pos_);
      if (!decoded) throw LexError(start, "malformed UTF-8");
      switch (decoded->code_point) {
        case 0x00B7:  // ·
        case 0x00D7:  // ×
        case 0x22C5:  // ⋅
        case 0x2219:  // ∙
          tokens.push_back(wide(TokenKind::kStar, decoded->length));
          continue;
        case 0x2212:  // −
          tokens.push_back(wide(TokenKind::kMinus, decoded->length));
          continue;
        case 0x00F7:  // ÷
          tokens.push_back(wide(TokenKind::kSlash, decoded->length));
          continue;
        default: break;
      }
      if (utf8::is_identifier_start(decoded->code_point)) {
        tokens.push_back(identifier());
        continue;
      }
      throw LexError(start, "unexpected character");
    }
    return tokens;
  }

 private:
  Token single(TokenKind kind) { return wide(kind, 1); }

  Token wide(TokenKind kind, std::size_t length) {
    Token t{kind, std::string(input_.substr(pos_, length)), pos_};
    pos_ += length;
    return t;
  }

  void digits() {
    while (pos_ < input_.size() && is_digit(input_[pos_])) ++pos_;
  }

  Token number() {
    std::size_t start = pos_;
    digits();
    bool integral = true;
    if (pos_ < input_.size() && input_[pos_] == '.') {
      integral = false;
      ++pos_;
      digits();
    }
    if (pos_ < input_.size() && (input_[pos_] == 'e' || input_[pos_] == 'E')) {
      // Only an exponent if digits follow; otherwise 'e' starts a unit.
      std::size_t look = pos_ + 1;
      if (look < input_.size() && (input_[look] == '+' || input_[look] == '-'))
        ++look;
      if (look < input_.size() && is_digit(input_[look])) {
        integral = false;
        pos_ = look;
        std::size_t exp_start = pos_;
        digits();
        if (pos_ - exp_start > 4) throw LexError(start, "number out of range");
      }
    }
    // "p/q" with no intervening whitespace is a single rational literal.
    if (integral && pos_ + 1 < input_.size() && input_[pos_] == '/' &&
        is_digit(input_[pos_ + 1])) {
      ++pos_;
      digits();
      if (pos_ < input_.size() &&
          (input_[pos_] == '.' || input_[pos_] == 'e' || input_[pos_] == 'E') &&
          pos_ + 1 < input_.size() && is_digit(input_[pos_ + 1]))
        throw LexError(pos_, "rational literals take integer parts only");
    }
    if (pos_ < input_.size() && input_[pos_] == '.')
      throw LexError(pos_, "unexpected character");
    return Token{TokenKind::kNumber, std::string(input_.substr(start, pos_ - start)),
                 start};
  }

  Token identifier() {
    std::size_t start = pos_;
    while (pos_ < input_.size()) {
      auto d = utf8::decode(input_, pos_);
      if (!d || !utf8::is_identifier_continue(d->code_point)) break;
      pos_ += d->length;
    }
    return Token{TokenKind::kIdent, std::string(input_.substr(start, pos_ - start)),
                 start};
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kNumber: return "number";
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kSlash: return "'/'";
    case TokenKind::kCaret: return "'^'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view input) {
  auto tokens = Lexer(input).run();
  split_exponent_fractions(tokens);
  return tokens;
}

void split_exponent_fractions(std::vector<Token>& tokens) {
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kNumber) continue;
    std::size_t before = i - 1;
    if ((tokens[before].kind == TokenKind::kMinus ||
         tokens[before].kind == TokenKind::kPlus) &&
        before > 0)
      --before;
    if (tokens[before].kind != TokenKind::kCaret) continue;
    auto slash = tokens[i].text.find('/');
    if (slash == std::string::npos) continue;
    Token whole = tokens[i];
    Token num{TokenKind::kNumber, whole.text.substr(0, slash), whole.offset};
    Token op{TokenKind::kSlash, "/", whole.offset + slash};
    Token den{TokenKind::kNumber, whole.text.substr(slash + 1), whole.offset + slash + 1};
    tokens[i] = num;
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(i) + 1, {op, den});
  }
}

}  // namespace dimjac::lang
