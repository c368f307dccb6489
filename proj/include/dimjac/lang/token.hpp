#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dimjac::lang {

enum class TokenKind {
  kNumber,  // integer, decimal or "p/q"
  kIdent,
  kPlus,
  kMinus,   // '-' or U+2212
  kStar,    // '*', U+00B7, U+00D7, U+22C5
  kSlash,
  kCaret,
  kLParen,
  kRParen,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;  // byte offset in the input

  bool operator==(const Token&) const = default;
};

std::string_view kind_name(TokenKind kind);

/// Splits `input` into tokens, skipping ASCII whitespace. Throws LexError
/// with the byte offset of the first character that starts no token.
std::vector<Token> tokenize(std::string_view input);

/// Splits a "p/q" literal that directly follows '^' (optionally signed) into
/// number, slash, number, so "x^2/3" reads as (x^2)/3.
void split_exponent_fractions(std::vector<Token>& tokens);

}  // namespace dimjac::lang
