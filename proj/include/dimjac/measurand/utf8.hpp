#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace dimjac::utf8 {

struct Decoded {
  char32_t code_point;
  std::size_t length;
};

/// Decodes one scalar value at `pos`; nullopt on malformed, overlong or
/// surrogate sequences.
std::optional<Decoded> decode(std::string_view text, std::size_t pos);

/// Identifier characters: ASCII letters, '_', the micro and degree signs and
/// every code point from U+00C0 upward except the operator look-alikes
/// (middle dot, multiplication sign, minus sign, bullet and dot operators).
bool is_identifier_start(char32_t c);
bool is_identifier_continue(char32_t c);

}  // namespace dimjac::utf8
