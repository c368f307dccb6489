#include "dimjac/measurand/utf8.hpp"

namespace dimjac::utf8 {

std::optional<Decoded> decode(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return std::nullopt;
  auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  unsigned char lead = byte(pos);
  if (lead < 0x80) return Decoded{lead, 1};
  std::size_t length;
  char32_t value;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return std::nullopt;
  }
  if (pos + length > text.size()) return std::nullopt;
  for (std::size_t i = 1; i < length; ++i) {
    unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    value = (value << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMinimum[] = {0, 0, 0x80, 0x800, 0x10000};
  if (value < kMinimum[length] || value > 0x10FFFF ||
      (value >= 0xD800 && value <= 0xDFFF))
    return std::nullopt;
  return Decoded{value, length};
}

bool is_identifier_start(char32_t c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') return true;
  if (c == 0xB5 || c == 0xB0) return true;  // µ, °
  if (c < 0xC0) return false;
  switch (c) {
    case 0xD7:    // ×
    case 0xF7:    // ÷
    case 0x2212:  // −
    case 0x2219:  // ∙
    case 0x22C5:  // ⋅
      return false;
    default:
      return true;
  }
}

bool is_identifier_continue(char32_t c) {
  return is_identifier_start(c) || (c >= '0' && c <= '9');
}

}  // namespace dimjac::utf8
