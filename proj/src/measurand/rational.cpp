#include "dimjac/measurand/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "dimjac/errors.hpp"

namespace dimjac {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  long exponent10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
      exp_negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw DocumentError("malformed exponent in number '" +
                          std::string(whole) + "'");
    exponent10 = std::stol(std::string(exp_text));
    if (exp_negative) exponent10 = -exponent10;
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw DocumentError("malformed number '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent10 -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text))
      throw DocumentError("malformed number '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                static_cast<unsigned long>(std::labs(exponent10)));
  Rational result = exponent10 >= 0 ? Rational(mantissa * scale)
                                    : Rational(mantissa, scale);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

// Sign of 2*rem - den.
int cmp_helper(const mpz_class& rem, const mpz_class& den) {
  mpz_class twice = rem << 1;
  return cmp(twice, den);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed.empty()) throw DocumentError("empty number");
  if (auto slash = trimmed.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trimmed.substr(0, slash), text);
    Rational den = parse_decimal(trimmed.substr(slash + 1), text);
    if (den == 0)
      throw ZeroDenominator("zero denominator in '" + std::string(text) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  return parse_decimal(trimmed, text);
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational exact_rational(double value) {
  if (!std::isfinite(value))
    throw InvalidArgument("non-finite value has no rational representation");
  Rational r(value);
  r.canonicalize();
  return r;
}

std::string format_double(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

Rational decimal_rational(double value) {
  if (!std::isfinite(value))
    throw InvalidArgument("non-finite value has no rational representation");
  return parse_rational(format_double(value));
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0 && base == 0)
    throw DivisionByZero("zero raised to a negative power");
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -static_cast<long>(exponent) : exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  mpz_class a = abs(r.get_num());
  const mpz_class& b = r.get_den();
  long shift = 53 - static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
  mpz_class q, rem, num, den;
  const mpz_class lower = mpz_class(1) << 52;
  const mpz_class upper = mpz_class(1) << 53;
  for (;;) {
    if (shift >= 0) {
      num = a << static_cast<mp_bitcnt_t>(shift);
      den = b;
    } else {
      num = a;
      den = b << static_cast<mp_bitcnt_t>(-shift);
    }
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    if (q < lower) {
      ++shift;
    } else if (q >= upper) {
      --shift;
    } else {
      break;
    }
  }
  int cmp = cmp_helper(rem, den);
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) {
    ++q;
    if (q == upper) {
      q = lower;
      --shift;
    }
  }
  double magnitude = std::ldexp(q.get_d(), static_cast<int>(-shift));
  return r < 0 ? -magnitude : magnitude;
}

}  // namespace dimjac
