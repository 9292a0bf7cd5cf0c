#include "patchkit/rational.hpp"

#include <cctype>

#include "patchkit/errors.hpp"

namespace patchkit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

/// cpp_int reads a leading zero as an octal prefix.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer{std::string(digits)};
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) malformed(whole);
  Integer value = decimal_integer(s);
  return negative ? Integer(-value) : value;
}

Integer pow10(unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    Integer exp_value = parse_integer(exp_text, whole);
    if (abs(exp_value) > 4000) malformed(whole);
    exponent = exp_value.convert_to<long>();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) malformed(whole);
    if (!int_part.empty() && !all_digits(int_part)) malformed(whole);
    if (!frac_part.empty() && !all_digits(frac_part)) malformed(whole);
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) malformed(whole);
    digits = std::string(s);
  }
  Rational value{decimal_integer(digits)};
  if (exponent > 0) value *= Rational(pow10(static_cast<unsigned>(exponent)));
  if (exponent < 0) value /= Rational(pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) malformed(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  return parse_decimal(s, text);
}

std::string to_string(const Rational& value) {
  const Integer& den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Point to_double(std::span<const Rational> values) {
  Point out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_double(v));
  return out;
}

RationalPoint to_rational(std::span<const double> values) {
  RationalPoint out;
  out.reserve(values.size());
  for (double v : values) out.emplace_back(v);
  return out;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

}  // namespace patchkit
