#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace patchkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A d-vector of exact rationals (a point of A, a facet normal, ...).
using RationalPoint = std::vector<Rational>;
/// A real d-vector used for floating-point evaluation.
using Point = std::vector<double>;

/// Parses "p/q", "p", or a finite decimal such as "-0.25" exactly.
/// Throws Error(InvalidInput) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);
Point to_double(std::span<const Rational> values);
RationalPoint to_rational(std::span<const double> values);

bool is_integer(const Rational& value);

/// Scalar conversion used by the templated evaluators (double or Rational).
template <class T>
T from_rational(const Rational& value);

template <>
inline double from_rational<double>(const Rational& value) {
  return to_double(value);
}

template <>
inline Rational from_rational<Rational>(const Rational& value) {
  return value;
}

/// Integer power by repeated squaring; negative exponents invert.
template <class T>
T int_pow(T base, long exponent) {
  if (exponent < 0) {
    return T(1) / int_pow(base, -exponent);
  }
  T result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace patchkit
