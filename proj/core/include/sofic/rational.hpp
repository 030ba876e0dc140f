#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sofic {

/// Exact arbitrary-precision rational. All weights, distances and defects
/// in the library are values of this type.
using Rational = mpq_class;

/// "num/den" in lowest terms; integers print as "n/1".
std::string to_fraction_string(const Rational& q);

/// Fixed-point decimal rendering for human consumption only.
std::string to_decimal_string(const Rational& q, int digits = 6);

/// Parses "p/q", "p" or a finite decimal such as "0.05".
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

}  // namespace sofic
