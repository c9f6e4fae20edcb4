#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace soslen {

mpz_class floor_q(const mpq_class& x);
mpz_class ceil_q(const mpq_class& x);

/// Exact real number rational + coefficient * sqrt(radicand), radicand >= 0.
///
/// Every comparison against a rational is decided by squaring, so floor and
/// ceiling are exact. to_double() exists for display only.
struct QuadraticSurd {
  mpq_class rational{0};
  mpq_class coefficient{0};
  mpq_class radicand{0};

  QuadraticSurd() = default;
  QuadraticSurd(mpq_class a, mpq_class b, mpq_class r);

  /// Sign of (*this - c): -1, 0 or +1.
  int compare(const mpq_class& c) const;

  mpz_class floor() const;
  mpz_class ceil() const;

  QuadraticSurd operator-() const;

  bool is_rational() const;
  double to_double() const;

  /// Human readable, e.g. "(21 - sqrt(217))/2".
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Rational lower/upper bracket of sqrt(x) with width at most 2^-bits.
std::pair<mpq_class, mpq_class> sqrt_bracket(const mpq_class& x, unsigned bits);

}  // namespace soslen
