#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace soslen {

inline constexpr std::uint64_t kMersenne31 = (std::uint64_t{1} << 31) - 1;
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// Arithmetic in Z/pZ for a prime 2 <= p < 2^62. Residues live in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kMersenne31);

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const;
  /// Fermat inverse; throws ArgumentError on zero.
  value_type inv(value_type a) const;

  value_type from_int(std::int64_t v) const;
  value_type from_mpz(const mpz_class& v) const;
  /// Throws ArgumentError when the denominator vanishes mod p.
  value_type from_mpq(const mpq_class& v) const;

  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Exact rationals; stateless.
struct RationalDomain {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }

  /// "p/q" or "p".
  std::string to_string(const value_type& a) const { return a.get_str(); }
  /// Inverse of to_string; throws ArgumentError on malformed input or zero denominator.
  value_type parse(const std::string& text) const;

  friend bool operator==(const RationalDomain&, const RationalDomain&) = default;
};

}  // namespace soslen
