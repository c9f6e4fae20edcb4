#include "soslen/modular.hpp"

#include <cctype>

#include "soslen/errors.hpp"

namespace soslen {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62)) {
    throw ArgumentError("prime modulus must satisfy 2 <= p < 2^62, got " + std::to_string(p));
  }
  const mpz_class z(std::to_string(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw ArgumentError("modulus " + std::to_string(p) + " is not prime");
  }
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const {
  value_type result = 1 % p_;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p_ == 0) throw ArgumentError("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_mpz(const mpz_class& v) const {
  const mpz_class p(std::to_string(p_));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return std::stoull(r.get_str());
}

PrimeField::value_type PrimeField::from_mpq(const mpq_class& v) const {
  const value_type den = from_mpz(v.get_den());
  if (den == 0) {
    throw ArgumentError("denominator " + v.get_den().get_str() + " vanishes mod " +
                        std::to_string(p_));
  }
  return mul(from_mpz(v.get_num()), inv(den));
}

RationalDomain::value_type RationalDomain::parse(const std::string& text) const {
  std::string t;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) t.push_back(c);
  }
  const auto slash = t.find('/');
  auto integer = [&](const std::string& s) {
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw ArgumentError("malformed rational '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(s[i])) == 0) {
        throw ArgumentError("malformed rational '" + text + "'");
      }
    }
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return mpq_class(integer(t));
  const mpz_class num = integer(t.substr(0, slash));
  const mpz_class den = integer(t.substr(slash + 1));
  if (den == 0) throw ArgumentError("zero denominator in '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace soslen
