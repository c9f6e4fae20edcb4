#include "soslen/surd.hpp"

#include <cmath>
#include <sstream>

#include "soslen/errors.hpp"

namespace soslen {

mpz_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

mpz_class ceil_q(const mpq_class& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

namespace {

int sgn(const mpq_class& x) { return ::sgn(x); }

mpz_class isqrt(const mpz_class& x) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

// Exact sqrt of a rational if it is a perfect square, else false.
bool rational_sqrt(const mpq_class& x, mpq_class& out) {
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(x.get_den_mpz_t()) == 0) {
    return false;
  }
  out = mpq_class(isqrt(x.get_num()), isqrt(x.get_den()));
  out.canonicalize();
  return true;
}

}  // namespace

QuadraticSurd::QuadraticSurd(mpq_class a, mpq_class b, mpq_class r)
    : rational(std::move(a)), coefficient(std::move(b)), radicand(std::move(r)) {
  if (sgn(radicand) < 0) {
    throw InternalError("negative radicand in quadratic surd");
  }
}

int QuadraticSurd::compare(const mpq_class& c) const {
  // sign(b*sqrt(r) - L) with L = c - a
  const mpq_class L = c - rational;
  const int sb = sgn(coefficient) * (sgn(radicand) != 0 ? 1 : 0);
  if (sb == 0) return -sgn(L);
  const mpq_class s2 = coefficient * coefficient * radicand;
  const mpq_class l2 = L * L;
  if (sb > 0) {
    if (sgn(L) <= 0) return 1;
    return sgn(mpq_class(s2 - l2));
  }
  if (sgn(L) >= 0) return -1;
  return sgn(mpq_class(l2 - s2));
}

mpz_class QuadraticSurd::floor() const {
  const mpz_class k = isqrt(floor_q(radicand));
  mpz_class m = floor_q(rational + coefficient * k);
  while (compare(mpq_class(m + 1)) >= 0) ++m;
  while (compare(mpq_class(m)) < 0) --m;
  return m;
}

mpz_class QuadraticSurd::ceil() const { return -(-*this).floor(); }

QuadraticSurd QuadraticSurd::operator-() const {
  return QuadraticSurd(-rational, -coefficient, radicand);
}

bool QuadraticSurd::is_rational() const {
  mpq_class root;
  return sgn(coefficient) == 0 || rational_sqrt(radicand, root);
}

double QuadraticSurd::to_double() const {
  return rational.get_d() + coefficient.get_d() * std::sqrt(radicand.get_d());
}

std::string QuadraticSurd::to_string() const {
  mpq_class root;
  if (sgn(coefficient) == 0 || rational_sqrt(radicand, root)) {
    const mpq_class v = sgn(coefficient) == 0 ? rational : mpq_class(rational + coefficient * root);
    return v.get_str();
  }
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), rational.get_den_mpz_t(), coefficient.get_den_mpz_t());
  const mpz_class A = rational.get_num() * (den / rational.get_den());
  const mpz_class B = coefficient.get_num() * (den / coefficient.get_den());

  std::ostringstream os;
  const bool wrap = den != 1 && A != 0;
  if (wrap) os << '(';
  if (A != 0) os << A << (B < 0 ? " - " : " + ");
  else if (B < 0) os << '-';
  const mpz_class absB = abs(B);
  if (absB != 1) os << absB << '*';
  os << "sqrt(" << radicand.get_str() << ')';
  if (wrap) os << ')';
  if (den != 1) os << '/' << den;
  return os.str();
}

std::pair<mpq_class, mpq_class> sqrt_bracket(const mpq_class& x, unsigned bits) {
  if (sgn(x) < 0) throw InternalError("sqrt_bracket of a negative number");
  mpz_class scale = 1;
  scale <<= bits;
  const mpz_class k = isqrt(floor_q(x * scale * scale));
  mpq_class lo(k, scale);
  mpq_class hi(k + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

}  // namespace soslen
