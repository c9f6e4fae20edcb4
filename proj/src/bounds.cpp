#include "soslen/bounds.hpp"

#include <string>

#include "soslen/errors.hpp"

namespace soslen::bounds {

DegreeParams::DegreeParams(int n_vars, int half_degree) : n(n_vars), d(half_degree) {
  if (n < 1 || d < 1) {
    throw ArgumentError("DegreeParams requires n >= 1 and d >= 1, got n=" +
                        std::to_string(n) + " d=" + std::to_string(d));
  }
}

mpz_class binomial(long a, long b) {
  mpz_class r = 0;
  if (a < 0 || b < 0 || b > a) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

mpz_class dim_forms(int n, int e) {
  if (n < 1 || e < 0) {
    throw ArgumentError("dim_forms requires n >= 1 and e >= 0");
  }
  return binomial(n + e - 1, n - 1);
}

SurdCeiling lambda_lower(const DegreeParams& p) {
  const mpz_class e = dim_forms(p.n, p.d);
  const mpz_class a = dim_forms(p.n, 2 * p.d);
  const mpz_class b = 2 * e + 1;
  const mpz_class disc = b * b - 8 * a;
  if (disc < 0) throw InternalError("lambda radicand is negative");
  QuadraticSurd v(mpq_class(b, 2), mpq_class(-1, 2), mpq_class(disc));
  mpz_class c = v.ceil();
  return {std::move(v), std::move(c)};
}

SurdFloor Lambda_upper(const DegreeParams& p) {
  const mpz_class a = dim_forms(p.n, 2 * p.d);
  QuadraticSurd v(mpq_class(-1, 2), mpq_class(1, 2), mpq_class(1 + 8 * a));
  mpz_class f = v.floor();
  return {std::move(v), std::move(f)};
}

mpz_class leep_length_bound(int n, int d, int m) {
  if (n < 2 || d < 1) throw ArgumentError("leep_length_bound requires n >= 2 and d >= 1");
  if (m < 0 || m > d) {
    throw ArgumentError("leep_length_bound requires 0 <= m <= d, got m=" + std::to_string(m));
  }
  // the dehomogenization argument needs a third variable once m > 0
  if (n == 2 && m > 0) throw ArgumentError("leep_length_bound with m > 0 requires n >= 3");
  return 1 + binomial(n + d - 2, n - 2) - binomial(n + m - 3, n - 2);
}

namespace {

void require_sos_range(const DegreeParams& p, const char* what) {
  if (p.n < 3 || p.d < 2) {
    throw ArgumentError(std::string(what) + " requires n >= 3 and d >= 2");
  }
}

}  // namespace

mpz_class s_min(const DegreeParams& p) {
  require_sos_range(p, "s_min");
  const mpz_class Nd = dim_forms(p.n, p.d);
  const mpz_class N2d = dim_forms(p.n, 2 * p.d);

  auto feasible = [&](const mpz_class& s) {
    const mpz_class k = Nd - s + 1;
    return k * (k - 1) / 2 <= N2d - p.n * s;
  };

  // The feasible set is an integer interval around N_d - n + 1/2; walk down
  // from N_d - 1 into it and then to its bottom end.
  mpz_class s = Nd - 1;
  while (s >= 1 && !feasible(s)) --s;
  if (s < 1) throw InternalError("s_min: no feasible point count below N_d");
  while (s >= 1 && feasible(s - 1)) --s;

  if (p.n >= 4) {
    const mpz_class Nd1 = dim_forms(p.n, p.d - 1);
    if (!(Nd1 < s && s < Nd)) {
      throw InternalError("s_min(" + std::to_string(p.n) + "," + std::to_string(p.d) +
                          ") = " + s.get_str() + " violates N_{d-1} < s < N_d");
    }
  }
  return s;
}

mpz_class theta_lower(const DegreeParams& p) { return dim_forms(p.n, p.d) - s_min(p); }

AsymptoticConstants asymptotic_constants(int n) {
  if (n < 3) throw ArgumentError("asymptotic_constants requires n >= 3");
  mpz_class two_n = 1;
  two_n <<= n;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n - 1));
  mpq_class lo(two_n - 2 * n, fact);
  mpq_class hi(two_n, fact);
  lo.canonicalize();
  hi.canonicalize();
  return {QuadraticSurd(0, 1, lo), QuadraticSurd(0, 1, hi)};
}

int compare_asymptotic_error(int n, int d1, int d2) {
  const mpq_class target = asymptotic_constants(n).lower.radicand;
  auto scaled_square = [n](int d) {
    const mpz_class t = theta_lower(DegreeParams(n, d));
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n - 1));
    mpq_class x(t * t, dp);
    x.canonicalize();
    return x;
  };
  const mpq_class x1 = scaled_square(d1);
  const mpq_class x2 = scaled_square(d2);
  if (x1 == x2) return 0;

  // |sqrt(x) - sqrt(target)| as a rational interval
  auto error_interval = [&](const mpq_class& x, unsigned bits) {
    const auto [xl, xh] = sqrt_bracket(x, bits);
    const auto [tl, th] = sqrt_bracket(target, bits);
    mpq_class lo = xl - th;
    mpq_class hi = xh - tl;
    if (lo >= 0) return std::pair{lo, hi};
    if (hi <= 0) return std::pair{mpq_class(-hi), mpq_class(-lo)};
    return std::pair{mpq_class(0), mpq_class(hi > -lo ? hi : mpq_class(-lo))};
  };

  for (unsigned bits = 32; bits <= (1u << 14); bits *= 2) {
    const auto [l1, h1] = error_interval(x1, bits);
    const auto [l2, h2] = error_interval(x2, bits);
    if (h1 < l2) return -1;
    if (h2 < l1) return 1;
  }
  throw InternalError("compare_asymptotic_error: brackets did not separate");
}

std::string_view to_string(UpperSource s) {
  return s == UpperSource::LeepL ? "LeepL" : "LambdaFloor";
}

BoundsRow bounds_row(const DegreeParams& p) {
  require_sos_range(p, "bounds_row");
  BoundsRow row;
  row.params = p;
  row.N_d = dim_forms(p.n, p.d);
  row.N_2d = dim_forms(p.n, 2 * p.d);
  row.lambda = lambda_lower(p);
  row.Lambda = Lambda_upper(p);
  row.leep_L = leep_length_bound(p.n, p.d, 0);
  row.s_min = s_min(p);
  row.theta = row.N_d - row.s_min;
  if (row.leep_L < row.Lambda.floor) {
    row.upper_best = row.leep_L;
    row.upper_source = UpperSource::LeepL;
  } else {
    row.upper_best = row.Lambda.floor;
    row.upper_source = UpperSource::LambdaFloor;
  }
  return row;
}

std::vector<BoundsRow> bounds_table(int n_lo, int n_hi, int d_lo, int d_hi) {
  if (n_lo > n_hi || d_lo > d_hi) throw ArgumentError("bounds_table: empty range");
  std::vector<BoundsRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int d = d_lo; d <= d_hi; ++d) rows.push_back(bounds_row(DegreeParams(n, d)));
  }
  return rows;
}

}  // namespace soslen::bounds
