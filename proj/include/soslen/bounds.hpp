#pragma once

// Closed-form dimension counts and Pythagoras-number bounds for n-ary forms
// of degree 2d. Everything here is exact integer or quadratic-surd
// arithmetic; no floating point enters a decision.

#include <gmpxx.h>

#include <string_view>
#include <vector>

#include "soslen/surd.hpp"

namespace soslen::bounds {

struct DegreeParams {
  int n = 0;
  int d = 0;

  DegreeParams() = default;
  DegreeParams(int n_vars, int half_degree);

  friend bool operator==(const DegreeParams&, const DegreeParams&) = default;
};

/// C(a, b) with C(a, b) = 0 for b > a or a < 0.
mpz_class binomial(long a, long b);

/// N_{n,e}: dimension of the space of degree-e forms in n variables.
mpz_class dim_forms(int n, int e);

struct SurdCeiling {
  QuadraticSurd value;
  mpz_class ceiling;
};

struct SurdFloor {
  QuadraticSurd value;
  mpz_class floor;
};

/// lambda(n,2d) = (2e + 1 - sqrt((2e+1)^2 - 8a)) / 2 with e = N_d, a = N_2d.
SurdCeiling lambda_lower(const DegreeParams& p);

/// Lambda(n,2d) = (-1 + sqrt(1 + 8a)) / 2.
SurdFloor Lambda_upper(const DegreeParams& p);

/// Length bound for a sum of squares with a real zero of multiplicity 2m:
/// 1 + C(n+d-2, n-2) - C(n+m-3, n-2). m = 0 gives L(n,2d).
mpz_class leep_length_bound(int n, int d, int m);

/// Smallest s with C(N_d - s + 1, 2) <= N_2d - n*s.
/// For n >= 4 the result is checked against N_{d-1} < s < N_d.
mpz_class s_min(const DegreeParams& p);

/// theta(n,2d) = N_d - s_min(n,d).
mpz_class theta_lower(const DegreeParams& p);

struct AsymptoticConstants {
  QuadraticSurd lower;  // c_n = sqrt((2^n - 2n) / (n-1)!)
  QuadraticSurd upper;  // C_n = sqrt(2^n / (n-1)!)
};

AsymptoticConstants asymptotic_constants(int n);

/// Sign of |theta(n,2d1)/d1^((n-1)/2) - c_n| - |theta(n,2d2)/d2^((n-1)/2) - c_n|,
/// decided by refining exact rational brackets of the square roots.
int compare_asymptotic_error(int n, int d1, int d2);

enum class UpperSource { LeepL, LambdaFloor };

std::string_view to_string(UpperSource s);

struct BoundsRow {
  DegreeParams params;
  mpz_class N_d;
  mpz_class N_2d;
  SurdCeiling lambda;
  SurdFloor Lambda;
  mpz_class leep_L;
  mpz_class s_min;
  mpz_class theta;
  mpz_class upper_best;
  UpperSource upper_source = UpperSource::LambdaFloor;
};

BoundsRow bounds_row(const DegreeParams& p);

/// One row per (n, d) in the closed ranges, n-major.
std::vector<BoundsRow> bounds_table(int n_lo, int n_hi, int d_lo, int d_hi);

}  // namespace soslen::bounds
