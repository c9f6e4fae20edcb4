#pragma once

// Exact linear algebra over the rationals by fraction-free elimination:
// rows are scaled to integers, pivoting uses integer cross-multiplication
// and every updated row is divided by its content.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "soslen/matrix.hpp"

namespace soslen {

using IntegerVector = std::vector<mpz_class>;

std::size_t rank_rational(const RationalMatrix& m);

/// Right-kernel basis; each vector is integral with content 1 and a positive
/// first nonzero entry, one per free column in increasing order.
std::vector<IntegerVector> kernel_basis_rational(const RationalMatrix& m);

enum class RankTag { CertifiedLowerBound, Exact };

std::string_view to_string(RankTag tag);

struct RankEvidence {
  std::size_t rank = 0;
  RankTag tag = RankTag::CertifiedLowerBound;
  std::vector<std::uint64_t> primes_used;
  std::vector<std::size_t> ranks;
};

/// max over primes of rank(M mod p). The rational rank is at least this;
/// the tag is Exact only when it reaches min(rows, cols). Primes dividing a
/// denominator are skipped.
RankEvidence rank_rational_via_primes(const RationalMatrix& m, std::span<const std::uint64_t> primes);

}  // namespace soslen
