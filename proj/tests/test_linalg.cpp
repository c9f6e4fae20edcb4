#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "soslen/elimination.hpp"
#include "soslen/errors.hpp"
#include "soslen/random.hpp"
#include "soslen/rational_linalg.hpp"

using namespace soslen;

namespace {

const std::uint64_t kPrimes[] = {101, 65537, kMersenne31, kMersenne61, 4611686018427387847ULL};

// rows x cols matrix of rank <= k: product of random rows x k and k x cols factors.
PrimeMatrix low_rank(const PrimeField& F, Rng& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  std::vector<std::uint64_t> a(rows * k), b(k * cols);
  for (auto& x : a) x = rng.below(F.modulus());
  for (auto& x : b) x = rng.below(F.modulus());
  PrimeMatrix m(F, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < k; ++t) acc = F.add(acc, F.mul(a[i * k + t], b[t * cols + j]));
      m.set(i, j, acc);
    }
  }
  return m;
}

// Determinant by cofactor expansion along the first row.
mpz_class det_cofactor(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    const mpz_class term = a[0][j] * det_cofactor(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

RationalMatrix random_rational(Rng& rng, std::size_t rows, std::size_t cols, int density) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (static_cast<int>(rng.below(100)) >= density) continue;
      m.at(i, j) = mpq_class(rng.between(-20, 20), rng.between(1, 7));
      m.at(i, j).canonicalize();
    }
  }
  // duplicate a combination of two rows now and then to force deficiency
  if (rows >= 3 && rng.below(2) == 0) {
    for (std::size_t j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j) * 3 - m.at(1, j) / 2;
  }
  return m;
}

}  // namespace

TEST_CASE("OpenMP and serial rank agree") {
  Rng rng(1);
  for (std::uint64_t p : kPrimes) {
    const PrimeField F(p);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t rows = rng.between(1, 90);
      const std::size_t cols = rng.between(1, 90);
      const std::size_t k = rng.between(0, 95);
      const auto m = low_rank(F, rng, rows, cols, k);
      const auto r = rank_mod_p_serial(m);
      CHECK(r <= std::min({rows, cols, k}));
      CHECK(rank_mod_p(m) == r);
    }
  }
  // large enough for the parallel update path
  for (std::uint64_t p : {kMersenne31, kMersenne61, std::uint64_t{1000003}}) {
    const PrimeField F(p);
    const auto m = low_rank(F, rng, 320, 400, 250);
    const auto r = rank_mod_p_serial(m);
    CHECK(r == 250);
    CHECK(rank_mod_p(m) == r);
    CHECK(rank_mod_p(m.transposed()) == r);
  }
}

TEST_CASE("rank of structured matrices") {
  const PrimeField F(kMersenne31);
  PrimeMatrix zero(F, 5, 7);
  CHECK(rank_mod_p(zero) == 0);
  PrimeMatrix id(F, 6, 6);
  for (std::size_t i = 0; i < 6; ++i) id.set(i, i, 1);
  CHECK(rank_mod_p(id) == 6);
  CHECK(rank_mod_p_serial(id) == 6);
  PrimeMatrix empty(F, 0, 4);
  CHECK(rank_mod_p(empty) == 0);
  // determinant -5 vanishes mod 5
  PrimeMatrix m(PrimeField(5), 2, 2);
  m.set(0, 0, 1), m.set(0, 1, 2), m.set(1, 0, 3), m.set(1, 1, 1);
  CHECK(rank_mod_p(m) == 1);
}

TEST_CASE("rational rank agrees with the cofactor determinant") {
  Rng rng(2);
  int singular = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.between(1, 6);
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (auto& row : a) {
      for (auto& x : row) x = rng.between(-2, 2);
    }
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a[i][j];
    }
    const bool full = det_cofactor(a) != 0;
    singular += full ? 0 : 1;
    CHECK((rank_rational(m) == n) == full);
    const auto ev = rank_rational_via_primes(m, std::vector<std::uint64_t>{kMersenne31, kMersenne61});
    CHECK(ev.rank <= rank_rational(m));
    CHECK((ev.tag == RankTag::Exact) == (ev.rank == n));
  }
  CHECK(singular > 10);
}

TEST_CASE("rational kernels multiply back to zero") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = rng.between(1, 9);
    const std::size_t cols = rng.between(1, 11);
    const auto m = random_rational(rng, rows, cols, static_cast<int>(rng.between(20, 100)));
    const auto basis = kernel_basis_rational(m);
    const std::size_t r = rank_rational(m);
    REQUIRE(basis.size() == cols - r);
    for (const auto& v : basis) {
      REQUIRE(v.size() == cols);
      for (std::size_t i = 0; i < rows; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc == 0);
      }
      mpz_class g = 0;
      for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      CHECK(g == 1);
      const auto lead = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
      REQUIRE(lead != v.end());
      CHECK(*lead > 0);
    }
    // the kernel vectors are independent
    RationalMatrix k(basis.size(), cols);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) k.at(i, j) = basis[i][j];
    }
    CHECK(rank_rational(k) == basis.size());
  }
}

TEST_CASE("modular kernels and rref") {
  Rng rng(4);
  for (std::uint64_t p : kPrimes) {
    const PrimeField F(p);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t rows = rng.between(1, 30);
      const std::size_t cols = rng.between(1, 30);
      const auto m = low_rank(F, rng, rows, cols, rng.between(0, 30));
      const auto r = rank_mod_p(m);
      const auto basis = kernel_basis_mod_p(m);
      REQUIRE(basis.size() == cols - r);
      for (const auto& v : basis) {
        for (std::size_t i = 0; i < rows; ++i) {
          std::uint64_t acc = 0;
          for (std::size_t j = 0; j < cols; ++j) acc = F.add(acc, F.mul(m.at(i, j), v[j]));
          CHECK(acc == 0);
        }
      }
      PrimeMatrix e = m;
      const auto pivots = rref_mod_p(e);
      CHECK(pivots.size() == r);
      CHECK(std::is_sorted(pivots.begin(), pivots.end()));
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t k = 0; k < rows; ++k) CHECK(e.at(k, pivots[i]) == (k == i ? 1u : 0u));
      }
      for (std::size_t i = r; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) CHECK(e.at(i, j) == 0);
      }
    }
  }
}

TEST_CASE("reduction of rational matrices") {
  RationalMatrix m(1, 3);
  m.at(0, 0) = mpq_class(1, 3);
  m.at(0, 1) = -1;
  const auto r = m.reduce_mod(PrimeField(7));
  CHECK(r.at(0, 0) == 5);
  CHECK(r.at(0, 1) == 6);
  CHECK(r.at(0, 2) == 0);
  CHECK_THROWS_AS(m.reduce_mod(PrimeField(3)), ArgumentError);
  const auto ev = rank_rational_via_primes(m, std::vector<std::uint64_t>{3, 7});
  CHECK(ev.primes_used == std::vector<std::uint64_t>{7});
  CHECK(ev.rank == 1);
  CHECK(ev.tag == RankTag::Exact);
  CHECK(to_string(RankTag::CertifiedLowerBound) == "certified-lower-bound");
}
