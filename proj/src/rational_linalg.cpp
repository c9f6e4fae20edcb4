#include "soslen/rational_linalg.hpp"

#include <algorithm>

#include "soslen/elimination.hpp"
#include "soslen/errors.hpp"

namespace soslen {

namespace {

using IntegerRows = std::vector<IntegerVector>;

void divide_content(IntegerVector& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

IntegerRows integer_rows(const RationalMatrix& m) {
  IntegerRows rows(m.rows(), IntegerVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m.at(i, j);
      rows[i][j] = q.get_num() * (l / q.get_den());
    }
    divide_content(rows[i]);
  }
  return rows;
}

// Fraction-free Gauss-Jordan. On return rows[0..rank) hold the pivot rows
// and every pivot column is zero outside its pivot row.
std::vector<std::size_t> fraction_free_reduce(IntegerRows& a, std::size_t cols, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  mpz_class g, mr, mi;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const IntegerVector& p = a[rank];
    const std::size_t first = full ? 0 : rank + 1;
    for (std::size_t i = first; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      IntegerVector& r = a[i];
      mpz_gcd(g.get_mpz_t(), p[c].get_mpz_t(), r[c].get_mpz_t());
      mpz_divexact(mr.get_mpz_t(), p[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(mi.get_mpz_t(), r[c].get_mpz_t(), g.get_mpz_t());
      for (std::size_t k = 0; k < cols; ++k) {
        r[k] *= mr;
        mpz_submul(r[k].get_mpz_t(), mi.get_mpz_t(), p[k].get_mpz_t());
      }
      divide_content(r);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::size_t rank_rational(const RationalMatrix& m) {
  IntegerRows a = integer_rows(m);
  return fraction_free_reduce(a, m.cols(), false).size();
}

std::vector<IntegerVector> kernel_basis_rational(const RationalMatrix& m) {
  IntegerRows a = integer_rows(m);
  const auto pivots = fraction_free_reduce(a, m.cols(), true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<IntegerVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    // v[f] = L, v[pivot_i] = -a[i][f] * L / P_i with L the lcm of the pivots involved.
    mpz_class L = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (a[i][f] != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a[i][pivots[i]].get_mpz_t());
    }
    L = abs(L);
    IntegerVector v(m.cols(), 0);
    v[f] = L;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (a[i][f] == 0) continue;
      v[pivots[i]] = -a[i][f] * (L / a[i][pivots[i]]);
    }
    divide_content(v);
    const auto lead = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
    if (lead != v.end() && *lead < 0) {
      for (auto& x : v) x = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string_view to_string(RankTag tag) {
  return tag == RankTag::Exact ? "exact" : "certified-lower-bound";
}

RankEvidence rank_rational_via_primes(const RationalMatrix& m, std::span<const std::uint64_t> primes) {
  RankEvidence ev;
  for (const std::uint64_t p : primes) {
    const PrimeField field(p);
    PrimeMatrix reduced(field, 0, 0);
    try {
      reduced = m.reduce_mod(field);
    } catch (const ArgumentError&) {
      continue;  // a denominator vanishes mod p; try the next prime
    }
    const std::size_t r = rank_mod_p(std::move(reduced));
    ev.primes_used.push_back(p);
    ev.ranks.push_back(r);
    ev.rank = std::max(ev.rank, r);
  }
  if (ev.primes_used.empty()) throw ArgumentError("rank_rational_via_primes: no usable prime");
  ev.tag = ev.rank == std::min(m.rows(), m.cols()) ? RankTag::Exact : RankTag::CertifiedLowerBound;
  return ev;
}

}  // namespace soslen
