// Reference elimination: textbook Gaussian elimination through PrimeField
// operations only. Kept deliberately plain; it is the oracle for the
// optimised kernel in rank_omp.cpp.

#include <algorithm>

#include "soslen/elimination.hpp"

namespace soslen {

std::size_t rank_mod_p_serial(PrimeMatrix m) {
  const PrimeField& F = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      auto a = m.row(piv);
      auto b = m.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const auto inv = F.inv(m.at(rank, c));
    auto pivot = m.row(rank);
    for (std::size_t k = c; k < cols; ++k) pivot[k] = F.mul(pivot[k], inv);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto r = m.row(i);
      const auto f = r[c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) r[k] = F.sub(r[k], F.mul(f, pivot[k]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> rref_mod_p(PrimeMatrix& m) {
  const PrimeField& F = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      auto a = m.row(piv);
      auto b = m.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const auto inv = F.inv(m.at(rank, c));
    auto pivot = m.row(rank);
    for (std::size_t k = c; k < cols; ++k) pivot[k] = F.mul(pivot[k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      auto r = m.row(i);
      const auto f = r[c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) r[k] = F.sub(r[k], F.mul(f, pivot[k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> kernel_basis_mod_p(PrimeMatrix m) {
  const PrimeField F = m.field();
  const auto pivots = rref_mod_p(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace soslen
