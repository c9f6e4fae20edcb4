#pragma once

// Exponent vectors of fixed total degree, indexed in graded-lexicographic
// order (x1 > x2 > ... > xn; within one degree the lex-largest vector has
// index 0). Rank and unrank are computed by counting, so every matrix in the
// library addresses columns without hashing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace soslen {

struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  int num_vars() const { return static_cast<int>(exponents.size()); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// N_{n,e} as a machine integer; throws ArgumentError if it does not fit.
std::size_t num_monomials(int n, int e);

std::size_t mono_rank(std::span<const int> exponents);
/// Same, but rejects vectors whose total is not `degree`.
std::size_t mono_rank(std::span<const int> exponents, int degree);
std::vector<int> mono_unrank(int n, int e, std::size_t index);

/// All degree-e monomials in n variables, in rank order.
class MonomialBasis {
 public:
  MonomialBasis(int n, int e);

  int num_vars() const { return n_; }
  int degree() const { return e_; }
  std::size_t size() const { return size_; }

  std::span<const int> exponents(std::size_t index) const {
    return {flat_.data() + index * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }

 private:
  int n_;
  int e_;
  std::size_t size_;
  std::vector<int> flat_;
};

/// index(i, j) = rank of (monomial i of degree a) * (monomial j of degree b).
class ProductTable {
 public:
  ProductTable(int n, int a, int b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t index(std::size_t i, std::size_t j) const { return table_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> table_;
};

/// Shared, lazily built tables. Thread-safe; references stay valid for the
/// lifetime of the process.
const MonomialBasis& monomial_basis(int n, int e);
const ProductTable& product_table(int n, int a, int b);

}  // namespace soslen
