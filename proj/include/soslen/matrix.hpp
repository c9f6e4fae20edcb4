#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "soslen/modular.hpp"

namespace soslen {

/// Dense row-major matrix over F_p. Entries are kept reduced to [0, p).
class PrimeMatrix {
 public:
  using value_type = std::uint64_t;

  PrimeMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores v mod p.
  void set(std::size_t i, std::size_t j, value_type v) {
    data_[i * cols_ + j] = v % field_.modulus();
  }

  std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<value_type>& data() { return data_; }
  const std::vector<value_type>& data() const { return data_; }

  PrimeMatrix transposed() const;

  friend bool operator==(const PrimeMatrix&, const PrimeMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// Dense row-major matrix of exact fractions (kept in lowest terms by GMP).
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Reduction mod p; throws ArgumentError if some denominator vanishes mod p.
  PrimeMatrix reduce_mod(const PrimeField& field) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> data_;
};

}  // namespace soslen
