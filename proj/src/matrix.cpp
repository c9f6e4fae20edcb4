#include "soslen/matrix.hpp"

namespace soslen {

PrimeMatrix PrimeMatrix::transposed() const {
  PrimeMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  }
  return t;
}

PrimeMatrix RationalMatrix::reduce_mod(const PrimeField& field) const {
  PrimeMatrix out(field, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.row(i)[j] = field.from_mpq(at(i, j));
  }
  return out;
}

}  // namespace soslen
