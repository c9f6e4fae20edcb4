#include <algorithm>
#include <cstdint>

#include "soslen/elimination.hpp"

namespace soslen {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Each reducer computes (acc + f * b) mod p for acc, f, b in [0, p).

struct GenericReducer {
  u64 p;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 axpy(u64 acc, u64 f, u64 b) const {
    return static_cast<u64>((static_cast<u128>(f) * b + acc) % p);
  }
};

struct Mersenne31Reducer {
  static constexpr u64 p = kMersenne31;
  static u64 fold(u64 t) {
    t = (t & p) + (t >> 31);
    t = (t & p) + (t >> 31);
    return t >= p ? t - p : t;
  }
  u64 mul(u64 a, u64 b) const { return fold(a * b); }
  u64 axpy(u64 acc, u64 f, u64 b) const { return fold(f * b + acc); }
};

struct Mersenne61Reducer {
  static constexpr u64 p = kMersenne61;
  static u64 fold(u128 t) {
    u64 x = (static_cast<u64>(t) & p) + static_cast<u64>(t >> 61);
    x = (x & p) + (x >> 61);
    return x >= p ? x - p : x;
  }
  u64 mul(u64 a, u64 b) const { return fold(static_cast<u128>(a) * b); }
  u64 axpy(u64 acc, u64 f, u64 b) const { return fold(static_cast<u128>(f) * b + acc); }
};

template <class Reducer>
std::size_t eliminate(std::vector<u64>& a, std::size_t rows, std::size_t cols, const Reducer& red,
                      const PrimeField& field) {
  const std::size_t limit = std::min(rows, cols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < limit; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    u64* pivot = a.data() + rank * cols;
    if (piv != rank) std::swap_ranges(pivot + c, pivot + cols, a.data() + piv * cols + c);

    const u64 inv = field.inv(pivot[c]);
    for (std::size_t k = c + 1; k < cols; ++k) pivot[k] = red.mul(pivot[k], inv);
    pivot[c] = 1;

    const auto first = static_cast<std::int64_t>(rank + 1);
    const auto last = static_cast<std::int64_t>(rows);
    const bool wide = (rows - rank) * (cols - c) > kParallelUpdateThreshold;
#pragma omp parallel for schedule(static) if (wide)
    for (std::int64_t i = first; i < last; ++i) {
      u64* r = a.data() + static_cast<std::size_t>(i) * cols;
      const u64 f = r[c];
      if (f == 0) continue;
      const u64 neg = red.p - f;
      for (std::size_t k = c + 1; k < cols; ++k) r[k] = red.axpy(r[k], neg, pivot[k]);
      r[c] = 0;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_mod_p(PrimeMatrix m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Fewer, longer rows: the update loop runs along contiguous memory.
  if (m.cols() < m.rows()) m = m.transposed();
  const PrimeField field = m.field();
  const u64 p = field.modulus();
  if (p == kMersenne31) return eliminate(m.data(), m.rows(), m.cols(), Mersenne31Reducer{}, field);
  if (p == kMersenne61) return eliminate(m.data(), m.rows(), m.cols(), Mersenne61Reducer{}, field);
  return eliminate(m.data(), m.rows(), m.cols(), GenericReducer{p}, field);
}

}  // namespace soslen
