#pragma once

// Rank and kernel computations over F_p.
//
// rank_mod_p is the production kernel: specialised Mersenne reductions and
// an OpenMP row-block update. rank_mod_p_serial is the straightforward
// reference kept for testing and benchmarking; both must agree exactly.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "soslen/matrix.hpp"

namespace soslen {

std::size_t rank_mod_p(PrimeMatrix m);

std::size_t rank_mod_p_serial(PrimeMatrix m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref_mod_p(PrimeMatrix& m);

/// Basis of the right kernel, one vector per free column (which carries a 1).
std::vector<std::vector<std::uint64_t>> kernel_basis_mod_p(PrimeMatrix m);

/// Row-update work (remaining rows times remaining columns) above which the
/// OpenMP kernel fans out. Exposed for the benchmark.
inline constexpr std::size_t kParallelUpdateThreshold = std::size_t{1} << 15;

}  // namespace soslen
