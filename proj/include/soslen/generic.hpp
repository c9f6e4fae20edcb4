#pragma once

// Dimension experiments on random instances.
//
// Every instance is an integer configuration (points or form coefficients
// below both primes) reduced modulo two primes. A rank computed mod p never
// exceeds the rank over Q, so a rank that reaches the value predicted for a
// general configuration certifies that value; a shortfall is only ever
// "inconclusive". The two primes must agree or the instance is resampled.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soslen/matrix.hpp"
#include "soslen/modular.hpp"

namespace soslen::generic {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2d5a5c0ffee1ULL;
inline constexpr std::size_t kSizeGuardEntries = 40'000'000;
inline constexpr int kGenericityRounds = 5;

struct PrimePair {
  std::uint64_t first = kMersenne31;
  std::uint64_t second = kMersenne61;

  /// Exclusive bound for sampled integers so they are residues mod both primes.
  std::uint64_t sample_bound() const { return first < second ? first : second; }

  friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

struct ExperimentConfig {
  std::uint64_t seed = kDefaultSeed;
  PrimePair primes;
  int trials = 5;
  bool allow_large = false;
};

/// Throws SizeGuardError when rows * cols exceeds kSizeGuardEntries and
/// large jobs were not allowed.
void check_size_guard(std::size_t rows, std::size_t cols, bool allow_large, std::string_view what);

struct PointSample {
  int n = 0;
  int d = 0;
  int s = 0;
  std::vector<std::vector<std::uint64_t>> points;
  std::uint64_t seed = 0;
  PrimePair primes;
  int rounds_used = 0;
};

/// Evaluation matrix (s x N_{n,degree}) of the sample mod the given prime.
PrimeMatrix evaluation_matrix(const PointSample& sample, int degree, const PrimeField& field);

/// s random points passing the genericity gate at both primes: evaluation
/// rank min(s, N_d) in degree d, and rank N_{d-1} in degree d-1 whenever
/// s >= N_{d-1}. Throws GenericityFailure after kGenericityRounds attempts.
PointSample sample_points(int n, int d, int s, std::uint64_t seed, PrimePair primes = {});

struct VanishingComponent {
  std::size_t dimension = 0;
  std::array<std::vector<std::vector<std::uint64_t>>, 2> basis;  // one per prime
};

/// Degree-d part of the vanishing ideal, as a kernel basis at each prime.
VanishingComponent vanishing_component(const PointSample& sample);

/// Rows p_i * p_j (i <= j, upper triangle row-major) in degree 2d.
PrimeMatrix square_product_matrix(const std::vector<std::vector<std::uint64_t>>& basis, int n, int d,
                                  const PrimeField& field);

/// Rank of span{p_i p_j : i <= j} at each prime, for a basis p of I(Z)_d.
std::array<std::size_t, 2> square_component_ranks(const PointSample& sample);

enum class Quantity {
  DimVanishing_d,
  DimSquareComponent_2d,
  HilbertH2d,
  GenericIdealDim_m_r,
  FullRankAtDegree2d,
};

/// Measured: no expected value attached; both primes agreed.
enum class Status { Verified, InconclusiveHigh, InternalError, Measured };

std::string_view to_string(Quantity q);
std::string_view to_string(Status s);

struct DimensionReport {
  Quantity quantity = Quantity::HilbertH2d;
  int n = 0;
  int d = 0;
  std::optional<int> s;
  std::optional<int> r;
  std::int64_t computed = 0;
  std::optional<std::int64_t> expected;
  Status status = Status::Measured;
  std::uint64_t seed = 0;           // run seed
  std::uint64_t instance_seed = 0;  // seed of the instance behind `computed`
  PrimePair primes;
  std::array<std::size_t, 2> ranks{};
  int trials_used = 0;
  int prime_disagreements = 0;
  std::string note;
};

DimensionReport vanishing_report(const PointSample& sample);

/// dim (I^2)_{2d} for the sample; throws PrimeDisagreement if the primes differ.
DimensionReport dim_square_component(const PointSample& sample);

/// True for the triples where the conjectured max becomes a min.
bool ik_exceptional(int n, int d, int s);

/// Conjectured h_{2d}(I^2) for s general points; requires n >= 3, d >= 2,
/// N_{d-1} <= s < N_d.
std::int64_t ik_expected(int n, int d, int s);

/// Samples up to config.trials instances and stops at the first whose
/// h_{2d}(I^2) equals ik_expected at both primes (Verified). h below the
/// expectation contradicts a proven inequality and yields InternalError.
DimensionReport ik_verify(int n, int d, int s, const ExperimentConfig& config);

/// Rank of {p_i * x^b : |b| = d} for r random degree-d forms, i.e. m_r.
DimensionReport generic_ideal_dim(int n, int d, int r, const ExperimentConfig& config);

enum class TypicalStatus { Exact, IntervalOnly };

std::string_view to_string(TypicalStatus s);

struct TypicalLengthResult {
  int n = 0;
  int d = 0;
  std::optional<int> r_found;
  int certified_lower = 0;  // ceil(lambda(n,2d))
  int fos_cap = 0;          // 2^(n-1)
  TypicalStatus status = TypicalStatus::IntervalOnly;
  std::vector<DimensionReport> steps;
};

/// Smallest r in [ceil(lambda), r_max] with a full-rank degree-2d ideal
/// component. Below ceil(lambda) fullness is impossible, so the scan starts
/// there.
TypicalLengthResult typical_length(int n, int d, int r_max, const ExperimentConfig& config);

/// Runs job(0..count-1) on up to `parallelism` OpenMP threads. The exception
/// of the lowest failing job index is rethrown after all jobs finish.
void run_jobs(std::size_t count, const std::function<void(std::size_t)>& job, int parallelism);

}  // namespace soslen::generic
