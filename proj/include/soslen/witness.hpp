#pragma once

// Sums of squares with certified exact length.
//
// For a set Z of real points in general position, every square summand of a
// form vanishing on Z lies in I(Z)_d. If the product map S^2(I(Z)_d) ->
// degree-2d forms is injective, the Gram tensor of any representation is
// determined by the form, so sum_i p_i^2 over a basis p of I(Z)_d has sos
// length exactly dim I(Z)_d. A LengthCertificate packages the exact data and
// the modular rank evidence for that injectivity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soslen/form.hpp"
#include "soslen/generic.hpp"
#include "soslen/matrix.hpp"
#include "soslen/random.hpp"
#include "soslen/rational_linalg.hpp"

namespace soslen::witness {

class SosRepresentation {
 public:
  /// Summands must share n and degree d; an empty list needs them explicitly.
  explicit SosRepresentation(std::vector<RationalForm> summands);
  SosRepresentation(int n, int d, std::vector<RationalForm> summands);

  int num_vars() const { return n_; }
  int half_degree() const { return d_; }
  const std::vector<RationalForm>& summands() const { return summands_; }
  const RationalForm& target() const { return target_; }

 private:
  void validate();

  int n_;
  int d_;
  std::vector<RationalForm> summands_;
  RationalForm target_;
};

/// sum_i v_i v_i^T over coefficient vectors in the degree-d monomial basis.
struct GramTensor {
  int n = 0;
  int d = 0;
  RationalMatrix matrix{0, 0};

  std::size_t rank() const { return rank_rational(matrix); }
};

GramTensor gram_tensor(const SosRepresentation& rep);

/// Equal Gram tensors; over a real field this is orthogonal equivalence.
/// Throws ArgumentError when the two targets differ.
bool gram_equivalent(const SosRepresentation& a, const SosRepresentation& b);

struct LengthCertificate {
  int n = 0;
  int d = 0;
  int s = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::int64_t>> points;
  std::vector<IntegerVector> basis;  // integer, content 1, graded-lex coefficients
  IntegerVector witness;             // sum of squares of the basis
  int length = 0;
  std::vector<std::uint64_t> primes;  // primes at which the product matrix has full rank
  std::size_t injectivity_rank = 0;

  SosRepresentation basis_representation() const;
  RationalForm witness_form() const;
};

struct WitnessConfig {
  std::uint64_t seed = generic::kDefaultSeed;
  generic::PrimePair primes;
  std::int64_t coordinate_bound = 1000;
};

/// C(d+1, 2) for ternary forms, s_min(n, d) otherwise.
int default_point_count(int n, int d);

/// Throws CertificationFailure if no sample yields injectivity evidence
/// within generic::kGenericityRounds rounds.
LengthCertificate build_witness(int n, int d, std::optional<int> s, const WitnessConfig& config);

/// Decides whether `alt` (a representation of the certified witness) is
/// orthogonally equivalent to the basis representation. Throws ArgumentError
/// if alt does not sum to the witness or a summand misses a point of Z.
bool certify_unique_representation(const LengthCertificate& cert, const SosRepresentation& alt);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-derives every claim of a certificate from its stored data alone:
/// multiply-back, vanishing at Z, evaluation rank s, injectivity rank.
CheckResult check_certificate(const LengthCertificate& cert);

/// Orthogonal m x m rational matrix: a product of `rotations` plane rotations
/// built from Pythagorean triples, with random sign flips.
RationalMatrix random_rational_orthogonal(std::size_t m, Rng& rng, int rotations);

/// q_j = sum_i u(i, j) p_i.
SosRepresentation orthogonal_mix(const SosRepresentation& rep, const RationalMatrix& u);

}  // namespace soslen::witness
