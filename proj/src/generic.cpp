#include "soslen/generic.hpp"

#include <algorithm>
#include <exception>
#include <limits>

#include "soslen/bounds.hpp"
#include "soslen/elimination.hpp"
#include "soslen/errors.hpp"
#include "soslen/form.hpp"
#include "soslen/monomial.hpp"
#include "soslen/random.hpp"

namespace soslen::generic {

namespace {

std::int64_t as_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw ArgumentError("value " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

std::uint64_t instance_stream(int n, int d, int k, int trial) {
  return (static_cast<std::uint64_t>(n) << 48) ^ (static_cast<std::uint64_t>(d) << 36) ^
         (static_cast<std::uint64_t>(k) << 12) ^ static_cast<std::uint64_t>(trial);
}

std::array<PrimeField, 2> fields(const PrimePair& primes) {
  return {PrimeField(primes.first), PrimeField(primes.second)};
}

}  // namespace

PrimeMatrix square_product_matrix(const std::vector<std::vector<std::uint64_t>>& basis, int n, int d,
                                  const PrimeField& field) {
  const std::size_t b = basis.size();
  const std::size_t Nd = num_monomials(n, d);
  const ProductTable& table = product_table(n, d, d);
  PrimeMatrix m(field, b * (b + 1) / 2, num_monomials(n, 2 * d));

  const auto pairs = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(dynamic, 8) if (pairs * static_cast<std::int64_t>(Nd * Nd) > (1 << 20))
  for (std::int64_t idx = 0; idx < pairs; ++idx) {
    // unpack idx -> (i, j), i <= j, row-major over the upper triangle
    std::size_t i = 0;
    std::size_t rest = static_cast<std::size_t>(idx);
    while (rest >= b - i) {
      rest -= b - i;
      ++i;
    }
    const std::size_t j = i + rest;
    auto row = m.row(static_cast<std::size_t>(idx));
    const auto& u = basis[i];
    const auto& v = basis[j];
    for (std::size_t a = 0; a < Nd; ++a) {
      if (u[a] == 0) continue;
      for (std::size_t c = 0; c < Nd; ++c) {
        if (v[c] == 0) continue;
        auto& slot = row[table.index(a, c)];
        slot = field.add(slot, field.mul(u[a], v[c]));
      }
    }
  }
  return m;
}

void check_size_guard(std::size_t rows, std::size_t cols, bool allow_large, std::string_view what) {
  if (!allow_large && rows * cols > kSizeGuardEntries) {
    throw SizeGuardError(std::string(what) + ": " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " matrix exceeds the size guard; pass --allow-large");
  }
}

PrimeMatrix evaluation_matrix(const PointSample& sample, int degree, const PrimeField& field) {
  PrimeMatrix m(field, sample.points.size(), num_monomials(sample.n, degree));
  for (std::size_t i = 0; i < sample.points.size(); ++i) {
    std::vector<std::uint64_t> x;
    for (auto c : sample.points[i]) x.push_back(c % field.modulus());
    const auto values = monomial_values(field, std::span<const std::uint64_t>(x), degree);
    std::copy(values.begin(), values.end(), m.row(i).begin());
  }
  return m;
}

PointSample sample_points(int n, int d, int s, std::uint64_t seed, PrimePair primes) {
  if (n < 1 || d < 1 || s < 1) throw ArgumentError("sample_points requires n, d, s >= 1");
  const auto fs = fields(primes);
  const std::size_t Nd = num_monomials(n, d);
  const std::size_t Nd1 = num_monomials(n, d - 1);
  const auto count = static_cast<std::size_t>(s);

  for (int round = 0; round < kGenericityRounds; ++round) {
    PointSample sample{n, d, s, {}, seed, primes, round + 1};
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(round)));
    while (sample.points.size() < count) {
      std::vector<std::uint64_t> p(static_cast<std::size_t>(n));
      for (auto& c : p) c = rng.below(primes.sample_bound());
      if (std::any_of(p.begin(), p.end(), [](auto c) { return c != 0; })) {
        sample.points.push_back(std::move(p));
      }
    }
    bool ok = true;
    for (const auto& F : fs) {
      ok = ok && rank_mod_p(evaluation_matrix(sample, d, F)) == std::min(count, Nd);
      if (ok && d >= 2 && count >= Nd1) ok = rank_mod_p(evaluation_matrix(sample, d - 1, F)) == Nd1;
    }
    if (ok) return sample;
  }
  throw GenericityFailure("no sample of " + std::to_string(s) + " points in general position after " +
                          std::to_string(kGenericityRounds) + " rounds (n=" + std::to_string(n) +
                          ", d=" + std::to_string(d) + ")");
}

VanishingComponent vanishing_component(const PointSample& sample) {
  const std::size_t Nd = num_monomials(sample.n, sample.d);
  if (static_cast<std::size_t>(sample.s) > Nd) {
    throw ArgumentError("vanishing_component requires s <= N_d");
  }
  const auto fs = fields(sample.primes);
  VanishingComponent vc;
  for (std::size_t k = 0; k < 2; ++k) {
    vc.basis[k] = kernel_basis_mod_p(evaluation_matrix(sample, sample.d, fs[k]));
  }
  vc.dimension = vc.basis[0].size();
  if (vc.basis[1].size() != vc.dimension) throw PrimeDisagreement("vanishing component dimensions differ");
  if (vc.dimension != Nd - static_cast<std::size_t>(sample.s)) {
    throw InternalError("vanishing component dimension differs from N_d - s after the genericity gate");
  }
  return vc;
}

std::array<std::size_t, 2> square_component_ranks(const PointSample& sample) {
  const auto vc = vanishing_component(sample);
  const auto fs = fields(sample.primes);
  std::array<std::size_t, 2> ranks{};
  for (std::size_t k = 0; k < 2; ++k) {
    ranks[k] = rank_mod_p(square_product_matrix(vc.basis[k], sample.n, sample.d, fs[k]));
  }
  return ranks;
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::DimVanishing_d: return "DimVanishing_d";
    case Quantity::DimSquareComponent_2d: return "DimSquareComponent_2d";
    case Quantity::HilbertH2d: return "HilbertH2d";
    case Quantity::GenericIdealDim_m_r: return "GenericIdealDim_m_r";
    case Quantity::FullRankAtDegree2d: return "FullRankAtDegree2d";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::InconclusiveHigh: return "InconclusiveHigh";
    case Status::InternalError: return "InternalError";
    case Status::Measured: return "Measured";
  }
  return "?";
}

std::string_view to_string(TypicalStatus s) {
  return s == TypicalStatus::Exact ? "Exact" : "IntervalOnly";
}

DimensionReport vanishing_report(const PointSample& sample) {
  const auto vc = vanishing_component(sample);
  DimensionReport rep;
  rep.quantity = Quantity::DimVanishing_d;
  rep.n = sample.n;
  rep.d = sample.d;
  rep.s = sample.s;
  rep.computed = static_cast<std::int64_t>(vc.dimension);
  rep.expected = static_cast<std::int64_t>(num_monomials(sample.n, sample.d)) - sample.s;
  rep.status = rep.computed == *rep.expected ? Status::Verified : Status::InternalError;
  rep.seed = rep.instance_seed = sample.seed;
  rep.primes = sample.primes;
  rep.trials_used = 1;
  return rep;
}

DimensionReport dim_square_component(const PointSample& sample) {
  const auto ranks = square_component_ranks(sample);
  if (ranks[0] != ranks[1]) throw PrimeDisagreement("square component ranks differ between primes");
  const auto b = static_cast<std::int64_t>(num_monomials(sample.n, sample.d)) - sample.s;
  const auto N2d = static_cast<std::int64_t>(num_monomials(sample.n, 2 * sample.d));
  const auto computed = static_cast<std::int64_t>(ranks[0]);
  if (computed > std::min(b * (b + 1) / 2, N2d)) {
    throw InternalError("square component rank exceeds its structural bound");
  }
  DimensionReport rep;
  rep.quantity = Quantity::DimSquareComponent_2d;
  rep.n = sample.n;
  rep.d = sample.d;
  rep.s = sample.s;
  rep.computed = computed;
  rep.status = Status::Measured;
  rep.seed = rep.instance_seed = sample.seed;
  rep.primes = sample.primes;
  rep.ranks = ranks;
  rep.trials_used = 1;
  return rep;
}

bool ik_exceptional(int n, int d, int s) {
  return d == 2 && ((n == 3 && s == 5) || (n == 4 && s == 9) || (n == 5 && s == 14));
}

std::int64_t ik_expected(int n, int d, int s) {
  if (n < 3 || d < 2) throw ArgumentError("ik_expected requires n >= 3 and d >= 2");
  const mpz_class Nd = bounds::dim_forms(n, d);
  const mpz_class Nd1 = bounds::dim_forms(n, d - 1);
  if (s < Nd1 || s >= Nd) {
    throw ArgumentError("ik_expected requires N_{d-1} <= s < N_d, i.e. " + Nd1.get_str() +
                        " <= s < " + Nd.get_str() + ", got s=" + std::to_string(s));
  }
  const mpz_class k = Nd - s + 1;
  const std::int64_t lhs = static_cast<std::int64_t>(n) * s;
  const std::int64_t rhs = as_int(bounds::dim_forms(n, 2 * d) - k * (k - 1) / 2);
  return ik_exceptional(n, d, s) ? std::min(lhs, rhs) : std::max(lhs, rhs);
}

DimensionReport ik_verify(int n, int d, int s, const ExperimentConfig& config) {
  const std::int64_t expected = ik_expected(n, d, s);
  const auto b = num_monomials(n, d) - static_cast<std::size_t>(s);
  const auto N2d = num_monomials(n, 2 * d);
  check_size_guard(b * (b + 1) / 2, N2d, config.allow_large, "ik_verify");

  const std::uint64_t base = derive_seed(config.seed, instance_stream(n, d, s, 0));
  std::optional<DimensionReport> best;
  int disagreements = 0;
  for (int trial = 0; trial < std::max(1, config.trials); ++trial) {
    const std::uint64_t inst = derive_seed(base, static_cast<std::uint64_t>(trial));
    const PointSample sample = sample_points(n, d, s, inst, config.primes);
    const auto ranks = square_component_ranks(sample);
    if (ranks[0] != ranks[1]) {
      ++disagreements;
      continue;
    }
    DimensionReport rep;
    rep.quantity = Quantity::HilbertH2d;
    rep.n = n;
    rep.d = d;
    rep.s = s;
    rep.computed = static_cast<std::int64_t>(N2d) - static_cast<std::int64_t>(ranks[0]);
    rep.expected = expected;
    rep.seed = config.seed;
    rep.instance_seed = inst;
    rep.primes = config.primes;
    rep.ranks = ranks;
    rep.trials_used = trial + 1;
    rep.prime_disagreements = disagreements;
    if (ik_exceptional(n, d, s)) rep.note = "exceptional triple: min rule";

    if (rep.computed < expected) {
      rep.status = Status::InternalError;
      return rep;
    }
    if (rep.computed == expected) {
      rep.status = Status::Verified;
      return rep;
    }
    rep.status = Status::InconclusiveHigh;
    if (!best || rep.computed < best->computed) best = rep;
    best->trials_used = trial + 1;
    best->prime_disagreements = disagreements;
  }
  if (!best) throw PrimeDisagreement("the two primes disagreed on every trial");
  return *best;
}

DimensionReport generic_ideal_dim(int n, int d, int r, const ExperimentConfig& config) {
  if (n < 1 || d < 1 || r < 1) throw ArgumentError("generic_ideal_dim requires n, d, r >= 1");
  const std::size_t Nd = num_monomials(n, d);
  const std::size_t N2d = num_monomials(n, 2 * d);
  const std::size_t rows = static_cast<std::size_t>(r) * Nd;
  check_size_guard(rows, N2d, config.allow_large, "generic_ideal_dim");
  const ProductTable& table = product_table(n, d, d);
  const auto fs = fields(config.primes);
  const std::uint64_t base = derive_seed(config.seed, instance_stream(n, d, r, 0) ^ (1ULL << 63));

  int disagreements = 0;
  for (int trial = 0; trial < std::max(1, config.trials); ++trial) {
    const std::uint64_t inst = derive_seed(base, static_cast<std::uint64_t>(trial));
    Rng rng(inst);
    std::vector<std::vector<std::uint64_t>> forms(static_cast<std::size_t>(r), std::vector<std::uint64_t>(Nd));
    for (auto& f : forms) {
      for (auto& c : f) c = rng.below(config.primes.sample_bound());
    }
    std::array<std::size_t, 2> ranks{};
    for (std::size_t k = 0; k < 2; ++k) {
      PrimeMatrix m(fs[k], rows, N2d);
      for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t beta = 0; beta < Nd; ++beta) {
          auto row = m.row(i * Nd + beta);
          for (std::size_t alpha = 0; alpha < Nd; ++alpha) row[table.index(alpha, beta)] = forms[i][alpha];
        }
      }
      ranks[k] = rank_mod_p(std::move(m));
    }
    if (ranks[0] != ranks[1]) {
      ++disagreements;
      continue;
    }
    DimensionReport rep;
    rep.quantity = Quantity::GenericIdealDim_m_r;
    rep.n = n;
    rep.d = d;
    rep.r = r;
    rep.computed = static_cast<std::int64_t>(ranks[0]);
    rep.status = Status::Measured;
    rep.seed = config.seed;
    rep.instance_seed = inst;
    rep.primes = config.primes;
    rep.ranks = ranks;
    rep.trials_used = trial + 1;
    rep.prime_disagreements = disagreements;
    return rep;
  }
  throw PrimeDisagreement("the two primes disagreed on every trial");
}

TypicalLengthResult typical_length(int n, int d, int r_max, const ExperimentConfig& config) {
  if (r_max < 1) throw ArgumentError("typical_length requires r_max >= 1");
  TypicalLengthResult res;
  res.n = n;
  res.d = d;
  res.certified_lower = static_cast<int>(as_int(bounds::lambda_lower(bounds::DegreeParams(n, d)).ceiling));
  res.fos_cap = n >= 63 ? std::numeric_limits<int>::max() : static_cast<int>(std::int64_t{1} << (n - 1));
  const auto N2d = static_cast<std::int64_t>(num_monomials(n, 2 * d));

  for (int r = std::max(1, res.certified_lower); r <= r_max; ++r) {
    DimensionReport step = generic_ideal_dim(n, d, r, config);
    const bool full = step.computed == N2d;
    if (full) {
      step.quantity = Quantity::FullRankAtDegree2d;
      step.expected = N2d;
      step.status = Status::Verified;
    }
    res.steps.push_back(step);
    if (full) {
      res.r_found = r;
      break;
    }
  }
  res.status = res.r_found && *res.r_found == res.certified_lower ? TypicalStatus::Exact
                                                                 : TypicalStatus::IntervalOnly;
  return res;
}

void run_jobs(std::size_t count, const std::function<void(std::size_t)>& job, int parallelism) {
  std::vector<std::exception_ptr> errors(count);
  const auto total = static_cast<std::int64_t>(count);
  const int threads = std::max(1, parallelism);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      job(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace soslen::generic
