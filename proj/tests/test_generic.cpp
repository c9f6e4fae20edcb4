#include <atomic>
#include <set>

#include "doctest.h"
#include "soslen/bounds.hpp"
#include "soslen/elimination.hpp"
#include "soslen/errors.hpp"
#include "soslen/form.hpp"
#include "soslen/generic.hpp"
#include "soslen/random.hpp"

using namespace soslen;
using namespace soslen::generic;

namespace {

long N(int n, int e) { return bounds::dim_forms(n, e).get_si(); }

ExperimentConfig config(std::uint64_t seed = kDefaultSeed) {
  ExperimentConfig c;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("random streams") {
  Rng rng(5);
  for (std::uint64_t bound : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{1000}, kMersenne61}) {
    for (int k = 0; k < 200; ++k) CHECK(rng.below(bound) < bound);
  }
  for (int k = 0; k < 200; ++k) {
    const auto x = rng.between(-1000, 1000);
    CHECK(x >= -1000);
    CHECK(x <= 1000);
  }
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 1000; ++s) seeds.insert(derive_seed(kDefaultSeed, s));
  CHECK(seeds.size() == 1000);
  CHECK(Rng(9).next() == Rng(9).next());
}

TEST_CASE("ik_expected") {
  CHECK(ik_expected(3, 2, 5) == 14);
  CHECK(ik_expected(4, 2, 9) == 34);
  CHECK(ik_expected(5, 2, 14) == 69);
  CHECK(ik_exceptional(3, 2, 5));
  CHECK(!ik_exceptional(3, 2, 4));
  for (int d = 2; d <= 10; ++d) CHECK(ik_expected(3, d, d * (d + 1) / 2) == 3 * d * (d + 1) / 2);
  for (int n = 3; n <= 6; ++n) {
    for (int d = 2; d <= 4; ++d) {
      for (long s = N(n, d - 1); s < N(n, d); ++s) {
        const long k = N(n, d) - s + 1;
        const long lhs = n * s, rhs = N(n, 2 * d) - k * (k - 1) / 2;
        const long want = ik_exceptional(n, d, static_cast<int>(s)) ? std::min(lhs, rhs) : std::max(lhs, rhs);
        CHECK(ik_expected(n, d, static_cast<int>(s)) == want);
      }
    }
  }
  CHECK_THROWS_AS(ik_expected(3, 2, 2), ArgumentError);
  CHECK_THROWS_AS(ik_expected(3, 2, 6), ArgumentError);
  CHECK_THROWS_AS(ik_expected(2, 2, 2), ArgumentError);
}

TEST_CASE("sampled points pass the genericity gate") {
  for (auto [n, d, s] : {std::tuple{3, 2, 4}, std::tuple{4, 3, 12}, std::tuple{5, 2, 9}, std::tuple{3, 4, 12}}) {
    const auto sample = sample_points(n, d, s, 77, {});
    REQUIRE(sample.points.size() == static_cast<std::size_t>(s));
    for (const auto& x : sample.points) {
      REQUIRE(x.size() == static_cast<std::size_t>(n));
      for (auto c : x) CHECK(c < kMersenne31);
    }
    for (std::uint64_t p : {kMersenne31, kMersenne61}) {
      const PrimeField F(p);
      CHECK(rank_mod_p(evaluation_matrix(sample, d, F)) == static_cast<std::size_t>(std::min<long>(s, N(n, d))));
      CHECK(rank_mod_p(evaluation_matrix(sample, d - 1, F)) == static_cast<std::size_t>(N(n, d - 1)));
    }
    const auto rep = vanishing_report(sample);
    CHECK(rep.computed == N(n, d) - s);
    CHECK(rep.status == Status::Verified);
  }
}

TEST_CASE("vanishing component and its squares, checked by evaluation") {
  const int n = 4, d = 2, s = 7;
  const auto sample = sample_points(n, d, s, 3, {});
  const auto vc = vanishing_component(sample);
  REQUIRE(vc.dimension == 3);
  for (std::size_t k = 0; k < 2; ++k) {
    const PrimeField F(k == 0 ? kMersenne31 : kMersenne61);
    std::vector<PrimeForm> forms;
    for (const auto& v : vc.basis[k]) forms.emplace_back(F, n, d, v);
    for (const auto& f : forms) {
      for (const auto& x : sample.points) {
        std::vector<std::uint64_t> xp;
        for (auto c : x) xp.push_back(c % F.modulus());
        CHECK(evaluate(f, Point<PrimeField>(F, xp)) == 0);
      }
    }
    const auto prod = square_product_matrix(vc.basis[k], n, d, F);
    REQUIRE(prod.rows() == 6);
    std::size_t row = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = i; j < forms.size(); ++j, ++row) {
        const auto pq = forms[i] * forms[j];
        for (std::size_t c = 0; c < prod.cols(); ++c) CHECK(prod.at(row, c) == pq[c]);
      }
    }
  }
  const auto rep = dim_square_component(sample);
  CHECK(rep.computed == 6);
}

TEST_CASE("ik_verify on small sweeps") {
  for (int n = 3; n <= 4; ++n) {
    for (int d = 2; d <= 3; ++d) {
      if (n == 4 && d == 3) continue;
      for (long s = N(n, d - 1); s < N(n, d); ++s) {
        const auto rep = ik_verify(n, d, static_cast<int>(s), config());
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(s);
        CHECK(rep.status == Status::Verified);
        CHECK(rep.computed == ik_expected(n, d, static_cast<int>(s)));
        CHECK(rep.ranks[0] == rep.ranks[1]);
      }
    }
  }
  const auto a = ik_verify(3, 3, 7, config(42));
  const auto b = ik_verify(3, 3, 7, config(42));
  const auto c = ik_verify(3, 3, 7, config(43));
  CHECK(a.instance_seed == b.instance_seed);
  CHECK(a.computed == b.computed);
  CHECK(a.instance_seed != c.instance_seed);
}

TEST_CASE("generic ideal dimensions") {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      // multiplication by a nonzero form is injective
      CHECK(generic_ideal_dim(n, d, 1, config()).computed == N(n, d));
      CHECK(generic_ideal_dim(n, d, 8, config()).computed <= N(n, 2 * d));
    }
  }
  CHECK(generic_ideal_dim(3, 2, 2, config()).computed == 2 * N(3, 2) - 1);
}

TEST_CASE("typical length on ternary forms") {
  const int want[] = {0, 3, 3, 4, 4};
  for (int d = 1; d <= 4; ++d) {
    const auto res = typical_length(3, d, 4, config());
    REQUIRE(res.r_found);
    CHECK(*res.r_found == want[d]);
    CHECK(res.certified_lower <= *res.r_found);
    CHECK(res.fos_cap == 4);
    CHECK(res.status == (res.certified_lower == *res.r_found ? TypicalStatus::Exact : TypicalStatus::IntervalOnly));
  }
  const auto capped = typical_length(3, 3, 3, config());
  CHECK(!capped.r_found);
  CHECK(capped.status == TypicalStatus::IntervalOnly);
}

TEST_CASE("size guard") {
  CHECK_NOTHROW(check_size_guard(1000, 1000, false, "x"));
  CHECK_THROWS_AS(check_size_guard(10000, 10000, false, "x"), SizeGuardError);
  CHECK_NOTHROW(check_size_guard(10000, 10000, true, "x"));
  CHECK_THROWS_AS(ik_verify(6, 8, 792, config()), SizeGuardError);
}

TEST_CASE("run_jobs") {
  std::vector<std::atomic<int>> hits(50);
  run_jobs(50, [&](std::size_t i) { hits[i]++; }, 4);
  for (auto& h : hits) CHECK(h == 1);
  try {
    run_jobs(
        20,
        [](std::size_t i) {
          if (i % 7 == 3) throw ArgumentError("job " + std::to_string(i));
        },
        3);
    FAIL("no exception");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()) == "job 3");
  }
}
