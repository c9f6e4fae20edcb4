// One PASS/FAIL line per acceptance criterion, each under its time budget.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "soslen/bounds.hpp"
#include "soslen/cli.hpp"
#include "soslen/elimination.hpp"
#include "soslen/generic.hpp"
#include "soslen/io.hpp"
#include "soslen/rational_linalg.hpp"
#include "soslen/witness.hpp"

using namespace soslen;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Every DimensionReport produced by criteria 3 and 4, for criterion 7.
std::vector<generic::DimensionReport> g_reports;

long N(int n, int e) { return bounds::dim_forms(n, e).get_si(); }

std::vector<long> numbers_after_colon(const std::string& line) {
  std::vector<long> out;
  std::istringstream in(line.substr(line.find(':') + 1));
  for (long v; in >> v;) out.push_back(v);
  return out;
}

Verdict preset_table() {
  Verdict v;
  const std::vector<std::pair<std::string, std::vector<long>>> want = {
      {"s_min(4,d)", {5, 12, 24, 41, 65, 97, 137}},    {"p(4,2d)≥", {5, 8, 11, 15, 19, 23, 28}},
      {"p(4,2d)≤", {7, 11, 16, 22, 29, 36, 43}},        {"s_min(5,d)", {8, 21, 48, 94, 166, 273, 422}},
      {"p(5,2d)≥", {7, 14, 22, 32, 44, 57, 73}},        {"p(5,2d)≤", {11, 20, 30, 44, 59, 77, 97}},
      {"s_min(6,d)", {10, 34, 88, 192, 374, 670, 1123}}, {"p(6,2d)≥", {11, 22, 38, 60, 88, 122, 164}},
      {"p(6,2d)≤", {15, 29, 50, 77, 110, 152, 201}},
  };
  std::ostringstream out, err;
  v.require(cli::run({"table", "--paper-table"}, out, err) == 0, "table --paper-table failed");
  std::istringstream lines(out.str());
  std::size_t matched = 0, numbers = 0;
  for (std::string line; std::getline(lines, line);) {
    for (const auto& [label, values] : want) {
      if (line.rfind(label + ":", 0) != 0) continue;
      ++matched;
      const auto got = numbers_after_colon(line);
      v.require(got == values, "row '" + label + "' differs: " + line);
      numbers += got.size();
    }
  }
  v.require(matched == want.size(), "missing rows");
  if (v.ok) v.detail = std::to_string(numbers) + "/63 values";
  return v;
}

Verdict lambda_identity() {
  Verdict v;
  for (int d = 1; d <= 50; ++d) {
    const auto L = bounds::Lambda_upper({3, d});
    v.require(L.value.compare(mpq_class(2 * d + 1)) == 0, "Lambda(3," + std::to_string(2 * d) + ") != 2d+1");
  }
  std::vector<std::string> hits;
  for (int n = 4; n <= 10; ++n) {
    for (int d = 1; d <= 100; ++d) {
      const auto F = bounds::Lambda_upper({n, d}).floor;
      const auto L = bounds::leep_length_bound(n, d, 0);
      if (L < F) {
        hits.push_back("(" + std::to_string(n) + "," + std::to_string(2 * d) + "):" + F.get_str() + "/" +
                       L.get_str());
      }
    }
  }
  const std::vector<std::string> want{"(4,6):12/11", "(4,8):17/16", "(4,10):23/22"};
  std::string got;
  for (const auto& h : hits) got += h + " ";
  v.require(hits == want, "exceptional pairs: " + got);
  if (v.ok) v.detail = "exceptional pairs " + got.substr(0, got.size() - 1);
  return v;
}

Verdict ternary_identity() {
  Verdict v;
  int runs = 0;
  for (int d = 2; d <= 10; ++d) {
    const int s = d * (d + 1) / 2;
    for (std::uint64_t seed : {generic::kDefaultSeed, std::uint64_t{20240601}}) {
      generic::ExperimentConfig cfg;
      cfg.seed = seed;
      const auto rep = generic::ik_verify(3, d, s, cfg);
      g_reports.push_back(rep);
      ++runs;
      v.require(rep.status == generic::Status::Verified && rep.computed == 3 * s,
                "d=" + std::to_string(d) + " h=" + std::to_string(rep.computed));
      v.require(rep.ranks[0] == rep.ranks[1], "primes disagree at d=" + std::to_string(d));
    }
  }
  if (v.ok) v.detail = std::to_string(runs) + " runs Verified";
  return v;
}

Verdict ik_sweep() {
  Verdict v;
  std::vector<std::tuple<int, int, int>> jobs;
  for (int n = 3; n <= 5; ++n) {
    for (int d = 2; d <= 3; ++d) {
      for (long s = N(n, d - 1); s < N(n, d); ++s) jobs.emplace_back(n, d, static_cast<int>(s));
    }
  }
  std::vector<generic::DimensionReport> reps(jobs.size());
  generic::run_jobs(
      jobs.size(),
      [&](std::size_t i) {
        const auto [n, d, s] = jobs[i];
        reps[i] = generic::ik_verify(n, d, s, generic::ExperimentConfig{});
      },
      omp_get_max_threads());
  for (const auto& r : reps) {
    g_reports.push_back(r);
    v.require(r.status == generic::Status::Verified, "(" + std::to_string(r.n) + "," + std::to_string(r.d) + "," +
                                                         std::to_string(*r.s) + ") " +
                                                         std::string(generic::to_string(r.status)));
  }
  auto h = [&](int n, int d, int s) {
    for (const auto& r : reps) {
      if (r.n == n && r.d == d && *r.s == s) return r.computed;
    }
    return std::int64_t{-1};
  };
  v.require(h(3, 2, 5) == 14, "(3,2,5) != 14");
  v.require(h(4, 2, 9) == 34, "(4,2,9) != 34");
  v.require(h(5, 2, 14) == 69, "(5,2,14) != 69");
  if (v.ok) v.detail = std::to_string(reps.size()) + " triples Verified, exceptional 14/34/69";
  return v;
}

Verdict typical_lengths() {
  Verdict v;
  std::vector<std::tuple<int, int, int>> want;
  for (int d = 1; d <= 8; ++d) want.emplace_back(3, d, d <= 2 ? 3 : 4);
  for (int d = 2; d <= 10; ++d) want.emplace_back(4, d, d <= 4 ? 5 : d <= 8 ? 6 : 7);
  for (const auto& [n, d, t] : want) {
    const auto res = generic::typical_length(n, d, 1 << (n - 1), generic::ExperimentConfig{});
    const std::string tag = "t(" + std::to_string(n) + "," + std::to_string(2 * d) + ")";
    v.require(res.r_found.has_value(), tag + " not found");
    if (!res.r_found) continue;
    v.require(*res.r_found == t, tag + "=" + std::to_string(*res.r_found));
    v.require(res.certified_lower <= *res.r_found && *res.r_found <= res.fos_cap, tag + " outside its bracket");
    for (const auto& step : res.steps) v.require(step.ranks[0] == step.ranks[1], tag + " primes disagree");
  }
  if (v.ok) v.detail = std::to_string(want.size()) + " typical lengths";
  return v;
}

Verdict certified_lengths() {
  Verdict v;
  const std::string python = SOSLEN_PYTHON;
  v.require(!python.empty(), "no Python interpreter for the standalone checker");
  const auto dir = std::filesystem::temp_directory_path() / "soslen_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::tuple<int, int, std::optional<int>, int>> cases;
  for (int d = 2; d <= 6; ++d) cases.emplace_back(3, d, std::nullopt, d + 1);
  cases.emplace_back(4, 2, 5, 5);
  for (const auto& [n, d, s, length] : cases) {
    const auto cert = witness::build_witness(n, d, s, witness::WitnessConfig{});
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    v.require(cert.length == length, tag + " length " + std::to_string(cert.length));
    v.require(witness::check_certificate(cert).ok, tag + " rejected by check_certificate");
    if (n == 3) v.require(bounds::bounds_row({n, d}).upper_best == d + 2, tag + " upper bound is not d+2");
    const auto file = dir / ("cert_" + std::to_string(n) + "_" + std::to_string(d) + ".json");
    std::ofstream(file) << io::to_json(cert).dump(2) << '\n';
    if (!python.empty()) {
      const std::string cmd = "\"" + python + "\" \"" SOSLEN_CHECKER "\" \"" + file.string() + "\" > /dev/null";
      v.require(std::system(cmd.c_str()) == 0, tag + " rejected by the standalone checker");
    }
  }
  if (v.ok) v.detail = "lengths 3..7 for n=3 (upper d+2), 5 for (4,4); checker agrees";
  return v;
}

Verdict property_suites() {
  Verdict v;
  // (a) and (b) over every instance of criteria 3 and 4
  int disagreements = 0;
  for (const auto& r : g_reports) {
    v.require(r.computed >= *r.expected, "h below the proven lower bound");
    v.require(r.ranks[0] == r.ranks[1], "reported ranks differ between primes");
    disagreements += r.prime_disagreements;
  }
  v.require(!g_reports.empty(), "no instances recorded");
  v.require(disagreements == 0, std::to_string(disagreements) + " prime disagreements");

  // (c) rank/unrank: a strictly decreasing list of N distinct degree-e vectors
  std::size_t monos = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int e = 0; e <= 160; ++e) {
      const std::size_t count = num_monomials(n, e);
      if (count > 10000) break;
      std::vector<int> prev;
      for (std::size_t i = 0; i < count; ++i) {
        const auto u = mono_unrank(n, e, i);
        int total = 0;
        for (int a : u) total += a;
        v.require(total == e && (i == 0 || u < prev) && mono_rank(u) == i, "rank/unrank mismatch");
        prev = u;
      }
      monos += count;
    }
  }

  // (d) Gram tensor invariance
  const auto cert = witness::build_witness(3, 3, std::nullopt, witness::WitnessConfig{});
  const auto rep = cert.basis_representation();
  Rng rng(99);
  for (int k = 0; k < 100; ++k) {
    const auto u = witness::random_rational_orthogonal(rep.summands().size(), rng, 1 + k % 7);
    v.require(witness::gram_equivalent(rep, witness::orthogonal_mix(rep, u)), "Gram tensor changed under a mix");
  }

  // (e) kernel multiply-back
  for (int k = 0; k < 100; ++k) {
    const std::size_t rows = rng.between(1, 8), cols = rng.between(1, 10);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng.below(3) == 0) continue;
        m.at(i, j) = mpq_class(rng.between(-9, 9), rng.between(1, 5));
        m.at(i, j).canonicalize();
      }
    }
    if (rows > 2) {
      for (std::size_t j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j) - 2 * m.at(1, j);
    }
    const auto basis = kernel_basis_rational(m);
    v.require(basis.size() + rank_rational(m) == cols, "kernel dimension");
    for (const auto& x : basis) {
      for (std::size_t i = 0; i < rows; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += m.at(i, j) * x[j];
        v.require(acc == 0, "kernel vector does not multiply back to zero");
      }
    }
  }
  if (v.ok) {
    v.detail = std::to_string(g_reports.size()) + " instances, " + std::to_string(monos) +
               " monomials, 100 mixes, 100 kernels";
  }
  return v;
}

Verdict asymptotics() {
  Verdict v;
  for (int n : {4, 5}) {
    v.require(bounds::compare_asymptotic_error(n, 200, 20) < 0,
              "n=" + std::to_string(n) + ": error at d=200 is not smaller than at d=20");
  }
  if (v.ok) v.detail = "n=4,5: error(200) < error(20)";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "preset table reproduction", 1, preset_table},
      {2, "Lambda identity and exceptional pairs", 1, lambda_identity},
      {3, "ternary Hilbert identity", 30, ternary_identity},
      {4, "IK sweep", 300, ik_sweep},
      {5, "typical lengths", 600, typical_lengths},
      {6, "certified lengths", 120, certified_lengths},
      {7, "property suites", 120, property_suites},
      {8, "asymptotics", 1, asymptotics},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.ok && secs > c.budget_s) {
      v.ok = false;
      v.detail += " (over budget)";
    }
    failures += v.ok ? 0 : 1;
    std::printf("%s %d %s: %s [%.2f s / %.0f s]\n", v.ok ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs,
                c.budget_s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
