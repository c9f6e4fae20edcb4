#include "soslen/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "soslen/errors.hpp"
#include "soslen/io.hpp"

namespace soslen::cli {

namespace {

using io::Json;

enum class Format { Json, Csv, Table };

struct RunConfig {
  std::string seed_text = "default";
  std::uint64_t seed = generic::kDefaultSeed;
  bool random_seed = false;
  std::uint64_t prime = kMersenne31;
  std::uint64_t prime2 = kMersenne61;
  int trials = 5;
  int parallelism = 0;
  Format format = Format::Table;
  std::string cache;
  bool allow_large = false;

  generic::ExperimentConfig experiment() const {
    return {seed, {prime, prime2}, trials, allow_large};
  }
};

struct Outcome {
  std::string text;
  int code = kOk;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
    }
  } catch (const std::logic_error&) {
    throw ArgumentError(std::string("--") + what + " expects N or LO..HI, got '" + text + "'");
  }
  if (r.lo > r.hi) throw ArgumentError(std::string("--") + what + " range is empty: " + text);
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ArgumentError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw ArgumentError("cannot write '" + path + "'");
}

int report_code(const generic::DimensionReport& r) {
  if (r.status == generic::Status::InternalError) return kInternal;
  if (r.status == generic::Status::InconclusiveHigh) return kInconclusive;
  return kOk;
}

// Cache: append-only JSON lines {"key", "request", "code", "output"}.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  std::optional<Outcome> find(const std::string& request) const {
    const std::string key = hex_key(request);
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      const Json entry = Json::parse(line, nullptr, false);
      if (entry.is_discarded() || !entry.is_object()) continue;
      if (entry.value("key", "") != key || entry.value("request", "") != request) continue;
      return Outcome{entry.value("output", ""), entry.value("code", 0)};
    }
    return std::nullopt;
  }

  void store(const std::string& request, const Outcome& o) const {
    std::ofstream f(path_, std::ios::app);
    if (!f) throw ArgumentError("cannot append to cache '" + path_ + "'");
    const Json entry{{"key", hex_key(request)}, {"request", request}, {"code", o.code}, {"output", o.text}};
    f << entry.dump() << '\n';
  }

 private:
  static std::string hex_key(const std::string& request) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(request);
    return os.str();
  }

  std::string path_;
};

Outcome cmd_bounds(const RunConfig& cfg, int n, int d) {
  const auto row = bounds::bounds_row({n, d});
  switch (cfg.format) {
    case Format::Json: return {dump(io::to_json(row))};
    case Format::Csv: return {io::csv_header_bounds() + "\n" + io::csv_row(row) + "\n"};
    case Format::Table: return {io::render_bounds(row)};
  }
  return {};
}

Outcome cmd_table(const RunConfig& cfg, Range n, Range d) {
  const auto rows = bounds::bounds_table(n.lo, n.hi, d.lo, d.hi);
  std::string text;
  switch (cfg.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(io::to_json(r));
      text = dump(arr);
      break;
    }
    case Format::Csv:
      text = io::csv_header_bounds() + "\n";
      for (const auto& r : rows) text += io::csv_row(r) + "\n";
      break;
    case Format::Table: text = io::render_table(rows); break;
  }
  return {text};
}

Outcome render_reports(const RunConfig& cfg, const std::vector<generic::DimensionReport>& reps) {
  Outcome o;
  switch (cfg.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : reps) arr.push_back(io::to_json(r));
      o.text = dump(reps.size() == 1 ? arr[0] : arr);
      break;
    }
    case Format::Csv:
      o.text = io::csv_header_report() + "\n";
      for (const auto& r : reps) o.text += io::csv_row(r) + "\n";
      break;
    case Format::Table:
      for (const auto& r : reps) o.text += io::render_report(r);
      break;
  }
  for (const auto& r : reps) o.code = std::max(o.code, report_code(r));
  return o;
}

Outcome cmd_ik(const RunConfig& cfg, int n, int d, std::optional<int> s, bool sweep) {
  std::vector<int> targets;
  if (sweep) {
    if (s) throw ArgumentError("ik: give either s or --sweep, not both");
    if (n < 3 || d < 2) throw ArgumentError("ik requires n >= 3 and d >= 2");
    const long lo = bounds::dim_forms(n, d - 1).get_si();
    const long hi = bounds::dim_forms(n, d).get_si();
    for (long v = lo; v < hi; ++v) targets.push_back(static_cast<int>(v));
  } else {
    if (!s) throw ArgumentError("ik: missing s (or pass --sweep)");
    targets.push_back(*s);
  }
  for (int v : targets) generic::ik_expected(n, d, v);  // validate before any work
  std::vector<generic::DimensionReport> reps(targets.size());
  const auto config = cfg.experiment();
  generic::run_jobs(
      targets.size(), [&](std::size_t i) { reps[i] = generic::ik_verify(n, d, targets[i], config); },
      cfg.parallelism > 0 ? cfg.parallelism : omp_get_max_threads());
  return render_reports(cfg, reps);
}

Outcome cmd_typical(const RunConfig& cfg, int n, int d, std::optional<int> r_max) {
  if (n < 1 || n > 30) throw ArgumentError("typical requires 1 <= n <= 30");
  const int cap = r_max.value_or(1 << (n - 1));
  const auto res = generic::typical_length(n, d, cap, cfg.experiment());
  Outcome o;
  switch (cfg.format) {
    case Format::Json: o.text = dump(io::to_json(res)); break;
    case Format::Csv: o.text = io::csv_header_typical() + "\n" + io::csv_row(res) + "\n"; break;
    case Format::Table: o.text = io::render_typical(res); break;
  }
  for (const auto& step : res.steps) {
    if (step.status == generic::Status::InternalError) o.code = kInternal;
  }
  if (o.code == kOk && !res.r_found) o.code = kInconclusive;
  return o;
}

Outcome cmd_witness(const RunConfig& cfg, int n, int d, std::optional<int> s, const std::string& out_path,
                    const std::string& mix_path) {
  witness::WitnessConfig wc;
  wc.seed = cfg.seed;
  wc.primes = {cfg.prime, cfg.prime2};
  const auto cert = witness::build_witness(n, d, s, wc);
  const Json j = io::to_json(cert);
  if (!out_path.empty()) write_file(out_path, dump(j));
  if (!mix_path.empty()) {
    Rng rng(derive_seed(cfg.seed, 0x6d6978ULL));
    const auto rep = cert.basis_representation();
    const auto u = witness::random_rational_orthogonal(rep.summands().size(), rng, 8);
    write_file(mix_path, dump(io::to_json(witness::orthogonal_mix(rep, u))));
  }
  Outcome o;
  switch (cfg.format) {
    case Format::Json: o.text = dump(j); break;
    case Format::Csv: {
      std::ostringstream os;
      os << "n,d,s,length,injectivity_rank,seed\n"
         << cert.n << ',' << cert.d << ',' << cert.s << ',' << cert.length << ',' << cert.injectivity_rank
         << ',' << cert.seed << '\n';
      o.text = os.str();
      break;
    }
    case Format::Table: {
      std::ostringstream os;
      os << "witness n=" << cert.n << " d=" << cert.d << " s=" << cert.s << ": length " << cert.length
         << ", injectivity rank " << cert.injectivity_rank << " at";
      for (auto p : cert.primes) os << ' ' << p;
      os << '\n' << "f = " << to_text(cert.witness_form()) << '\n';
      if (!out_path.empty()) os << "certificate written to " << out_path << '\n';
      o.text = os.str();
      break;
    }
  }
  return o;
}

Outcome cmd_gramcheck(const RunConfig& cfg, const std::string& a, const std::string& b) {
  const auto ra = io::representation_from_json(read_json_file(a));
  const auto rb = io::representation_from_json(read_json_file(b));
  const bool eq = witness::gram_equivalent(ra, rb);
  Outcome o;
  o.code = eq ? kOk : kFalse;
  switch (cfg.format) {
    case Format::Json: o.text = dump(Json{{"equivalent", eq}}); break;
    case Format::Csv: o.text = std::string("equivalent\n") + (eq ? "true" : "false") + "\n"; break;
    case Format::Table: o.text = std::string(eq ? "true" : "false") + "\n"; break;
  }
  return o;
}

Outcome cmd_verify(const RunConfig& cfg, const std::string& path) {
  const auto cert = io::certificate_from_json(read_json_file(path));
  const auto res = witness::check_certificate(cert);
  Outcome o;
  o.code = res.ok ? kOk : kCertificationFailure;
  switch (cfg.format) {
    case Format::Json:
      o.text = dump(Json{{"ok", res.ok}, {"failures", res.failures}, {"length", cert.length}});
      break;
    case Format::Csv:
      o.text = "ok,length,failures\n" + std::string(res.ok ? "true" : "false") + "," +
               std::to_string(cert.length) + "," + std::to_string(res.failures.size()) + "\n";
      break;
    case Format::Table:
      if (res.ok) {
        o.text = "certificate OK: length " + std::to_string(cert.length) + "\n";
      } else {
        o.text = "certificate REJECTED\n";
        for (const auto& f : res.failures) o.text += "  " + f + "\n";
      }
      break;
  }
  return o;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Table: return "table";
  }
  return "";
}

}  // namespace

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds, dimension experiments and length certificates for sums of squares of forms",
               "soslen"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", SOSLEN_VERSION);

  RunConfig cfg;
  app.add_option("--seed", cfg.seed_text, "RNG seed (integer) or 'random'");
  app.add_option("--prime", cfg.prime, "first prime modulus")->capture_default_str();
  app.add_option("--prime2", cfg.prime2, "second prime modulus")->capture_default_str();
  app.add_option("--trials", cfg.trials, "instances sampled per experiment")->check(CLI::PositiveNumber);
  app.add_option("--parallelism", cfg.parallelism, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}}));
  app.add_option("--cache", cfg.cache, "JSON-lines result cache (PYLAB_CACHE overrides)");
  app.add_flag("--allow-large", cfg.allow_large, "lift the instance size guard");

  int n = 0, d = 0;
  std::optional<int> s, r_max;
  bool sweep = false, paper_table = false;
  std::string n_range = "4..6", d_range = "2..8", out_path, mix_path, file1, file2;

  auto* bounds_cmd = app.add_subcommand("bounds", "bounds for p(n,2d)");
  bounds_cmd->add_option("n,--n", n)->required();
  bounds_cmd->add_option("d,--d", d)->required();

  auto* table_cmd = app.add_subcommand("table", "bounds table over ranges of n and d");
  table_cmd->add_option("--n", n_range, "N or LO..HI");
  table_cmd->add_option("--d", d_range, "N or LO..HI");
  table_cmd->add_flag("--paper-table", paper_table, "n = 4..6, d = 2..8");

  auto* ik_cmd = app.add_subcommand("ik", "h_2d(I^2) for s general points against the conjectured value");
  ik_cmd->add_option("n,--n", n)->required();
  ik_cmd->add_option("d,--d", d)->required();
  ik_cmd->add_option("s,--s", s);
  ik_cmd->add_flag("--sweep", sweep, "all s with N_{d-1} <= s < N_d");

  auto* typical_cmd = app.add_subcommand("typical", "smallest r with a full-rank generic ideal in degree 2d");
  typical_cmd->add_option("n,--n", n)->required();
  typical_cmd->add_option("d,--d", d)->required();
  typical_cmd->add_option("--r-max", r_max, "largest r tried (default 2^(n-1))");

  auto* witness_cmd = app.add_subcommand("witness", "form with certified sos length");
  witness_cmd->add_option("n,--n", n)->required();
  witness_cmd->add_option("d,--d", d)->required();
  witness_cmd->add_option("s,--s", s);
  witness_cmd->add_option("--out", out_path, "certificate file");
  witness_cmd->add_option("--mix-out", mix_path, "orthogonally mixed representation file");

  auto* gram_cmd = app.add_subcommand("gramcheck", "orthogonal equivalence of two representations");
  gram_cmd->add_option("file1", file1)->required();
  gram_cmd->add_option("file2", file2)->required();

  auto* verify_cmd = app.add_subcommand("verify", "re-check a length certificate");
  verify_cmd->add_option("file", file1)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << SOSLEN_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (cfg.seed_text == "random") {
      cfg.random_seed = true;
      std::random_device rd;
      cfg.seed = (std::uint64_t{rd()} << 32) ^ rd();
    } else if (cfg.seed_text != "default") {
      try {
        std::size_t used = 0;
        cfg.seed = std::stoull(cfg.seed_text, &used, 0);
        if (used != cfg.seed_text.size()) throw std::invalid_argument(cfg.seed_text);
      } catch (const std::logic_error&) {
        throw ArgumentError("--seed expects an integer or 'random', got '" + cfg.seed_text + "'");
      }
    }
    PrimeField check1(cfg.prime), check2(cfg.prime2);
    if (cfg.prime == cfg.prime2) throw ArgumentError("--prime and --prime2 must differ");
    if (cfg.parallelism > 0) omp_set_num_threads(cfg.parallelism);
    if (const char* env = std::getenv("PYLAB_CACHE"); env && *env) cfg.cache = env;

    std::ostringstream request;
    request << "soslen " << SOSLEN_VERSION << " format=" << format_name(cfg.format) << " seed=" << cfg.seed
            << " primes=" << cfg.prime << ',' << cfg.prime2 << " trials=" << cfg.trials
            << " allow_large=" << cfg.allow_large << ' ';
    std::function<Outcome()> job;
    bool cacheable = !cfg.random_seed;

    if (*bounds_cmd) {
      request << "bounds " << n << ' ' << d;
      job = [&] { return cmd_bounds(cfg, n, d); };
    } else if (*table_cmd) {
      if (paper_table) n_range = "4..6", d_range = "2..8";
      const Range nr = parse_range(n_range, "n");
      const Range dr = parse_range(d_range, "d");
      request << "table " << nr.lo << ".." << nr.hi << ' ' << dr.lo << ".." << dr.hi;
      job = [&cfg, nr, dr] { return cmd_table(cfg, nr, dr); };
    } else if (*ik_cmd) {
      request << "ik " << n << ' ' << d << ' ' << (s ? std::to_string(*s) : "-") << " sweep=" << sweep;
      job = [&] { return cmd_ik(cfg, n, d, s, sweep); };
    } else if (*typical_cmd) {
      request << "typical " << n << ' ' << d << ' ' << (r_max ? std::to_string(*r_max) : "-");
      job = [&] { return cmd_typical(cfg, n, d, r_max); };
    } else if (*witness_cmd) {
      cacheable = false;
      job = [&] { return cmd_witness(cfg, n, d, s, out_path, mix_path); };
    } else if (*gram_cmd) {
      cacheable = false;
      job = [&] { return cmd_gramcheck(cfg, file1, file2); };
    } else {
      cacheable = false;
      job = [&] { return cmd_verify(cfg, file1); };
    }

    std::optional<ResultCache> cache;
    if (cacheable && !cfg.cache.empty()) {
      cache.emplace(cfg.cache);
      if (auto hit = cache->find(request.str())) {
        err << "cache hit: " << cfg.cache << '\n';
        out << hit->text;
        return hit->code;
      }
    }
    const Outcome o = job();
    out << o.text;
    if (cache && o.code != kInternal) cache->store(request.str(), o);
    return o.code;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GenericityFailure& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const CertificationFailure& e) {
    err << "certification failed: " << e.what() << '\n';
    return kCertificationFailure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace soslen::cli
