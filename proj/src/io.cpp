#include "soslen/io.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "soslen/errors.hpp"

namespace soslen::io {

namespace {

Json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

std::string approx(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

Json surd_json(const QuadraticSurd& v) {
  return Json{{"exact", v.to_string()}, {"approx", v.to_double()}};
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ArgumentError(std::string("record is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("field '") + key + "': " + e.what());
  }
}

mpz_class big(const Json& j) {
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ArgumentError("malformed integer '" + j.get<std::string>() + "'");
    return z;
  }
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  throw ArgumentError("expected an integer (number or decimal string)");
}

IntegerVector big_vector(const Json& j) {
  if (!j.is_array()) throw ArgumentError("expected an array of integers");
  IntegerVector v;
  for (const auto& x : j) v.push_back(big(x));
  return v;
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

Json to_json(const bounds::BoundsRow& row) {
  Json lambda = surd_json(row.lambda.value);
  lambda["ceil"] = integer(row.lambda.ceiling);
  Json Lambda = surd_json(row.Lambda.value);
  Lambda["floor"] = integer(row.Lambda.floor);
  return Json{{"n", row.params.n},
              {"d", row.params.d},
              {"N_d", integer(row.N_d)},
              {"N_2d", integer(row.N_2d)},
              {"lambda", lambda},
              {"Lambda", Lambda},
              {"leep_L", integer(row.leep_L)},
              {"s_min", integer(row.s_min)},
              {"theta", integer(row.theta)},
              {"lower", integer(row.theta)},
              {"upper", integer(row.upper_best)},
              {"upper_source", std::string(bounds::to_string(row.upper_source))}};
}

Json to_json(const generic::DimensionReport& rep) {
  Json j{{"quantity", std::string(generic::to_string(rep.quantity))},
         {"n", rep.n},
         {"d", rep.d},
         {"computed", rep.computed},
         {"expected", rep.expected ? Json(*rep.expected) : Json(nullptr)},
         {"status", std::string(generic::to_string(rep.status))},
         {"seed", rep.seed},
         {"instance_seed", rep.instance_seed},
         {"primes", Json::array({rep.primes.first, rep.primes.second})},
         {"ranks", Json::array({rep.ranks[0], rep.ranks[1]})},
         {"trials_used", rep.trials_used},
         {"prime_disagreements", rep.prime_disagreements},
         {"note", rep.note}};
  if (rep.s) j["s"] = *rep.s;
  if (rep.r) j["r"] = *rep.r;
  return j;
}

Json to_json(const generic::TypicalLengthResult& res) {
  Json steps = Json::array();
  for (const auto& s : res.steps) steps.push_back(to_json(s));
  return Json{{"n", res.n},
              {"d", res.d},
              {"r_found", res.r_found ? Json(*res.r_found) : Json(nullptr)},
              {"certified_lower", res.certified_lower},
              {"fos_cap", res.fos_cap},
              {"status", std::string(generic::to_string(res.status))},
              {"steps", steps}};
}

Json to_json(const witness::LengthCertificate& cert) {
  Json basis = Json::array();
  for (const auto& v : cert.basis) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(x.get_str());
    basis.push_back(row);
  }
  Json wit = Json::array();
  for (const auto& x : cert.witness) wit.push_back(x.get_str());
  return Json{{"format", kCertificateFormat},
              {"n", cert.n},
              {"d", cert.d},
              {"s", cert.s},
              {"seed", cert.seed},
              {"primes", cert.primes},
              {"points", cert.points},
              {"basis", basis},
              {"witness", wit},
              {"length", cert.length},
              {"injectivity_rank", cert.injectivity_rank}};
}

Json to_json(const witness::SosRepresentation& rep) {
  Json summands = Json::array();
  for (const auto& p : rep.summands()) {
    Json row = Json::array();
    for (const auto& c : p.coeffs()) row.push_back(c.get_str());
    summands.push_back(row);
  }
  return Json{{"format", kRepresentationFormat},
              {"n", rep.num_vars()},
              {"d", rep.half_degree()},
              {"summands", summands}};
}

witness::LengthCertificate certificate_from_json(const Json& j) try {
  if (!j.is_object() || field<std::string>(j, "format") != kCertificateFormat) {
    throw ArgumentError(std::string("not a ") + kCertificateFormat + " record");
  }
  witness::LengthCertificate cert;
  cert.n = field<int>(j, "n");
  cert.d = field<int>(j, "d");
  cert.s = field<int>(j, "s");
  cert.seed = field<std::uint64_t>(j, "seed");
  cert.primes = field<std::vector<std::uint64_t>>(j, "primes");
  cert.points = field<std::vector<std::vector<std::int64_t>>>(j, "points");
  for (const auto& row : j.at("basis")) cert.basis.push_back(big_vector(row));
  cert.witness = big_vector(j.at("witness"));
  cert.length = field<int>(j, "length");
  cert.injectivity_rank = field<std::size_t>(j, "injectivity_rank");
  return cert;
} catch (const Json::exception& e) {
  throw ArgumentError(std::string("malformed certificate: ") + e.what());
}

witness::SosRepresentation representation_from_json(const Json& j) try {
  const auto format = field<std::string>(j, "format");
  if (format == kCertificateFormat) return certificate_from_json(j).basis_representation();
  if (format != kRepresentationFormat) throw ArgumentError("unknown record format '" + format + "'");
  const int n = field<int>(j, "n");
  const int d = field<int>(j, "d");
  const RationalDomain Q;
  std::vector<RationalForm> forms;
  for (const auto& row : j.at("summands")) {
    std::vector<mpq_class> c;
    for (const auto& x : row) {
      if (!x.is_string()) throw ArgumentError("summand coefficients must be \"p/q\" strings");
      c.push_back(Q.parse(x.get<std::string>()));
    }
    forms.emplace_back(Q, n, d, std::move(c));
  }
  return witness::SosRepresentation(n, d, std::move(forms));
} catch (const Json::exception& e) {
  throw ArgumentError(std::string("malformed representation: ") + e.what());
}

std::string csv_header_bounds() {
  return "n,d,N_d,N_2d,lambda_ceil,Lambda_floor,leep_L,s_min,theta,upper_best,upper_source";
}

std::string csv_row(const bounds::BoundsRow& r) {
  std::ostringstream os;
  os << r.params.n << ',' << r.params.d << ',' << r.N_d << ',' << r.N_2d << ',' << r.lambda.ceiling << ','
     << r.Lambda.floor << ',' << r.leep_L << ',' << r.s_min << ',' << r.theta << ',' << r.upper_best << ','
     << bounds::to_string(r.upper_source);
  return os.str();
}

std::string csv_header_report() {
  return "quantity,n,d,s,r,computed,expected,status,seed,instance_seed,prime1,prime2,rank1,rank2,"
         "trials_used,prime_disagreements";
}

std::string csv_row(const generic::DimensionReport& rep) {
  std::ostringstream os;
  os << generic::to_string(rep.quantity) << ',' << rep.n << ',' << rep.d << ',' << opt(rep.s) << ','
     << opt(rep.r) << ',' << rep.computed << ',' << (rep.expected ? std::to_string(*rep.expected) : "")
     << ',' << generic::to_string(rep.status) << ',' << rep.seed << ',' << rep.instance_seed << ','
     << rep.primes.first << ',' << rep.primes.second << ',' << rep.ranks[0] << ',' << rep.ranks[1] << ','
     << rep.trials_used << ',' << rep.prime_disagreements;
  return os.str();
}

std::string csv_header_typical() { return "n,d,r_found,certified_lower,fos_cap,status"; }

std::string csv_row(const generic::TypicalLengthResult& res) {
  std::ostringstream os;
  os << res.n << ',' << res.d << ',' << opt(res.r_found) << ',' << res.certified_lower << ',' << res.fos_cap
     << ',' << generic::to_string(res.status);
  return os.str();
}

std::string render_table(const std::vector<bounds::BoundsRow>& rows) {
  std::map<int, std::vector<const bounds::BoundsRow*>> by_n;
  for (const auto& r : rows) by_n[r.params.n].push_back(&r);
  std::ostringstream os;
  bool first_group = true;
  for (const auto& [n, group] : by_n) {
    if (first_group) {
      os << "d:";
      for (const auto* r : group) os << ' ' << r->params.d;
      os << '\n';
    }
    os << '\n';
    first_group = false;
    auto line = [&](const std::string& label, auto pick) {
      os << label << ':';
      for (const auto* r : group) os << ' ' << pick(*r);
      os << '\n';
    };
    const std::string ns = std::to_string(n);
    line("s_min(" + ns + ",d)", [](const bounds::BoundsRow& r) { return r.s_min; });
    line("p(" + ns + ",2d)≥", [](const bounds::BoundsRow& r) { return r.theta; });
    line("p(" + ns + ",2d)≤", [](const bounds::BoundsRow& r) { return r.upper_best; });
  }
  return os.str();
}

std::string render_bounds(const bounds::BoundsRow& r) {
  std::ostringstream os;
  os << "bounds n=" << r.params.n << " d=" << r.params.d << '\n'
     << "  N_d      = " << r.N_d << '\n'
     << "  N_2d     = " << r.N_2d << '\n'
     << "  lambda   = " << r.lambda.value.to_string() << " ~ " << approx(r.lambda.value.to_double())
     << ", ceiling " << r.lambda.ceiling << '\n'
     << "  Lambda   = " << r.Lambda.value.to_string() << " ~ " << approx(r.Lambda.value.to_double())
     << ", floor " << r.Lambda.floor << '\n'
     << "  L(n,2d)  = " << r.leep_L << '\n'
     << "  s_min    = " << r.s_min << '\n'
     << "  theta    = " << r.theta << '\n'
     << "  lower " << r.theta << ", upper " << r.upper_best << " (" << bounds::to_string(r.upper_source)
     << ")\n";
  return os.str();
}

std::string render_report(const generic::DimensionReport& rep) {
  std::ostringstream os;
  os << generic::to_string(rep.quantity) << " n=" << rep.n << " d=" << rep.d;
  if (rep.s) os << " s=" << *rep.s;
  if (rep.r) os << " r=" << *rep.r;
  os << ": " << generic::to_string(rep.status) << " computed=" << rep.computed;
  if (rep.expected) os << " expected=" << *rep.expected;
  os << " ranks=" << rep.ranks[0] << '/' << rep.ranks[1] << " trials=" << rep.trials_used;
  if (!rep.note.empty()) os << " (" << rep.note << ')';
  os << '\n';
  return os.str();
}

std::string render_typical(const generic::TypicalLengthResult& res) {
  std::ostringstream os;
  os << "typical n=" << res.n << " d=" << res.d << ": r_found=" << opt(res.r_found)
     << " certified_lower=" << res.certified_lower << " fos_cap=" << res.fos_cap
     << " status=" << generic::to_string(res.status) << '\n';
  for (const auto& s : res.steps) os << "  " << render_report(s);
  return os.str();
}

}  // namespace soslen::io
