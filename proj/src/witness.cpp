#include "soslen/witness.hpp"

#include <algorithm>

#include "soslen/bounds.hpp"
#include "soslen/elimination.hpp"
#include "soslen/errors.hpp"

namespace soslen::witness {

namespace {

RationalForm square_sum(int n, int d, const std::vector<RationalForm>& summands) {
  RationalForm acc(RationalDomain{}, n, 2 * d);
  for (const auto& p : summands) acc = acc + multiply(p, p);
  return acc;
}

RationalForm to_form(int n, int d, const IntegerVector& v) {
  std::vector<mpq_class> c(v.begin(), v.end());
  return RationalForm(RationalDomain{}, n, d, std::move(c));
}

IntegerVector integer_square_sum(int n, int d, const std::vector<IntegerVector>& basis) {
  const ProductTable& table = product_table(n, d, d);
  IntegerVector out(num_monomials(n, 2 * d), 0);
  for (const auto& v : basis) {
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a] == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        mpz_addmul(out[table.index(a, c)].get_mpz_t(), v[a].get_mpz_t(), v[c].get_mpz_t());
      }
    }
  }
  return out;
}

RationalMatrix integer_evaluation_matrix(const std::vector<std::vector<std::int64_t>>& points, int n,
                                         int degree) {
  RationalMatrix m(points.size(), num_monomials(n, degree));
  const RationalDomain Q;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<mpq_class> x;
    for (auto c : points[i]) x.emplace_back(static_cast<long>(c));
    const auto values = monomial_values(Q, std::span<const mpq_class>(x), degree);
    for (std::size_t j = 0; j < values.size(); ++j) m.at(i, j) = values[j];
  }
  return m;
}

std::size_t product_rank(const std::vector<IntegerVector>& basis, int n, int d, std::uint64_t prime) {
  const PrimeField field(prime);
  std::vector<std::vector<std::uint64_t>> residues;
  residues.reserve(basis.size());
  for (const auto& v : basis) {
    std::vector<std::uint64_t> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(field.from_mpz(x));
    residues.push_back(std::move(r));
  }
  return rank_mod_p(generic::square_product_matrix(residues, n, d, field));
}

}  // namespace

namespace {

int shape_of(const std::vector<RationalForm>& summands, bool degree) {
  if (summands.empty()) throw ArgumentError("an empty representation needs explicit n and d");
  return degree ? summands.front().degree() : summands.front().num_vars();
}

}  // namespace

SosRepresentation::SosRepresentation(std::vector<RationalForm> summands)
    : n_(shape_of(summands, false)), d_(shape_of(summands, true)), summands_(std::move(summands)),
      target_(RationalDomain{}, n_, 2 * d_) {
  validate();
}

SosRepresentation::SosRepresentation(int n, int d, std::vector<RationalForm> summands)
    : n_(n), d_(d), summands_(std::move(summands)), target_(RationalDomain{}, n, 2 * d) {
  validate();
}

void SosRepresentation::validate() {
  for (const auto& p : summands_) {
    if (p.num_vars() != n_ || p.degree() != d_) {
      throw ArgumentError("representation summands must all be degree-" + std::to_string(d_) +
                          " forms in " + std::to_string(n_) + " variables");
    }
  }
  target_ = square_sum(n_, d_, summands_);
}

GramTensor gram_tensor(const SosRepresentation& rep) {
  const std::size_t N = num_monomials(rep.num_vars(), rep.half_degree());
  GramTensor g{rep.num_vars(), rep.half_degree(), RationalMatrix(N, N)};
  for (const auto& p : rep.summands()) {
    for (std::size_t i = 0; i < N; ++i) {
      if (sgn(p[i]) == 0) continue;
      for (std::size_t j = 0; j < N; ++j) {
        if (sgn(p[j]) != 0) g.matrix.at(i, j) += p[i] * p[j];
      }
    }
  }
  return g;
}

bool gram_equivalent(const SosRepresentation& a, const SosRepresentation& b) {
  if (a.num_vars() != b.num_vars() || a.half_degree() != b.half_degree()) {
    throw ArgumentError("gram_equivalent: representations have different (n, d)");
  }
  if (!(a.target() == b.target())) {
    throw ArgumentError("gram_equivalent: representations have different targets");
  }
  const GramTensor ga = gram_tensor(a);
  const GramTensor gb = gram_tensor(b);
  const std::size_t N = ga.matrix.rows();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      if (ga.matrix.at(i, j) != gb.matrix.at(i, j)) return false;
    }
  }
  return true;
}

SosRepresentation LengthCertificate::basis_representation() const {
  std::vector<RationalForm> forms;
  forms.reserve(basis.size());
  for (const auto& v : basis) forms.push_back(to_form(n, d, v));
  return SosRepresentation(n, d, std::move(forms));
}

RationalForm LengthCertificate::witness_form() const { return to_form(n, 2 * d, witness); }

int default_point_count(int n, int d) {
  if (n < 3 || d < 2) throw ArgumentError("witness construction requires n >= 3 and d >= 2");
  if (n == 3) return d * (d + 1) / 2;
  return static_cast<int>(bounds::s_min(bounds::DegreeParams(n, d)).get_si());
}

LengthCertificate build_witness(int n, int d, std::optional<int> s_opt, const WitnessConfig& config) {
  const int s = s_opt.value_or(default_point_count(n, d));
  const std::size_t Nd = num_monomials(n, d);
  const std::size_t Nd1 = num_monomials(n, d - 1);
  const std::size_t N2d = num_monomials(n, 2 * d);
  if (s < 1 || static_cast<std::size_t>(s) >= Nd) {
    throw ArgumentError("build_witness requires 1 <= s < N_d = " + std::to_string(Nd));
  }
  const std::size_t b = Nd - static_cast<std::size_t>(s);
  const std::size_t pairs = b * (b + 1) / 2;
  if (pairs > N2d) {
    throw ArgumentError("S^2(I_d) has dimension " + std::to_string(pairs) + " > N_2d = " +
                        std::to_string(N2d) + "; the product map cannot be injective");
  }
  const std::uint64_t primes[] = {config.primes.first, config.primes.second};

  for (int round = 0; round < generic::kGenericityRounds; ++round) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(round) ^ 0x7769746eULL));
    LengthCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.s = s;
    cert.seed = config.seed;
    while (cert.points.size() < static_cast<std::size_t>(s)) {
      std::vector<std::int64_t> p(static_cast<std::size_t>(n));
      for (auto& c : p) c = rng.between(-config.coordinate_bound, config.coordinate_bound);
      if (std::any_of(p.begin(), p.end(), [](auto c) { return c != 0; })) cert.points.push_back(std::move(p));
    }

    const RationalMatrix eval = integer_evaluation_matrix(cert.points, n, d);
    if (rank_rational(eval) != static_cast<std::size_t>(s)) continue;
    if (static_cast<std::size_t>(s) >= Nd1 &&
        rank_rational(integer_evaluation_matrix(cert.points, n, d - 1)) != Nd1) {
      continue;
    }

    cert.basis = kernel_basis_rational(eval);
    if (cert.basis.size() != b) throw InternalError("kernel dimension differs from N_d - s");

    for (const std::uint64_t p : primes) {
      if (product_rank(cert.basis, n, d, p) == pairs) cert.primes.push_back(p);
    }
    if (cert.primes.empty()) continue;

    cert.injectivity_rank = pairs;
    cert.length = static_cast<int>(b);
    cert.witness = integer_square_sum(n, d, cert.basis);
    return cert;
  }
  throw CertificationFailure("no point sample gave an injective product map for (n,d,s)=(" +
                             std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(s) + ")");
}

bool certify_unique_representation(const LengthCertificate& cert, const SosRepresentation& alt) {
  if (alt.num_vars() != cert.n || alt.half_degree() != cert.d) {
    throw ArgumentError("alternative representation has the wrong (n, d)");
  }
  if (!(alt.target() == cert.witness_form())) {
    throw ArgumentError("alternative representation does not sum to the certified witness");
  }
  for (const auto& q : alt.summands()) {
    for (const auto& pt : cert.points) {
      std::vector<mpq_class> x;
      for (auto c : pt) x.emplace_back(static_cast<long>(c));
      if (sgn(evaluate(q, Point<RationalDomain>(RationalDomain{}, std::move(x)))) != 0) {
        throw ArgumentError("a summand of the alternative representation does not vanish on Z");
      }
    }
  }
  return gram_equivalent(alt, cert.basis_representation());
}

CheckResult check_certificate(const LengthCertificate& cert) {
  CheckResult res;
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.failures.push_back(std::move(msg));
  };
  if (cert.n < 1 || cert.d < 1) {
    fail("invalid (n, d)");
    return res;
  }
  const std::size_t Nd = num_monomials(cert.n, cert.d);
  const std::size_t N2d = num_monomials(cert.n, 2 * cert.d);
  const std::size_t b = cert.basis.size();
  if (cert.s < 1 || static_cast<std::size_t>(cert.s) >= Nd) fail("s out of range");
  if (cert.points.size() != static_cast<std::size_t>(cert.s)) fail("point count differs from s");
  if (static_cast<std::size_t>(cert.length) != b) fail("length differs from the number of basis forms");
  if (b + static_cast<std::size_t>(cert.s) != Nd) fail("basis size differs from N_d - s");
  if (cert.witness.size() != N2d) fail("witness has the wrong number of coefficients");
  for (const auto& p : cert.points) {
    if (p.size() != static_cast<std::size_t>(cert.n)) fail("point with wrong arity");
  }
  for (const auto& v : cert.basis) {
    if (v.size() != Nd) fail("basis vector with wrong length");
  }
  if (!res.ok) return res;

  if (integer_square_sum(cert.n, cert.d, cert.basis) != cert.witness) fail("witness != sum of squared basis forms");

  const RationalMatrix eval = integer_evaluation_matrix(cert.points, cert.n, cert.d);
  for (std::size_t i = 0; i < cert.points.size(); ++i) {
    for (std::size_t k = 0; k < b; ++k) {
      mpz_class acc = 0;
      for (std::size_t j = 0; j < Nd; ++j) acc += eval.at(i, j).get_num() * cert.basis[k][j];
      if (acc != 0) fail("basis form " + std::to_string(k) + " does not vanish at point " + std::to_string(i));
    }
  }
  if (rank_rational(eval) != static_cast<std::size_t>(cert.s)) {
    fail("points impose fewer than s conditions on degree-d forms");
  }

  const std::size_t pairs = b * (b + 1) / 2;
  if (cert.injectivity_rank != pairs) fail("recorded injectivity rank differs from C(b+1, 2)");
  if (cert.primes.empty()) fail("no injectivity evidence");
  for (const auto p : cert.primes) {
    if (product_rank(cert.basis, cert.n, cert.d, p) != pairs) {
      fail("product matrix is not of full rank mod " + std::to_string(p));
    }
  }
  return res;
}

RationalMatrix random_rational_orthogonal(std::size_t m, Rng& rng, int rotations) {
  RationalMatrix u(m, m);
  for (std::size_t i = 0; i < m; ++i) u.at(i, i) = 1;
  for (int t = 0; m >= 2 && t < rotations; ++t) {
    const std::size_t i = rng.below(m);
    std::size_t j = rng.below(m - 1);
    if (j >= i) ++j;
    const auto a = static_cast<long>(rng.between(2, 12));
    const auto c = static_cast<long>(rng.between(1, a - 1));
    // (a^2 - c^2, 2ac, a^2 + c^2) is a Pythagorean triple
    const mpq_class hyp(a * a + c * c);
    const mpq_class cs = mpq_class(a * a - c * c) / hyp;
    const mpq_class sn = mpq_class(2 * a * c) / hyp;
    for (std::size_t r = 0; r < m; ++r) {
      const mpq_class x = u.at(r, i);
      const mpq_class y = u.at(r, j);
      u.at(r, i) = cs * x - sn * y;
      u.at(r, j) = sn * x + cs * y;
    }
  }
  for (std::size_t col = 0; col < m; ++col) {
    if (rng.below(2) == 1) {
      for (std::size_t r = 0; r < m; ++r) u.at(r, col) = -u.at(r, col);
    }
  }
  return u;
}

SosRepresentation orthogonal_mix(const SosRepresentation& rep, const RationalMatrix& u) {
  const auto& p = rep.summands();
  if (u.rows() != p.size() || u.cols() != p.size()) throw ArgumentError("orthogonal_mix: matrix size mismatch");
  std::vector<RationalForm> q;
  for (std::size_t j = 0; j < p.size(); ++j) {
    RationalForm acc(RationalDomain{}, rep.num_vars(), rep.half_degree());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (sgn(u.at(i, j)) != 0) acc = acc + scale(p[i], u.at(i, j));
    }
    q.push_back(std::move(acc));
  }
  return SosRepresentation(rep.num_vars(), rep.half_degree(), std::move(q));
}

}  // namespace soslen::witness
