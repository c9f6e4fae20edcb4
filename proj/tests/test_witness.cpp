#include "doctest.h"
#include "soslen/bounds.hpp"
#include "soslen/errors.hpp"
#include "soslen/io.hpp"
#include "soslen/witness.hpp"

using namespace soslen;
using namespace soslen::witness;

namespace {

const LengthCertificate& cert_3_2() {
  static const LengthCertificate cert = build_witness(3, 2, std::nullopt, WitnessConfig{});
  return cert;
}

RationalForm form(const std::string& text, int n) { return parse_form(text, n); }

}  // namespace

TEST_CASE("default point counts") {
  for (int d = 2; d <= 6; ++d) CHECK(default_point_count(3, d) == d * (d + 1) / 2);
  CHECK(default_point_count(4, 2) == 5);
  CHECK(default_point_count(5, 3) == 21);
}

TEST_CASE("ternary certificates have length d+1") {
  for (int d = 2; d <= 4; ++d) {
    const auto cert = build_witness(3, d, std::nullopt, WitnessConfig{});
    CAPTURE(d);
    CHECK(cert.length == d + 1);
    CHECK(cert.basis.size() == static_cast<std::size_t>(d + 1));
    CHECK(cert.injectivity_rank == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    CHECK(!cert.primes.empty());
    CHECK(check_certificate(cert).ok);
    for (const auto& x : cert.points) {
      for (auto c : x) CHECK((c >= -1000 && c <= 1000));
    }
  }
}

TEST_CASE("quaternary quartic certificate has length 5") {
  const auto cert = build_witness(4, 2, 5, WitnessConfig{});
  CHECK(cert.length == 5);
  CHECK(check_certificate(cert).ok);
  CHECK_THROWS_AS(build_witness(4, 2, 10, WitnessConfig{}), ArgumentError);
  CHECK_THROWS_AS(build_witness(4, 2, 4, WitnessConfig{}), CertificationFailure);
}

TEST_CASE("witness is the sum of squares of the basis, vanishing on Z") {
  const auto& cert = cert_3_2();
  const auto rep = cert.basis_representation();
  CHECK(rep.target() == cert.witness_form());
  const RationalDomain Q;
  for (const auto& p : rep.summands()) {
    for (const auto& x : cert.points) {
      std::vector<mpq_class> xq(x.begin(), x.end());
      CHECK(evaluate(p, Point<RationalDomain>(Q, xq)) == 0);
    }
  }
  CHECK(gram_tensor(rep).rank() == rep.summands().size());
}

TEST_CASE("tampered certificates are rejected") {
  auto a = cert_3_2();
  a.witness[0] += 1;
  CHECK(!check_certificate(a).ok);
  auto b = cert_3_2();
  b.points[0][0] += 1;
  CHECK(!check_certificate(b).ok);
  auto c = cert_3_2();
  c.basis.pop_back();
  CHECK(!check_certificate(c).ok);
  auto d = cert_3_2();
  d.length += 1;
  CHECK(!check_certificate(d).ok);
  auto e = cert_3_2();
  e.primes = {kMersenne31 + 0};
  e.injectivity_rank += 1;
  CHECK(!check_certificate(e).ok);
}

TEST_CASE("Gram tensor is invariant under 100 rational orthogonal mixes") {
  const auto& cert = cert_3_2();
  const auto rep = cert.basis_representation();
  const std::size_t m = rep.summands().size();
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_rational_orthogonal(m, rng, 1 + trial % 9);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        mpq_class dot = 0;
        for (std::size_t k = 0; k < m; ++k) dot += u.at(k, i) * u.at(k, j);
        REQUIRE(dot == (i == j ? 1 : 0));
      }
    }
    const auto mixed = orthogonal_mix(rep, u);
    REQUIRE(mixed.target() == rep.target());
    CHECK(gram_equivalent(rep, mixed));
    CHECK(certify_unique_representation(cert, mixed));
  }
}

TEST_CASE("different Gram tensors are told apart") {
  // (x^2 + y^2)^2 = (x^2 - y^2)^2 + (2xy)^2
  const SosRepresentation a({form("1 * x1^2 + 1 * x2^2", 2)});
  const SosRepresentation b({form("1 * x1^2 - 1 * x2^2", 2), form("2 * x1 x2", 2)});
  REQUIRE(a.target() == b.target());
  CHECK(!gram_equivalent(a, b));
  // (3x + 4y)/5, (4x - 3y)/5 is a rotation of x, y
  const SosRepresentation c({form("1 * x1", 2), form("1 * x2", 2)});
  const SosRepresentation d({form("3/5 * x1 + 4/5 * x2", 2), form("4/5 * x1 - 3/5 * x2", 2)});
  CHECK(gram_equivalent(c, d));
  CHECK_THROWS_AS(gram_equivalent(a, c), ArgumentError);
  const SosRepresentation e({form("1 * x1", 2), form("2 * x2", 2)});
  CHECK_THROWS_AS(gram_equivalent(c, e), ArgumentError);
  CHECK_THROWS_AS(SosRepresentation({form("1 * x1", 2), form("1 * x1^2", 2)}), ArgumentError);
  CHECK_THROWS_AS(SosRepresentation(std::vector<RationalForm>{}), ArgumentError);
  CHECK(SosRepresentation(2, 1, {}).target().is_zero());
}

TEST_CASE("unique representation rejects foreign representations") {
  const auto& cert = cert_3_2();
  const SosRepresentation other({form("1 * x1^2", 3)});
  CHECK_THROWS_AS(certify_unique_representation(cert, other), ArgumentError);
}

TEST_CASE("certificate JSON round trip") {
  const auto& cert = cert_3_2();
  const auto j = io::to_json(cert);
  const auto back = io::certificate_from_json(io::Json::parse(j.dump()));
  CHECK(io::to_json(back).dump() == j.dump());
  CHECK(back.basis == cert.basis);
  CHECK(back.witness == cert.witness);
  const auto rep = io::representation_from_json(j);
  CHECK(rep.target() == cert.witness_form());
  const auto rj = io::to_json(rep);
  CHECK(io::to_json(io::representation_from_json(io::Json::parse(rj.dump()))).dump() == rj.dump());
  auto broken = j;
  broken.erase("witness");
  CHECK_THROWS_AS(io::certificate_from_json(broken), ArgumentError);
  broken = j;
  broken["format"] = "other";
  CHECK_THROWS_AS(io::certificate_from_json(broken), ArgumentError);
  broken = j;
  broken["basis"][0][0] = "12x";
  CHECK_THROWS_AS(io::certificate_from_json(broken), ArgumentError);
}
