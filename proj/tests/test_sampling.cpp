#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "golden_bounds/error.hpp"
#include "golden_bounds/matrix_io.hpp"
#include "golden_bounds/rng.hpp"
#include "golden_bounds/sampling.hpp"
#include "golden_bounds/spectral.hpp"
#include "support.hpp"

using namespace golden_bounds;
using namespace test_support;
using Catch::Matchers::WithinAbs;

namespace {

SamplerConfig config(std::uint64_t seed, std::size_t n = 4, double lo = 1.0, double hi = 2.0,
                     SamplerMode mode = SamplerMode::General, ScalarField field = ScalarField::Real) {
  SamplerConfig c;
  c.n = n;
  c.seed = seed;
  c.lo = lo;
  c.hi = hi;
  c.mode = mode;
  c.field = field;
  return c;
}

bool spectrum_within(const HermitianMatrix& h, double lo, double hi) {
  const auto ev = eigenvalues_desc(h);
  return ev.front() <= hi + 1e-10 && ev.back() >= lo - 1e-10;
}

}  // namespace

// Vectors from tests/golden/reference_stream.py, an independent implementation
// of the documented stream (SplitMix64 counter draws, Box-Muller, Gram-Schmidt).
TEST_CASE("golden SplitMix64 vectors") {
  CounterRng zero(0);
  CHECK(zero.next_u64() == 0xe220a8397b1dcdafULL);
  CHECK(zero.next_u64() == 0x6e789e6aa1b965f4ULL);
  CHECK(zero.next_u64() == 0x06c45d188009454fULL);
  CHECK(zero.next_u64() == 0xf88bb8a8724c81ecULL);
  CounterRng other(0x1234);
  CHECK(other.next_u64() == 0x5f642f87d5e23888ULL);
  CHECK(other.next_u64() == 0x5a4d78533d034cb5ULL);
  CHECK(other.next_u64() == 0x8a85ffdaea35a5a6ULL);
  CHECK(other.next_u64() == 0xad002edb4259d53aULL);
  CHECK(CounterRng(0x1234).at(2) == 0x8a85ffdaea35a5a6ULL);
  CHECK(derive_seed(5, 3) == CounterRng(5).at(3));
}

TEST_CASE("golden random_pd seeds") {
  struct Golden {
    std::uint64_t seed;
    std::array<double, 4> eig;
    double a00;
    double a01;
  };
  const std::array<Golden, 3> goldens{{
      {1, {1.9671129503305647, 1.758667101827524, 1.416422257824765, 1.0535357996429449}, 1.3029429115211575,
       0.10653412697978128},
      {7, {1.9273263428205605, 1.8876408224051957, 1.5446285940342117, 1.4059476819312677}, 1.674333562223176,
       0.048087819405640955},
      {2024, {1.7011951659721953, 1.4617348336666358, 1.2266805230280955, 1.0089016844898204}, 1.4065863071374336,
       0.04149557682267051},
  }};
  for (const Golden& g : goldens) {
    Sampler s(config(g.seed));
    const PositiveDefiniteMatrix a = s.random_pd();
    const auto ev = eigenvalues_desc(a.hermitian());
    for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(ev[k], WithinAbs(g.eig[k], 1e-12));
    CHECK_THAT(a.matrix()(0, 0).real(), WithinAbs(g.a00, 1e-12));
    CHECK_THAT(a.matrix()(0, 1).real(), WithinAbs(g.a01, 1e-12));
    CHECK(a.matrix()(0, 1).imag() == 0.0);
  }
}

TEST_CASE("uniform and normal draws") {
  CounterRng r(99);
  double sum = 0, sum2 = 0;
  constexpr int kN = 20000;
  for (int i = 0; i < kN; ++i) {
    const double u = r.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double z = r.normal();
    sum += z;
    sum2 += z * z;
  }
  CHECK(std::abs(sum / kN) < 0.05);
  CHECK(std::abs(sum2 / kN - 1.0) < 0.05);
  CHECK(CounterRng(1).substream(2).key() != CounterRng(1).substream(3).key());
  CHECK(CounterRng(1).substream(2).key() == CounterRng(1).substream(2).key());
}

TEST_CASE("sampler determinism") {
  for (auto field : {ScalarField::Real, ScalarField::Complex}) {
    Sampler a(config(42, 5, 0.5, 3.0, SamplerMode::General, field));
    Sampler b(config(42, 5, 0.5, 3.0, SamplerMode::General, field));
    CHECK(a.random_pd().matrix() == b.random_pd().matrix());
    CHECK(a.random_bounded_hermitian(-1, 1).matrix() == b.random_bounded_hermitian(-1, 1).matrix());
    const PdPair pa = a.sandwich_pair(0.5, 2.0), pb = b.sandwich_pair(0.5, 2.0);
    CHECK(pa.a.matrix() == pb.a.matrix());
    CHECK(pa.b.matrix() == pb.b.matrix());
    const ExponentialChain ca = a.exponential_chain(-1, 0), cb = b.exponential_chain(-1, 0);
    CHECK(ca.h.matrix() == cb.h.matrix());
    CHECK(ca.k.matrix() == cb.k.matrix());
  }
  CHECK(Sampler(config(1)).random_pd().matrix() != Sampler(config(2)).random_pd().matrix());
}

TEST_CASE("spectra stay within their ranges") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto field = seed % 2 ? ScalarField::Complex : ScalarField::Real;
    const auto mode = seed % 3 == 0 ? SamplerMode::Commuting : SamplerMode::General;
    Sampler s(config(seed, 1 + seed % 7, 0.2, 5.0, mode, field));
    CHECK(spectrum_within(s.random_pd(), 0.2, 5.0));
    CHECK(spectrum_within(s.random_pd(1.5, 1.7), 1.5, 1.7));
    const HermitianMatrix h = s.random_bounded_hermitian(-2.0, 0.5);
    CHECK(spectrum_within(h, -2.0, 0.5));
    CHECK(loewner_leq(HermitianMatrix::scalar(h.dim(), -2.0), h).holds);
    CHECK(loewner_leq(h, HermitianMatrix::scalar(h.dim(), 0.5)).holds);
  }
}

TEST_CASE("degenerate ranges") {
  Sampler s(config(3, 4, 1.0, 1.0));
  CHECK(max_abs_diff(s.random_pd().matrix(), Matrix::identity(4)) <= 1e-12);
  CHECK(s.random_bounded_hermitian(0.0, 0.0).matrix() == Matrix(4, 4));
  CHECK_THROWS_AS(Sampler(config(3, 4, 2.0, 1.0)), Error);
  CHECK_THROWS_AS(Sampler(config(3, 0)), Error);
  CHECK_THROWS_AS(s.random_pd(-1.0, 1.0), Error);
}

TEST_CASE("random unitaries and isometries") {
  for (auto field : {ScalarField::Real, ScalarField::Complex}) {
    CounterRng rng(77);
    for (std::size_t n = 1; n <= 8; ++n) {
      const Matrix u = random_unitary(n, field, rng);
      CHECK(max_abs_diff(u.adjoint() * u, Matrix::identity(n)) <= 1e-12 * std::sqrt(static_cast<double>(n)));
    }
    Sampler s(config(8, 6, 1, 2, SamplerMode::General, field));
    for (std::size_t k = 1; k <= 6; ++k) {
      const Matrix v = s.random_isometry(k);
      REQUIRE(v.rows() == k);
      REQUIRE(v.cols() == 6);
      CHECK(max_abs_diff(v * v.adjoint(), Matrix::identity(k)) <= 1e-12);
    }
  }
}

TEST_CASE("commuting mode shares the eigenbasis") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Sampler s(config(seed, 2 + seed % 5, 0.5, 2.0, SamplerMode::Commuting, ScalarField::Complex));
    const HermitianMatrix h = s.random_bounded_hermitian(-1, 1), k = s.random_bounded_hermitian(-1, 1);
    CHECK(commutator_norm(h.matrix(), k.matrix()) <= 1e-11);
    const PositiveDefiniteMatrix a = s.random_pd(), b = s.random_pd();
    CHECK(commutator_norm(a.matrix(), b.matrix()) <= 1e-11);
  }
}

TEST_CASE("sandwich pairs") {
  Sampler fixed(config(5));
  const PdPair same = fixed.sandwich_pair(1.7, 1.7);
  CHECK(rel_diff(same.b.matrix(), (same.a.matrix() * cplx(1.7))) <= 1e-14);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const bool commuting = seed % 2 == 1;
    Sampler s(config(seed, 2 + seed % 5, 0.5, 3.0, commuting ? SamplerMode::Commuting : SamplerMode::General,
                     ScalarField::Complex));
    const PdPair p = s.sandwich_pair(0.4, 2.5);
    CHECK(p.lower.holds);
    CHECK(p.upper.holds);
    CHECK(loewner_leq(scale(p.a, 0.4), p.b).holds);
    CHECK(loewner_leq(p.b, scale(p.a, 2.5)).holds);
    const SandwichBounds sb = sandwich_bounds(p.a, p.b);
    CHECK(sb.s >= 0.4 - 1e-9);
    CHECK(sb.t <= 2.5 + 1e-9);
    if (commuting) {
      CHECK(commutator_norm(p.a.matrix(), p.b.matrix()) <= 1e-11);
      // Paired eigenvalues along the eigenvectors of A.
      const SpectralDecomposition& d = p.a.spectrum();
      const Matrix bv = d.eigenvectors.adjoint() * p.b.matrix() * d.eigenvectors;
      for (std::size_t i = 0; i < d.dim(); ++i) {
        CHECK(0.4 * d.eigenvalues[i] <= bv(i, i).real() + 1e-10);
        CHECK(bv(i, i).real() <= 2.5 * d.eigenvalues[i] + 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(fixed.sandwich_pair(2.0, 1.0), Error);
  CHECK_THROWS_AS(fixed.sandwich_pair(0.0, 1.0), Error);
}

TEST_CASE("Olson pairs and chains self-certify") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const bool commuting = seed % 2 == 1;
    Sampler s(config(seed, 2 + seed % 5, 1, 2, commuting ? SamplerMode::Commuting : SamplerMode::General,
                     seed % 4 < 2 ? ScalarField::Real : ScalarField::Complex));
    const PdPair op = s.olson_bounded_pair(0.5, 2.0);
    CHECK(op.s == 0.25);
    CHECK(op.t == 4.0);
    CHECK(op.lower.holds);
    CHECK(op.upper.holds);

    const ExponentialPair ep = s.olson_exponential_pair(-1.0, 0.5);
    CHECK(ep.s == -1.5);
    CHECK(ep.t == 1.5);
    CHECK(ep.lower.holds);
    CHECK(ep.upper.holds);
    CHECK(spectrum_within(ep.h, -1.0, 0.5));
    CHECK(spectrum_within(ep.k, -1.0, 0.5));
    if (commuting) {
      CHECK(ep.lower.mode == CertificateMode::CommutingExact);
      CHECK(ep.upper.mode == CertificateMode::CommutingExact);
    } else {
      CHECK(ep.lower.mode != CertificateMode::GridEvidence);
    }

    const ExponentialPair forced = s.olson_exponential_pair(-1.0, 0.5, true);
    CHECK(forced.h.matrix() == forced.k.matrix());
    CHECK(forced.s <= 0.0);
    CHECK(forced.t >= 0.0);
    CHECK(forced.lower.holds);
    CHECK(forced.upper.holds);

    const OrderedChain lc = s.loewner_chain(0.3, 0.9);
    CHECK(lc.bottom.holds);
    CHECK(lc.middle.holds);
    CHECK(lc.top.holds);
    CHECK(loewner_leq(lc.a, lc.b).holds);
    CHECK(spectrum_within(lc.a, 0.3, 0.9));
    CHECK(spectrum_within(lc.b, 0.3, 0.9));

    const OrderedChain oc = s.olson_chain(0.3, 0.9);
    CHECK(oc.bottom.holds);
    CHECK(oc.middle.holds);
    CHECK(oc.top.holds);
    CHECK(olson_leq(oc.a, oc.b).holds);
    CHECK(oc.middle.mode != CertificateMode::GridEvidence);

    const ExponentialChain xc = s.exponential_chain(-1.2, -0.1);
    CHECK(xc.bottom.holds);
    CHECK(xc.middle.holds);
    CHECK(xc.top.holds);
    CHECK(olson_leq(exp_h(xc.h), exp_h(xc.k)).holds);
  }
}

TEST_CASE("sampler configs round-trip through JSON") {
  const auto j = nlohmann::json::parse(R"({"n": 3, "seed": 9, "range": [0.5, 4], "mode": "commuting", "field": "complex"})");
  const SamplerConfig c = sampler_config_from_json(j);
  CHECK(c.n == 3);
  CHECK(c.seed == 9);
  CHECK(c.lo == 0.5);
  CHECK(c.hi == 4.0);
  CHECK(c.mode == SamplerMode::Commuting);
  CHECK(c.field == ScalarField::Complex);
  CHECK(sampler_config_from_json(to_json(c)).seed == 9);
  CHECK_THROWS_AS(sampler_config_from_json(nlohmann::json::parse(R"({"n": 3, "mode": "weird"})")), Error);
  CHECK_THROWS_AS(sampler_config_from_json(nlohmann::json::parse(R"({"n": 3, "range": [2, 1]})")), Error);

  Sampler s(c);
  const nlohmann::json pj = to_json(s.sandwich_pair(0.5, 2.0));
  CHECK(pj.contains("A"));
  CHECK(pj.contains("B"));
  CHECK(pj.at("certificates").at("lower").at("holds") == true);
  CHECK(hermitian_from_json(pj.at("A")).dim() == 3);
}
