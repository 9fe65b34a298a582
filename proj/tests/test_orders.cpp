#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "golden_bounds/error.hpp"
#include "golden_bounds/orders.hpp"
#include "golden_bounds/spectral.hpp"
#include "support.hpp"

using namespace golden_bounds;
using namespace test_support;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

PositiveDefiniteMatrix pd_diag(std::initializer_list<double> v) {
  return PositiveDefiniteMatrix(HermitianMatrix::diagonal(v));
}

PositiveDefiniteMatrix random_pd(std::mt19937_64& gen, std::size_t n, double lo = 0.3, double hi = 4.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = u(gen);
  return PositiveDefiniteMatrix::from_spectrum(spectral_decompose(random_hermitian(gen, n)).eigenvectors, v);
}

void check_invariant(const OrderCertificate& c) { CHECK(c.holds == (c.worst_margin >= -c.tolerance)); }

}  // namespace

TEST_CASE("Loewner examples") {
  std::mt19937_64 gen(201);
  const HermitianMatrix a = random_hermitian(gen, 4);
  const OrderCertificate self = loewner_leq(a, a);
  CHECK(self.holds);
  CHECK(self.worst_margin == 0.0);

  const OrderCertificate c = loewner_leq(HermitianMatrix::identity(3), HermitianMatrix::scalar(3, 2.0));
  CHECK(c.holds);
  CHECK_THAT(c.worst_margin, WithinAbs(1.0, 1e-15));

  const OrderCertificate f = loewner_leq(HermitianMatrix::diagonal({2.0, 0.0}), HermitianMatrix::diagonal({1.0, 1.0}));
  CHECK_FALSE(f.holds);
  CHECK_THAT(f.worst_margin, WithinAbs(-1.0, 1e-15));
  CHECK(f.relation == OrderRelation::Loewner);

  CHECK_THROWS_AS(loewner_leq(HermitianMatrix::identity(2), HermitianMatrix::identity(3)), Error);
}

TEST_CASE("Loewner order implies eigenvalue monotonicity") {
  std::mt19937_64 gen(203);
  int held = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const HermitianMatrix a = random_hermitian(gen, n);
    // b = a + psd on even trials, a + arbitrary Hermitian otherwise
    const HermitianMatrix b = trial % 2 == 0 ? a + congruence(random_matrix(gen, n, n), HermitianMatrix::identity(n))
                                             : a + 0.3 * random_hermitian(gen, n);
    const OrderCertificate c = loewner_leq(a, b);
    check_invariant(c);
    if (!c.holds) continue;
    ++held;
    const auto ea = eigenvalues_desc(a), eb = eigenvalues_desc(b);
    for (std::size_t k = 0; k < n; ++k) CHECK(ea[k] <= eb[k] + 1e-10);
  }
  CHECK(held >= 250);
}

TEST_CASE("sandwich bounds") {
  std::mt19937_64 gen(207);
  const PositiveDefiniteMatrix a = random_pd(gen, 4);
  const SandwichBounds cb = sandwich_bounds(a, scale(a, 2.5));
  CHECK_THAT(cb.s, WithinRel(2.5, 1e-12));
  CHECK_THAT(cb.t, WithinRel(2.5, 1e-12));

  const SandwichBounds d = sandwich_bounds(PositiveDefiniteMatrix::identity(2), pd_diag({2.0, 5.0}));
  CHECK_THAT(d.s, WithinRel(2.0, 1e-14));
  CHECK_THAT(d.t, WithinRel(5.0, 1e-14));

  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const PositiveDefiniteMatrix x = random_pd(gen, n), y = random_pd(gen, n);
    const SandwichBounds sb = sandwich_bounds(x, y);
    REQUIRE(sb.s <= sb.t);
    const OrderCertificate lo = loewner_leq(scale(x, sb.s), y);
    const OrderCertificate hi = loewner_leq(y, scale(x, sb.t));
    CHECK(lo.holds);
    CHECK(hi.holds);
    CHECK(lo.worst_margin >= -1e-10 * y.hermitian().frobenius_norm());
    CHECK(hi.worst_margin >= -1e-10 * y.hermitian().frobenius_norm());
    CHECK(sandwich_certificate(x, y, sb.s, sb.t).holds);
  }
}

TEST_CASE("Olson order examples") {
  const OrderCertificate c = olson_leq(scale(PositiveDefiniteMatrix::identity(3), 0.5), PositiveDefiniteMatrix::identity(3));
  CHECK(c.holds);
  CHECK(c.mode == CertificateMode::CommutingExact);
  CHECK(c.relation == OrderRelation::Olson);

  const OrderCertificate d = olson_leq(pd_diag({1.0, 2.0}), pd_diag({2.0, 3.0}));
  CHECK(d.holds);
  CHECK(d.mode == CertificateMode::CommutingExact);

  // Commuting but not ordered in the second pair.
  const OrderCertificate e = olson_leq(pd_diag({1.0, 3.0}), pd_diag({2.0, 2.0}));
  CHECK_FALSE(e.holds);
  check_invariant(e);

  CHECK_THROWS_AS(olson_leq(pd_diag({1.0}), pd_diag({2.0}), std::vector<double>{}), Error);
  CHECK_THROWS_AS(olson_leq(pd_diag({1.0}), pd_diag({2.0}), std::vector<double>{2.0, 3.0}), Error);
  CHECK_THROWS_AS(olson_leq(pd_diag({1.0}), pd_diag({2.0}), std::vector<double>{1.0, 0.5}), Error);
}

TEST_CASE("Olson order modes for non-commuting pairs") {
  std::mt19937_64 gen(211);
  const PositiveDefiniteMatrix a = random_pd(gen, 4, 0.5, 1.0);
  const PositiveDefiniteMatrix b = random_pd(gen, 4, 1.5, 3.0);
  const OrderCertificate sep = olson_leq(a, b);
  CHECK(sep.holds);
  CHECK(sep.mode == CertificateMode::SeparatedExact);

  // Loewner-ordered but overlapping spectra: grid evidence only.
  const PositiveDefiniteMatrix x = random_pd(gen, 4, 0.5, 2.0);
  const PositiveDefiniteMatrix y(x.hermitian() + 0.2 * random_pd(gen, 4, 0.5, 2.0).hermitian());
  const OrderCertificate g = olson_leq(x, y);
  CHECK(g.mode == CertificateMode::GridEvidence);
  check_invariant(g);
}

TEST_CASE("Olson implies Loewner") {
  std::mt19937_64 gen(213);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const PositiveDefiniteMatrix a = random_pd(gen, n, 0.3, 2.0);
    const PositiveDefiniteMatrix b(a.hermitian() + congruence(random_matrix(gen, n, n), HermitianMatrix::identity(n)) *
                                                       (trial % 3 == 0 ? 0.01 : 1.0));
    const OrderCertificate o = olson_leq(a, b);
    check_invariant(o);
    if (o.holds) CHECK(loewner_leq(a, b).holds);
  }
}

TEST_CASE("log-majorization examples") {
  const OrderCertificate same = weak_log_majorizes(pd_diag({3.0, 1.0}), pd_diag({3.0, 1.0}));
  CHECK(same.holds);
  CHECK(same.worst_margin == 0.0);

  const OrderCertificate w = weak_log_majorizes(pd_diag({1.0, 1.0}), pd_diag({2.0, 0.6}));
  CHECK(w.holds);
  CHECK(w.relation == OrderRelation::WeakLogMajorization);
  CHECK_FALSE(log_majorizes(pd_diag({1.0, 1.0}), pd_diag({2.0, 0.6})).holds);

  const OrderCertificate f = weak_log_majorizes(pd_diag({2.0, 0.4}), pd_diag({1.0, 1.0}));
  CHECK_FALSE(f.holds);
  check_invariant(f);

  CHECK(log_majorizes(pd_diag({4.0, 1.0}), pd_diag({2.0, 2.0})).holds == false);
  CHECK(log_majorizes(pd_diag({2.0, 2.0}), pd_diag({4.0, 1.0})).holds);
  CHECK_THROWS_AS(weak_log_majorizes(pd_diag({1.0}), pd_diag({1.0, 2.0})), Error);
}

TEST_CASE("weak log-majorization gives norm dominance") {
  std::mt19937_64 gen(217);
  int held = 0;
  for (int trial = 0; trial < 2000 && held < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const PositiveDefiniteMatrix a = random_pd(gen, n, 0.2, 3.0), b = random_pd(gen, n, 0.2, 3.0);
    const OrderCertificate c = weak_log_majorizes(a, b);
    check_invariant(c);
    if (!c.holds) continue;
    ++held;
    for (std::size_t k = 1; k <= n; ++k) CHECK(ky_fan_norm(a, k) <= ky_fan_norm(b, k) + 1e-9);
    for (auto p : {SchattenIndex::One, SchattenIndex::Two, SchattenIndex::Infinity})
      CHECK(schatten_norm(a, p) <= schatten_norm(b, p) + 1e-9);
  }
  CHECK(held >= 50);
}

TEST_CASE("certificates serialize with their mode") {
  const nlohmann::json j = to_json(olson_leq(pd_diag({1.0, 2.0}), pd_diag({2.0, 3.0})));
  CHECK(j.at("relation") == "olson");
  CHECK(j.at("mode") == "commuting-exact");
  CHECK(j.at("holds") == true);
}
