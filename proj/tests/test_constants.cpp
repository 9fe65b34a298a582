#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "golden_bounds/constants.hpp"
#include "golden_bounds/error.hpp"

using namespace golden_bounds;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Reference values computed once with 50-digit mpmath from the defining formulas.
namespace ref {
constexpr double kSpecht2 = 1.0614756908460859770667547;
constexpr double kSpecht10 = 1.8571348933459846107423750;
constexpr double kSqrtSpecht25 = 1.7710467221604137388855763;
constexpr double kKantorovich2Half = 0.98517143100941603868950196;
constexpr double kFm2Half2 = 1.1331484530668263168290072;
constexpr double kSpechtRoot2 = 1.0000000600566285;
constexpr double kSpechtRoot10 = 1.0000006627374834;
}  // namespace ref

TEST_CASE("Specht ratio values") {
  CHECK(specht(1.0) == 1.0);
  CHECK(specht_eval(1.0).branch == EvalBranch::Limit);
  CHECK(specht_eval(1.0 + 1e-7).branch == EvalBranch::Series);
  CHECK_THAT(specht(2.0), WithinRel(ref::kSpecht2, 1e-14));
  CHECK_THAT(specht(0.5), WithinRel(specht(2.0), 1e-13));
  CHECK_THAT(specht(10.0), WithinRel(ref::kSpecht10, 1e-14));
  CHECK(specht_eval(2.0).branch == EvalBranch::Direct);
  CHECK_THROWS_AS(specht(0.0), Error);
  CHECK_THROWS_AS(specht(-1.0), Error);
}

TEST_CASE("Specht ratio is symmetric and at least one") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ul(-6.0, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = std::exp(ul(gen));
    const double s = specht(t);
    CHECK(s >= 1.0);
    CHECK_THAT(specht(1.0 / t), WithinRel(s, 1e-13));
  }
}

TEST_CASE("Specht series and direct branches agree at the switch") {
  for (double d : {1e-6, -1e-6}) {
    const double below = 1.0 + d * (1 - 1e-9), above = 1.0 + d * (1 + 1e-9);
    const ConstantEval a = specht_eval(below), b = specht_eval(above);
    CHECK(a.branch == EvalBranch::Series);
    CHECK(b.branch == EvalBranch::Direct);
    // log S ~ u^2/8, both near 1 + 1.25e-13.
    CHECK_THAT(a.value, WithinAbs(b.value, 1e-15));
  }
  const double u = std::log(1.0 + 5e-7);
  CHECK_THAT(specht(1.0 + 5e-7), WithinAbs(1.0 + u * u / 8, 1e-20));
}

TEST_CASE("Specht p-th root") {
  CHECK_THAT(specht_p_root(5.0, 2.0), WithinRel(ref::kSqrtSpecht25, 1e-13));
  CHECK_THAT(specht_p_root(5.0, 2.0), WithinRel(std::sqrt(specht(25.0)), 1e-13));
  CHECK_THAT(specht_p_root(2.0, 1e-6), WithinAbs(1.0, 1e-4));
  CHECK_THAT(specht_p_root(2.0, 1e-6), WithinRel(ref::kSpechtRoot2, 1e-10));
  CHECK_THAT(specht_p_root(10.0, 1e-6), WithinRel(ref::kSpechtRoot10, 1e-10));
  double prev = specht_p_root(10.0, 4.0);
  for (double p : {2.0, 1.0, 0.5, 0.1, 0.01, 1e-3}) {
    const double v = specht_p_root(10.0, p);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("Kantorovich constant values") {
  CHECK_THAT(kantorovich(2.0, 0.5), WithinRel(ref::kKantorovich2Half, 1e-13));
  for (double h : {1.5, 2.0, 5.0, 30.0}) {
    CHECK_THAT(kantorovich(h, 2.0), WithinRel((1 + h) * (1 + h) / (4 * h), 1e-13));
    CHECK_THAT(kantorovich(h, -1.0), WithinRel(kantorovich(h, 2.0), 1e-13));
  }
  CHECK(kantorovich(1.0, 2.0) == 1.0);
  for (double w : {2.0, 8.0, 100.0})
    CHECK_THAT(kantorovich(w, 0.5), WithinRel(2 * std::pow(w, 0.25) / (std::sqrt(w) + 1), 1e-12));
  CHECK(kantorovich(3.0, 0.0) == 1.0);
  CHECK(kantorovich(3.0, 1.0) == 1.0);
  CHECK(kantorovich_eval(3.0, 0.0).branch == EvalBranch::Limit);
  CHECK(kantorovich_eval(3.0, 1e-9).branch == EvalBranch::Limit);
  CHECK(kantorovich_eval(3.0, 0.5).branch == EvalBranch::Direct);
}

TEST_CASE("Kantorovich limit branch is continuous") {
  for (double w : {0.2, 3.0, 50.0}) {
    for (double edge : {0.0, 1.0}) {
      for (double sgn : {-1.0, 1.0}) {
        const double inside = edge + sgn * 0.999e-8, outside = edge + sgn * 1.001e-8;
        CHECK(kantorovich_eval(w, inside).branch == EvalBranch::Limit);
        CHECK(kantorovich_eval(w, outside).branch == EvalBranch::Direct);
        // K is smooth in alpha; extrapolate the direct branch linearly across the switch.
        const double far = edge + sgn * 3e-8, mid = edge + sgn * 2e-8;
        const double slope = (kantorovich(w, far) - kantorovich(w, mid)) / (far - mid);
        const double predicted = kantorovich(w, outside) + slope * (inside - outside);
        CHECK_THAT(kantorovich(w, inside), WithinAbs(predicted, 1e-14));
      }
    }
  }
}

TEST_CASE("Kantorovich lower bound sandwich") {
  CHECK(kantorovich_lower_bound(1.0) == 1.0);
  CHECK_THAT(kantorovich_lower_bound(16.0), WithinAbs(0.8, 1e-15));
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> ul(-8.0, 8.0), ua(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double w = std::exp(ul(gen)), alpha = ua(gen);
    const double k = kantorovich(w, alpha);
    CHECK(k > 0.0);
    CHECK(kantorovich_lower_bound(w) <= k * (1 + 1e-13));
    CHECK(k <= 1.0 + 1e-13);
  }
}

TEST_CASE("Kantorovich limit root") {
  const double w = std::exp(2.0);
  const std::vector<double> ps{1.0, 0.1, 0.01, 1e-3, 1e-4};
  const auto roots = kantorovich_limit_root(w, 0.5, ps);
  REQUIRE(roots.size() == ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    CHECK_THAT(roots[i], WithinRel(std::pow(kantorovich(std::pow(w, ps[i]), 0.5), -1.0 / ps[i]), 1e-12));
  CHECK_THAT(roots.back(), WithinAbs(1.0, 1e-3));
  const auto near = kantorovich_limit_root(std::exp(2e-4), 0.5, std::vector<double>{1.0});
  (void)near;
  CHECK_THAT(std::pow(kantorovich(std::exp(2e-4), 0.5), -1e4), WithinRel(1.0000125000781201, 1e-9));
  CHECK_THROWS_AS(kantorovich_limit_root(w, 0.5, std::vector<double>{}), Error);
  CHECK_THROWS_AS(kantorovich_limit_root(w, 0.5, std::vector<double>{0.1, 0.5}), Error);
  CHECK_THROWS_AS(kantorovich_limit_root(w, 0.5, std::vector<double>{1.0, -0.1}), Error);
}

TEST_CASE("FM factor") {
  CHECK(fm_factor(1.0, 0.3, 2.0) == 1.0);
  CHECK(fm_factor(5.0, 0.0, 2.0) == 1.0);
  CHECK(fm_factor(5.0, 1.0, 2.0) == 1.0);
  CHECK_THAT(fm_factor(2.0, 0.5, 2.0), WithinRel(ref::kFm2Half2, 1e-15));
  CHECK_THROWS_AS(fm_factor(0.5, 0.5, 1.0), Error);
  CHECK_THROWS_AS(fm_factor(2.0, 1.5, 1.0), Error);
  CHECK_THROWS_AS(fm_factor(2.0, 0.5, 0.0), Error);
}

TEST_CASE("scalar reverse AM-GM") {
  const std::vector<double> same{3.0, 3.0, 3.0};
  CHECK_THAT(scalar_specht_amgm_check(same).margin, WithinAbs(0.0, 1e-15));
  const std::vector<double> pair{1.0, 2.0};
  const AmGmCheck c = scalar_specht_amgm_check(pair);
  CHECK(c.lhs == 1.5);
  CHECK_THAT(c.rhs, WithinRel(ref::kSpecht2 * std::sqrt(2.0), 1e-14));
  CHECK(c.margin > 0.0);
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> x(1 + i % 9);
    for (double& v : x) v = u(gen);
    CHECK(scalar_specht_amgm_check(x).margin >= -1e-12 * scalar_specht_amgm_check(x).lhs);
  }
  CHECK_THROWS_AS(scalar_specht_amgm_check(std::vector<double>{}), Error);
  CHECK_THROWS_AS(scalar_specht_amgm_check(std::vector<double>{1.0, -1.0}), Error);
}

TEST_CASE("constant evaluations serialize") {
  const nlohmann::json j = to_json(specht_eval(2.0));
  CHECK(j.at("name") == "specht");
  CHECK(j.at("branch") == "direct");
}
