// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "golden_bounds/campaign.hpp"
#include "golden_bounds/certify.hpp"
#include "golden_bounds/constants.hpp"
#include "golden_bounds/means.hpp"
#include "golden_bounds/sampling.hpp"
#include "golden_bounds/spectral.hpp"
#include "support.hpp"

using namespace golden_bounds;
using namespace test_support;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... xs) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

Eigen::MatrixXcd taylor_exp(const Eigen::MatrixXcd& a) {
  int squarings = 0;
  double norm = a.norm();
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const Eigen::MatrixXcd x = a / std::pow(2.0, squarings);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

SamplerConfig sampler_config(std::uint64_t seed, std::size_t n, bool commuting, bool complex) {
  SamplerConfig c;
  c.n = n;
  c.seed = seed;
  c.mode = commuting ? SamplerMode::Commuting : SamplerMode::General;
  c.field = complex ? ScalarField::Complex : ScalarField::Real;
  return c;
}

Outcome remark_reproduction() {
  const double i = compare_constants_remark(0.5, 0.5, 2.0).difference;
  const double ii = compare_constants_remark(0.5, 0.5, 8.0).difference;
  const double di = std::abs(i - -0.0134963), dii = std::abs(ii - 0.0631159);
  return {di <= 1e-6 && dii <= 1e-6, fmt("(i) %.9f |d|=%.1e, (ii) %.9f |d|=%.1e", i, di, ii, dii)};
}

Outcome soundness_sweeps() {
  std::size_t total = 0, violations = 0;
  std::string failing;
  for (const CertifierInfo& info : certifier_catalog()) {
    SweepConfig cfg;
    cfg.id = info.id;
    cfg.seed = 20240607;
    cfg.n = 0;
    cfg.count = 1000;
    cfg.tolerance = 1e-9;
    const SweepResult r = run_sweep(cfg);
    total += r.reports.size();
    violations += r.violations;
    if (r.violations > 0) failing += " " + info.id;
  }
  return {violations == 0 && total == 1000 * certifier_catalog().size(),
          fmt("%zu certifiers x 1000 instances, n in 2..6, %zu violations%s", certifier_catalog().size(), violations,
              failing.c_str())};
}

Outcome constant_identities() {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> ul(-6.0, 6.0), ua(0.0, 1.0), uw(-8.0, 8.0);
  double sym = 0;
  bool above_one = true;
  for (int i = 0; i < 1000; ++i) {
    const double t = std::exp(ul(gen));
    sym = std::max(sym, std::abs(specht(t) - specht(1 / t)) / specht(t));
    above_one = above_one && (t == 1.0 || specht(t) > 1.0);
  }
  bool sandwich = true;
  for (int i = 0; i < 1000; ++i) {
    const double w = std::exp(uw(gen)), a = ua(gen);
    const double k = kantorovich(w, a);
    sandwich = sandwich && kantorovich_lower_bound(w) <= k * (1 + 1e-13) && k <= 1.0 + 1e-13;
  }
  double half = 0, two = 0;
  for (double w : {1.5, 2.0, 8.0, 100.0, 1e4}) {
    half = std::max(half, std::abs(kantorovich(w, 0.5) - 2 * std::pow(w, 0.25) / (std::sqrt(w) + 1)));
    two = std::max(two, std::abs(kantorovich(w, 2.0) / ((1 + w) * (1 + w) / (4 * w)) - 1));
  }
  const bool pass = sym <= 1e-13 && specht(1.0) == 1.0 && above_one && sandwich && half <= 1e-12 && two <= 1e-12;
  return {pass, fmt("S(t)=S(1/t) %.1e, S(1)=%g, S>1 %s, K sandwich %s, K(w,1/2) %.1e, K(h,2) %.1e", sym, specht(1.0),
                    above_one ? "yes" : "no", sandwich ? "yes" : "no", half, two)};
}

Outcome limits() {
  const double r2 = std::abs(specht_p_root(2.0, 1e-6) - 1), r10 = std::abs(specht_p_root(10.0, 1e-6) - 1);
  const std::vector<double> ps{1.0, 0.1, 0.01, 1e-3, 1e-4};
  const double k = std::abs(kantorovich_limit_root(std::exp(2.0), 0.5, ps).back() - 1);
  const std::vector<double> qs{1.0, 0.1, 0.01, 1e-3, 1e-4, 1e-5};
  double probe = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Sampler s(sampler_config(seed, 2 + seed % 5, false, seed % 2 == 1));
    const HermitianMatrix h = s.random_bounded_hermitian(-2, 2), kk = s.random_bounded_hermitian(-2, 2);
    const double d = limit_probe(h, kk, 0.5, qs).back().distance;
    probe = std::max(probe, d / log_euclidean(h, kk, 0.5).hermitian().frobenius_norm());
  }
  return {r2 <= 1e-4 && r10 <= 1e-4 && k <= 1e-3 && probe <= 1e-4,
          fmt("Specht root |d| %.1e / %.1e, Kantorovich root |d| %.1e, limit probe %.1e at q=1e-5", r2, r10, k,
              probe)};
}

Outcome convergence() {
  const std::vector<double> ps{1.0, 0.3, 0.1, 0.03, 0.01, 1e-3, 1e-4};
  double worst_specht = 0, worst_kantorovich = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Sampler s(sampler_config(seed, 2 + seed % 5, seed % 10 >= 5, seed % 2 == 1));
    // Spectra in [-1, 1] give s = -2, t = 2.
    const ExponentialPair ep = s.olson_exponential_pair(-1.0, 1.0);
    worst_specht = std::max(
        worst_specht, max_relative_gaps(convergence_study(ep.h, ep.k, ep.s, ep.t, 0.5, ps, ReverseFactor::Specht)).back());
    worst_kantorovich =
        std::max(worst_kantorovich,
                 max_relative_gaps(convergence_study(ep.h, ep.k, ep.s, ep.t, 0.5, ps, ReverseFactor::Kantorovich)).back());
  }
  return {worst_specht <= 1e-3 && worst_kantorovich <= 1e-3,
          fmt("max relative gap at p=1e-4: Specht %.2e, Kantorovich %.2e (40 instances each)", worst_specht,
              worst_kantorovich)};
}

Outcome core_numerics() {
  std::mt19937_64 gen(11);
  double recon = 0;
  for (int i = 0; i < 1000; ++i) {
    const HermitianMatrix a = random_hermitian(gen, 1 + i % 8, i % 2 == 0);
    const SpectralDecomposition s = spectral_decompose(a);
    recon = std::max(recon, (s.reconstruct() - a.matrix()).frobenius_norm() / a.frobenius_norm());
  }
  double expo = 0;
  for (int i = 0; i < 200; ++i) {
    const HermitianMatrix h = random_hermitian(gen, 1 + i % 8, i % 2 == 0);
    const Eigen::MatrixXcd oracle = taylor_exp(to_eigen(h.matrix()));
    expo = std::max(expo, (to_eigen(exp_h(h).matrix()) - oracle).norm() / oracle.norm());
  }
  double cong = 0;
  std::uniform_real_distribution<double> u(0.3, 4.0), us(0.5, 2.0), ua(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 5;
    const auto spectrum = [&](std::uniform_real_distribution<double>& d) {
      std::vector<double> v(n);
      for (double& x : v) x = d(gen);
      return v;
    };
    const auto basis = [&] { return spectral_decompose(random_hermitian(gen, n)).eigenvectors; };
    const PositiveDefiniteMatrix a = PositiveDefiniteMatrix::from_spectrum(basis(), spectrum(u));
    const PositiveDefiniteMatrix b = PositiveDefiniteMatrix::from_spectrum(basis(), spectrum(u));
    const Matrix t = scale_columns(basis(), spectrum(us)) * basis();
    const double alpha = ua(gen);
    const HermitianMatrix lhs = geometric_mean(PositiveDefiniteMatrix(congruence(t, a)),
                                               PositiveDefiniteMatrix(congruence(t, b)), alpha);
    const HermitianMatrix rhs = congruence(t, geometric_mean(a, b, alpha));
    cong = std::max(cong, rel_diff(lhs.matrix(), rhs.matrix()));
  }
  return {recon <= 1e-12 && expo <= 1e-10 && cong <= 1e-9,
          fmt("reconstruction %.1e x||A||_F, exp_h vs Taylor %.1e, congruence %.1e", recon, expo, cong)};
}

Outcome non_ordering() {
  std::vector<double> alphas, rs, hs;
  for (int j = 1; j < 10; ++j) alphas.push_back(0.1 * j);
  for (double r : {0.1, 0.25, 0.5, 0.75, 1.0}) rs.push_back(r);
  for (double h : {1.01, 1.1, 1.5, 2.0, 4.0, 10.0, 100.0}) hs.push_back(h);
  std::size_t pos = 0, neg = 0;
  for (const ScanPoint& p : scan_specht_vs_fm(alphas, rs, hs)) {
    pos += p.difference > 0;
    neg += p.difference < 0;
  }
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_ratio = 0;
  for (int i = 0; i < 100; ++i) {
    const double alpha = u(gen), p = 1.0 - u(gen), d = 5 * u(gen);
    worst_ratio = std::max(worst_ratio, compare_seo_constants(alpha, p, -d / 2, d / 2).ratio);
  }
  return {pos > 0 && neg > 0 && worst_ratio <= 1.0,
          fmt("scan: %zu positive, %zu negative differences; max Seo ratio %.6f over 100 triples", pos, neg,
              worst_ratio)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {"remark reproduction", remark_reproduction, 1.0},
      {"soundness sweeps", soundness_sweeps, 300.0},
      {"constant identities", constant_identities, 0.0},
      {"limits", limits, 0.0},
      {"convergence of reverse bounds", convergence, 0.0},
      {"core numerics", core_numerics, 0.0},
      {"non-ordering witnesses", non_ordering, 0.0},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget_seconds > 0 && secs > criteria[i].budget_seconds) {
      o.pass = false;
      o.detail += fmt(" [over %.0f s budget]", criteria[i].budget_seconds);
    }
    all = all && o.pass;
    std::printf("%s %zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
