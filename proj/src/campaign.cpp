#include "golden_bounds/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "golden_bounds/certify.hpp"
#include "golden_bounds/error.hpp"
#include "golden_bounds/rng.hpp"
#include "golden_bounds/sampling.hpp"

namespace golden_bounds {

namespace {

constexpr std::uint64_t kParamStream = 0x9a;

struct Instance {
  const SweepConfig& cfg;
  CounterRng params;
  SamplerConfig sampler;

  double pick(const std::optional<double>& fixed, double lo, double hi) {
    const double draw = params.uniform(lo, hi);  // drawn regardless so overrides do not shift later draws
    return fixed ? *fixed : draw;
  }
  double alpha() { return pick(cfg.overrides.alpha, 0.0, 1.0); }
  double r_low() { return pick(cfg.overrides.r, 0.05, 1.0); }
  double r_high() { return pick(cfg.overrides.r, 1.0, 4.0); }
  double p() { return pick(cfg.overrides.p, 0.05, 3.0); }
  double q_below(double p) {
    const double frac = params.uniform(0.05, 1.0);
    return cfg.overrides.q ? *cfg.overrides.q : frac * p;
  }
  // Positive spectral window for PD hypotheses.
  std::pair<double, double> pd_window() {
    const double m = pick(cfg.overrides.m, 0.2, 1.0);
    const double ratio = params.uniform(1.2, 6.0);
    return {m, cfg.overrides.big_m ? *cfg.overrides.big_m : m * ratio};
  }
  // Window inside (0, 1] for the ordered chains.
  std::pair<double, double> unit_window() {
    const double m = pick(cfg.overrides.m, 0.1, 0.5);
    const double top = params.uniform(0.0, 1.0);
    return {m, cfg.overrides.big_m ? *cfg.overrides.big_m : m + (1.0 - m) * (0.1 + 0.9 * top)};
  }
  // Real window for Hermitian hypotheses.
  std::pair<double, double> hermitian_window() {
    const double m = pick(cfg.overrides.m, -1.5, 0.0);
    const double width = params.uniform(0.2, 2.5);
    return {m, cfg.overrides.big_m ? *cfg.overrides.big_m : m + width};
  }
  // Window with M <= 0.
  std::pair<double, double> nonpositive_window() {
    const double big_m = pick(cfg.overrides.big_m, -1.0, 0.0);
    const double width = params.uniform(0.2, 2.5);
    return {cfg.overrides.m ? *cfg.overrides.m : big_m - width, big_m};
  }
  Sampler sampler_for(double lo, double hi) {
    SamplerConfig c = sampler;
    c.lo = lo;
    c.hi = hi;
    return Sampler(c);
  }
  double or_fixed(const std::optional<double>& fixed, double v) const { return fixed ? *fixed : v; }
};

using Runner = std::function<InequalityReport(Instance&)>;

struct Entry {
  CertifierInfo info;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    e.push_back({{"specht-power-low", {"eq-13"}, "A^r #a B^r <= max{S(s),S(t)}^r (A #a B)^r (Loewner) under sA <= B <= tA"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), r = in.r_low();
                   const double s = in.pick(in.cfg.overrides.s, 0.2, 1.0);
                   const double t = in.pick(in.cfg.overrides.t, 1.0, 4.0);
                   const auto [m, big_m] = in.pd_window();
                   const PdPair pair = in.sampler_for(m, big_m).sandwich_pair(std::min(s, t), std::max(s, t));
                   return certify_specht_power_low(pair.a, pair.b, s, t, alpha, r, in.cfg.tolerance);
                 }});
    e.push_back({{"eigen-power-high", {"eq-14"}, "lambda_k(A #a B)^r <= max{S(s^r),S(t^r)} lambda_k(A^r #a B^r), r >= 1"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), r = in.r_high();
                   const auto [m, big_m] = in.pd_window();
                   const PdPair pair = in.sampler_for(m, big_m).olson_bounded_pair(m, big_m);
                   return certify_eigen_power_high(pair.a, pair.b, in.or_fixed(in.cfg.overrides.s, pair.s),
                                                   in.or_fixed(in.cfg.overrides.t, pair.t), alpha, r,
                                                   in.cfg.tolerance);
                 }});
    e.push_back({{"pq-reverse", {"eq-15"}, "lambda_k(A^q #a B^q)^{1/q} <= max{S(s^p),S(t^p)}^{1/p} lambda_k(A^p #a B^p)^{1/p}"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), p = in.p(), q = in.q_below(p);
                   const auto [m, big_m] = in.pd_window();
                   const PdPair pair = in.sampler_for(m, big_m).olson_bounded_pair(m, big_m);
                   return certify_pq_reverse(pair.a, pair.b, in.or_fixed(in.cfg.overrides.s, pair.s),
                                             in.or_fixed(in.cfg.overrides.t, pair.t), alpha, q, p, in.cfg.tolerance);
                 }});
    auto bounded = [](BoundedForm form) {
      return [form](Instance& in) {
        const double alpha = in.alpha();
        Exponents ex;
        if (form == BoundedForm::Low) ex.r = in.r_low();
        if (form == BoundedForm::Power) ex.r = in.r_high();
        if (form == BoundedForm::PQ) {
          ex.p = in.p();
          ex.q = in.q_below(ex.p);
        }
        const auto [m, big_m] = in.pd_window();
        Sampler smp = in.sampler_for(m, big_m);
        const PositiveDefiniteMatrix a = smp.random_pd();
        const PositiveDefiniteMatrix b = smp.random_pd();
        return certify_bounded_corollary(a, b, m, big_m, alpha, form, ex, in.cfg.tolerance);
      };
    };
    e.push_back({{"bounded-specht-low", {"eq-19"}, "A^r #a B^r <= S(h)^r (A #a B)^r under mI <= A, B <= MI"},
                 bounded(BoundedForm::Low)});
    e.push_back({{"bounded-eigen-power", {"eq-20"}, "lambda_k(A #a B)^r <= S(h^r) lambda_k(A^r #a B^r), r >= 1"},
                 bounded(BoundedForm::Power)});
    e.push_back({{"bounded-pq-reverse", {"eq-21"}, "lambda_k(A^q #a B^q)^{1/q} <= S(h^p)^{1/p} lambda_k(A^p #a B^p)^{1/p}"},
                 bounded(BoundedForm::PQ)});
    e.push_back({{"gt-reverse-specht", {"theorem-2.5"},
                  "lambda_k(e^{(1-a)H+aK}) <= max{S(e^{sp}),S(e^{tp})}^{1/p} lambda_k((e^{pH} #a e^{pK})^{1/p})"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), p = in.p();
                   const auto [m, big_m] = in.hermitian_window();
                   const ExponentialPair pair = in.sampler_for(m, big_m).olson_exponential_pair(m, big_m);
                   return certify_gt_reverse_specht(pair.h, pair.k, in.or_fixed(in.cfg.overrides.s, pair.s),
                                                    in.or_fixed(in.cfg.overrides.t, pair.t), alpha, p,
                                                    in.cfg.tolerance);
                 }});
    e.push_back({{"gt-reverse-norm", {"corollary-2.6"},
                  "norm form of gt-reverse-specht over Ky Fan / Schatten norms, plus the squared alpha = 1/2 form"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), p = in.p();
                   const auto [m, big_m] = in.hermitian_window();
                   const ExponentialPair pair = in.sampler_for(m, big_m).olson_exponential_pair(m, big_m);
                   const auto norms = default_norm_family(pair.h.dim());
                   return certify_gt_reverse_norm(pair.h, pair.k, in.or_fixed(in.cfg.overrides.s, pair.s),
                                                  in.or_fixed(in.cfg.overrides.t, pair.t), alpha, p, norms, true,
                                                  in.cfg.tolerance);
                 }});
    e.push_back({{"seo-corollary", {"corollary-2.7"},
                  "lambda_k(e^{(1-a)H+aK}) <= S(e^{(M-m)p})^{1/p} lambda_k((e^{pH} #a e^{pK})^{1/p}) under mI <= H, K <= MI"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), p = in.p();
                   const auto [m, big_m] = in.hermitian_window();
                   Sampler smp = in.sampler_for(m, big_m);
                   const HermitianMatrix h = smp.random_bounded_hermitian(m, big_m);
                   const HermitianMatrix k = smp.random_bounded_hermitian(m, big_m);
                   return certify_corollary_seo(h, k, m, big_m, alpha, p, ConclusionForm::Eigenvalue,
                                                in.cfg.tolerance);
                 }});
    e.push_back({{"kantorovich-matrix", {"eq-4"}, "U A^{-1} U* <= ((m+M)^2/4mM) (U A U*)^{-1} for isometries U"},
                 [](Instance& in) {
                   const auto [m, big_m] = in.pd_window();
                   Sampler smp = in.sampler_for(m, big_m);
                   const PositiveDefiniteMatrix a = smp.random_pd();
                   const std::size_t n = a.dim();
                   const std::size_t k = 1 + static_cast<std::size_t>(in.params.uniform() * static_cast<double>(n));
                   const Matrix u = smp.random_isometry(std::min(k, n));
                   return certify_kantorovich_matrix(a, m, big_m, u, in.cfg.tolerance);
                 }});
    e.push_back({{"gt-reverse-kantorovich", {"eq-8", "proposition-3.1"},
                  "lambda_k(e^{(1-a)H+aK}) <= K(e^{p(t-s)},a)^{-1/p} lambda_k((e^{pH} #a e^{pK})^{1/p})"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), p = in.p();
                   const auto [m, big_m] = in.hermitian_window();
                   const ExponentialPair pair = in.sampler_for(m, big_m).olson_exponential_pair(m, big_m);
                   return certify_gt_reverse_kantorovich(pair.h, pair.k, in.or_fixed(in.cfg.overrides.s, pair.s),
                                                         in.or_fixed(in.cfg.overrides.t, pair.t), alpha, p,
                                                         in.cfg.tolerance);
                 }});
    e.push_back({{"gt-reverse-kantorovich-bounded", {"theorem-3.2"},
                  "factor K(e^{2p(M-m)},a)^{-1/p} under mI <= H, K <= MI, plus the squared alpha = 1/2 form"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), p = in.p();
                   const auto [m, big_m] = in.hermitian_window();
                   Sampler smp = in.sampler_for(m, big_m);
                   const HermitianMatrix h = smp.random_bounded_hermitian(m, big_m);
                   const HermitianMatrix k = smp.random_bounded_hermitian(m, big_m);
                   return certify_gt_reverse_kantorovich_bounded(h, k, m, big_m, alpha, p, true, in.cfg.tolerance);
                 }});
    e.push_back({{"fm-low", {"lemma-4.1"},
                  "A^r #a B^r <= exp(r a(1-a)(1-1/h)^2) (A #a B)^r under mI <= A <= B <= MI <= I"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), r = in.r_low();
                   const auto [m, big_m] = in.unit_window();
                   const OrderedChain c = in.sampler_for(m, big_m).loewner_chain(m, big_m);
                   return certify_fm_low(c.a, c.b, m, big_m, alpha, r, in.cfg.tolerance);
                 }});
    e.push_back({{"fm-eigen-power", {"lemma-4.2"},
                  "lambda_k(A #a B)^r <= exp(a(1-a)(1-1/h^r)^2) lambda_k(A^r #a B^r) under the Olson chain"},
                 [](Instance& in) {
                   const double alpha = in.alpha();
                   Exponents ex;
                   ex.r = in.r_high();
                   const auto [m, big_m] = in.unit_window();
                   const OrderedChain c = in.sampler_for(m, big_m).olson_chain(m, big_m);
                   return certify_fm_eigen(c.a, c.b, m, big_m, alpha, BoundedForm::Power, ex, in.cfg.tolerance);
                 }});
    e.push_back({{"fm-pq-reverse", {"eq-3"},
                  "lambda_k(A^q #a B^q)^{1/q} <= exp((1/p) a(1-a)(1-1/h^p)^2) lambda_k(A^p #a B^p)^{1/p}"},
                 [](Instance& in) {
                   const double alpha = in.alpha();
                   Exponents ex;
                   ex.p = in.p();
                   ex.q = in.q_below(ex.p);
                   const auto [m, big_m] = in.unit_window();
                   const OrderedChain c = in.sampler_for(m, big_m).olson_chain(m, big_m);
                   return certify_fm_eigen(c.a, c.b, m, big_m, alpha, BoundedForm::PQ, ex, in.cfg.tolerance);
                 }});
    e.push_back({{"fm-gt", {"theorem-4.3"},
                  "lambda_k(e^{(1-a)H+aK}) <= exp((1/p) a(1-a)(1-e^{-p(M-m)})^2) lambda_k((e^{pH} #a e^{pK})^{1/p}), M <= 0"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), p = in.p();
                   const auto [m, big_m] = in.nonpositive_window();
                   const ExponentialChain c = in.sampler_for(m, big_m).exponential_chain(m, big_m);
                   return certify_fm_gt(c.h, c.k, m, big_m, alpha, p, ConclusionForm::Eigenvalue, in.cfg.tolerance);
                 }});
    e.push_back({{"forward-ando-hiai", {"ando-hiai"}, "A^r #a B^r <_log (A #a B)^r, r >= 1"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), r = in.r_high();
                   const auto [m, big_m] = in.pd_window();
                   Sampler smp = in.sampler_for(m, big_m);
                   const PositiveDefiniteMatrix a = smp.random_pd();
                   const PositiveDefiniteMatrix b = smp.random_pd();
                   return certify_forward_ando_hiai(a, b, alpha, r, in.cfg.tolerance);
                 }});
    e.push_back({{"forward-golden-thompson", {"golden-thompson"}, "Tr e^{H+K} <= Tr e^H e^K"},
                 [](Instance& in) {
                   const auto [m, big_m] = in.hermitian_window();
                   Sampler smp = in.sampler_for(m, big_m);
                   const HermitianMatrix h = smp.random_bounded_hermitian(m, big_m);
                   const HermitianMatrix k = smp.random_bounded_hermitian(m, big_m);
                   return certify_forward_golden_thompson(h, k, in.cfg.tolerance);
                 }});
    e.push_back({{"forward-norm", {"eq-17"}, "||(e^{pH} #a e^{pK})^{1/p}|| <= ||e^{(1-a)H+aK}|| over Ky Fan / Schatten norms"},
                 [](Instance& in) {
                   const double alpha = in.alpha(), p = in.p();
                   const auto [m, big_m] = in.hermitian_window();
                   Sampler smp = in.sampler_for(m, big_m);
                   const HermitianMatrix h = smp.random_bounded_hermitian(m, big_m);
                   const HermitianMatrix k = smp.random_bounded_hermitian(m, big_m);
                   const auto norms = default_norm_family(h.dim());
                   return certify_forward_norm(h, k, alpha, p, norms, in.cfg.tolerance);
                 }});
    return e;
  }();
  return entries;
}

const Entry& find_entry(std::string_view name) {
  const auto id = resolve_certifier(name);
  if (!id) throw Error(ErrorCode::BadIndex, "unknown inequality id \"" + std::string(name) + "\"");
  for (const Entry& e : registry())
    if (e.info.id == *id) return e;
  throw Error(ErrorCode::BadIndex, "unknown inequality id");
}

}  // namespace

const std::vector<CertifierInfo>& certifier_catalog() {
  static const std::vector<CertifierInfo> catalog = [] {
    std::vector<CertifierInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

std::optional<std::string> resolve_certifier(std::string_view name) {
  for (const Entry& e : registry()) {
    if (e.info.id == name) return e.info.id;
    for (const std::string& a : e.info.aliases)
      if (a == name) return e.info.id;
  }
  return std::nullopt;
}

InequalityReport run_instance(const SweepConfig& cfg, std::size_t index) {
  const Entry& entry = find_entry(cfg.id);
  const std::uint64_t seed = derive_seed(cfg.seed, index);
  SamplerConfig sc;
  sc.n = cfg.n != 0 ? cfg.n : 2 + index % 5;
  sc.seed = seed;
  const bool commuting = cfg.commuting ? *cfg.commuting : (index / 5) % 2 == 1;
  sc.mode = commuting ? SamplerMode::Commuting : SamplerMode::General;
  sc.field = (index / 10) % 2 == 1 ? ScalarField::Complex : ScalarField::Real;
  Instance in{cfg, CounterRng(seed).substream(kParamStream), sc};
  InequalityReport r = entry.run(in);
  r.parameters.emplace_back("n", static_cast<double>(sc.n));
  r.parameters.emplace_back("commuting", commuting ? 1.0 : 0.0);
  return r;
}

SweepResult run_sweep(const SweepConfig& cfg, unsigned threads) {
  if (cfg.count < 1) throw Error(ErrorCode::BadRange, "instance count must be >= 1");
  if (!(cfg.tolerance > 0.0)) throw Error(ErrorCode::NonPositive, "tolerance must be positive");
  find_entry(cfg.id);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.count));

  std::vector<std::optional<InequalityReport>> slots(cfg.count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfg.count) return;
      try {
        slots[i] = run_instance(cfg, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.count;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  SweepResult out;
  out.reports.reserve(cfg.count);
  for (auto& s : slots) {
    if (!s->holds) ++out.violations;
    out.reports.push_back(std::move(*s));
  }
  return out;
}

}  // namespace golden_bounds
