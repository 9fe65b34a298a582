#include "golden_bounds/sampling.hpp"

#include <cmath>
#include <string>

#include "golden_bounds/error.hpp"
#include "golden_bounds/matrix_io.hpp"
#include "golden_bounds/spectral.hpp"

namespace golden_bounds {

namespace {

constexpr std::uint64_t kBasisStream = 0xb5;
constexpr std::uint64_t kDrawStream = 0xd7;

void require_range(double lo, double hi, const char* what) {
  if (!(lo <= hi)) throw Error(ErrorCode::BadRange, std::string(what) + ": need lo <= hi");
}

void require_positive_range(double lo, double hi, const char* what) {
  require_range(lo, hi, what);
  if (!(lo > 0.0)) throw Error(ErrorCode::BadRange, std::string(what) + ": need a positive range");
}

HermitianMatrix hermitian_from_spectrum(const Matrix& v, const std::vector<double>& values) {
  return make_hermitian(multiply_adjoint(scale_columns(v, values), v), 1e-8);
}

PositiveDefiniteMatrix scalar_pd(std::size_t n, double c) {
  return PositiveDefiniteMatrix::from_spectrum(Matrix::identity(n), std::vector<double>(n, c));
}

}  // namespace

std::string_view to_string(SamplerMode m) { return m == SamplerMode::General ? "general" : "commuting"; }
std::string_view to_string(ScalarField f) { return f == ScalarField::Real ? "real" : "complex"; }

void SamplerConfig::validate() const {
  if (n < 1) throw Error(ErrorCode::BadRange, "sampler dimension must be >= 1");
  require_range(lo, hi, "sampler spectral range");
}

SamplerConfig sampler_config_from_json(const nlohmann::json& j) {
  SamplerConfig cfg;
  try {
    cfg.n = j.value("n", cfg.n);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("range")) {
      const auto& r = j.at("range");
      if (!r.is_array() || r.size() != 2) throw Error(ErrorCode::ParseError, "\"range\" must be [lo, hi]");
      cfg.lo = r[0].get<double>();
      cfg.hi = r[1].get<double>();
    }
    const std::string mode = j.value("mode", std::string("general"));
    if (mode == "general")
      cfg.mode = SamplerMode::General;
    else if (mode == "commuting")
      cfg.mode = SamplerMode::Commuting;
    else
      throw Error(ErrorCode::ParseError, "unknown sampler mode \"" + mode + "\"");
    const std::string field = j.value("field", std::string("real"));
    if (field == "real")
      cfg.field = ScalarField::Real;
    else if (field == "complex")
      cfg.field = ScalarField::Complex;
    else
      throw Error(ErrorCode::ParseError, "unknown scalar field \"" + field + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  cfg.validate();
  return cfg;
}

nlohmann::json to_json(const SamplerConfig& cfg) {
  return {{"n", cfg.n},
          {"seed", cfg.seed},
          {"range", {cfg.lo, cfg.hi}},
          {"mode", to_string(cfg.mode)},
          {"field", to_string(cfg.field)}};
}

Matrix random_unitary(std::size_t n, ScalarField field, CounterRng& rng) {
  Matrix z(n, n);
  for (cplx& x : z.data()) {
    if (field == ScalarField::Real)
      x = rng.normal();
    else
      x = cplx(rng.normal(), rng.normal()) * std::sqrt(0.5);
  }
  // Modified Gram-Schmidt on columns, two passes; the positive R diagonal
  // makes the result Haar distributed.
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        cplx dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(z(r, i)) * z(r, j);
        for (std::size_t r = 0; r < n; ++r) z(r, j) -= dot * z(r, i);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(z(r, j));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) z(r, j) /= norm;
  }
  return z;
}

Sampler::Sampler(SamplerConfig cfg) : cfg_(cfg), rng_(CounterRng(cfg.seed).substream(kDrawStream)) {
  cfg_.validate();
  if (cfg_.mode == SamplerMode::Commuting) {
    CounterRng basis_rng = CounterRng(cfg_.seed).substream(kBasisStream);
    shared_basis_ = random_unitary(cfg_.n, cfg_.field, basis_rng);
  }
}

Matrix Sampler::basis() {
  if (cfg_.mode == SamplerMode::Commuting) return shared_basis_;
  return random_unitary(cfg_.n, cfg_.field, rng_);
}

std::vector<double> Sampler::uniform_spectrum(double lo, double hi) {
  std::vector<double> u(cfg_.n);
  for (double& x : u) x = rng_.uniform(lo, hi);
  return u;
}

PositiveDefiniteMatrix Sampler::random_pd() { return random_pd(cfg_.lo, cfg_.hi); }

PositiveDefiniteMatrix Sampler::random_pd(double lo, double hi) {
  require_positive_range(lo, hi, "random_pd");
  if (lo == hi) return scalar_pd(cfg_.n, lo);
  const Matrix v = basis();
  return PositiveDefiniteMatrix::from_spectrum(v, uniform_spectrum(lo, hi));
}

HermitianMatrix Sampler::random_bounded_hermitian() { return random_bounded_hermitian(cfg_.lo, cfg_.hi); }

HermitianMatrix Sampler::random_bounded_hermitian(double m, double big_m) {
  require_range(m, big_m, "random_bounded_hermitian");
  if (m == big_m) return HermitianMatrix::scalar(cfg_.n, m);
  const Matrix v = basis();
  return hermitian_from_spectrum(v, uniform_spectrum(m, big_m));
}

PdPair Sampler::sandwich_pair(double s, double t) {
  if (!(s > 0.0) || !(s <= t)) throw Error(ErrorCode::BadRange, "sandwich_pair needs 0 < s <= t");
  PositiveDefiniteMatrix a = random_pd();
  PositiveDefiniteMatrix b = [&] {
    if (s == t) return scale(a, s);
    const PositiveDefiniteMatrix c = random_pd(s, t);
    return PositiveDefiniteMatrix(congruence(power(a, 0.5).matrix(), c.hermitian()));
  }();
  OrderCertificate lower = loewner_leq(s * a.hermitian(), b);
  OrderCertificate upper = loewner_leq(b, t * a.hermitian());
  return {std::move(a), std::move(b), s, t, std::move(lower), std::move(upper)};
}

PdPair Sampler::olson_bounded_pair(double m, double big_m) {
  require_positive_range(m, big_m, "olson_bounded_pair");
  PositiveDefiniteMatrix a = random_pd(m, big_m);
  PositiveDefiniteMatrix b = random_pd(m, big_m);
  const double s = m / big_m;
  const double t = big_m / m;
  OrderCertificate lower = olson_leq(scale(a, s), b);
  OrderCertificate upper = olson_leq(b, scale(a, t));
  return {std::move(a), std::move(b), s, t, std::move(lower), std::move(upper)};
}

ExponentialPair Sampler::olson_exponential_pair(double m, double big_m, bool force_equal) {
  require_range(m, big_m, "olson_exponential_pair");
  HermitianMatrix h = random_bounded_hermitian(m, big_m);
  HermitianMatrix k = force_equal ? h : random_bounded_hermitian(m, big_m);
  const double s = m - big_m;
  const double t = big_m - m;
  const PositiveDefiniteMatrix eh = exp_h(h);
  const PositiveDefiniteMatrix ek = exp_h(k);
  OrderCertificate lower = olson_leq(scale(eh, std::exp(s)), ek);
  OrderCertificate upper = olson_leq(ek, scale(eh, std::exp(t)));
  return {std::move(h), std::move(k), m, big_m, s, t, std::move(lower), std::move(upper)};
}

OrderedChain Sampler::loewner_chain(double m, double big_m) {
  require_positive_range(m, big_m, "loewner_chain");
  const std::size_t n = cfg_.n;
  if (m == big_m) {
    PositiveDefiniteMatrix a = scalar_pd(n, m);
    PositiveDefiniteMatrix b = a;
    auto bottom = loewner_leq(HermitianMatrix::scalar(n, m), a);
    auto middle = loewner_leq(a, b);
    auto top = loewner_leq(b, HermitianMatrix::scalar(n, big_m));
    return {std::move(a), std::move(b), m, big_m, std::move(bottom), std::move(middle), std::move(top)};
  }
  const double mid = 0.5 * (m + big_m);
  PositiveDefiniteMatrix b = random_pd(mid, big_m);
  const PositiveDefiniteMatrix c = random_pd(m / mid, 1.0);
  PositiveDefiniteMatrix a(congruence(power(b, 0.5).matrix(), c.hermitian()));
  auto bottom = loewner_leq(HermitianMatrix::scalar(n, m), a);
  auto middle = loewner_leq(a, b);
  auto top = loewner_leq(b, HermitianMatrix::scalar(n, big_m));
  return {std::move(a), std::move(b), m, big_m, std::move(bottom), std::move(middle), std::move(top)};
}

namespace {

// Paired spectra lo_i <= hi_i in [m, M]: separated halves in general mode,
// per-index ordering on a shared basis in commuting mode.
void ordered_spectra(CounterRng& rng, std::size_t n, double m, double big_m, bool separated,
                     std::vector<double>& lo, std::vector<double>& hi) {
  lo.resize(n);
  hi.resize(n);
  if (separated) {
    const double split = m + (big_m - m) * rng.uniform(0.3, 0.7);
    for (double& x : lo) x = rng.uniform(m, split);
    for (double& x : hi) x = rng.uniform(split, big_m);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = rng.uniform(m, big_m);
      hi[i] = rng.uniform(lo[i], big_m);
    }
  }
}

}  // namespace

OrderedChain Sampler::olson_chain(double m, double big_m) {
  require_positive_range(m, big_m, "olson_chain");
  const std::size_t n = cfg_.n;
  std::vector<double> lo, hi;
  ordered_spectra(rng_, n, m, big_m, cfg_.mode == SamplerMode::General, lo, hi);
  const Matrix va = basis();
  const Matrix vb = basis();
  PositiveDefiniteMatrix a = PositiveDefiniteMatrix::from_spectrum(va, lo);
  PositiveDefiniteMatrix b = PositiveDefiniteMatrix::from_spectrum(vb, hi);
  auto bottom = olson_leq(scalar_pd(n, m), a);
  auto middle = olson_leq(a, b);
  auto top = olson_leq(b, scalar_pd(n, big_m));
  return {std::move(a), std::move(b), m, big_m, std::move(bottom), std::move(middle), std::move(top)};
}

ExponentialChain Sampler::exponential_chain(double m, double big_m) {
  require_range(m, big_m, "exponential_chain");
  const std::size_t n = cfg_.n;
  std::vector<double> lo, hi;
  ordered_spectra(rng_, n, m, big_m, cfg_.mode == SamplerMode::General, lo, hi);
  const Matrix vh = basis();
  const Matrix vk = basis();
  HermitianMatrix h = hermitian_from_spectrum(vh, lo);
  HermitianMatrix k = hermitian_from_spectrum(vk, hi);
  const PositiveDefiniteMatrix eh = exp_h(h);
  const PositiveDefiniteMatrix ek = exp_h(k);
  auto bottom = olson_leq(scalar_pd(n, std::exp(m)), eh);
  auto middle = olson_leq(eh, ek);
  auto top = olson_leq(ek, scalar_pd(n, std::exp(big_m)));
  return {std::move(h), std::move(k), m, big_m, std::move(bottom), std::move(middle), std::move(top)};
}

Matrix Sampler::random_isometry(std::size_t k) {
  if (k < 1 || k > cfg_.n) throw Error(ErrorCode::BadRange, "isometry rows must be in 1..n");
  const Matrix u = random_unitary(cfg_.n, cfg_.field, rng_);
  Matrix out(k, cfg_.n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < cfg_.n; ++j) out(i, j) = u(i, j);
  return out;
}

nlohmann::json to_json(const PdPair& p) {
  return {{"A", matrix_to_json(p.a.hermitian())},
          {"B", matrix_to_json(p.b.hermitian())},
          {"s", p.s},
          {"t", p.t},
          {"certificates", {{"lower", to_json(p.lower)}, {"upper", to_json(p.upper)}}}};
}

nlohmann::json to_json(const ExponentialPair& p) {
  return {{"H", matrix_to_json(p.h)},
          {"K", matrix_to_json(p.k)},
          {"m", p.m},
          {"M", p.big_m},
          {"s", p.s},
          {"t", p.t},
          {"certificates", {{"lower", to_json(p.lower)}, {"upper", to_json(p.upper)}}}};
}

nlohmann::json to_json(const OrderedChain& c) {
  return {{"A", matrix_to_json(c.a.hermitian())},
          {"B", matrix_to_json(c.b.hermitian())},
          {"m", c.m},
          {"M", c.big_m},
          {"certificates",
           {{"bottom", to_json(c.bottom)}, {"middle", to_json(c.middle)}, {"top", to_json(c.top)}}}};
}

nlohmann::json to_json(const ExponentialChain& c) {
  return {{"H", matrix_to_json(c.h)},
          {"K", matrix_to_json(c.k)},
          {"m", c.m},
          {"M", c.big_m},
          {"certificates",
           {{"bottom", to_json(c.bottom)}, {"middle", to_json(c.middle)}, {"top", to_json(c.top)}}}};
}

}  // namespace golden_bounds
