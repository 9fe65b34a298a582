#include "golden_bounds/certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "golden_bounds/constants.hpp"
#include "golden_bounds/error.hpp"
#include "golden_bounds/means.hpp"
#include "golden_bounds/orders.hpp"
#include "golden_bounds/spectral.hpp"

namespace golden_bounds {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::HypothesisViolated, what);
}

void require_cert(const OrderCertificate& c, const std::string& what) {
  if (!c.holds)
    throw Error(ErrorCode::HypothesisViolated,
                what + " fails (worst margin " + std::to_string(c.worst_margin) + " at " + c.witness + ")");
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadRange, what);
}

void require_alpha(double alpha) { MeanParams{alpha, 1.0}.validate(); }

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::DimMismatch, "operands differ in size");
}

PositiveDefiniteMatrix scalar_pd(std::size_t n, double c) {
  return PositiveDefiniteMatrix::from_spectrum(Matrix::identity(n), std::vector<double>(n, c));
}

void require_sandwich(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double s, double t) {
  require_range(s > 0.0 && s <= t, "need 0 < s <= t");
  require_cert(loewner_leq(s * a.hermitian(), b), "sA <= B");
  require_cert(loewner_leq(b, t * a.hermitian()), "B <= tA");
}

void require_olson_sandwich(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double s, double t) {
  require_range(s > 0.0 && s <= t, "need 0 < s <= t");
  require_cert(olson_leq(scale(a, s), b), "sA <=_ols B");
  require_cert(olson_leq(b, scale(a, t)), "B <=_ols tA");
}

void require_bounded(const HermitianMatrix& x, double m, double big_m, const char* name) {
  require_range(m <= big_m, "need m <= M");
  const std::size_t n = x.dim();
  require_cert(loewner_leq(HermitianMatrix::scalar(n, m), x), std::string("mI <= ") + name);
  require_cert(loewner_leq(x, HermitianMatrix::scalar(n, big_m)), std::string(name) + " <= MI");
}

void require_exp_olson(const PositiveDefiniteMatrix& eh, const PositiveDefiniteMatrix& ek, double s, double t) {
  require_range(s <= t, "need s <= t");
  require_cert(olson_leq(scale(eh, std::exp(s)), ek), "e^s e^H <=_ols e^K");
  require_cert(olson_leq(ek, scale(eh, std::exp(t))), "e^K <=_ols e^t e^H");
}

std::vector<std::string> k_labels(std::size_t n, const std::string& prefix = "") {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(prefix + "k=" + std::to_string(k));
  return out;
}

std::vector<double> scaled(std::vector<double> v, double c) {
  for (double& x : v) x *= c;
  return v;
}

std::vector<double> powered(std::vector<double> v, double e) {
  for (double& x : v) x = std::pow(x, e);
  return v;
}

double specht_max(double s, double t) { return std::max(specht(s), specht(t)); }

// K(w, a)^{-1/p} through the logarithm so that p -> 0 keeps its digits.
double kantorovich_root(double w, double alpha, double p) { return std::exp(-std::log(kantorovich(w, alpha)) / p); }

std::string digest_of(std::initializer_list<const Matrix*> ms, std::initializer_list<double> xs) {
  Digest d;
  for (const Matrix* m : ms) d.add(*m);
  for (double x : xs) d.add(x);
  return d.hex();
}

InequalityReport eigen_report(std::string id, NamedValues params, std::vector<double> lhs, std::vector<double> rhs,
                              double tol, std::string digest) {
  auto labels = k_labels(lhs.size());
  return make_report(std::move(id), Semantics::Eigenvalue, std::move(params), std::move(labels), std::move(lhs),
                     std::move(rhs), tol, std::move(digest));
}

// (e^{pH} #_a e^{pK})^{1/p} eigenvalues, through the same route as mean_power.
std::vector<double> mean_power_eigs(const HermitianMatrix& h, const HermitianMatrix& k, double alpha, double p) {
  return eigenvalues_desc(mean_power(h, k, alpha, p));
}

}  // namespace

InequalityReport certify_specht_power_low(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double s,
                                          double t, double alpha, double r, double tol) {
  require_alpha(alpha);
  require_same_dim(a.dim(), b.dim());
  require_range(r > 0.0 && r <= 1.0, "need 0 < r <= 1");
  require_sandwich(a, b, s, t);
  const double factor = std::pow(specht_max(s, t), r);
  const PositiveDefiniteMatrix lhs = geometric_mean(power(a, r), power(b, r), alpha);
  const PositiveDefiniteMatrix rhs = scale(power(geometric_mean(a, b, alpha), r), factor);
  return loewner_report("specht-power-low",
                        {{"alpha", alpha}, {"r", r}, {"s", s}, {"t", t}, {"factor", factor}}, lhs, rhs, tol,
                        digest_of({&a.matrix(), &b.matrix()}, {s, t, alpha, r}));
}

InequalityReport certify_eigen_power_high(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double s,
                                          double t, double alpha, double r, double tol) {
  require_alpha(alpha);
  require_same_dim(a.dim(), b.dim());
  require_range(r >= 1.0, "need r >= 1");
  require_olson_sandwich(a, b, s, t);
  const double factor = specht_max(std::pow(s, r), std::pow(t, r));
  auto lhs = powered(eigenvalues_desc(geometric_mean(a, b, alpha)), r);
  auto rhs = scaled(eigenvalues_desc(geometric_mean(power(a, r), power(b, r), alpha)), factor);
  return eigen_report("eigen-power-high", {{"alpha", alpha}, {"r", r}, {"s", s}, {"t", t}, {"factor", factor}},
                      std::move(lhs), std::move(rhs), tol, digest_of({&a.matrix(), &b.matrix()}, {s, t, alpha, r}));
}

InequalityReport certify_pq_reverse(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double s,
                                    double t, double alpha, double q, double p, double tol) {
  require_alpha(alpha);
  require_same_dim(a.dim(), b.dim());
  require_range(q > 0.0 && q <= p, "need 0 < q <= p");
  require_olson_sandwich(a, b, s, t);
  const double factor = std::exp(std::log(specht_max(std::pow(s, p), std::pow(t, p))) / p);
  auto lhs = powered(eigenvalues_desc(geometric_mean(power(a, q), power(b, q), alpha)), 1.0 / q);
  auto rhs = scaled(powered(eigenvalues_desc(geometric_mean(power(a, p), power(b, p), alpha)), 1.0 / p), factor);
  return eigen_report("pq-reverse",
                      {{"alpha", alpha}, {"q", q}, {"p", p}, {"s", s}, {"t", t}, {"factor", factor}},
                      std::move(lhs), std::move(rhs), tol,
                      digest_of({&a.matrix(), &b.matrix()}, {s, t, alpha, q, p}));
}

InequalityReport certify_bounded_corollary(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double m,
                                           double big_m, double alpha, BoundedForm form, Exponents e, double tol) {
  require_alpha(alpha);
  require_same_dim(a.dim(), b.dim());
  require_range(m > 0.0, "need m > 0");
  require_bounded(a.hermitian(), m, big_m, "A");
  require_bounded(b.hermitian(), m, big_m, "B");
  const double h = big_m / m;
  const std::string digest = digest_of({&a.matrix(), &b.matrix()}, {m, big_m, alpha, e.r, e.q, e.p});
  switch (form) {
    case BoundedForm::Low: {
      require_range(e.r > 0.0 && e.r <= 1.0, "need 0 < r <= 1");
      const double factor = std::pow(specht(h), e.r);
      const PositiveDefiniteMatrix lhs = geometric_mean(power(a, e.r), power(b, e.r), alpha);
      const PositiveDefiniteMatrix rhs = scale(power(geometric_mean(a, b, alpha), e.r), factor);
      return loewner_report("bounded-specht-low",
                            {{"alpha", alpha}, {"r", e.r}, {"m", m}, {"M", big_m}, {"h", h}, {"factor", factor}},
                            lhs, rhs, tol, digest);
    }
    case BoundedForm::Power: {
      require_range(e.r >= 1.0, "need r >= 1");
      const double factor = specht(std::pow(h, e.r));
      auto lhs = powered(eigenvalues_desc(geometric_mean(a, b, alpha)), e.r);
      auto rhs = scaled(eigenvalues_desc(geometric_mean(power(a, e.r), power(b, e.r), alpha)), factor);
      return eigen_report("bounded-eigen-power",
                          {{"alpha", alpha}, {"r", e.r}, {"m", m}, {"M", big_m}, {"h", h}, {"factor", factor}},
                          std::move(lhs), std::move(rhs), tol, digest);
    }
    case BoundedForm::PQ: {
      require_range(e.q > 0.0 && e.q <= e.p, "need 0 < q <= p");
      const double factor = specht_p_root(h, e.p);
      auto lhs = powered(eigenvalues_desc(geometric_mean(power(a, e.q), power(b, e.q), alpha)), 1.0 / e.q);
      auto rhs = scaled(powered(eigenvalues_desc(geometric_mean(power(a, e.p), power(b, e.p), alpha)), 1.0 / e.p),
                        factor);
      return eigen_report(
          "bounded-pq-reverse",
          {{"alpha", alpha}, {"q", e.q}, {"p", e.p}, {"m", m}, {"M", big_m}, {"h", h}, {"factor", factor}},
          std::move(lhs), std::move(rhs), tol, digest);
    }
  }
  throw Error(ErrorCode::BadRange, "unknown bounded form");
}

double reverse_factor(ReverseFactor kind, double s, double t, double alpha, double p) {
  require_range(s <= t, "need s <= t");
  if (!(p > 0.0)) throw Error(ErrorCode::NonPositive, "p must be positive");
  if (kind == ReverseFactor::Specht)
    return std::max(specht_p_root(std::exp(s), p), specht_p_root(std::exp(t), p));
  return kantorovich_root(std::exp(p * (t - s)), alpha, p);
}

InequalityReport certify_gt_reverse_specht(const HermitianMatrix& h, const HermitianMatrix& k, double s, double t,
                                           double alpha, double p, double tol) {
  MeanParams{alpha, p}.validate();
  require_same_dim(h.dim(), k.dim());
  require_exp_olson(exp_h(h), exp_h(k), s, t);
  const double factor = reverse_factor(ReverseFactor::Specht, s, t, alpha, p);
  auto lhs = eigenvalues_desc(log_euclidean(h, k, alpha));
  auto rhs = scaled(mean_power_eigs(h, k, alpha, p), factor);
  return eigen_report("gt-reverse-specht", {{"alpha", alpha}, {"p", p}, {"s", s}, {"t", t}, {"factor", factor}},
                      std::move(lhs), std::move(rhs), tol, digest_of({&h.matrix(), &k.matrix()}, {s, t, alpha, p}));
}

std::string norm_label(NormId id) {
  switch (id.kind) {
    case NormKind::KyFan: return "kyfan-" + std::to_string(id.k);
    case NormKind::Schatten1: return "schatten-1";
    case NormKind::Schatten2: return "schatten-2";
    case NormKind::SchattenInf: return "schatten-inf";
  }
  return "?";
}

double evaluate_norm(const HermitianMatrix& x, NormId id) {
  switch (id.kind) {
    case NormKind::KyFan: return ky_fan_norm(x, id.k);
    case NormKind::Schatten1: return schatten_norm(x, SchattenIndex::One);
    case NormKind::Schatten2: return schatten_norm(x, SchattenIndex::Two);
    case NormKind::SchattenInf: return schatten_norm(x, SchattenIndex::Infinity);
  }
  throw Error(ErrorCode::BadIndex, "unknown norm");
}

std::vector<NormId> default_norm_family(std::size_t n) {
  std::vector<NormId> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back({NormKind::KyFan, k});
  out.push_back({NormKind::Schatten1});
  out.push_back({NormKind::Schatten2});
  out.push_back({NormKind::SchattenInf});
  return out;
}

namespace {

void append_norms(const HermitianMatrix& l, const HermitianMatrix& r, double factor, std::span<const NormId> norms,
                  const std::string& prefix, std::vector<std::string>& labels, std::vector<double>& lhs,
                  std::vector<double>& rhs) {
  for (const NormId& id : norms) {
    labels.push_back(prefix + norm_label(id));
    lhs.push_back(evaluate_norm(l, id));
    rhs.push_back(factor * evaluate_norm(r, id));
  }
}

}  // namespace

InequalityReport certify_gt_reverse_norm(const HermitianMatrix& h, const HermitianMatrix& k, double s, double t,
                                         double alpha, double p, std::span<const NormId> norms, bool include_squared,
                                         double tol) {
  MeanParams{alpha, p}.validate();
  require_same_dim(h.dim(), k.dim());
  require_exp_olson(exp_h(h), exp_h(k), s, t);
  const double factor = reverse_factor(ReverseFactor::Specht, s, t, alpha, p);
  std::vector<std::string> labels;
  std::vector<double> lhs, rhs;
  append_norms(log_euclidean(h, k, alpha), mean_power(h, k, alpha, p), factor, norms, "", labels, lhs, rhs);
  NamedValues params{{"alpha", alpha}, {"p", p}, {"s", s}, {"t", t}, {"factor", factor}};
  if (include_squared) {
    const double sq_factor = specht_max(std::exp(2.0 * s), std::exp(2.0 * t));
    const PositiveDefiniteMatrix sq_lhs = exp_h(h + k);
    const PositiveDefiniteMatrix sq_rhs = geometric_mean(exp_h(2.0 * h), exp_h(2.0 * k), 0.5);
    append_norms(sq_lhs, sq_rhs, sq_factor, norms, "squared:", labels, lhs, rhs);
    params.emplace_back("squared_factor", sq_factor);
  }
  return make_report("gt-reverse-norm", Semantics::Norm, std::move(params), std::move(labels), std::move(lhs),
                     std::move(rhs), tol, digest_of({&h.matrix(), &k.matrix()}, {s, t, alpha, p}));
}

InequalityReport certify_corollary_seo(const HermitianMatrix& h, const HermitianMatrix& k, double m, double big_m,
                                       double alpha, double p, ConclusionForm form, double tol) {
  MeanParams{alpha, p}.validate();
  require_same_dim(h.dim(), k.dim());
  require_bounded(h, m, big_m, "H");
  require_bounded(k, m, big_m, "K");
  const double factor = specht_p_root(std::exp(big_m - m), p);
  NamedValues params{{"alpha", alpha}, {"p", p}, {"m", m}, {"M", big_m}, {"factor", factor}};
  const std::string digest = digest_of({&h.matrix(), &k.matrix()}, {m, big_m, alpha, p});
  if (form == ConclusionForm::Norm) {
    std::vector<std::string> labels;
    std::vector<double> lhs, rhs;
    const auto norms = default_norm_family(h.dim());
    append_norms(log_euclidean(h, k, alpha), mean_power(h, k, alpha, p), factor, norms, "", labels, lhs, rhs);
    return make_report("seo-corollary", Semantics::Norm, std::move(params), std::move(labels), std::move(lhs),
                       std::move(rhs), tol, digest);
  }
  return eigen_report("seo-corollary", std::move(params), eigenvalues_desc(log_euclidean(h, k, alpha)),
                      scaled(mean_power_eigs(h, k, alpha, p), factor), tol, digest);
}

InequalityReport certify_kantorovich_matrix(const PositiveDefiniteMatrix& a, double m, double big_m, const Matrix& u,
                                            double tol) {
  require_range(m > 0.0, "need m > 0");
  require_bounded(a.hermitian(), m, big_m, "A");
  if (u.cols() != a.dim() || u.rows() < 1 || u.rows() > a.dim())
    throw Error(ErrorCode::DimMismatch, "U must be k x n with 1 <= k <= n");
  const std::size_t k = u.rows();
  const double defect = (multiply_adjoint(u, u) - Matrix::identity(k)).frobenius_norm();
  require(defect <= 1e-10 * std::sqrt(static_cast<double>(k)), "U U* = I");
  const double c = (m + big_m) * (m + big_m) / (4.0 * m * big_m);
  const HermitianMatrix lhs = make_hermitian(multiply_adjoint(u * power(a, -1.0).matrix(), u), 1e-8);
  const PositiveDefiniteMatrix uau(make_hermitian(multiply_adjoint(u * a.matrix(), u), 1e-8));
  const PositiveDefiniteMatrix rhs = scale(power(uau, -1.0), c);
  return loewner_report("kantorovich-matrix",
                        {{"m", m}, {"M", big_m}, {"k", static_cast<double>(k)}, {"factor", c}}, lhs, rhs, tol,
                        digest_of({&a.matrix(), &u}, {m, big_m}));
}

InequalityReport certify_gt_reverse_kantorovich(const HermitianMatrix& h, const HermitianMatrix& k, double s,
                                                double t, double alpha, double p, double tol) {
  MeanParams{alpha, p}.validate();
  require_same_dim(h.dim(), k.dim());
  require_exp_olson(exp_h(h), exp_h(k), s, t);
  const double factor = reverse_factor(ReverseFactor::Kantorovich, s, t, alpha, p);
  return eigen_report("gt-reverse-kantorovich",
                      {{"alpha", alpha}, {"p", p}, {"s", s}, {"t", t}, {"factor", factor}},
                      eigenvalues_desc(log_euclidean(h, k, alpha)), scaled(mean_power_eigs(h, k, alpha, p), factor),
                      tol, digest_of({&h.matrix(), &k.matrix()}, {s, t, alpha, p}));
}

double kantorovich_squared_identity_gap(double m, double big_m) {
  const double d = big_m - m;
  const double closed = std::cosh(d);  // (e^{2d} + 1) / (2 e^d)
  const double via_k = 1.0 / kantorovich(std::exp(4.0 * d), 0.5);
  return std::abs(via_k - closed) / closed;
}

InequalityReport certify_gt_reverse_kantorovich_bounded(const HermitianMatrix& h, const HermitianMatrix& k, double m,
                                                        double big_m, double alpha, double p, bool include_squared,
                                                        double tol) {
  MeanParams{alpha, p}.validate();
  require_same_dim(h.dim(), k.dim());
  require_bounded(h, m, big_m, "H");
  require_bounded(k, m, big_m, "K");
  const double factor = kantorovich_root(std::exp(2.0 * p * (big_m - m)), alpha, p);
  auto lhs = eigenvalues_desc(log_euclidean(h, k, alpha));
  auto rhs = scaled(mean_power_eigs(h, k, alpha, p), factor);
  auto labels = k_labels(lhs.size());
  NamedValues params{{"alpha", alpha}, {"p", p}, {"m", m}, {"M", big_m}, {"factor", factor}};
  if (include_squared) {
    const double gap = kantorovich_squared_identity_gap(m, big_m);
    if (!(gap <= 1e-12))
      throw Error(ErrorCode::DomainError,
                  "K(e^{4(M-m)}, 1/2)^{-1} disagrees with its closed form (relative gap " + std::to_string(gap) + ")");
    const double c = (std::exp(2.0 * big_m) + std::exp(2.0 * m)) / (2.0 * std::exp(big_m) * std::exp(m));
    const auto sq_lhs = eigenvalues_desc(exp_h(h + k));
    const auto sq_rhs = scaled(eigenvalues_desc(geometric_mean(exp_h(2.0 * h), exp_h(2.0 * k), 0.5)), c);
    lhs.insert(lhs.end(), sq_lhs.begin(), sq_lhs.end());
    rhs.insert(rhs.end(), sq_rhs.begin(), sq_rhs.end());
    auto sq_labels = k_labels(sq_lhs.size(), "squared:");
    labels.insert(labels.end(), sq_labels.begin(), sq_labels.end());
    params.emplace_back("squared_factor", c);
    params.emplace_back("identity_gap", gap);
  }
  return make_report("gt-reverse-kantorovich-bounded", Semantics::Eigenvalue, std::move(params), std::move(labels),
                     std::move(lhs), std::move(rhs), tol,
                     digest_of({&h.matrix(), &k.matrix()}, {m, big_m, alpha, p}));
}

InequalityReport certify_fm_low(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double m,
                                double big_m, double alpha, double r, double tol) {
  require_alpha(alpha);
  require_same_dim(a.dim(), b.dim());
  require_range(r > 0.0 && r <= 1.0, "need 0 < r <= 1");
  require_range(m > 0.0 && m <= big_m && big_m <= 1.0, "need 0 < m <= M <= 1");
  const std::size_t n = a.dim();
  require_cert(loewner_leq(HermitianMatrix::scalar(n, m), a), "mI <= A");
  require_cert(loewner_leq(a, b), "A <= B");
  require_cert(loewner_leq(b, HermitianMatrix::scalar(n, big_m)), "B <= MI");
  const double h = big_m / m;
  const double factor = fm_factor(h, alpha, r);
  const PositiveDefiniteMatrix lhs = geometric_mean(power(a, r), power(b, r), alpha);
  const PositiveDefiniteMatrix rhs = scale(power(geometric_mean(a, b, alpha), r), factor);
  return loewner_report("fm-low", {{"alpha", alpha}, {"r", r}, {"m", m}, {"M", big_m}, {"h", h}, {"factor", factor}},
                        lhs, rhs, tol, digest_of({&a.matrix(), &b.matrix()}, {m, big_m, alpha, r}));
}

InequalityReport certify_fm_eigen(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double m,
                                  double big_m, double alpha, BoundedForm form, Exponents e, double tol) {
  require_alpha(alpha);
  require_same_dim(a.dim(), b.dim());
  require_range(m > 0.0 && m <= big_m && big_m <= 1.0, "need 0 < m <= M <= 1");
  const std::size_t n = a.dim();
  require_cert(olson_leq(scalar_pd(n, m), a), "mI <=_ols A");
  require_cert(olson_leq(a, b), "A <=_ols B");
  require_cert(olson_leq(b, scalar_pd(n, big_m)), "B <=_ols MI");
  const double h = big_m / m;
  const std::string digest = digest_of({&a.matrix(), &b.matrix()}, {m, big_m, alpha, e.r, e.q, e.p});
  if (form == BoundedForm::Power) {
    require_range(e.r >= 1.0, "need r >= 1");
    const double factor = fm_factor(std::pow(h, e.r), alpha, 1.0);
    auto lhs = powered(eigenvalues_desc(geometric_mean(a, b, alpha)), e.r);
    auto rhs = scaled(eigenvalues_desc(geometric_mean(power(a, e.r), power(b, e.r), alpha)), factor);
    return eigen_report("fm-eigen-power",
                        {{"alpha", alpha}, {"r", e.r}, {"m", m}, {"M", big_m}, {"h", h}, {"factor", factor}},
                        std::move(lhs), std::move(rhs), tol, digest);
  }
  if (form == BoundedForm::PQ) {
    require_range(e.q > 0.0 && e.q <= e.p, "need 0 < q <= p");
    const double factor = fm_factor(std::pow(h, e.p), alpha, 1.0 / e.p);
    auto lhs = powered(eigenvalues_desc(geometric_mean(power(a, e.q), power(b, e.q), alpha)), 1.0 / e.q);
    auto rhs =
        scaled(powered(eigenvalues_desc(geometric_mean(power(a, e.p), power(b, e.p), alpha)), 1.0 / e.p), factor);
    return eigen_report(
        "fm-pq-reverse",
        {{"alpha", alpha}, {"q", e.q}, {"p", e.p}, {"m", m}, {"M", big_m}, {"h", h}, {"factor", factor}},
        std::move(lhs), std::move(rhs), tol, digest);
  }
  throw Error(ErrorCode::BadRange, "fm_eigen supports the power and pq forms");
}

InequalityReport certify_fm_gt(const HermitianMatrix& h, const HermitianMatrix& k, double m, double big_m,
                               double alpha, double p, ConclusionForm form, double tol) {
  MeanParams{alpha, p}.validate();
  require_same_dim(h.dim(), k.dim());
  require_range(m <= big_m && big_m <= 0.0, "need m <= M <= 0");
  const std::size_t n = h.dim();
  const PositiveDefiniteMatrix eh = exp_h(h);
  const PositiveDefiniteMatrix ek = exp_h(k);
  require_cert(olson_leq(scalar_pd(n, std::exp(m)), eh), "e^m I <=_ols e^H");
  require_cert(olson_leq(eh, ek), "e^H <=_ols e^K");
  require_cert(olson_leq(ek, scalar_pd(n, std::exp(big_m))), "e^K <=_ols e^M I");
  const double factor = fm_factor(std::exp(p * (big_m - m)), alpha, 1.0 / p);
  NamedValues params{{"alpha", alpha}, {"p", p}, {"m", m}, {"M", big_m}, {"factor", factor}};
  const std::string digest = digest_of({&h.matrix(), &k.matrix()}, {m, big_m, alpha, p});
  if (form == ConclusionForm::Norm) {
    std::vector<std::string> labels;
    std::vector<double> lhs, rhs;
    const auto norms = default_norm_family(n);
    append_norms(log_euclidean(h, k, alpha), mean_power(h, k, alpha, p), factor, norms, "", labels, lhs, rhs);
    return make_report("fm-gt", Semantics::Norm, std::move(params), std::move(labels), std::move(lhs),
                       std::move(rhs), tol, digest);
  }
  return eigen_report("fm-gt", std::move(params), eigenvalues_desc(log_euclidean(h, k, alpha)),
                      scaled(mean_power_eigs(h, k, alpha, p), factor), tol, digest);
}

InequalityReport certify_forward_ando_hiai(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                                           double alpha, double r, double tol) {
  require_alpha(alpha);
  require_same_dim(a.dim(), b.dim());
  require_range(r >= 1.0, "need r >= 1");
  const auto x = eigenvalues_desc(geometric_mean(power(a, r), power(b, r), alpha));
  const auto y = eigenvalues_desc(power(geometric_mean(a, b, alpha), r));
  std::vector<double> lhs, rhs;
  double px = 1.0, py = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    px *= x[i];
    py *= y[i];
    lhs.push_back(px);
    rhs.push_back(py);
  }
  auto labels = k_labels(x.size());
  labels.push_back("det-reverse");
  lhs.push_back(py);
  rhs.push_back(px);
  return make_report("forward-ando-hiai", Semantics::LogMajorization, {{"alpha", alpha}, {"r", r}},
                     std::move(labels), std::move(lhs), std::move(rhs), tol,
                     digest_of({&a.matrix(), &b.matrix()}, {alpha, r}));
}

InequalityReport certify_forward_golden_thompson(const HermitianMatrix& h, const HermitianMatrix& k, double tol) {
  require_same_dim(h.dim(), k.dim());
  const double lhs = trace(exp_h(h + k)).real();
  const double rhs = trace(exp_h(h).matrix() * exp_h(k).matrix()).real();
  return make_report("forward-golden-thompson", Semantics::Trace, {}, {"trace"}, {lhs}, {rhs}, tol,
                     digest_of({&h.matrix(), &k.matrix()}, {}));
}

InequalityReport certify_forward_norm(const HermitianMatrix& h, const HermitianMatrix& k, double alpha, double p,
                                      std::span<const NormId> norms, double tol) {
  MeanParams{alpha, p}.validate();
  require_same_dim(h.dim(), k.dim());
  std::vector<std::string> labels;
  std::vector<double> lhs, rhs;
  append_norms(mean_power(h, k, alpha, p), log_euclidean(h, k, alpha), 1.0, norms, "", labels, lhs, rhs);
  return make_report("forward-norm", Semantics::Norm, {{"alpha", alpha}, {"p", p}}, std::move(labels),
                     std::move(lhs), std::move(rhs), tol, digest_of({&h.matrix(), &k.matrix()}, {alpha, p}));
}

ConstantComparison compare_constants_remark(double alpha, double p, double h) {
  require_alpha(alpha);
  if (!(p > 0.0)) throw Error(ErrorCode::NonPositive, "p must be positive");
  require_range(h >= 1.0, "need h >= 1");
  const double first = kantorovich_root(std::pow(h, 2.0 * p), alpha, p);
  const double second = fm_factor(std::pow(h, p), alpha, 1.0 / p);
  return {first, second, first - second, first / second};
}

ConstantComparison compare_specht_vs_fm(double alpha, double r, double h) {
  require_alpha(alpha);
  require_range(r > 0.0 && r <= 1.0, "need 0 < r <= 1");
  require_range(h >= 1.0, "need h >= 1");
  const double first = std::pow(specht(h), r);
  const double second = fm_factor(h, alpha, r);
  return {first, second, first - second, first / second};
}

std::vector<ScanPoint> scan_specht_vs_fm(std::span<const double> alphas, std::span<const double> rs,
                                         std::span<const double> hs) {
  std::vector<ScanPoint> out;
  for (double a : alphas)
    for (double r : rs)
      for (double h : hs) out.push_back({a, r, h, compare_specht_vs_fm(a, r, h).difference});
  return out;
}

ConstantComparison compare_seo_constants(double alpha, double p, double m, double big_m) {
  require_alpha(alpha);
  require_range(p > 0.0 && p <= 1.0, "need 0 < p <= 1");
  require_range(m <= big_m, "need m <= M");
  const double d = big_m - m;
  const double fresh = kantorovich_root(std::exp(2.0 * p * d), alpha, p);
  // K(e^d, p)^{a/p} <= 1, computed directly to avoid a ratio of near-equal numbers.
  const double ratio = std::exp(alpha * std::log(kantorovich(std::exp(d), p)) / p);
  const double seo = fresh / ratio;
  return {fresh, seo, fresh - seo, ratio};
}

std::vector<ConvergenceRow> convergence_study(const HermitianMatrix& h, const HermitianMatrix& k, double s, double t,
                                              double alpha, std::span<const double> p_sequence, ReverseFactor kind) {
  require_alpha(alpha);
  require_same_dim(h.dim(), k.dim());
  if (p_sequence.empty()) throw Error(ErrorCode::EmptySequence, "p sequence is empty");
  const auto lhs = eigenvalues_desc(log_euclidean(h, k, alpha));
  std::vector<ConvergenceRow> rows;
  for (std::size_t i = 0; i < p_sequence.size(); ++i) {
    const double p = p_sequence[i];
    if (!(p > 0.0)) throw Error(ErrorCode::NonPositive, "p must be positive");
    if (i > 0 && !(p < p_sequence[i - 1])) throw Error(ErrorCode::BadRange, "p sequence must be strictly descending");
    const double factor = reverse_factor(kind, s, t, alpha, p);
    const auto base = mean_power_eigs(h, k, alpha, p);
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      const double rhs = factor * base[j];
      rows.push_back({p, j + 1, lhs[j], rhs, rhs - lhs[j]});
    }
  }
  return rows;
}

std::vector<double> max_relative_gaps(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double rel = std::abs(rows[i].gap) / rows[i].lhs;
    if (i == 0 || rows[i].p != rows[i - 1].p)
      out.push_back(rel);
    else
      out.back() = std::max(out.back(), rel);
  }
  return out;
}

}  // namespace golden_bounds
