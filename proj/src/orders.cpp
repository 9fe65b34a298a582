#include "golden_bounds/orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "golden_bounds/error.hpp"
#include "golden_bounds/spectral.hpp"

namespace golden_bounds {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

OrderCertificate finish(OrderRelation relation, CertificateMode mode, std::vector<Witness> witnesses) {
  OrderCertificate c{relation, mode, true, 0.0, "", 0.0, std::move(witnesses)};
  double worst_ratio = std::numeric_limits<double>::infinity();
  for (const Witness& w : c.witnesses) {
    const double ratio = w.margin / std::max(w.tolerance, std::numeric_limits<double>::min());
    if (ratio < worst_ratio) {
      worst_ratio = ratio;
      c.worst_margin = w.margin;
      c.tolerance = w.tolerance;
      c.witness = w.label;
    }
    if (w.margin < -w.tolerance) c.holds = false;
  }
  return c;
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::DimMismatch, "order relation needs equal dimensions");
}

Witness loewner_witness(const HermitianMatrix& a, const HermitianMatrix& b, std::string label) {
  const HermitianMatrix diff = b - a;
  const double margin = min_eigenvalue(diff);
  const double tol = loewner_tolerance(diff.frobenius_norm(),
                                       std::max(a.frobenius_norm(), b.frobenius_norm()));
  return {std::move(label), margin, tol};
}

double off_diagonal_norm(const Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

// Paired eigenvalues of commuting A, B along a common eigenbasis; empty if the
// joint diagonalization is not clean.
bool joint_spectrum(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                    std::vector<double>& ea, std::vector<double>& eb) {
  const double na = a.hermitian().frobenius_norm();
  const double nb = b.hermitian().frobenius_norm();
  const double kappa = 0.6180339887498949 * na / nb;
  const SpectralDecomposition mix = spectral_decompose(a.hermitian() + kappa * b.hermitian());
  const Matrix& w = mix.eigenvectors;
  const Matrix wa = w.adjoint() * a.matrix() * w;
  const Matrix wb = w.adjoint() * b.matrix() * w;
  if (off_diagonal_norm(wa) > 1e-8 * na || off_diagonal_norm(wb) > 1e-8 * nb) return false;
  const std::size_t n = a.dim();
  ea.resize(n);
  eb.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ea[i] = wa(i, i).real();
    eb[i] = wb(i, i).real();
  }
  return true;
}

}  // namespace

std::string_view to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::Loewner: return "loewner";
    case OrderRelation::Sandwich: return "sandwich";
    case OrderRelation::Olson: return "olson";
    case OrderRelation::WeakLogMajorization: return "weak-log-majorization";
    case OrderRelation::LogMajorization: return "log-majorization";
  }
  return "unknown";
}

std::string_view to_string(CertificateMode m) {
  switch (m) {
    case CertificateMode::Exact: return "exact";
    case CertificateMode::GridEvidence: return "grid-evidence";
    case CertificateMode::CommutingExact: return "commuting-exact";
    case CertificateMode::SeparatedExact: return "separated-exact";
  }
  return "unknown";
}

nlohmann::json to_json(const OrderCertificate& c) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& w : c.witnesses)
    witnesses.push_back({{"label", w.label}, {"margin", w.margin}, {"tolerance", w.tolerance}});
  return {{"relation", to_string(c.relation)}, {"mode", to_string(c.mode)},
          {"holds", c.holds},                  {"worst_margin", c.worst_margin},
          {"witness", c.witness},              {"tolerance", c.tolerance},
          {"witnesses", std::move(witnesses)}};
}

OrderCertificate combine(OrderRelation relation,
                         std::initializer_list<std::pair<std::string_view, const OrderCertificate*>> parts) {
  std::vector<Witness> all;
  CertificateMode mode = CertificateMode::Exact;
  for (const auto& [prefix, cert] : parts) {
    // The weakest mode wins: any grid evidence makes the whole certificate grid evidence.
    if (cert->mode == CertificateMode::GridEvidence) mode = CertificateMode::GridEvidence;
    for (const Witness& w : cert->witnesses)
      all.push_back({std::string(prefix) + ":" + w.label, w.margin, w.tolerance});
  }
  return finish(relation, mode, std::move(all));
}

double loewner_tolerance(double diff_norm, double scale_norm) {
  const double tol = std::max(1e-10 * diff_norm, 64.0 * kEps * scale_norm);
  return tol > 0.0 ? tol : 1e-12;
}

OrderCertificate loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a.dim(), b.dim());
  return finish(OrderRelation::Loewner, CertificateMode::Exact, {loewner_witness(a, b, "lambda_min(B-A)")});
}

SandwichBounds sandwich_bounds(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b) {
  require_same_dim(a.dim(), b.dim());
  if (a.condition_number() > 1e12) throw Error(ErrorCode::CondError, "cond(A) exceeds 1e12");
  const PositiveDefiniteMatrix inv_sqrt = power(a, -0.5);
  const std::vector<double> e = eigenvalues_desc(congruence(inv_sqrt.matrix(), b));
  return {e.back(), e.front()};
}

OrderCertificate sandwich_certificate(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                                      double s, double t) {
  require_same_dim(a.dim(), b.dim());
  return finish(OrderRelation::Sandwich, CertificateMode::Exact,
                {loewner_witness(s * a.hermitian(), b, "sA<=B"),
                 loewner_witness(b, t * a.hermitian(), "B<=tA")});
}

OrderCertificate olson_leq(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                           std::span<const double> grid) {
  require_same_dim(a.dim(), b.dim());
  if (grid.empty() || std::find(grid.begin(), grid.end(), 1.0) == grid.end() ||
      std::any_of(grid.begin(), grid.end(), [](double r) { return !(r >= 1.0); }))
    throw Error(ErrorCode::BadGrid, "Olson grid must be nonempty, contain 1, and have entries >= 1");

  const double na = a.hermitian().frobenius_norm();
  const double nb = b.hermitian().frobenius_norm();

  if (commutator_norm(a.matrix(), b.matrix()) <= 1e-10 * na * nb) {
    std::vector<double> ea, eb;
    if (joint_spectrum(a, b, ea, eb)) {
      // Commuting: A^r <= B^r for all r >= 1 iff a_i <= b_i on the common basis.
      std::vector<Witness> w;
      for (std::size_t i = 0; i < ea.size(); ++i)
        w.push_back({"pair " + std::to_string(i), eb[i] - ea[i],
                     loewner_tolerance(std::abs(eb[i] - ea[i]), std::max(std::abs(ea[i]), std::abs(eb[i])))});
      return finish(OrderRelation::Olson, CertificateMode::CommutingExact, std::move(w));
    }
  }

  const double gap = b.min_eigenvalue() - a.max_eigenvalue();
  if (gap >= 0.0) {
    return finish(OrderRelation::Olson, CertificateMode::SeparatedExact,
                  {{"lambda_min(B)-lambda_max(A)", gap, loewner_tolerance(gap, std::max(na, nb))}});
  }

  std::vector<Witness> w;
  for (double r : grid)
    w.push_back(loewner_witness(power(a, r), power(b, r), "r=" + format_double(r)));
  return finish(OrderRelation::Olson, CertificateMode::GridEvidence, std::move(w));
}

OrderCertificate weak_log_majorizes(std::span<const double> eig_a, std::span<const double> eig_b) {
  require_same_dim(eig_a.size(), eig_b.size());
  std::vector<Witness> w;
  double pa = 1.0;
  double pb = 1.0;
  for (std::size_t k = 0; k < eig_a.size(); ++k) {
    pa *= eig_a[k];
    pb *= eig_b[k];
    w.push_back({"k=" + std::to_string(k + 1), pb - pa, 1e-9 * std::abs(pb)});
  }
  return finish(OrderRelation::WeakLogMajorization, CertificateMode::Exact, std::move(w));
}

OrderCertificate weak_log_majorizes(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b) {
  return weak_log_majorizes(a.spectrum().eigenvalues, b.spectrum().eigenvalues);
}

OrderCertificate log_majorizes(std::span<const double> eig_a, std::span<const double> eig_b) {
  OrderCertificate c = weak_log_majorizes(eig_a, eig_b);
  double pa = 1.0;
  double pb = 1.0;
  for (std::size_t k = 0; k < eig_a.size(); ++k) {
    pa *= eig_a[k];
    pb *= eig_b[k];
  }
  c.witnesses.push_back({"det-reverse", pa - pb, 1e-9 * std::abs(pb)});
  return finish(OrderRelation::LogMajorization, CertificateMode::Exact, std::move(c.witnesses));
}

OrderCertificate log_majorizes(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b) {
  return log_majorizes(a.spectrum().eigenvalues, b.spectrum().eigenvalues);
}

}  // namespace golden_bounds
