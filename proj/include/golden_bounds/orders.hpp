#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "golden_bounds/matrix.hpp"
#include "json.hpp"

namespace golden_bounds {

enum class OrderRelation { Loewner, Sandwich, Olson, WeakLogMajorization, LogMajorization };

/// How a certificate was established. Grid evidence is not a proof for
/// non-commuting Olson pairs; the exact modes are.
enum class CertificateMode { Exact, GridEvidence, CommutingExact, SeparatedExact };

std::string_view to_string(OrderRelation r);
std::string_view to_string(CertificateMode m);

struct Witness {
  std::string label;
  double margin;
  double tolerance;
};

/// holds <=> worst_margin >= -tolerance, where the worst witness is the one
/// with the smallest margin/tolerance ratio.
struct OrderCertificate {
  OrderRelation relation;
  CertificateMode mode;
  bool holds;
  double worst_margin;
  std::string witness;
  double tolerance;
  std::vector<Witness> witnesses;
};

nlohmann::json to_json(const OrderCertificate& c);

/// Combine certificates (all must hold); witnesses are concatenated with a prefix.
OrderCertificate combine(OrderRelation relation, std::initializer_list<std::pair<std::string_view, const OrderCertificate*>> parts);

/// Tolerance used for a Loewner comparison of a and b given ||b - a||_F.
double loewner_tolerance(double diff_norm, double scale_norm);

/// A <= B: margin lambda_min(B - A), tolerance 1e-10 ||B - A||_F with a
/// rounding floor of 64 eps max(||A||_F, ||B||_F) (1e-12 absolute when both vanish).
OrderCertificate loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b);

struct SandwichBounds {
  double s;
  double t;
};

/// Tightest s, t with sA <= B <= tA: extreme eigenvalues of A^{-1/2} B A^{-1/2}.
SandwichBounds sandwich_bounds(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b);

/// Both Loewner checks sA <= B and B <= tA.
OrderCertificate sandwich_certificate(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                                      double s, double t);

inline constexpr std::array<double, 8> kDefaultOlsonGrid{1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0};

/// A <=_ols B (A^r <= B^r for all r >= 1). Exact for commuting pairs and for
/// separated spectra (lambda_max(A) <= lambda_min(B)); otherwise checked on
/// the grid, which must be nonempty, contain 1 and have entries >= 1 (BadGrid).
OrderCertificate olson_leq(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                           std::span<const double> grid = kDefaultOlsonGrid);

/// A <_wlog B on descending eigenvalue lists: prod_{j<=k} lambda_j(A) <= prod_{j<=k} lambda_j(B).
/// Tolerance at each k is 1e-9 * prod_{j<=k} lambda_j(B).
OrderCertificate weak_log_majorizes(std::span<const double> eig_a, std::span<const double> eig_b);
OrderCertificate weak_log_majorizes(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b);

/// Weak log-majorization plus equality of the full products.
OrderCertificate log_majorizes(std::span<const double> eig_a, std::span<const double> eig_b);
OrderCertificate log_majorizes(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b);

}  // namespace golden_bounds
