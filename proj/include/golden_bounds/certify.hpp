#pragma once

// One certifier per inequality. Each re-checks its hypothesis (HypothesisViolated
// on failure), evaluates both sides as stated and returns an InequalityReport.
// Parameters recorded in reports: alpha, p, q, r, s, t, m, M, h, factor.

#include <span>
#include <vector>

#include "golden_bounds/matrix.hpp"
#include "golden_bounds/report.hpp"

namespace golden_bounds {

inline constexpr double kDefaultReportTolerance = 1e-9;

// --- sandwich / Olson pairs, Specht factors ---------------------------------

/// A^r #_a B^r <= max{S(s), S(t)}^r (A #_a B)^r, 0 < r <= 1, under sA <= B <= tA.
InequalityReport certify_specht_power_low(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double s,
                                          double t, double alpha, double r,
                                          double tol = kDefaultReportTolerance);

/// lambda_k(A #_a B)^r <= max{S(s^r), S(t^r)} lambda_k(A^r #_a B^r), r >= 1,
/// under sA <=_ols B <=_ols tA.
InequalityReport certify_eigen_power_high(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double s,
                                          double t, double alpha, double r,
                                          double tol = kDefaultReportTolerance);

/// lambda_k(A^q #_a B^q)^{1/q} <= max{S(s^p), S(t^p)}^{1/p} lambda_k(A^p #_a B^p)^{1/p},
/// 0 < q <= p, under sA <=_ols B <=_ols tA.
InequalityReport certify_pq_reverse(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double s,
                                    double t, double alpha, double q, double p,
                                    double tol = kDefaultReportTolerance);

/// Specializations under mI <= A, B <= MI with h = M/m:
///   Low     A^r #_a B^r <= S(h)^r (A #_a B)^r             (Loewner, 0 < r <= 1)
///   Power   lambda_k(A #_a B)^r <= S(h^r) lambda_k(...)    (r >= 1)
///   PQ      factor S(h^p)^{1/p}                            (0 < q <= p)
enum class BoundedForm { Low, Power, PQ };

struct Exponents {
  double r = 1.0;
  double q = 1.0;
  double p = 1.0;
};

InequalityReport certify_bounded_corollary(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double m,
                                           double big_m, double alpha, BoundedForm form, Exponents e,
                                           double tol = kDefaultReportTolerance);

// --- reverse Golden-Thompson -------------------------------------------------

/// lambda_k(e^{(1-a)H + aK}) <= max{S(e^{sp}), S(e^{tp})}^{1/p} lambda_k((e^{pH} #_a e^{pK})^{1/p})
/// under e^s e^H <=_ols e^K <=_ols e^t e^H.
InequalityReport certify_gt_reverse_specht(const HermitianMatrix& h, const HermitianMatrix& k, double s, double t,
                                           double alpha, double p, double tol = kDefaultReportTolerance);

enum class NormKind { KyFan, Schatten1, Schatten2, SchattenInf };

struct NormId {
  NormKind kind;
  std::size_t k = 1;  // Ky Fan index
};

std::string norm_label(NormId id);
double evaluate_norm(const HermitianMatrix& x, NormId id);

/// Ky Fan 1..n and Schatten 1, 2, infinity.
std::vector<NormId> default_norm_family(std::size_t n);

/// Norm form of the Specht reverse for each norm in `norms`. With
/// include_squared, also the alpha = 1/2 special case
///   ||e^{H+K}|| <= max{S(e^{2s}), S(e^{2t})} ||e^{2H} # e^{2K}||
/// (entries labelled "squared:<norm>"); this form ignores alpha and p.
InequalityReport certify_gt_reverse_norm(const HermitianMatrix& h, const HermitianMatrix& k, double s, double t,
                                         double alpha, double p, std::span<const NormId> norms,
                                         bool include_squared = true, double tol = kDefaultReportTolerance);

enum class ConclusionForm { Eigenvalue, Norm };

/// Factor S(e^{(M-m)p})^{1/p} under mI <= H, K <= MI.
InequalityReport certify_corollary_seo(const HermitianMatrix& h, const HermitianMatrix& k, double m, double big_m,
                                       double alpha, double p, ConclusionForm form = ConclusionForm::Eigenvalue,
                                       double tol = kDefaultReportTolerance);

// --- Kantorovich -------------------------------------------------------------

/// U A^{-1} U* <= ((m + M)^2 / 4mM) (U A U*)^{-1} for mI <= A <= MI and U U* = I.
InequalityReport certify_kantorovich_matrix(const PositiveDefiniteMatrix& a, double m, double big_m, const Matrix& u,
                                            double tol = kDefaultReportTolerance);

/// Factor K(e^{p(t-s)}, a)^{-1/p} under e^s e^H <=_ols e^K <=_ols e^t e^H.
InequalityReport certify_gt_reverse_kantorovich(const HermitianMatrix& h, const HermitianMatrix& k, double s,
                                                double t, double alpha, double p,
                                                double tol = kDefaultReportTolerance);

/// Factor K(e^{2p(M-m)}, a)^{-1/p} under mI <= H, K <= MI. With include_squared,
/// also lambda_k(e^{H+K}) <= (e^{2M} + e^{2m}) / (2 e^{M+m}) lambda_k(e^{2H} # e^{2K})
/// (entries "squared:k=.."), after checking that this constant equals K(e^{4(M-m)}, 1/2)^{-1}.
InequalityReport certify_gt_reverse_kantorovich_bounded(const HermitianMatrix& h, const HermitianMatrix& k, double m,
                                                        double big_m, double alpha, double p,
                                                        bool include_squared = true,
                                                        double tol = kDefaultReportTolerance);

/// |K(e^{4d}, 1/2)^{-1} - (e^{2d} + 1) / (2 e^d)| relative to the latter, d = M - m.
double kantorovich_squared_identity_gap(double m, double big_m);

// --- Furuichi-Minculete factor -------------------------------------------------

/// A^r #_a B^r <= exp(r a(1-a)(1 - 1/h)^2) (A #_a B)^r under mI <= A <= B <= MI <= I.
InequalityReport certify_fm_low(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double m,
                                double big_m, double alpha, double r, double tol = kDefaultReportTolerance);

/// Under mI <=_ols A <=_ols B <=_ols MI <=_ols I:
///   form Power  lambda_k(A #_a B)^r <= exp(a(1-a)(1 - 1/h^r)^2) lambda_k(A^r #_a B^r), r >= 1
///   form PQ     factor exp((1/p) a(1-a)(1 - 1/h^p)^2), 0 < q <= p
InequalityReport certify_fm_eigen(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b, double m,
                                  double big_m, double alpha, BoundedForm form, Exponents e,
                                  double tol = kDefaultReportTolerance);

/// Factor exp((1/p) a(1-a)(1 - e^{-p(M-m)})^2) under e^m I <=_ols e^H <=_ols e^K <=_ols e^M I <=_ols I (M <= 0).
InequalityReport certify_fm_gt(const HermitianMatrix& h, const HermitianMatrix& k, double m, double big_m,
                               double alpha, double p, ConclusionForm form = ConclusionForm::Eigenvalue,
                               double tol = kDefaultReportTolerance);

// --- forward baselines -------------------------------------------------------

/// A^r #_a B^r <_log (A #_a B)^r, r >= 1.
InequalityReport certify_forward_ando_hiai(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                                           double alpha, double r, double tol = kDefaultReportTolerance);

/// Tr e^{H+K} <= Tr e^H e^K.
InequalityReport certify_forward_golden_thompson(const HermitianMatrix& h, const HermitianMatrix& k,
                                                 double tol = kDefaultReportTolerance);

/// ||(e^{pH} #_a e^{pK})^{1/p}|| <= ||e^{(1-a)H + aK}|| over `norms`.
InequalityReport certify_forward_norm(const HermitianMatrix& h, const HermitianMatrix& k, double alpha, double p,
                                      std::span<const NormId> norms, double tol = kDefaultReportTolerance);

// --- constant comparisons ------------------------------------------------------

struct ConstantComparison {
  double first;   // kantorovich / specht / new constant
  double second;  // fm / fm / Seo product constant
  double difference;  // first - second
  double ratio;       // first / second
};

/// K(h^{2p}, a)^{-1/p} versus exp((1/p) a(1-a)(1 - 1/h^p)^2).
ConstantComparison compare_constants_remark(double alpha, double p, double h);

/// S(h)^r versus exp(r a(1-a)(1 - 1/h)^2).
ConstantComparison compare_specht_vs_fm(double alpha, double r, double h);

struct ScanPoint {
  double alpha;
  double r;
  double h;
  double difference;
};

/// compare_specht_vs_fm over the product grid.
std::vector<ScanPoint> scan_specht_vs_fm(std::span<const double> alphas, std::span<const double> rs,
                                         std::span<const double> hs);

/// K(e^{2p(M-m)}, a)^{-1/p} versus K(e^{M-m}, p)^{-a/p} K(e^{2p(M-m)}, a)^{-1/p}, 0 < p <= 1.
ConstantComparison compare_seo_constants(double alpha, double p, double m, double big_m);

// --- convergence -----------------------------------------------------------------

enum class ReverseFactor { Specht, Kantorovich };

/// Reverse factor at exponent p for the Olson scalars s <= t:
/// max{S(e^{sp}), S(e^{tp})}^{1/p} or K(e^{p(t-s)}, a)^{-1/p}.
double reverse_factor(ReverseFactor kind, double s, double t, double alpha, double p);

struct ConvergenceRow {
  double p;
  std::size_t k;
  double lhs;  // lambda_k(e^{(1-a)H + aK})
  double rhs;  // factor * lambda_k((e^{pH} #_a e^{pK})^{1/p})
  double gap;  // rhs - lhs
};

/// Rows ordered by p (as given, strictly descending) then k. Throws EmptySequence / BadRange.
std::vector<ConvergenceRow> convergence_study(const HermitianMatrix& h, const HermitianMatrix& k, double s, double t,
                                              double alpha, std::span<const double> p_sequence,
                                              ReverseFactor kind = ReverseFactor::Specht);

/// max_k gap / lhs at each p.
std::vector<double> max_relative_gaps(const std::vector<ConvergenceRow>& rows);

}  // namespace golden_bounds
