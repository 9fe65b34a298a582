#pragma once

// Scalar reverse-inequality constants: the Specht ratio, the generalized
// Kantorovich constant and the Furuichi-Minculete exponential factor.

#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace golden_bounds {

enum class ConstantName { Specht, SpechtRoot, Kantorovich, KantorovichLowerBound, FMFactor };
enum class EvalBranch { Direct, Series, Limit };

std::string_view to_string(ConstantName name);
std::string_view to_string(EvalBranch branch);

/// A constant value together with the evaluation path that produced it.
struct ConstantEval {
  ConstantName name;
  std::vector<double> arguments;
  double value;
  EvalBranch branch;
};

nlohmann::json to_json(const ConstantEval& e);

/// S(t) = (t-1) t^{1/(t-1)} / (e log t), S(1) = 1.
///
/// For |t - 1| < 1e-6 the removable singularity is handled with the series
/// log S = u^2/8 - u^4/576 in u = log t. Throws NonPositive for t <= 0.
ConstantEval specht_eval(double t);
double specht(double t);

/// S(t^p)^{1/p}; tends to 1 as p -> 0.
double specht_p_root(double t, double p);

/// Generalized Kantorovich constant
///   K(w, a) = (w^a - w) / ((a - 1)(w - 1)) * ((a - 1)/a * (w^a - 1)/(w^a - w))^a
/// for any real a. Removable points w = 1, a = 0, a = 1 evaluate to 1; within
/// 1e-8 of a = 0 or a = 1 a first-order expansion is used (branch Limit).
ConstantEval kantorovich_eval(double w, double alpha);
double kantorovich(double w, double alpha);

/// 2 w^{1/4} / (w^{1/2} + 1), a lower bound for K(w, a) on a in [0, 1].
double kantorovich_lower_bound(double w);

/// K(w^p, a)^{-1/p} along a strictly descending positive p sequence.
/// Throws EmptySequence, NonPositive, BadRange (not descending).
std::vector<double> kantorovich_limit_root(double w, double alpha, std::span<const double> p_sequence);

/// exp(scale * a (1 - a) (1 - 1/h)^2). Throws BadRange for h < 1 or a outside
/// [0, 1], NonPositive for scale <= 0.
double fm_factor(double h, double alpha, double scale);

struct AmGmCheck {
  double lhs;  // arithmetic mean
  double rhs;  // S(max/min) * geometric mean
  double margin;
};

/// Specht's reverse AM-GM inequality on a positive list.
AmGmCheck scalar_specht_amgm_check(std::span<const double> x);

}  // namespace golden_bounds
