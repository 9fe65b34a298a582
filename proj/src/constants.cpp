#include "golden_bounds/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "golden_bounds/error.hpp"

namespace golden_bounds {

namespace {

constexpr double kSpechtRootSeriesRadius = 1e-2;
constexpr double kSpechtSeriesRadius = 1e-6;
constexpr double kKantorovichLimitRadius = 1e-8;

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw Error(ErrorCode::NonPositive, std::string(what) + " must be positive");
}

double log_specht_series(double u) {
  const double u2 = u * u;
  return u2 / 8.0 - u2 * u2 / 576.0;
}

// Even series of log S in v = u/2 through v^8; truncation below 1e-22 relative for |u| < 1e-2.
double log_specht_series_long(double u) {
  const double v2 = 0.25 * u * u;
  return v2 * (0.5 + v2 * (-1.0 / 36.0 + v2 * (1.0 / 405.0 - v2 / 4200.0)));
}

// log S in terms of u = log t. The direct form cancels to ~1e-16 absolute, so
// the long series covers |u| < 1e-2 where log S itself is below 1.3e-5.
double log_specht_from_log(double u, EvalBranch& branch) {
  const double tm1 = std::expm1(u);
  if (std::abs(u) < kSpechtRootSeriesRadius) {
    branch = u == 0.0 ? EvalBranch::Limit : EvalBranch::Series;
    return log_specht_series_long(u);
  }
  branch = EvalBranch::Direct;
  return std::log(std::abs(tm1)) - std::log(std::abs(u)) + u / tm1 - 1.0;
}

}  // namespace

std::string_view to_string(ConstantName name) {
  switch (name) {
    case ConstantName::Specht: return "specht";
    case ConstantName::SpechtRoot: return "specht-root";
    case ConstantName::Kantorovich: return "kantorovich";
    case ConstantName::KantorovichLowerBound: return "kantorovich-lower";
    case ConstantName::FMFactor: return "fm";
  }
  return "unknown";
}

std::string_view to_string(EvalBranch branch) {
  switch (branch) {
    case EvalBranch::Direct: return "direct";
    case EvalBranch::Series: return "series";
    case EvalBranch::Limit: return "limit";
  }
  return "unknown";
}

nlohmann::json to_json(const ConstantEval& e) {
  return {{"name", to_string(e.name)},
          {"arguments", e.arguments},
          {"value", e.value},
          {"branch", to_string(e.branch)}};
}

ConstantEval specht_eval(double t) {
  require_positive(t, "Specht argument");
  if (t == 1.0) return {ConstantName::Specht, {t}, 1.0, EvalBranch::Limit};
  const double tm1 = t - 1.0;
  const double u = std::log(t);
  if (std::abs(tm1) < kSpechtSeriesRadius)
    return {ConstantName::Specht, {t}, std::exp(log_specht_series(u)), EvalBranch::Series};
  const double log_s = std::log(std::abs(tm1)) - std::log(std::abs(u)) + u / tm1 - 1.0;
  return {ConstantName::Specht, {t}, std::exp(log_s), EvalBranch::Direct};
}

double specht(double t) { return specht_eval(t).value; }

double specht_p_root(double t, double p) {
  require_positive(t, "Specht argument");
  require_positive(p, "exponent p");
  EvalBranch branch;
  return std::exp(log_specht_from_log(p * std::log(t), branch) / p);
}

ConstantEval kantorovich_eval(double w, double alpha) {
  require_positive(w, "Kantorovich argument w");
  const auto result = [&](double value, EvalBranch b) {
    return ConstantEval{ConstantName::Kantorovich, {w, alpha}, value, b};
  };
  if (std::abs(w - 1.0) < kKantorovichLimitRadius || alpha == 0.0 || alpha == 1.0)
    return result(1.0, EvalBranch::Limit);

  const double log_w = std::log(w);
  if (std::abs(alpha) < kKantorovichLimitRadius) {
    const double x = log_w / (w - 1.0);
    return result(std::exp(alpha * (1.0 - x + std::log(x))), EvalBranch::Limit);
  }
  if (std::abs(alpha - 1.0) < kKantorovichLimitRadius) {
    const double y = w * log_w / (w - 1.0);
    return result(std::exp((1.0 - alpha) * (1.0 - y + std::log(y))), EvalBranch::Limit);
  }

  // w^a - 1 = expm1(a log w), w^a - w = w expm1((a - 1) log w)
  const double pow_minus_one = std::expm1(alpha * log_w);
  const double pow_minus_w = w * std::expm1((alpha - 1.0) * log_w);
  const double head = pow_minus_w / ((alpha - 1.0) * (w - 1.0));
  const double base = (alpha - 1.0) / alpha * pow_minus_one / pow_minus_w;
  if (!(head > 0.0) || !(base > 0.0))
    throw Error(ErrorCode::DomainError, "Kantorovich constant undefined at w=" + std::to_string(w) +
                                            ", alpha=" + std::to_string(alpha));
  return result(std::exp(std::log(head) + alpha * std::log(base)), EvalBranch::Direct);
}

double kantorovich(double w, double alpha) { return kantorovich_eval(w, alpha).value; }

double kantorovich_lower_bound(double w) {
  require_positive(w, "Kantorovich argument w");
  return 2.0 * std::pow(w, 0.25) / (std::sqrt(w) + 1.0);
}

std::vector<double> kantorovich_limit_root(double w, double alpha, std::span<const double> p_sequence) {
  require_positive(w, "Kantorovich argument w");
  if (p_sequence.empty()) throw Error(ErrorCode::EmptySequence, "p sequence is empty");
  std::vector<double> out;
  out.reserve(p_sequence.size());
  for (std::size_t i = 0; i < p_sequence.size(); ++i) {
    const double p = p_sequence[i];
    require_positive(p, "exponent p");
    if (i > 0 && !(p < p_sequence[i - 1]))
      throw Error(ErrorCode::BadRange, "p sequence must be strictly descending");
    const double wp = std::exp(p * std::log(w));
    out.push_back(std::exp(-std::log(kantorovich(wp, alpha)) / p));
  }
  return out;
}

double fm_factor(double h, double alpha, double scale) {
  if (!(h >= 1.0)) throw Error(ErrorCode::BadRange, "FM factor needs h >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::BadRange, "FM factor needs alpha in [0,1]");
  require_positive(scale, "FM scale");
  const double gap = 1.0 - 1.0 / h;
  return std::exp(scale * alpha * (1.0 - alpha) * gap * gap);
}

AmGmCheck scalar_specht_amgm_check(std::span<const double> x) {
  if (x.empty()) throw Error(ErrorCode::EmptySequence, "AM-GM check needs a nonempty list");
  double lo = x.front();
  double hi = x.front();
  double sum = 0.0;
  double log_sum = 0.0;
  for (double v : x) {
    require_positive(v, "AM-GM entry");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
    log_sum += std::log(v);
  }
  const double n = static_cast<double>(x.size());
  const double lhs = sum / n;
  const double rhs = specht(hi / lo) * std::exp(log_sum / n);
  return {lhs, rhs, rhs - lhs};
}

}  // namespace golden_bounds
