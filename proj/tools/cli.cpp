#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "golden_bounds/campaign.hpp"
#include "golden_bounds/certify.hpp"
#include "golden_bounds/constants.hpp"
#include "golden_bounds/error.hpp"
#include "golden_bounds/matrix_io.hpp"
#include "golden_bounds/sampling.hpp"
#include "golden_bounds/spectral.hpp"
#include "json.hpp"

namespace golden_bounds::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kRemarkTolerance = 1e-6;

struct RemarkCase {
  const char* label;
  double alpha, p, h, expected;
};
constexpr RemarkCase kRemarkCases[] = {
    {"remark-i", 0.5, 0.5, 2.0, -0.0134963},
    {"remark-ii", 0.5, 0.5, 8.0, 0.0631159},
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GOLDEN_BOUNDS_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used, 0);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("GOLDEN_BOUNDS_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

// Writes to --out when given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

nlohmann::json read_json_argument(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg.front() != '{') {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

struct ConstantsArgs {
  std::string name;
  std::vector<double> values;
  bool json = false;
};

int cmd_constants(const ConstantsArgs& a, std::ostream& out) {
  const auto need = [&](std::size_t k, const char* usage) {
    if (a.values.size() != k) throw UsageError(std::string("usage: constants ") + usage);
  };
  ConstantEval e{};
  if (a.name == "specht") {
    need(1, "specht <t>");
    e = specht_eval(a.values[0]);
  } else if (a.name == "specht-root") {
    need(2, "specht-root <t> <p>");
    e = {ConstantName::SpechtRoot, a.values, specht_p_root(a.values[0], a.values[1]), EvalBranch::Direct};
  } else if (a.name == "kantorovich") {
    need(2, "kantorovich <w> <alpha>");
    e = kantorovich_eval(a.values[0], a.values[1]);
  } else if (a.name == "kantorovich-lower") {
    need(1, "kantorovich-lower <w>");
    e = {ConstantName::KantorovichLowerBound, a.values, kantorovich_lower_bound(a.values[0]), EvalBranch::Direct};
  } else if (a.name == "fm" || a.name == "fm-factor") {
    if (a.values.size() == 2)
      e = {ConstantName::FMFactor, {a.values[0], a.values[1], 1.0}, fm_factor(a.values[0], a.values[1], 1.0),
           EvalBranch::Direct};
    else {
      need(3, "fm <h> <alpha> [scale]");
      e = {ConstantName::FMFactor, a.values, fm_factor(a.values[0], a.values[1], a.values[2]), EvalBranch::Direct};
    }
  } else {
    throw UsageError("unknown constant \"" + a.name + "\" (specht, specht-root, kantorovich, kantorovich-lower, fm)");
  }
  if (a.json)
    out << to_json(e).dump() << '\n';
  else
    out << format_g17(e.value) << '\n';
  return kExitPass;
}

struct CertifyArgs {
  std::string id;
  std::optional<std::uint64_t> seed;
  std::size_t n = 4;
  std::size_t count = 200;
  double tol = 1e-9;
  std::string format = "json";
  std::string out_path;
  bool commuting = false;
  unsigned jobs = 0;
  Overrides overrides;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto id = resolve_certifier(a.id);
  if (!id) throw UsageError("unknown inequality id \"" + a.id + "\" (see `list`)");
  if (a.count < 1) throw UsageError("--count must be >= 1");
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  SweepConfig cfg;
  cfg.id = *id;
  cfg.seed = resolve_seed(a.seed);
  cfg.n = a.n;
  cfg.count = a.count;
  cfg.tolerance = a.tol;
  if (a.commuting) cfg.commuting = true;
  cfg.overrides = a.overrides;

  const SweepResult result = run_sweep(cfg, a.jobs);
  Sink sink(a.out_path, out);
  std::ostream& os = sink.stream();
  if (a.format == "csv") {
    write_csv_header(os);
    for (std::size_t i = 0; i < result.reports.size(); ++i) write_csv_rows(os, i, result.reports[i]);
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < result.reports.size(); ++i) {
      nlohmann::json j = to_json(result.reports[i]);
      j["instance"] = i;
      j["seed"] = derive_seed(cfg.seed, i);
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
  }
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& r : result.reports) worst = std::min(worst, r.worst_relative_margin());
  err << cfg.id << ": " << result.reports.size() << " instances, " << result.violations
      << " violations, worst relative margin " << format_g17(worst) << '\n';
  return result.violations == 0 ? kExitPass : kExitViolation;
}

int cmd_list(std::ostream& out) {
  for (const auto& c : certifier_catalog()) {
    out << c.id;
    for (const auto& a : c.aliases) out << ' ' << a;
    out << "\n    " << c.summary << '\n';
  }
  return kExitPass;
}

int cmd_reproduce_remark(std::ostream& out) {
  bool ok = true;
  for (const RemarkCase& c : kRemarkCases) {
    const ConstantComparison cmp = compare_constants_remark(c.alpha, c.p, c.h);
    const double delta = std::abs(cmp.difference - c.expected);
    const bool match = delta <= kRemarkTolerance;
    ok = ok && match;
    out << c.label << " alpha=" << format_g17(c.alpha) << " p=" << format_g17(c.p) << " h=" << format_g17(c.h)
        << " kantorovich=" << format_g17(cmp.first) << " fm=" << format_g17(cmp.second)
        << " difference=" << format_g17(cmp.difference) << " expected=" << format_g17(c.expected)
        << " delta=" << format_g17(delta) << (match ? " ok" : " MISMATCH") << '\n';
  }
  return ok ? kExitPass : kExitViolation;
}

struct ConvergenceArgs {
  std::optional<std::uint64_t> seed;
  std::size_t n = 4;
  double alpha = 0.5;
  double m = -1.0;
  double big_m = 1.0;
  std::vector<double> ps{1.0, 0.3, 0.1, 0.03, 0.01, 1e-3, 1e-4};
  std::string factor = "specht";
  bool identical = false;
  bool commuting = false;
  std::string out_path;
};

int cmd_convergence(const ConvergenceArgs& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be >= 1");
  if (!(a.m <= a.big_m)) throw UsageError("need --m <= --M");
  ReverseFactor kind;
  if (a.factor == "specht")
    kind = ReverseFactor::Specht;
  else if (a.factor == "kantorovich")
    kind = ReverseFactor::Kantorovich;
  else
    throw UsageError("--factor must be specht or kantorovich");
  SamplerConfig sc;
  sc.n = a.n;
  sc.seed = resolve_seed(a.seed);
  sc.lo = a.m;
  sc.hi = a.big_m;
  sc.mode = a.commuting ? SamplerMode::Commuting : SamplerMode::General;
  Sampler sampler(sc);
  const ExponentialPair pair = sampler.olson_exponential_pair(a.m, a.big_m, a.identical);
  const auto rows = convergence_study(pair.h, pair.k, pair.s, pair.t, a.alpha, a.ps, kind);
  Sink sink(a.out_path, out);
  std::ostream& os = sink.stream();
  os << "p,k,lhs,rhs,gap\n";
  for (const auto& r : rows)
    os << format_g17(r.p) << ',' << r.k << ',' << format_g17(r.lhs) << ',' << format_g17(r.rhs) << ','
       << format_g17(r.gap) << '\n';
  return kExitPass;
}

struct SampleArgs {
  std::string config;
  std::string kind = "pd";
  std::size_t count = 1;
  std::optional<double> s, t, m, big_m;
  std::string out_path;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  const SamplerConfig cfg = sampler_config_from_json(read_json_argument(a.config));
  if (a.count < 1) throw UsageError("--count must be >= 1");
  Sampler sampler(cfg);
  const double m = a.m.value_or(cfg.lo);
  const double big_m = a.big_m.value_or(cfg.hi);
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t i = 0; i < a.count; ++i) {
    if (a.kind == "pd") {
      const PositiveDefiniteMatrix x = sampler.random_pd();
      samples.push_back({{"A", matrix_to_json(x.hermitian())}, {"eigenvalues", eigenvalues_desc(x)}});
    } else if (a.kind == "hermitian") {
      const HermitianMatrix x = sampler.random_bounded_hermitian();
      samples.push_back({{"H", matrix_to_json(x)}, {"eigenvalues", eigenvalues_desc(x)}});
    } else if (a.kind == "sandwich") {
      samples.push_back(to_json(sampler.sandwich_pair(a.s.value_or(0.5), a.t.value_or(2.0))));
    } else if (a.kind == "olson-pair") {
      samples.push_back(to_json(sampler.olson_bounded_pair(m, big_m)));
    } else if (a.kind == "olson-exponential") {
      samples.push_back(to_json(sampler.olson_exponential_pair(m, big_m)));
    } else if (a.kind == "loewner-chain") {
      samples.push_back(to_json(sampler.loewner_chain(m, big_m)));
    } else if (a.kind == "olson-chain") {
      samples.push_back(to_json(sampler.olson_chain(m, big_m)));
    } else if (a.kind == "exponential-chain") {
      samples.push_back(to_json(sampler.exponential_chain(m, big_m)));
    } else {
      throw UsageError("unknown --kind \"" + a.kind + "\"");
    }
  }
  Sink sink(a.out_path, out);
  sink.stream() << nlohmann::json{{"config", to_json(cfg)}, {"kind", a.kind}, {"samples", samples}}.dump(2) << '\n';
  return kExitPass;
}

template <class T>
void add_optional(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reverse Golden-Thompson bounds: constants, certification sweeps and convergence tables.",
               "golden-bounds"};
  app.require_subcommand(1);

  ConstantsArgs ca;
  auto* constants = app.add_subcommand("constants", "Evaluate a scalar constant at full precision");
  constants->add_option("name", ca.name, "specht | specht-root | kantorovich | kantorovich-lower | fm")->required();
  constants->add_option("args", ca.values, "Numeric arguments")->required();
  constants->add_flag("--json", ca.json, "Print the evaluation as JSON");

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Run a seeded certification sweep for one inequality");
  certify->add_option("id", cert.id, "Inequality id or alias (see `list`)")->required();
  add_optional(certify, "--seed", cert.seed, "Base seed (default: $GOLDEN_BOUNDS_SEED, else 0)");
  certify->add_option("--n", cert.n, "Dimension; 0 cycles n over 2..6")->capture_default_str();
  certify->add_option("--count", cert.count, "Number of instances")->capture_default_str();
  certify->add_option("--tol", cert.tol, "Relative tolerance per entry")->capture_default_str();
  certify->add_option("--format", cert.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  certify->add_option("--out", cert.out_path, "Report path (default: stdout)");
  certify->add_flag("--commuting", cert.commuting, "Sample commuting inputs only (default: alternate)");
  certify->add_option("--jobs", cert.jobs, "Worker threads; 0 uses all cores")->capture_default_str();
  add_optional(certify, "--alpha", cert.overrides.alpha, "Fix the mean weight (default: random in [0,1])");
  add_optional(certify, "--p", cert.overrides.p, "Fix the exponent p");
  add_optional(certify, "--q", cert.overrides.q, "Fix the exponent q");
  add_optional(certify, "--r", cert.overrides.r, "Fix the exponent r");
  add_optional(certify, "--m", cert.overrides.m, "Fix the lower spectral bound m");
  add_optional(certify, "--M", cert.overrides.big_m, "Fix the upper spectral bound M");
  add_optional(certify, "--s", cert.overrides.s, "Fix the lower sandwich scalar s");
  add_optional(certify, "--t", cert.overrides.t, "Fix the upper sandwich scalar t");

  auto* list = app.add_subcommand("list", "List inequality ids and aliases");

  auto* remark = app.add_subcommand("reproduce-remark",
                                    "Print the Kantorovich-versus-exponential constant differences at h = 2 and h = 8");

  ConvergenceArgs cv;
  auto* convergence = app.add_subcommand("convergence", "CSV table of the reverse bound as p decreases");
  add_optional(convergence, "--seed", cv.seed, "Seed (default: $GOLDEN_BOUNDS_SEED, else 0)");
  convergence->add_option("--n", cv.n, "Dimension")->capture_default_str();
  convergence->add_option("--alpha", cv.alpha, "Mean weight")->capture_default_str();
  convergence->add_option("--m", cv.m, "Lower spectral bound of H, K")->capture_default_str();
  convergence->add_option("--M", cv.big_m, "Upper spectral bound of H, K")->capture_default_str();
  convergence->add_option("--p", cv.ps, "Strictly descending exponents")->delimiter(',')->capture_default_str();
  convergence->add_option("--factor", cv.factor, "specht | kantorovich")->capture_default_str();
  convergence->add_flag("--identical", cv.identical, "Use K = H");
  convergence->add_flag("--commuting", cv.commuting, "Sample a commuting pair");
  convergence->add_option("--out", cv.out_path, "CSV path (default: stdout)");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Draw matrices or hypothesis pairs from a sampler config");
  sample->add_option("config", sa.config, "Sampler config: JSON file or inline JSON object")->required();
  sample->add_option("--kind", sa.kind,
                     "pd | hermitian | sandwich | olson-pair | olson-exponential | loewner-chain | olson-chain | "
                     "exponential-chain")
      ->capture_default_str();
  sample->add_option("--count", sa.count, "Number of draws")->capture_default_str();
  add_optional(sample, "--s", sa.s, "Sandwich lower scalar (default 0.5)");
  add_optional(sample, "--t", sa.t, "Sandwich upper scalar (default 2)");
  add_optional(sample, "--m", sa.m, "Lower bound (default: config range)");
  add_optional(sample, "--M", sa.big_m, "Upper bound (default: config range)");
  sample->add_option("--out", sa.out_path, "Output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*constants) return cmd_constants(ca, out);
    if (*certify) return cmd_certify(cert, out, err);
    if (*list) return cmd_list(out);
    if (*remark) return cmd_reproduce_remark(out);
    if (*convergence) return cmd_convergence(cv, out);
    if (*sample) return cmd_sample(sa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace golden_bounds::cli
