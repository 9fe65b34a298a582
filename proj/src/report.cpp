#include "golden_bounds/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>
#include <ostream>

#include "golden_bounds/error.hpp"
#include "golden_bounds/spectral.hpp"

namespace golden_bounds {

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::Eigenvalue: return "eigenvalue";
    case Semantics::Loewner: return "loewner";
    case Semantics::Norm: return "norm";
    case Semantics::Trace: return "trace";
    case Semantics::LogMajorization: return "log-majorization";
  }
  return "?";
}

double InequalityReport::worst_relative_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < margins.size(); ++i) {
    const double rel = scales[i] > 0.0 ? margins[i] / scales[i] : (margins[i] < 0.0 ? -1.0 : 0.0);
    worst = std::min(worst, rel);
  }
  return margins.empty() ? 0.0 : worst;
}

double InequalityReport::parameter(std::string_view name) const {
  for (const auto& [k, v] : parameters)
    if (k == name) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

InequalityReport make_report(std::string id, Semantics semantics, NamedValues parameters,
                             std::vector<std::string> labels, std::vector<double> lhs, std::vector<double> rhs,
                             double tolerance, std::string input_digest) {
  if (lhs.size() != rhs.size() || labels.size() != lhs.size())
    throw Error(ErrorCode::DimMismatch, "report sides have different lengths");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::NonPositive, "report tolerance must be positive");
  InequalityReport r{std::move(id), semantics, std::move(parameters), std::move(labels), std::move(lhs),
                     std::move(rhs), {}, {}, true, tolerance, std::move(input_digest)};
  r.margins.resize(r.lhs.size());
  r.scales.resize(r.lhs.size());
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    r.margins[i] = r.rhs[i] - r.lhs[i];
    r.scales[i] = std::max(std::abs(r.lhs[i]), std::abs(r.rhs[i]));
    if (!(r.margins[i] >= -tolerance * r.scales[i])) r.holds = false;
  }
  return r;
}

InequalityReport loewner_report(std::string id, NamedValues parameters, const HermitianMatrix& lhs,
                                const HermitianMatrix& rhs, double tolerance, std::string input_digest) {
  if (lhs.dim() != rhs.dim()) throw Error(ErrorCode::DimMismatch, "Loewner sides differ in size");
  const SpectralDecomposition d = spectral_decompose(rhs - lhs);
  const std::size_t n = lhs.dim();
  std::vector<std::string> labels;
  std::vector<double> l(n), r(n);
  // Ascending order of lambda(RHS - LHS): the first entry is the binding one.
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t col = n - 1 - j;
    double ql = 0.0, qr = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      cplx la = 0.0, ra = 0.0;
      for (std::size_t b = 0; b < n; ++b) {
        la += lhs.matrix()(a, b) * d.eigenvectors(b, col);
        ra += rhs.matrix()(a, b) * d.eigenvectors(b, col);
      }
      ql += (std::conj(d.eigenvectors(a, col)) * la).real();
      qr += (std::conj(d.eigenvectors(a, col)) * ra).real();
    }
    l[j] = ql;
    r[j] = qr;
    labels.push_back("v" + std::to_string(j + 1));
  }
  return make_report(std::move(id), Semantics::Loewner, std::move(parameters), std::move(labels), std::move(l),
                     std::move(r), tolerance, std::move(input_digest));
}

void Digest::bytes(const void* p, std::size_t n) {
  const auto* c = static_cast<const unsigned char*>(p);
  for (std::size_t i = 0; i < n; ++i) {
    h_ ^= c[i];
    h_ *= 0x100000001b3ULL;
  }
}

Digest& Digest::add(double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  bytes(&bits, sizeof bits);
  return *this;
}

Digest& Digest::add(const Matrix& m) {
  const std::uint64_t shape[2] = {m.rows(), m.cols()};
  bytes(shape, sizeof shape);
  for (const cplx& z : m.data()) add(z.real()).add(z.imag());
  return *this;
}

Digest& Digest::add(std::string_view s) {
  bytes(s.data(), s.size());
  return *this;
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

std::string format_g17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const InequalityReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"inequality", r.id},
          {"semantics", to_string(r.semantics)},
          {"parameters", params},
          {"labels", r.labels},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"margins", r.margins},
          {"scales", r.scales},
          {"holds", r.holds},
          {"tolerance", r.tolerance},
          {"worst_relative_margin", r.worst_relative_margin()},
          {"input_digest", r.input_digest}};
}

void write_csv_header(std::ostream& os) { os << "instance,inequality,k,label,lhs,rhs,margin,scale,holds\n"; }

void write_csv_rows(std::ostream& os, std::size_t instance, const InequalityReport& r) {
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    const bool ok = r.margins[i] >= -r.tolerance * r.scales[i];
    os << instance << ',' << r.id << ',' << (i + 1) << ',' << r.labels[i] << ',' << format_g17(r.lhs[i]) << ','
       << format_g17(r.rhs[i]) << ',' << format_g17(r.margins[i]) << ',' << format_g17(r.scales[i]) << ','
       << (ok ? "true" : "false") << '\n';
  }
}

}  // namespace golden_bounds
