#pragma once

// Per-instance inequality reports and their JSON / CSV serialization.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "golden_bounds/matrix.hpp"
#include "json.hpp"

namespace golden_bounds {

/// How lhs and rhs entries are compared.
///   eigenvalue        entry k compares lambda_k of both sides
///   loewner           entry j is the Rayleigh quotient of both sides along the
///                     j-th eigenvector of RHS - LHS, so margin_j = lambda_j(RHS - LHS)
///   norm              one entry per unitarily invariant norm
///   trace             a single trace entry
///   log-majorization  cumulative eigenvalue products, plus a reversed k = n entry
enum class Semantics { Eigenvalue, Loewner, Norm, Trace, LogMajorization };

std::string_view to_string(Semantics s);

using NamedValues = std::vector<std::pair<std::string, double>>;

struct InequalityReport {
  std::string id;
  Semantics semantics;
  NamedValues parameters;
  std::vector<std::string> labels;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> margins;  // rhs - lhs
  std::vector<double> scales;   // max(|lhs|, |rhs|)
  bool holds;
  double tolerance;  // relative to the per-entry scale
  std::string input_digest;

  /// Smallest margin / scale over the entries (0 for an empty report).
  double worst_relative_margin() const;
  double parameter(std::string_view name) const;  // NaN when absent
};

/// Fills margins, scales and holds. holds <=> margin_k >= -tolerance * scale_k for all k.
InequalityReport make_report(std::string id, Semantics semantics, NamedValues parameters,
                             std::vector<std::string> labels, std::vector<double> lhs, std::vector<double> rhs,
                             double tolerance, std::string input_digest);

/// Loewner comparison LHS <= RHS reported along the eigenvectors of RHS - LHS.
InequalityReport loewner_report(std::string id, NamedValues parameters, const HermitianMatrix& lhs,
                                const HermitianMatrix& rhs, double tolerance, std::string input_digest);

/// FNV-1a 64 over the bit patterns of the inputs; rendered as 16 hex digits.
class Digest {
 public:
  Digest& add(double x);
  Digest& add(const Matrix& m);
  Digest& add(const HermitianMatrix& m) { return add(m.matrix()); }
  Digest& add(std::string_view s);
  std::string hex() const;

 private:
  void bytes(const void* p, std::size_t n);
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

nlohmann::json to_json(const InequalityReport& r);

/// instance,inequality,k,label,lhs,rhs,margin,scale,holds with %.17g numbers.
void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, std::size_t instance, const InequalityReport& r);

/// Locale-independent %.17g.
std::string format_g17(double x);

}  // namespace golden_bounds
