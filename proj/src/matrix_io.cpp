#include "golden_bounds/matrix_io.hpp"

#include "golden_bounds/error.hpp"

namespace golden_bounds {

namespace {

bool has_imaginary_part(const Matrix& m) {
  for (const cplx& z : m.data())
    if (z.imag() != 0.0) return true;
  return false;
}

void read_block(const nlohmann::json& block, std::size_t n, Matrix& m, bool imaginary) {
  if (!block.is_array() || block.size() != n)
    throw Error(ErrorCode::ParseError, "matrix block must have n rows");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = block[i];
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorCode::ParseError, "matrix row " + std::to_string(i) + " must have n entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number()) throw Error(ErrorCode::ParseError, "matrix entries must be numbers");
      const double v = row[j].get<double>();
      if (imaginary)
        m(i, j).imag(v);
      else
        m(i, j).real(v);
    }
  }
}

}  // namespace

nlohmann::json matrix_to_json(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::NonSquare, "matrix literal format is square-only");
  const std::size_t n = m.rows();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json rrow = nlohmann::json::array();
    nlohmann::json irow = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  nlohmann::json out = {{"n", n}, {"re", std::move(re)}};
  if (has_imaginary_part(m)) out["im"] = std::move(im);
  return out;
}

nlohmann::json matrix_to_json(const HermitianMatrix& m) { return matrix_to_json(m.matrix()); }

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re"))
    throw Error(ErrorCode::ParseError, "matrix literal needs \"n\" and \"re\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw Error(ErrorCode::ParseError, "\"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  Matrix m(n, n);
  read_block(j["re"], n, m, false);
  if (j.contains("im")) read_block(j["im"], n, m, true);
  return m;
}

HermitianMatrix hermitian_from_json(const nlohmann::json& j) { return make_hermitian(matrix_from_json(j)); }

Matrix parse_matrix_literal(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return matrix_from_json(j);
}

}  // namespace golden_bounds
