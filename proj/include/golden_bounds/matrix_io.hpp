#pragma once

// Matrix literal format shared across the repo:
//   {"n": 2, "re": [[2, 1], [1, 3]], "im": [[0, 0], [0, 0]]}
// "im" is optional and defaults to zero.

#include <string>

#include "golden_bounds/matrix.hpp"
#include "json.hpp"

namespace golden_bounds {

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json matrix_to_json(const HermitianMatrix& m);

/// Throws ParseError on malformed literals (missing fields, ragged rows, n mismatch).
Matrix matrix_from_json(const nlohmann::json& j);
HermitianMatrix hermitian_from_json(const nlohmann::json& j);

Matrix parse_matrix_literal(const std::string& text);

}  // namespace golden_bounds
