#pragma once

#include <string>

#include <json.hpp>

#include "coloop/exactalg/chain_complex.hpp"
#include "coloop/exactalg/sparse_matrix.hpp"

namespace coloop {

// {"rows", "cols", "entries": [[row, col, "value"], ...]} in column-major order.
nlohmann::json matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const nlohmann::json& j);

// {"lo", "hi", "truncated", "degrees": [{"degree", "basis", "boundary"}]}
nlohmann::json complex_to_json(const ChainComplexWindow& w);
ChainComplexWindow complex_from_json(const nlohmann::json& j);

}  // namespace coloop
