#pragma once

#include <nlohmann/json.hpp>

#include "ccc/intlinalg.hpp"
#include "ccc/matrix.hpp"
#include "ccc/obstruction.hpp"

namespace ccc {

using json = nlohmann::json;

/// Matrices serialize as arrays of arrays of decimal strings (exact).
json matrix_json(const IntMatrix& m);
json matrix_json(const SymIntMatrix& m);

/// Accepts arrays of arrays of integers or decimal strings.
IntMatrix matrix_from_json(const json& j);

/// Report schema: stable field names, integers as decimal strings.
json report_json(const ObstructionReport& r);

json snf_json(const IntMatrix& a, const SNFResult& snf);

}  // namespace ccc
