// serialize.hpp — the repo-wide matrix interchange format and JSON/CSV
// helpers for verdicts and reports.
//
// A matrix record is {"rows": m, "cols": k, "data": [[re, im], ...]} with
// row-major data. Parsers reject ragged data and non-finite entries.

#pragma once

#include "gruss/types.hpp"

#include <nlohmann/json.hpp>

namespace gruss {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json tuple_to_json(const ModuleTuple& xs);
ModuleTuple tuple_from_json(const Json& j);

Json scalars_to_json(const std::vector<Complex>& v);
std::vector<Complex> scalars_from_json(const Json& j);

Json probability_to_json(const ProbabilityVector& p);
ProbabilityVector probability_from_json(const Json& j);

}  // namespace gruss
