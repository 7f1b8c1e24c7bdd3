#pragma once

#include <json.hpp>

#include "wzw/linalg.hpp"

namespace wzw {

using Json = nlohmann::ordered_json;

/// Matrices and vectors serialize with exact "p/q" entry strings; no
/// floating point anywhere.
Json to_json(const Rational& r);
Json to_json(const Vec& v);
Json to_json(const SparseMatrix& m);  // {rows, cols, entries: [[i, j, "p/q"], ...]}
Json to_json(const QuotientMap& q);

Rational rational_from_json(const Json& j);

}  // namespace wzw
