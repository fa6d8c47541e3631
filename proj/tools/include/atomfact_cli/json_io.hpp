#pragma once

#include <vector>

#include "atomfact/poly_matrix.hpp"
#include "json.hpp"

namespace atomfact::cli {

using nlohmann::json;

/// {"ring": "Q[x]", "rows": r, "cols": c, "entries": [[coeffs, ...], ...]}
/// with each entry an ascending list of coefficient strings ("p" or "p/q")
/// and the zero polynomial written as [].
json to_json(const PolyMatrix& m);
json to_json(const UPoly& f);
/// Scalar matrix as nested lists of coefficient strings.
json to_json(const RatMatrix& m);
/// {"A0": ..., "A1": ...}
json to_json(const Pencil& p);

/// Throws ParseError on malformed documents, DimensionError on shape mismatch.
PolyMatrix matrix_from_json(const json& doc);
UPoly poly_from_json(const json& coeffs);
RatMatrix scalar_matrix_from_json(const json& rows);
/// Accepts a pencil document or a matrix document of degree <= 1.
Pencil pencil_from_json(const json& doc);
std::vector<PolyMatrix> matrices_from_json(const json& list);

}  // namespace atomfact::cli
