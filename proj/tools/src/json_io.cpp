#include "atomfact_cli/json_io.hpp"

#include "atomfact/error.hpp"

namespace atomfact::cli {

namespace {

Rat coeff_from_json(const json& c) {
  if (c.is_string()) return Rat::parse(c.get<std::string>());
  if (c.is_number_integer()) return Rat(c.get<long>());
  throw ParseError("coefficient must be a string \"p\" or \"p/q\" or an integer");
}

const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::size_t size_field(const json& doc, const char* key) {
  const json& v = member(doc, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

json to_json(const UPoly& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.str());
  return out;
}

json to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"ring", "Q[x]"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Pencil& p) { return json{{"A0", to_json(p.a0())}, {"A1", to_json(p.a1())}}; }

UPoly poly_from_json(const json& coeffs) {
  if (!coeffs.is_array()) throw ParseError("polynomial entry must be a list of coefficients");
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.push_back(coeff_from_json(v));
  return UPoly(std::move(c));
}

PolyMatrix matrix_from_json(const json& doc) {
  if (doc.contains("ring") && doc.at("ring") != "Q[x]") throw ParseError("unsupported ring, expected \"Q[x]\"");
  const std::size_t rows = size_field(doc, "rows");
  const std::size_t cols = size_field(doc, "cols");
  const json& entries = member(doc, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be a list of rows");
  if (entries.size() != rows) throw DimensionError("entries has " + std::to_string(entries.size()) + " rows, expected " + std::to_string(rows));
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array()) throw ParseError("each row of \"entries\" must be a list");
    if (row.size() != cols) throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = poly_from_json(row[j]);
  }
  return m;
}

RatMatrix scalar_matrix_from_json(const json& rows) {
  if (!rows.is_array()) throw ParseError("scalar matrix must be a list of rows");
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array()) throw ParseError("scalar matrix rows must be lists");
    if (rows[i].size() != c) throw DimensionError("scalar matrix rows differ in length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = coeff_from_json(rows[i][j]);
  }
  return m;
}

Pencil pencil_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("A0")) {
    return Pencil(scalar_matrix_from_json(member(doc, "A0")), scalar_matrix_from_json(member(doc, "A1")));
  }
  return Pencil::from_poly(matrix_from_json(doc));
}

std::vector<PolyMatrix> matrices_from_json(const json& list) {
  if (!list.is_array()) throw ParseError("expected a list of matrices");
  std::vector<PolyMatrix> out;
  for (const auto& m : list) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace atomfact::cli
