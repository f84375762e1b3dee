#include "bihom/io.hpp"

#include <fstream>
#include <sstream>

#include "bihom/error.hpp"
#include "json.hpp"

namespace bihom {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + e.what());
  }
}

Rational scalar(const json& j, const std::string& field) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, field + ": expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, field + ": " + e.what());
  }
}

const json& array_of(const json& j, std::size_t len, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, field + ": expected an array");
  if (j.size() != len) {
    throw Error(ErrorCode::DimensionMismatch,
                field + ": expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

MatrixQ grid(const json& j, std::size_t n, const std::string& field) {
  MatrixQ m(n, n);
  const json& rows = array_of(j, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rf = field + "[" + std::to_string(i) + "]";
    const json& row = array_of(rows[i], n, rf);
    for (std::size_t k = 0; k < n; ++k) m(i, k) = scalar(row[k], rf + "[" + std::to_string(k) + "]");
  }
  return m;
}

const json& member(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string quoted(const Rational& r) { return "\"" + r.str() + "\""; }

std::string row_text(const VectorQ& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += quoted(v[i]);
  }
  return s + "]";
}

std::string grid_text(const MatrixQ& m, const std::string& indent) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += indent + "  " + row_text(m.row(i));
    s += (i + 1 < m.rows()) ? ",\n" : "\n";
  }
  return s + indent + "]";
}

}  // namespace

BiHomAlgebra parse_algebra(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");
  const json& dim_j = member(doc, "dim");
  if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0) {
    throw Error(ErrorCode::ParseError, "dim: expected a positive integer");
  }
  const std::size_t n = dim_j.get<std::size_t>();

  std::vector<std::string> names;
  const json& basis = array_of(member(doc, "basis"), n, "basis");
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) throw Error(ErrorCode::ParseError, "basis[" + std::to_string(i) + "]: expected a string");
    names.push_back(basis[i].get<std::string>());
  }

  StructureTensor t(n);
  const json& br = array_of(member(doc, "bracket"), n, "bracket");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string fi = "bracket[" + std::to_string(i) + "]";
    const json& row = array_of(br[i], n, fi);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string fj = fi + "[" + std::to_string(j) + "]";
      const json& vec = array_of(row[j], n, fj);
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = scalar(vec[k], fj + "[" + std::to_string(k) + "]");
    }
  }
  MatrixQ alpha = grid(member(doc, "alpha"), n, "alpha");
  MatrixQ beta = grid(member(doc, "beta"), n, "beta");
  return BiHomAlgebra(std::move(t), std::move(alpha), std::move(beta), std::move(names));
}

std::string format_algebra(const BiHomAlgebra& a) {
  const std::size_t n = a.dim();
  std::string s = "{\n  \"dim\": " + std::to_string(n) + ",\n  \"basis\": [";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ", ";
    s += json(a.basis_names()[i]).dump();
  }
  s += "],\n  \"bracket\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    s += "    [";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) s += ", ";
      s += row_text(a.tensor().product(i, j));
    }
    s += (i + 1 < n) ? "],\n" : "]\n";
  }
  s += "  ],\n  \"alpha\": " + grid_text(a.alpha(), "  ");
  s += ",\n  \"beta\": " + grid_text(a.beta(), "  ");
  return s + "\n}\n";
}

MatrixQ parse_matrix(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_array() || doc.empty()) throw Error(ErrorCode::ParseError, "matrix: expected a non-empty array of rows");
  return grid(doc, doc.size(), "matrix");
}

std::string format_matrix(const MatrixQ& m) { return grid_text(m, "") + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

BiHomAlgebra load_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

void save_algebra(const BiHomAlgebra& a, const std::filesystem::path& path) { write_file(path, format_algebra(a)); }

MatrixQ load_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

void save_matrix(const MatrixQ& m, const std::filesystem::path& path) { write_file(path, format_matrix(m)); }

}  // namespace bihom
