#pragma once

#include <filesystem>
#include <string>

#include "bihom/algebra.hpp"

namespace bihom {

/// Algebra file layout (JSON, UTF-8):
///
///   {
///     "dim": n,
///     "basis": ["e1", ...],
///     "bracket": n x n x n grid; bracket[i][j][k] is the e_k-coefficient of [e_i, e_j],
///     "alpha": n x n grid; alpha[i][j] is the e_i-coefficient of alpha(e_j),
///     "beta":  same convention as alpha
///   }
///
/// Every scalar is a string matching -?[0-9]+(/[1-9][0-9]*)?. Errors:
/// ParseError (line for syntax, field path for content), DimensionMismatch,
/// IoError.
BiHomAlgebra parse_algebra(const std::string& text);
BiHomAlgebra load_algebra(const std::filesystem::path& path);

/// Canonical form: fixed key order, reduced rationals, one grid row per line.
std::string format_algebra(const BiHomAlgebra& a);
void save_algebra(const BiHomAlgebra& a, const std::filesystem::path& path);

/// A bare square grid of rational strings, as used for twist maps.
MatrixQ parse_matrix(const std::string& text);
MatrixQ load_matrix(const std::filesystem::path& path);
std::string format_matrix(const MatrixQ& m);
void save_matrix(const MatrixQ& m, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bihom
