#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

using VectorQ = std::vector<Rational>;

VectorQ zero_vector(std::size_t n);
VectorQ unit_vector(std::size_t n, std::size_t i);
bool is_zero(const VectorQ& v);
VectorQ operator+(const VectorQ& a, const VectorQ& b);
VectorQ operator-(const VectorQ& a, const VectorQ& b);
VectorQ operator-(const VectorQ& a);
VectorQ operator*(const Rational& s, const VectorQ& v);
/// a + s*b, in place.
void add_scaled(VectorQ& a, const Rational& s, const VectorQ& b);
Rational dot(const VectorQ& a, const VectorQ& b);
std::string to_string(const VectorQ& v);

/// Dense row-major rational matrix. Matrices act on coordinate columns, so
/// column j of a map holds the image of the j-th basis vector.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(std::size_t n);
  static MatrixQ diagonal(const VectorQ& d);
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);
  static MatrixQ from_columns(const std::vector<VectorQ>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  VectorQ row(std::size_t i) const;
  VectorQ column(std::size_t j) const;
  void set_row(std::size_t i, const VectorQ& v);
  void set_column(std::size_t j, const VectorQ& v);

  MatrixQ transpose() const;
  Rational trace() const;
  bool is_zero() const;
  /// Row-major flattening, used when matrices are treated as vectors.
  const std::vector<Rational>& entries() const { return data_; }

  MatrixQ& operator+=(const MatrixQ& o);
  MatrixQ& operator-=(const MatrixQ& o);
  friend MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
  friend MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend VectorQ operator*(const MatrixQ& a, const VectorQ& v);
  friend MatrixQ operator*(const Rational& s, MatrixQ m);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const MatrixQ& m);

/// Block-diagonal matrix from square blocks.
MatrixQ block_diagonal(const std::vector<MatrixQ>& blocks);

}  // namespace bihom
