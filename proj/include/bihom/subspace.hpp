#pragma once

#include <vector>

#include "bihom/matrix.hpp"

namespace bihom {

/// Subspace of Q^n stored by its reduced row-echelon basis (one basis vector
/// per row). The RREF basis is unique, so equality is structural.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<VectorQ>& vectors);
  static Subspace row_space(const MatrixQ& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const MatrixQ& basis() const { return basis_; }
  std::vector<VectorQ> vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const VectorQ& v) const;
  /// Coordinates of v with respect to basis(); throws if v is not in the span.
  VectorQ coordinates(const VectorQ& v) const;
  /// Image under a square map acting on columns.
  Subspace image(const MatrixQ& map) const;
  bool is_invariant(const MatrixQ& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  MatrixQ basis_;
  std::vector<std::size_t> pivots_;
};

bool contains(const Subspace& s, const VectorQ& v);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool equal(const Subspace& a, const Subspace& b);
/// {x : <x, s> = 0} for the standard pairing.
Subspace annihilator(const Subspace& s);
/// Vectors of `within` orthogonal to `s` under the bilinear form `form`.
Subspace orthogonal_complement(const Subspace& s, const Subspace& within, const MatrixQ& form);

}  // namespace bihom
