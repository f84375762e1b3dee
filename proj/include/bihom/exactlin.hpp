#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/poly.hpp"
#include "bihom/subspace.hpp"

namespace bihom {

struct RrefResult {
  MatrixQ form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot is the first nonzero entry by row index.
RrefResult rref(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);
Subspace kernel(const MatrixQ& m);
/// Throws SingularMatrix when rank < n.
MatrixQ invert(const MatrixQ& m);
bool is_invertible(const MatrixQ& m);
Rational det(const MatrixQ& m);
/// One solution of m x = b (free variables set to zero), or nullopt.
std::optional<VectorQ> solve(const MatrixQ& m, const VectorQ& b);

/// Monic det(xI - m).
PolyQ char_poly(const MatrixQ& m);

struct RootMultiplicity {
  Rational root;
  std::size_t multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
  /// Sorted by decreasing root.
  std::vector<RootMultiplicity> roots;
  /// Monic cofactor with no rational roots.
  PolyQ residual;
};

RationalRoots rational_roots(const PolyQ& p);

/// ker(m - lambda)^1, ker(m - lambda)^2, ... up to the first repeat.
std::vector<Subspace> generalized_eigenspace(const MatrixQ& m, const Rational& lambda);

/// Incrementally maintained echelon basis: the workhorse of spinning.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Reduces v against the basis; appends the remainder when nonzero.
  bool add(VectorQ v);
  bool contains(VectorQ v) const;
  std::size_t size() const { return rows_.size(); }
  /// Original (unreduced) vectors in insertion order.
  const std::vector<VectorQ>& inserted() const { return inserted_; }
  Subspace subspace() const;

 private:
  void reduce(VectorQ& v) const;

  std::size_t length_;
  std::vector<VectorQ> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<VectorQ> inserted_;
};

/// Smallest subspace containing `start` and invariant under every operator.
Subspace spin(const std::vector<VectorQ>& start, const std::vector<MatrixQ>& operators);

}  // namespace bihom
