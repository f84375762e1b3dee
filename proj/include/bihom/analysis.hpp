#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/subspace.hpp"

namespace bihom {

struct IdealWitness {
  /// "alpha", "beta", "[s,L]" or "[L,s]"
  std::string kind;
  /// Row of the subspace basis that escapes.
  std::size_t generator = 0;
  /// Basis vector of L it was bracketed with, for the bracket kinds.
  std::optional<std::size_t> partner;
  VectorQ image;
};

struct IdealReport {
  Subspace subspace;
  bool is_subalgebra = false;
  bool is_ideal = false;
  std::optional<IdealWitness> failing_witness;
};

IdealReport is_ideal(const BiHomAlgebra& a, const Subspace& s);

/// Smallest subspace containing v that is stable under alpha, beta and
/// bracketing with basis vectors on either side.
Subspace ideal_closure(const BiHomAlgebra& a, const VectorQ& v);

/// Dimension of the unital associative algebra generated by `gens`.
std::size_t enveloping_dim(const std::vector<MatrixQ>& gens);

/// {left multiplications, right multiplications, alpha, beta, identity}: a
/// subspace is an ideal iff it is invariant under all of them.
std::vector<MatrixQ> ideal_operators(const BiHomAlgebra& a);

struct SimplicityReport {
  bool abelian = false;
  std::size_t enveloping_dim = 0;
  bool simple = false;
};

/// Not abelian, and the ideal operators generate all of End(L). Throws
/// AxiomViolation when `a` is not a BiHom-Lie algebra.
SimplicityReport simplicity(const BiHomAlgebra& a);
bool is_simple(const BiHomAlgebra& a);

/// K(i, j) = trace(ad e_i ad e_j). Throws NotLie.
MatrixQ killing_form(const StructureTensor& t);
bool is_semisimple_lie(const StructureTensor& t);

/// L, [L, L], ... until a repeat (not listed again) or zero.
std::vector<Subspace> derived_series(const StructureTensor& t);

/// Minimal ideals of a semisimple Lie algebra, ordered by leading pivot.
/// Splits by spinning basis vectors first and by rational eigenspaces of the
/// ad-commutant second. Throws NotSemisimple or IrrationalSplit.
std::vector<Subspace> decompose_semisimple(const StructureTensor& t);

/// perm[i] = j with map(ideals[i]) = ideals[j]; 0-based.
using Permutation = std::vector<std::size_t>;

/// Throws NotPermuted when some image is not in the list.
Permutation automorphism_permutation(const std::vector<Subspace>& ideals, const MatrixQ& map);

/// 1-based cycle notation, "id" for the identity.
std::string cycle_notation(const Permutation& p);
bool is_transitive(const Permutation& p);

struct Decomposition {
  std::vector<Subspace> ideals;
  Permutation sigma_alpha;
  Permutation sigma_beta;
  std::size_t m = 0;
  std::vector<std::string> warnings;
};

/// Simple-ideal decomposition of the induced Lie algebra of a regular
/// BiHom-Lie algebra, with the permutations alpha and beta induce on it.
Decomposition simple_ideal_decomposition(const BiHomAlgebra& a);

enum class Series { A, B, C, D, G2, F4, E6, E7, E8 };
std::string to_string(Series s);

struct TypeLabel {
  Series series = Series::A;
  /// 0 for the exceptional series.
  std::size_t rank = 0;
  std::size_t m = 0;
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

std::string to_string(const TypeLabel& t);

/// Every (series, rank, m) with m * dim(X) = dim, by increasing m, then series
/// order, then rank. B needs rank >= 2, C rank >= 3, D rank >= 4.
std::vector<TypeLabel> type_candidates(std::size_t dim);

}  // namespace bihom
