#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h under an ordinary Lie bracket.
struct Sl2Triple {
  VectorQ h;
  VectorQ e;
  VectorQ f;
  /// Columns (h, e, f).
  MatrixQ as_basis() const;
};

bool is_sl2_triple(const StructureTensor& t, const Sl2Triple& s);

/// Searches candidate elements x = sum c_i e_i with coefficients from
/// {0, +-1, +-2, +-1/2} by increasing height. A candidate is accepted when
/// ad x has characteristic polynomial x(x - c)(x + c) with c a nonzero
/// rational (x is rescaled to h) or when ad x is nilpotent (x becomes e and
/// the triple is completed by solving linear equations).
/// Throws NotSemisimple, or NotSplit when no candidate qualifies.
Sl2Triple find_sl2_triple(const StructureTensor& t);

/// Completes a nilpotent e to a triple; nullopt if the equations have no solution.
std::optional<Sl2Triple> complete_triple(const StructureTensor& t, const VectorQ& e);

enum class ProfileKind { DiagonalDistinct, Identity, UnipotentFull, UnipotentPartial, DiagNegPair, NegJordan };

struct Profile {
  ProfileKind kind = ProfileKind::Identity;
  /// Eigenvalue a with |a| > 1, for DiagonalDistinct only.
  Rational a;
};

std::string to_string(const Profile& p);

/// Conjugacy shape of a 3x3 map with eigenvalues {1, a, 1/a}.
/// Throws IrrationalEigenvalues or NotAutomorphismShape.
Profile alpha_profile(const MatrixQ& m);

enum class Family { L1, L2, L3 };
std::string to_string(Family f);

struct ClassLabel {
  Family family = Family::L1;
  /// {a, b} for L1, {a} for L3, empty for L2.
  std::vector<Rational> params;
  /// Columns are the catalog basis in input coordinates: conjugating the
  /// input by it gives the catalog algebra exactly.
  MatrixQ change_of_basis;
  /// sl2 triple of the induced Lie algebra the catalog basis is built from.
  Sl2Triple triple;
};

/// (a, b) and (1/a, 1/b) describe the same algebra; prefer |a| > 1, then |b| >= 1.
std::pair<Rational, Rational> normalize_L1(const Rational& a, const Rational& b);

/// Catalog algebra named by a label (ignores change_of_basis).
BiHomAlgebra catalog_algebra(const ClassLabel& label);

/// Errors: DimensionMismatch, AxiomViolation, NotSimple, NotSplit,
/// IrrationalEigenvalues, NotAutomorphismShape, Unmatched.
ClassLabel classify3(const BiHomAlgebra& a);

/// An isomorphism f (a1 coordinates to a2 coordinates) with f alpha1 = alpha2 f,
/// f beta1 = beta2 f and f [x,y]_1 = [f x, f y]_2, or nullopt.
std::optional<MatrixQ> bihom_isomorphic3(const BiHomAlgebra& a1, const BiHomAlgebra& a2);

/// Checks the three intertwining identities on basis vectors.
bool is_bihom_isomorphism(const BiHomAlgebra& a1, const BiHomAlgebra& a2, const MatrixQ& f);

}  // namespace bihom
