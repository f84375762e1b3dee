#pragma once

#include "bihom/algebra.hpp"

namespace bihom {

/// An ordinary Lie bracket together with two commuting automorphisms.
struct TwistInput {
  StructureTensor lie;
  MatrixQ alpha;
  MatrixQ beta;
};

/// [x, y] = [alpha x, beta y]' on an ordinary Lie algebra.
///
/// Both maps must preserve the Lie bracket. Only beta is needed for the
/// skew-symmetry and Jacobi identities of the result, but multiplicativity
/// of the result under alpha forces alpha to be an automorphism as well, so
/// both are validated and the failing map is named in the error.
///
/// Errors: NotLie, SingularMatrix, NotCommuting, NotAutomorphism.
BiHomAlgebra yau_twist(const TwistInput& in);

struct InducedLie {
  StructureTensor lie;
  MatrixQ alpha;
  MatrixQ beta;
};

/// [x, y]' = [alpha^-1 x, beta^-1 y]. Errors: NotRegular, AxiomViolation.
InducedLie induce_lie(const BiHomAlgebra& a);

/// induce_lie(yau_twist(in)) reproduces in.lie entry for entry.
bool roundtrip_check(const TwistInput& in);

}  // namespace bihom
