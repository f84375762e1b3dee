#pragma once

#include <string>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

/// sl2 in the basis (e1, e2, e3) = (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
StructureTensor make_sl2();

/// Columns give (u1, u2, u3) = (e, -h, -e/4 + h/2 - 2f) in (h, e, f)
/// coordinates; the basis in which L2 and L3 are tabulated.
MatrixQ sl2_unipotent_basis();

/// [[1,1,0],[0,1,1],[0,0,1]]
MatrixQ unipotent_u();
/// [[1,a,(a^2-a)/2],[0,1,a],[0,0,1]], the a-th power of unipotent_u().
MatrixQ unipotent_power(const Rational& a);

/// alpha = diag(1, a, 1/a), beta = diag(1, b, 1/b). Throws ZeroParameter.
BiHomAlgebra make_L1(const Rational& a, const Rational& b);
/// alpha = I, beta = unipotent_u().
BiHomAlgebra make_L2();
/// alpha = unipotent_u(), beta = unipotent_power(a). Two e1-coefficients
/// differ from the historically printed table, which fails the axioms; see
/// ERRATA.md and printed_L3().
BiHomAlgebra make_L3(const Rational& a);

/// The L3 table exactly as originally printed, kept for the errata check.
BiHomAlgebra printed_L3(const Rational& a);

/// Block-diagonal tensor and structure maps.
BiHomAlgebra direct_sum(const std::vector<BiHomAlgebra>& parts);

/// Permutation matrix sending block i of `copies` equal blocks of size
/// `block` to block perm[i].
MatrixQ block_permutation(std::size_t block, const std::vector<std::size_t>& perm);

struct CatalogEntry {
  std::string name;
  std::vector<Rational> params;
  BiHomAlgebra algebra;
  /// L1 with a in {-1, 1}: outside the distinct-eigenvalue case of the
  /// classification, still a valid algebra.
  bool outside_case_split = false;
};

/// name in {"sl2", "L1", "L2", "L3"}; L1 takes {a, b}, L3 takes {a}.
CatalogEntry catalog_entry(const std::string& name, const std::vector<Rational>& params);

}  // namespace bihom
