#include "bihom/twist.hpp"

#include "bihom/error.hpp"
#include "bihom/exactlin.hpp"

namespace bihom {

namespace {

StructureTensor twisted(const StructureTensor& t, const MatrixQ& left, const MatrixQ& right) {
  const std::size_t n = t.dim();
  StructureTensor out(n);
  std::vector<VectorQ> l, r;
  for (std::size_t j = 0; j < n; ++j) {
    l.push_back(left.column(j));
    r.push_back(right.column(j));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, t.bracket(l[i], r[j]));
  return out;
}

}  // namespace

BiHomAlgebra yau_twist(const TwistInput& in) {
  const std::size_t n = in.lie.dim();
  if (in.alpha.rows() != n || in.alpha.cols() != n || in.beta.rows() != n || in.beta.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "twist maps must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (auto r = is_lie_algebra(in.lie); !r) {
    throw Error(ErrorCode::NotLie, "input bracket is not a Lie bracket at " + to_string(*r.witness));
  }
  if (!is_invertible(in.alpha)) throw Error(ErrorCode::SingularMatrix, "alpha is not invertible");
  if (!is_invertible(in.beta)) throw Error(ErrorCode::SingularMatrix, "beta is not invertible");
  if (in.alpha * in.beta != in.beta * in.alpha) {
    throw Error(ErrorCode::NotCommuting, "alpha and beta do not commute");
  }
  if (auto r = check_multiplicative(in.lie, in.alpha); !r) {
    throw Error(ErrorCode::NotAutomorphism, "alpha does not preserve the bracket at " + to_string(*r.witness));
  }
  if (auto r = check_multiplicative(in.lie, in.beta); !r) {
    throw Error(ErrorCode::NotAutomorphism, "beta does not preserve the bracket at " + to_string(*r.witness));
  }
  return BiHomAlgebra(twisted(in.lie, in.alpha, in.beta), in.alpha, in.beta);
}

InducedLie induce_lie(const BiHomAlgebra& a) {
  if (!is_regular(a)) throw Error(ErrorCode::NotRegular, "alpha or beta is not invertible");
  require_axioms(a);
  return InducedLie{twisted(a.tensor(), invert(a.alpha()), invert(a.beta())), a.alpha(), a.beta()};
}

bool roundtrip_check(const TwistInput& in) {
  const InducedLie back = induce_lie(yau_twist(in));
  return back.lie == in.lie && back.alpha == in.alpha && back.beta == in.beta;
}

}  // namespace bihom
