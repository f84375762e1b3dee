#include "bihom/subspace.hpp"

#include "bihom/error.hpp"
#include "bihom/exactlin.hpp"

namespace bihom {

namespace {

void require_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces of Q^" + std::to_string(a.ambient_dim()) +
                                                  " and Q^" + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = MatrixQ(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(MatrixQ::identity(ambient_dim)); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<VectorQ>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "spanning vector length");
  if (vectors.empty()) return zero(ambient_dim);
  return row_space(MatrixQ::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const MatrixQ& m) {
  const RrefResult red = rref(m);
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = MatrixQ(red.rank, m.cols());
  for (std::size_t i = 0; i < red.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = red.form(i, j);
  s.pivots_ = red.pivots;
  return s;
}

std::vector<VectorQ> Subspace::vectors() const {
  std::vector<VectorQ> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length vs ambient dimension");
  // in RREF the only candidate combination uses the pivot entries of v
  VectorQ r = v;
  for (std::size_t i = 0; i < dim(); ++i) add_scaled(r, -v[pivots_[i]], basis_.row(i));
  return bihom::is_zero(r);
}

VectorQ Subspace::coordinates(const VectorQ& v) const {
  if (!contains(v)) throw Error(ErrorCode::InvalidArgument, "vector " + to_string(v) + " is not in the subspace");
  VectorQ c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::image(const MatrixQ& map) const {
  if (!map.is_square() || map.rows() != ambient_) throw Error(ErrorCode::DimensionMismatch, "map size");
  std::vector<VectorQ> imgs;
  for (const auto& v : vectors()) imgs.push_back(map * v);
  return span(ambient_, imgs);
}

bool Subspace::is_invariant(const MatrixQ& map) const {
  for (const auto& v : vectors())
    if (!contains(map * v)) return false;
  return true;
}

bool contains(const Subspace& s, const VectorQ& v) { return s.contains(v); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  auto vs = a.vectors();
  for (auto& v : b.vectors()) vs.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel(s.basis());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  return annihilator(sum(annihilator(a), annihilator(b)));
}

bool equal(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  return a == b;
}

Subspace orthogonal_complement(const Subspace& s, const Subspace& within, const MatrixQ& form) {
  require_ambient(s, within);
  // x in `within` with v^T K x = 0 for all v in s
  std::vector<VectorQ> constraints;
  for (const auto& v : s.vectors()) constraints.push_back(form.transpose() * v);
  const Subspace perp = constraints.empty() ? Subspace::full(s.ambient_dim())
                                            : kernel(MatrixQ::from_rows(constraints, s.ambient_dim()));
  return intersect(perp, within);
}

}  // namespace bihom
