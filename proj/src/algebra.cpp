#include "bihom/algebra.hpp"

#include "bihom/error.hpp"
#include "bihom/exactlin.hpp"

namespace bihom {

StructureTensor::StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

VectorQ StructureTensor::product(std::size_t i, std::size_t j) const {
  VectorQ v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void StructureTensor::set_product(std::size_t i, std::size_t j, const VectorQ& v) {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "product vector length");
  for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k) = v[k];
}

VectorQ StructureTensor::bracket(const VectorQ& x, const VectorQ& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "bracket arguments must have length " + std::to_string(dim_));
  }
  VectorQ out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = (*this)(i, j, k);
        if (!c.is_zero()) out[k] += s * c;
      }
    }
  }
  return out;
}

MatrixQ StructureTensor::left_multiplication(std::size_t i) const {
  MatrixQ m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = (*this)(i, j, k);
  return m;
}

MatrixQ StructureTensor::right_multiplication(std::size_t i) const {
  MatrixQ m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = (*this)(j, i, k);
  return m;
}

MatrixQ StructureTensor::left_multiplication(const VectorQ& v) const {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "ad argument length");
  MatrixQ m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!v[i].is_zero()) m += v[i] * left_multiplication(i);
  return m;
}

StructureTensor StructureTensor::change_basis(const MatrixQ& p) const {
  if (!p.is_square() || p.rows() != dim_) throw Error(ErrorCode::DimensionMismatch, "change of basis size");
  const MatrixQ pinv = invert(p);
  StructureTensor out(dim_);
  std::vector<VectorQ> cols;
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(p.column(j));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.set_product(i, j, pinv * bracket(cols[i], cols[j]));
  return out;
}

StructureTensor direct_sum(const std::vector<StructureTensor>& parts) {
  std::size_t n = 0;
  for (const auto& t : parts) n += t.dim();
  StructureTensor out(n);
  std::size_t off = 0;
  for (const auto& t : parts) {
    const std::size_t d = t.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) out(off + i, off + j, off + k) = t(i, j, k);
    off += d;
  }
  return out;
}

std::vector<std::string> default_basis_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

BiHomAlgebra::BiHomAlgebra(StructureTensor tensor, MatrixQ alpha, MatrixQ beta, std::vector<std::string> basis_names)
    : tensor_(std::move(tensor)), alpha_(std::move(alpha)), beta_(std::move(beta)), names_(std::move(basis_names)) {
  const std::size_t n = tensor_.dim();
  if (alpha_.rows() != n || alpha_.cols() != n || beta_.rows() != n || beta_.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "alpha and beta must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (names_.empty()) names_ = default_basis_names(n);
  if (names_.size() != n) throw Error(ErrorCode::DimensionMismatch, "basis name count");
}

BiHomAlgebra BiHomAlgebra::from_lie(StructureTensor tensor, std::vector<std::string> basis_names) {
  const std::size_t n = tensor.dim();
  return BiHomAlgebra(std::move(tensor), MatrixQ::identity(n), MatrixQ::identity(n), std::move(basis_names));
}

BiHomAlgebra BiHomAlgebra::change_basis(const MatrixQ& p) const {
  const MatrixQ pinv = invert(p);
  return BiHomAlgebra(tensor_.change_basis(p), pinv * alpha_ * p, pinv * beta_ * p);
}

VectorQ bracket(const BiHomAlgebra& a, const VectorQ& x, const VectorQ& y) { return a.tensor().bracket(x, y); }

namespace {

std::vector<VectorQ> images(const MatrixQ& m) {
  std::vector<VectorQ> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

CheckResult fail(std::vector<std::size_t> idx, VectorQ lhs, VectorQ rhs) {
  return CheckResult{false, Witness{std::move(idx), std::move(lhs), std::move(rhs)}};
}

}  // namespace

CheckResult check_commuting(const BiHomAlgebra& a) {
  const MatrixQ ab = a.alpha() * a.beta();
  const MatrixQ ba = a.beta() * a.alpha();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    VectorQ l = ab.column(j), r = ba.column(j);
    if (l != r) return fail({j}, std::move(l), std::move(r));
  }
  return {};
}

CheckResult check_multiplicative(const StructureTensor& t, const MatrixQ& map) {
  const std::size_t n = t.dim();
  if (map.rows() != n || map.cols() != n) throw Error(ErrorCode::DimensionMismatch, "map size");
  const auto img = images(map);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      VectorQ l = map * t.product(i, j);
      VectorQ r = t.bracket(img[i], img[j]);
      if (l != r) return fail({i, j}, std::move(l), std::move(r));
    }
  return {};
}

CheckResult check_multiplicative(const BiHomAlgebra& a) {
  if (auto r = check_multiplicative(a.tensor(), a.alpha()); !r) return r;
  return check_multiplicative(a.tensor(), a.beta());
}

CheckResult check_bihom_skew(const BiHomAlgebra& a) {
  const std::size_t n = a.dim();
  const auto al = images(a.alpha());
  const auto be = images(a.beta());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      VectorQ l = a.tensor().bracket(be[i], al[j]);
      VectorQ r = -a.tensor().bracket(be[j], al[i]);
      if (l != r) return fail({i, j}, std::move(l), std::move(r));
    }
  return {};
}

CheckResult check_bihom_jacobi(const BiHomAlgebra& a) {
  const std::size_t n = a.dim();
  const StructureTensor& t = a.tensor();
  const auto al = images(a.alpha());
  const auto be = images(a.beta());
  const auto be2 = images(a.beta() * a.beta());
  // inner[j][k] = [beta e_j, alpha e_k]
  std::vector<std::vector<VectorQ>> inner(n, std::vector<VectorQ>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) inner[j][k] = t.bracket(be[j], al[k]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        VectorQ s = t.bracket(be2[i], inner[j][k]);
        s = s + t.bracket(be2[j], inner[k][i]);
        s = s + t.bracket(be2[k], inner[i][j]);
        if (!is_zero(s)) return fail({i, j, k}, std::move(s), zero_vector(n));
      }
  return {};
}

AxiomReport check_all(const BiHomAlgebra& a) {
  AxiomReport r;
  r.commuting = check_commuting(a);
  r.multiplicative_alpha = check_multiplicative(a.tensor(), a.alpha());
  r.multiplicative_beta = check_multiplicative(a.tensor(), a.beta());
  r.skew = check_bihom_skew(a);
  r.jacobi = check_bihom_jacobi(a);
  return r;
}

std::string to_string(const Witness& w) {
  std::string idx;
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (i) idx += ",";
    idx += "e" + std::to_string(w.indices[i] + 1);
  }
  return "(" + idx + "): " + to_string(w.lhs) + " != " + to_string(w.rhs);
}

std::string AxiomReport::first_failure() const {
  const std::pair<const char*, const CheckResult*> items[] = {
      {"commuting", &commuting},         {"multiplicative_alpha", &multiplicative_alpha},
      {"multiplicative_beta", &multiplicative_beta}, {"skew", &skew},
      {"jacobi", &jacobi}};
  for (const auto& [name, res] : items)
    if (!res->passed) return std::string(name) + " " + (res->witness ? to_string(*res->witness) : "");
  return {};
}

void require_axioms(const BiHomAlgebra& a) {
  const AxiomReport r = check_all(a);
  if (!r.all_passed()) throw Error(ErrorCode::AxiomViolation, r.first_failure());
}

CheckResult is_lie_algebra(const StructureTensor& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      VectorQ l = t.product(i, j);
      VectorQ r = -t.product(j, i);
      if (l != r) return fail({i, j}, std::move(l), std::move(r));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const VectorQ ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        VectorQ s = t.bracket(ei, t.product(j, k));
        s = s + t.bracket(ej, t.product(k, i));
        s = s + t.bracket(ek, t.product(i, j));
        if (!is_zero(s)) return fail({i, j, k}, std::move(s), zero_vector(n));
      }
  return {};
}

bool is_abelian(const StructureTensor& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) return false;
  return true;
}

bool is_regular(const BiHomAlgebra& a) { return is_invertible(a.alpha()) && is_invertible(a.beta()); }

}  // namespace bihom
