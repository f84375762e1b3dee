#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/matrix.hpp"

namespace bihom {

/// Structure constants: [e_i, e_j] = sum_k c(i, j, k) e_k. No symmetry is
/// imposed; BiHom skew-symmetry is a twisted relation checked separately.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Coordinates of [e_i, e_j].
  VectorQ product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, const VectorQ& v);

  VectorQ bracket(const VectorQ& x, const VectorQ& y) const;
  /// x -> [e_i, x]
  MatrixQ left_multiplication(std::size_t i) const;
  /// x -> [x, e_i]
  MatrixQ right_multiplication(std::size_t i) const;
  /// x -> [v, x]
  MatrixQ left_multiplication(const VectorQ& v) const;

  /// Same bracket written in the basis given by the columns of p.
  StructureTensor change_basis(const MatrixQ& p) const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

StructureTensor direct_sum(const std::vector<StructureTensor>& parts);

/// The 4-tuple (L, [.,.], alpha, beta). Construction checks sizes only; the
/// axioms are checked by check_all.
class BiHomAlgebra {
 public:
  BiHomAlgebra() = default;
  BiHomAlgebra(StructureTensor tensor, MatrixQ alpha, MatrixQ beta, std::vector<std::string> basis_names = {});

  /// Ordinary Lie algebra viewed with alpha = beta = identity.
  static BiHomAlgebra from_lie(StructureTensor tensor, std::vector<std::string> basis_names = {});

  std::size_t dim() const { return tensor_.dim(); }
  const StructureTensor& tensor() const { return tensor_; }
  const MatrixQ& alpha() const { return alpha_; }
  const MatrixQ& beta() const { return beta_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// (P^-1 [P., P.], P^-1 alpha P, P^-1 beta P): the same algebra in the basis
  /// formed by the columns of p. p^-1 is an isomorphism onto the result.
  BiHomAlgebra change_basis(const MatrixQ& p) const;

  friend bool operator==(const BiHomAlgebra& a, const BiHomAlgebra& b) {
    return a.tensor_ == b.tensor_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  StructureTensor tensor_;
  MatrixQ alpha_;
  MatrixQ beta_;
  std::vector<std::string> names_;
};

std::vector<std::string> default_basis_names(std::size_t dim);

VectorQ bracket(const BiHomAlgebra& a, const VectorQ& x, const VectorQ& y);

/// A basis-index tuple where an identity fails, with both sides.
struct Witness {
  std::vector<std::size_t> indices;
  VectorQ lhs;
  VectorQ rhs;
};

struct CheckResult {
  bool passed = true;
  std::optional<Witness> witness;
  explicit operator bool() const { return passed; }
};

struct AxiomReport {
  CheckResult commuting;
  CheckResult multiplicative_alpha;
  CheckResult multiplicative_beta;
  CheckResult skew;
  CheckResult jacobi;

  bool all_passed() const {
    return commuting.passed && multiplicative_alpha.passed && multiplicative_beta.passed && skew.passed &&
           jacobi.passed;
  }
  /// First failing axiom, as "name: witness" text; empty when all pass.
  std::string first_failure() const;
};

/// alpha beta = beta alpha; witness index j compares both sides on e_j.
CheckResult check_commuting(const BiHomAlgebra& a);
/// map([e_i, e_j]) = [map e_i, map e_j] for all pairs.
CheckResult check_multiplicative(const StructureTensor& t, const MatrixQ& map);
/// Both halves; the alpha half is reported first.
CheckResult check_multiplicative(const BiHomAlgebra& a);
/// [beta e_i, alpha e_j] = -[beta e_j, alpha e_i] for i <= j.
CheckResult check_bihom_skew(const BiHomAlgebra& a);
/// Cyclic BiHom-Jacobi sum vanishes on every ordered basis triple.
CheckResult check_bihom_jacobi(const BiHomAlgebra& a);
AxiomReport check_all(const BiHomAlgebra& a);
/// Throws AxiomViolation with the first witness if any axiom fails.
void require_axioms(const BiHomAlgebra& a);

/// Ordinary skew-symmetry and Jacobi on basis vectors.
CheckResult is_lie_algebra(const StructureTensor& t);
bool is_abelian(const StructureTensor& t);
bool is_regular(const BiHomAlgebra& a);

std::string to_string(const Witness& w);

}  // namespace bihom
