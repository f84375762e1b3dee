#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/rational.hpp"

namespace bihom {

/// Univariate polynomial over Q, coefficients lowest degree first. Trailing
/// zero coefficients are trimmed, so the zero polynomial has no coefficients.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coefficients);

  /// x - r
  static PolyQ linear_factor(const Rational& r);
  static PolyQ constant(const Rational& c);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational leading() const;
  Rational coefficient(std::size_t k) const;

  Rational operator()(const Rational& x) const;
  MatrixQ operator()(const MatrixQ& m) const;

  PolyQ monic() const;

  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

  /// Exact division by (x - r); the remainder must be zero.
  PolyQ divide_by_root(const Rational& r) const;

  /// e.g. "x^3 - 5/2*x^2 + x - 1"
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace bihom
