#pragma once

// Test-only oracles and generators. Nothing here calls into the elimination
// or Faddeev-LeVerrier code paths it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/catalog.hpp"
#include "bihom/matrix.hpp"
#include "bihom/poly.hpp"

namespace bihom::testing {

/// Leibniz expansion over all permutations.
inline Rational leibniz_det(const MatrixQ& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    total += (inversions % 2) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(xI - m) by sampling at x = 0..n and Lagrange interpolation.
inline PolyQ interpolated_char_poly(const MatrixQ& m) {
  const std::size_t n = m.rows();
  PolyQ result;
  for (std::size_t s = 0; s <= n; ++s) {
    const Rational xs(static_cast<long>(s));
    const Rational ys = leibniz_det(xs * MatrixQ::identity(n) - m);
    PolyQ basis = PolyQ::constant(ys);
    for (std::size_t t = 0; t <= n; ++t) {
      if (t == s) continue;
      const Rational xt(static_cast<long>(t));
      basis = basis * PolyQ({-xt / (xs - xt), Rational(1) / (xs - xt)});
    }
    result = result + basis;
  }
  return result;
}

/// sum_{k,l} c[i][k][l] c[j][l][k]
inline MatrixQ naive_killing(const StructureTensor& t) {
  const std::size_t n = t.dim();
  MatrixQ k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) k(i, j) += t(i, a, b) * t(j, b, a);
  return k;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// numerator and denominator bounded by `height` in absolute value
  Rational rational(long height = 10) { return Rational(integer(-height, height), integer(1, height)); }

  Rational nonzero_rational(long height = 10) {
    for (;;) {
      Rational r = rational(height);
      if (!r.is_zero()) return r;
    }
  }

  /// a nonzero rational with |a| != 1
  Rational generic_parameter(long height = 10) {
    for (;;) {
      Rational r = nonzero_rational(height);
      if (!r.abs().is_one()) return r;
    }
  }

  VectorQ vector(std::size_t n, long height = 10) {
    VectorQ v(n);
    for (auto& x : v) x = rational(height);
    return v;
  }

  MatrixQ invertible(std::size_t n, long entry_bound = 3) {
    for (;;) {
      MatrixQ m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(integer(-entry_bound, entry_bound));
      if (!leibniz_det(m).is_zero()) return m;
    }
  }

 private:
  std::mt19937 rng_;
};

/// Ad(exp(s e)) on sl2 in the (h, e, f) basis.
inline MatrixQ sl2_unipotent_automorphism(const Rational& s) {
  return {{1, 0, s}, {Rational(-2) * s, 1, -s * s}, {0, 0, 1}};
}

/// Ad(diag(t, 1/t)) on sl2 with t^2 = a.
inline MatrixQ sl2_torus_automorphism(const Rational& a) { return MatrixQ::diagonal({1, a, a.inverse()}); }

inline BiHomAlgebra sl2_power_lie(std::size_t copies) {
  return BiHomAlgebra::from_lie(direct_sum(std::vector<StructureTensor>(copies, make_sl2())));
}

}  // namespace bihom::testing
