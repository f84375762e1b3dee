#include "bihom/classify3.hpp"

#include <algorithm>
#include <array>

#include "bihom/analysis.hpp"
#include "bihom/catalog.hpp"
#include "bihom/error.hpp"
#include "bihom/exactlin.hpp"
#include "bihom/twist.hpp"

namespace bihom {

MatrixQ Sl2Triple::as_basis() const { return MatrixQ::from_columns({h, e, f}, h.size()); }

bool is_sl2_triple(const StructureTensor& t, const Sl2Triple& s) {
  return t.bracket(s.h, s.e) == Rational(2) * s.e && t.bracket(s.h, s.f) == Rational(-2) * s.f &&
         t.bracket(s.e, s.f) == s.h && !is_zero(s.h);
}

std::optional<Sl2Triple> complete_triple(const StructureTensor& t, const VectorQ& e) {
  const std::size_t n = t.dim();
  const MatrixQ ad_e = t.left_multiplication(e);
  // [h, e] = 2e  <=>  ad_e h = -2e
  auto h = solve(ad_e, Rational(-2) * e);
  if (!h || is_zero(*h)) return std::nullopt;
  // [e, f] = h and [h, f] = -2f, stacked
  const MatrixQ shifted = t.left_multiplication(*h) + Rational(2) * MatrixQ::identity(n);
  MatrixQ sys(2 * n, n);
  VectorQ rhs(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys(i, j) = ad_e(i, j);
      sys(n + i, j) = shifted(i, j);
    }
    rhs[i] = (*h)[i];
  }
  auto f = solve(sys, rhs);
  if (!f) return std::nullopt;
  Sl2Triple s{*h, e, *f};
  if (!is_sl2_triple(t, s)) return std::nullopt;
  return s;
}

namespace {

// 0, +-1, then +-2 and +-1/2
const std::array<Rational, 7>& grid_values() {
  static const std::array<Rational, 7> v{Rational(0), Rational(1), Rational(-1), Rational(2),
                                          Rational(-2), Rational(1, 2), Rational(-1, 2)};
  return v;
}

int grid_height(std::size_t idx) { return idx == 0 ? 0 : (idx <= 2 ? 1 : 2); }

std::optional<Sl2Triple> triple_from_semisimple(const StructureTensor& t, const VectorQ& x) {
  const MatrixQ ad = t.left_multiplication(x);
  const RationalRoots roots = rational_roots(char_poly(ad));
  if (!roots.residual.is_constant() || roots.roots.size() != 3) return std::nullopt;
  const Rational c = roots.roots.front().root;
  if (c.sign() <= 0 || roots.roots[1].root != Rational() || roots.roots[2].root != -c) return std::nullopt;
  const VectorQ h = (Rational(2) / c) * x;
  const MatrixQ ad_h = t.left_multiplication(h);
  const MatrixQ id = MatrixQ::identity(t.dim());
  const Subspace plus = kernel(ad_h - Rational(2) * id);
  const Subspace minus = kernel(ad_h + Rational(2) * id);
  if (plus.dim() != 1 || minus.dim() != 1) return std::nullopt;
  VectorQ e = plus.vectors().front();
  const VectorQ f = minus.vectors().front();
  const VectorQ ef = t.bracket(e, f);
  // [e, f] lies in the 0-eigenspace, which is spanned by h
  std::size_t p = 0;
  while (p < h.size() && h[p].is_zero()) ++p;
  const Rational kappa = ef[p] / h[p];
  if (kappa.is_zero()) return std::nullopt;
  e = kappa.inverse() * e;
  Sl2Triple s{h, e, f};
  if (!is_sl2_triple(t, s)) return std::nullopt;
  return s;
}

std::optional<Sl2Triple> triple_from_candidate(const StructureTensor& t, const VectorQ& x) {
  const MatrixQ ad = t.left_multiplication(x);
  if (ad.is_zero()) return std::nullopt;
  const PolyQ cp = char_poly(ad);
  if (cp == PolyQ({0, 0, 0, 1})) return complete_triple(t, x);
  return triple_from_semisimple(t, x);
}

}  // namespace

Sl2Triple find_sl2_triple(const StructureTensor& t) {
  if (t.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "sl2 triples need a 3-dimensional algebra");
  if (!is_semisimple_lie(t)) throw Error(ErrorCode::NotSemisimple, "Killing form is degenerate");
  const auto& vals = grid_values();
  std::vector<std::array<std::size_t, 3>> cands;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = 0; j < vals.size(); ++j)
      for (std::size_t k = 0; k < vals.size(); ++k)
        if (i || j || k) cands.push_back({i, j, k});
  auto key = [](const std::array<std::size_t, 3>& c) {
    const int h = std::max({grid_height(c[0]), grid_height(c[1]), grid_height(c[2])});
    const int nz = (c[0] != 0) + (c[1] != 0) + (c[2] != 0);
    return std::make_tuple(h, nz, c);
  };
  std::stable_sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  for (const auto& c : cands) {
    const VectorQ x{vals[c[0]], vals[c[1]], vals[c[2]]};
    if (auto s = triple_from_candidate(t, x)) return *s;
  }
  throw Error(ErrorCode::NotSplit, "no element of the search grid has rational ad-eigenvalues");
}

std::string to_string(const Profile& p) {
  switch (p.kind) {
    case ProfileKind::DiagonalDistinct: return "DiagonalDistinct(" + p.a.str() + ")";
    case ProfileKind::Identity: return "Identity";
    case ProfileKind::UnipotentFull: return "UnipotentFull";
    case ProfileKind::UnipotentPartial: return "UnipotentPartial";
    case ProfileKind::DiagNegPair: return "DiagNegPair";
    case ProfileKind::NegJordan: return "NegJordan";
  }
  return "?";
}

Profile alpha_profile(const MatrixQ& m) {
  if (!m.is_square() || m.rows() != 3) throw Error(ErrorCode::DimensionMismatch, "profiles are defined for 3x3 maps");
  const RationalRoots roots = rational_roots(char_poly(m));
  if (!roots.residual.is_constant()) {
    throw Error(ErrorCode::IrrationalEigenvalues, "characteristic polynomial has the factor " + roots.residual.str());
  }
  auto mult_of = [&](const Rational& r) -> std::size_t {
    for (const auto& rm : roots.roots)
      if (rm.root == r) return rm.multiplicity;
    return 0;
  };
  auto dims = [&](const Rational& r) {
    std::vector<std::size_t> d;
    for (const auto& s : generalized_eigenspace(m, r)) d.push_back(s.dim());
    return d;
  };
  const Rational one(1);
  const std::size_t m1 = mult_of(one);
  if (m1 == 3) {
    const auto d = dims(one);
    if (d == std::vector<std::size_t>{3}) return {ProfileKind::Identity, {}};
    if (d == std::vector<std::size_t>{2, 3}) return {ProfileKind::UnipotentPartial, {}};
    return {ProfileKind::UnipotentFull, {}};
  }
  if (m1 == 1 && mult_of(-one) == 2) {
    const auto d = dims(-one);
    if (d == std::vector<std::size_t>{2}) return {ProfileKind::DiagNegPair, {}};
    return {ProfileKind::NegJordan, {}};
  }
  if (m1 == 1 && roots.roots.size() == 3) {
    Rational r, s;
    bool first = true;
    for (const auto& rm : roots.roots) {
      if (rm.root == one) continue;
      (first ? r : s) = rm.root;
      first = false;
    }
    if (r * s == one) return {ProfileKind::DiagonalDistinct, r.abs() > one ? r : s};
  }
  std::string ev;
  for (const auto& rm : roots.roots) ev += " " + rm.root.str() + "^" + std::to_string(rm.multiplicity);
  throw Error(ErrorCode::NotAutomorphismShape, "eigenvalues" + ev + " are not of the form {1, a, 1/a}");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::L1: return "L1";
    case Family::L2: return "L2";
    case Family::L3: return "L3";
  }
  return "?";
}

std::pair<Rational, Rational> normalize_L1(const Rational& a, const Rational& b) {
  const Rational one(1);
  const bool invert = a.abs() < one || (a.abs() == one && b.abs() < one);
  if (invert) return {a.inverse(), b.inverse()};
  return {a, b};
}

BiHomAlgebra catalog_algebra(const ClassLabel& label) {
  switch (label.family) {
    case Family::L1: return make_L1(label.params.at(0), label.params.at(1));
    case Family::L2: return make_L2();
    case Family::L3: return make_L3(label.params.at(0));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

namespace {

// Eigenvalue of v under m, assuming v is an eigenvector.
Rational eigenvalue_of(const MatrixQ& m, const VectorQ& v) {
  const VectorQ mv = m * v;
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  const Rational lambda = mv[p] / v[p];
  if (mv != lambda * v) throw Error(ErrorCode::Unmatched, "expected an eigenvector, got " + to_string(v));
  return lambda;
}

std::optional<VectorQ> ad_preimage(const StructureTensor& t, const MatrixQ& derivation) {
  const std::size_t n = t.dim();
  MatrixQ sys(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const MatrixQ ad = t.left_multiplication(i);
    for (std::size_t r = 0; r < n * n; ++r) sys(r, i) = ad.entries()[r];
  }
  return solve(sys, derivation.entries());
}

MatrixQ unipotent_log(const MatrixQ& u) {
  const MatrixQ nil = u - MatrixQ::identity(u.rows());
  return nil - Rational(1, 2) * (nil * nil);
}

struct Match {
  Family family;
  std::vector<Rational> params;
  Sl2Triple triple;
  MatrixQ basis;
};

Match match_semisimple(const StructureTensor& lie, const MatrixQ& alpha, const MatrixQ& beta,
                       const std::string& diag) {
  const MatrixQ id = MatrixQ::identity(3);
  const Subspace fixed = intersect(kernel(alpha - id), kernel(beta - id));
  if (fixed.dim() == 3) {
    const Sl2Triple s = find_sl2_triple(lie);
    return {Family::L1, {1, 1}, s, s.as_basis()};
  }
  if (fixed.dim() != 1) {
    throw Error(ErrorCode::Unmatched, diag + "; the maps share a " + std::to_string(fixed.dim()) +
                                          "-dimensional fixed space, which no listed family has");
  }
  const VectorQ h0 = fixed.vectors().front();
  auto s = triple_from_semisimple(lie, h0);
  if (!s) {
    throw Error(ErrorCode::NotSplit, diag + "; the common fixed vector " + to_string(h0) +
                                         " has no rational ad-eigenvalues");
  }
  const Rational a = eigenvalue_of(alpha, s->e);
  const Rational b = eigenvalue_of(beta, s->e);
  auto [na, nb] = normalize_L1(a, b);
  if (na != a || nb != b) s = Sl2Triple{-s->h, s->f, s->e};
  return {Family::L1, {na, nb}, *s, s->as_basis()};
}

Match match_unipotent(const StructureTensor& lie, const MatrixQ& alpha, const MatrixQ& beta,
                      const Profile& pa, const Profile& pb, const std::string& diag) {
  const bool alpha_trivial = pa.kind == ProfileKind::Identity;
  const auto xa = ad_preimage(lie, unipotent_log(alpha));
  const auto xb = ad_preimage(lie, unipotent_log(beta));
  if (!xa || !xb) throw Error(ErrorCode::Unmatched, diag + "; a unipotent map is not an inner automorphism");
  const VectorQ& gen = alpha_trivial ? *xb : *xa;
  const VectorQ e = Rational(2) * gen;
  auto s = complete_triple(lie, e);
  if (!s) throw Error(ErrorCode::Unmatched, diag + "; " + to_string(e) + " does not extend to an sl2 triple");

  std::vector<Rational> params;
  Family fam = Family::L2;
  if (!alpha_trivial) {
    fam = Family::L3;
    // beta = exp(ad(s * x_alpha)) for a rational s
    std::size_t p = 0;
    while (p < xa->size() && (*xa)[p].is_zero()) ++p;
    const Rational ratio = (*xb)[p] / (*xa)[p];
    if (ratio * (*xa) != *xb) {
      throw Error(ErrorCode::Unmatched, diag + "; beta is not a power of alpha");
    }
    params.push_back(ratio);
  } else if (pb.kind != ProfileKind::UnipotentFull) {
    throw Error(ErrorCode::Unmatched, diag);
  }
  // (u1, u2, u3) = (e, -h, -e/4 + h/2 - 2f)
  VectorQ u3 = Rational(-1, 4) * s->e;
  add_scaled(u3, Rational(1, 2), s->h);
  add_scaled(u3, Rational(-2), s->f);
  MatrixQ basis = MatrixQ::from_columns({s->e, -s->h, u3}, 3);
  return {fam, std::move(params), *s, std::move(basis)};
}

}  // namespace

ClassLabel classify3(const BiHomAlgebra& a) {
  if (a.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "classify3 needs a 3-dimensional algebra");
  const SimplicityReport simp = simplicity(a);
  if (!simp.simple) {
    throw Error(ErrorCode::NotSimple, simp.abelian ? "the algebra is abelian"
                                                   : "proper ideals exist (enveloping dimension " +
                                                         std::to_string(simp.enveloping_dim) + " < 9)");
  }
  const InducedLie induced = induce_lie(a);
  if (!is_semisimple_lie(induced.lie)) throw Error(ErrorCode::NotSemisimple, "induced Lie algebra is not semisimple");

  const Profile pa = alpha_profile(a.alpha());
  const Profile pb = alpha_profile(a.beta());
  const std::string diag = "alpha " + to_string(pa) + ", beta " + to_string(pb);
  auto is_kind = [](const Profile& p, ProfileKind k) { return p.kind == k; };
  for (const Profile* p : {&pa, &pb}) {
    if (is_kind(*p, ProfileKind::UnipotentPartial) || is_kind(*p, ProfileKind::NegJordan)) {
      throw Error(ErrorCode::NotSimple, diag + "; this Jordan shape only occurs on non-simple brackets");
    }
  }

  Match m = [&] {
    const bool ua = is_kind(pa, ProfileKind::UnipotentFull);
    const bool ub = is_kind(pb, ProfileKind::UnipotentFull);
    if (ua || ub) {
      const bool ok_a = ua || is_kind(pa, ProfileKind::Identity);
      const bool ok_b = ub || is_kind(pb, ProfileKind::Identity);
      if (!ok_a || !ok_b) throw Error(ErrorCode::Unmatched, diag + "; mixed unipotent and semisimple maps");
      return match_unipotent(induced.lie, a.alpha(), a.beta(), pa, pb, diag);
    }
    return match_semisimple(induced.lie, a.alpha(), a.beta(), diag);
  }();

  ClassLabel label{m.family, m.params, m.basis, m.triple};
  if (a.change_basis(label.change_of_basis) != catalog_algebra(label)) {
    throw Error(ErrorCode::Unmatched, diag + "; conjugation does not reproduce the catalog table");
  }
  return label;
}

bool is_bihom_isomorphism(const BiHomAlgebra& a1, const BiHomAlgebra& a2, const MatrixQ& f) {
  const std::size_t n = a1.dim();
  if (a2.dim() != n || f.rows() != n || f.cols() != n || !is_invertible(f)) return false;
  if (f * a1.alpha() != a2.alpha() * f || f * a1.beta() != a2.beta() * f) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f * a1.tensor().product(i, j) != a2.tensor().bracket(f.column(i), f.column(j))) return false;
  return true;
}

std::optional<MatrixQ> bihom_isomorphic3(const BiHomAlgebra& a1, const BiHomAlgebra& a2) {
  const ClassLabel l1 = classify3(a1);
  const ClassLabel l2 = classify3(a2);
  if (l1.family != l2.family || l1.params != l2.params) return std::nullopt;
  MatrixQ f = l2.change_of_basis * invert(l1.change_of_basis);
  if (!is_bihom_isomorphism(a1, a2, f)) {
    throw Error(ErrorCode::Unmatched, "composed change of basis fails the intertwining identities");
  }
  return f;
}

}  // namespace bihom
