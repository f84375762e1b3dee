#include "doctest.h"

#include "bihom/analysis.hpp"
#include "bihom/catalog.hpp"
#include "bihom/classify3.hpp"
#include "bihom/error.hpp"
#include "bihom/exactlin.hpp"
#include "bihom/twist.hpp"
#include "support.hpp"

using namespace bihom;
using bihom::testing::Gen;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected bihom::Error");
  return ErrorCode::InvalidArgument;
}

void check_label(const BiHomAlgebra& input, const ClassLabel& label) {
  CHECK(is_sl2_triple(induce_lie(input).lie, label.triple));
  CHECK(input.change_basis(label.change_of_basis) == catalog_algebra(label));
}

}  // namespace

TEST_CASE("sl2 triples") {
  const StructureTensor t = make_sl2();
  CHECK(is_sl2_triple(t, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)}));
  CHECK(!is_sl2_triple(t, {unit_vector(3, 0), unit_vector(3, 2), unit_vector(3, 1)}));
  const Sl2Triple s = find_sl2_triple(t);
  CHECK(is_sl2_triple(t, s));
  const auto c = complete_triple(t, unit_vector(3, 1));
  REQUIRE(c);
  CHECK(is_sl2_triple(t, *c));
  CHECK(!complete_triple(t, unit_vector(3, 0)));
}

TEST_CASE("find_sl2_triple on conjugates and errors") {
  Gen g(51);
  for (int trial = 0; trial < 10; ++trial) {
    const StructureTensor t = make_sl2().change_basis(g.invertible(3));
    CHECK(is_sl2_triple(t, find_sl2_triple(t)));
  }
  // so(3): [e1,e2] = e3 and cyclic; no rational sl2 triple
  StructureTensor so3(3);
  so3.set_product(0, 1, {0, 0, 1});
  so3.set_product(1, 0, {0, 0, -1});
  so3.set_product(1, 2, {1, 0, 0});
  so3.set_product(2, 1, {-1, 0, 0});
  so3.set_product(2, 0, {0, 1, 0});
  so3.set_product(0, 2, {0, -1, 0});
  CHECK(is_semisimple_lie(so3));
  CHECK(code_of([&] { find_sl2_triple(so3); }) == ErrorCode::NotSplit);
  CHECK(code_of([] { find_sl2_triple(StructureTensor(3)); }) == ErrorCode::NotSemisimple);
}

TEST_CASE("alpha profiles") {
  CHECK(alpha_profile(MatrixQ::identity(3)).kind == ProfileKind::Identity);
  CHECK(alpha_profile(unipotent_u()).kind == ProfileKind::UnipotentFull);
  const Profile d = alpha_profile(MatrixQ::diagonal({1, Rational(1, 3), 3}));
  CHECK(d.kind == ProfileKind::DiagonalDistinct);
  CHECK(d.a == Rational(3));
  CHECK(alpha_profile(MatrixQ::diagonal({1, -1, -1})).kind == ProfileKind::DiagNegPair);
  CHECK(alpha_profile(MatrixQ{{1, 0, 0}, {0, -1, 1}, {0, 0, -1}}).kind == ProfileKind::NegJordan);
  CHECK(alpha_profile(MatrixQ{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}).kind == ProfileKind::UnipotentPartial);
  // rotation by 90 degrees: eigenvalues +-i
  CHECK(code_of([] { alpha_profile(MatrixQ{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}); }) ==
        ErrorCode::IrrationalEigenvalues);
  CHECK(code_of([] { alpha_profile(MatrixQ::diagonal({2, 3, 5})); }) == ErrorCode::NotAutomorphismShape);
}

TEST_CASE("normalize_L1") {
  CHECK(normalize_L1(2, 3) == std::pair<Rational, Rational>{2, 3});
  CHECK(normalize_L1(Rational(1, 2), Rational(1, 3)) == std::pair<Rational, Rational>{2, 3});
  CHECK(normalize_L1(1, Rational(1, 2)) == std::pair<Rational, Rational>{1, 2});
  CHECK(normalize_L1(1, 2) == std::pair<Rational, Rational>{1, 2});
  CHECK(normalize_L1(-1, -1) == std::pair<Rational, Rational>{-1, -1});
}

TEST_CASE("classify3 on the catalog") {
  struct Case {
    BiHomAlgebra algebra;
    Family family;
    std::vector<Rational> params;
  };
  const std::vector<Case> cases = {
      {make_L1(2, 3), Family::L1, {2, 3}},
      {make_L1(-3, Rational(1, 2)), Family::L1, {-3, Rational(1, 2)}},
      {make_L1(Rational(5, 7), Rational(-7, 5)), Family::L1, {Rational(7, 5), Rational(-5, 7)}},
      {make_L1(1, 1), Family::L1, {1, 1}},
      {make_L1(1, 2), Family::L1, {1, 2}},
      {make_L2(), Family::L2, {}},
      {make_L3(3), Family::L3, {3}},
      {make_L3(0), Family::L3, {0}},
      {make_L3(Rational(-2, 5)), Family::L3, {Rational(-2, 5)}},
  };
  for (const auto& c : cases) {
    const ClassLabel label = classify3(c.algebra);
    INFO(to_string(label.family), " ", label.params.size() > 0 ? label.params[0].str() : "", " ",
         label.params.size() > 1 ? label.params[1].str() : "");
    CHECK(label.family == c.family);
    CHECK(label.params == c.params);
    check_label(c.algebra, label);
  }
}

TEST_CASE("property: classify3 is stable under random conjugation") {
  Gen g(52);
  const std::vector<BiHomAlgebra> corpus = {make_L1(2, 3), make_L1(1, 1), make_L1(-1, 2), make_L2(), make_L3(3),
                                            make_L3(Rational(1, 2))};
  for (const auto& a : corpus) {
    const ClassLabel base = classify3(a);
    for (int trial = 0; trial < 6; ++trial) {
      const BiHomAlgebra c = a.change_basis(g.invertible(3));
      const ClassLabel label = classify3(c);
      CHECK(label.family == base.family);
      CHECK(label.params == base.params);
      check_label(c, label);
    }
  }
}

TEST_CASE("classify3 errors") {
  CHECK(code_of([] { classify3(testing::sl2_power_lie(2)); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { classify3(printed_L3(2)); }) == ErrorCode::AxiomViolation);
  CHECK(code_of([] { classify3(BiHomAlgebra::from_lie(StructureTensor(3))); }) == ErrorCode::NotSimple);

  // so(3) has no rational sl2 triple
  StructureTensor so3(3);
  so3.set_product(0, 1, {0, 0, 1});
  so3.set_product(1, 0, {0, 0, -1});
  so3.set_product(1, 2, {1, 0, 0});
  so3.set_product(2, 1, {-1, 0, 0});
  so3.set_product(2, 0, {0, 1, 0});
  so3.set_product(0, 2, {0, -1, 0});
  CHECK(code_of([&] { classify3(BiHomAlgebra::from_lie(so3)); }) == ErrorCode::NotSplit);

  // Ad(diag(1,-1)) with the Weyl reflection h -> -h, e -> -f, f -> -e: no common fixed vector
  const MatrixQ torus = MatrixQ::diagonal({1, -1, -1});
  const MatrixQ weyl{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}};
  const BiHomAlgebra klein = yau_twist({make_sl2(), torus, weyl});
  CHECK(is_simple(klein));
  CHECK(code_of([&] { classify3(klein); }) == ErrorCode::Unmatched);
}

TEST_CASE("bihom_isomorphic3") {
  Gen g(53);
  const BiHomAlgebra l1 = make_L1(2, 3);
  const BiHomAlgebra c = l1.change_basis(g.invertible(3));
  const auto f = bihom_isomorphic3(l1, c);
  REQUIRE(f);
  CHECK(is_bihom_isomorphism(l1, c, *f));
  // (a, b) and (1/a, 1/b) give isomorphic algebras
  const auto inv = bihom_isomorphic3(make_L1(2, 3), make_L1(Rational(1, 2), Rational(1, 3)));
  REQUIRE(inv);
  CHECK(is_bihom_isomorphism(make_L1(2, 3), make_L1(Rational(1, 2), Rational(1, 3)), *inv));

  CHECK(!bihom_isomorphic3(make_L1(2, 3), make_L2()));
  CHECK(!bihom_isomorphic3(make_L2(), make_L3(3)));
  CHECK(!bihom_isomorphic3(make_L1(2, 3), make_L3(3)));
  CHECK(!bihom_isomorphic3(make_L3(3), make_L3(2)));
  CHECK(!bihom_isomorphic3(make_L1(2, 3), make_L1(2, 5)));
  CHECK(!is_bihom_isomorphism(make_L2(), make_L2(), MatrixQ::diagonal({1, 2, 3})));
  CHECK(is_bihom_isomorphism(make_L2(), make_L2(), MatrixQ::identity(3)));
}
