#include "doctest.h"

#include "bihom/analysis.hpp"
#include "bihom/catalog.hpp"
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

/// Heisenberg algebra: [e1,e2] = e3.
StructureTensor heisenberg() {
  StructureTensor t(3);
  t.set_product(0, 1, {0, 0, 1});
  t.set_product(1, 0, {0, 0, -1});
  return t;
}

/// sl2 (+) the 1-dimensional abelian algebra.
StructureTensor gl2() { return direct_sum({make_sl2(), StructureTensor(1)}); }

}  // namespace

TEST_CASE("Killing form of sl2") {
  const MatrixQ k = killing_form(make_sl2());
  CHECK(k == MatrixQ{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
  CHECK(det(k) == Rational(-128));
  CHECK(k == testing::naive_killing(make_sl2()));
  CHECK(is_semisimple_lie(make_sl2()));
  CHECK(!is_semisimple_lie(heisenberg()));
  CHECK(!is_semisimple_lie(gl2()));
}

TEST_CASE("Killing form errors on a non-Lie bracket") {
  CHECK(code_of([] { killing_form(make_L2().tensor()); }) == ErrorCode::NotLie);
}

TEST_CASE("property: Killing form agrees with the naive trace formula") {
  Gen g(41);
  for (int trial = 0; trial < 8; ++trial) {
    const MatrixQ p = g.invertible(3);
    const StructureTensor t = make_sl2().change_basis(p);
    CHECK(killing_form(t) == testing::naive_killing(t));
    // K(x, y) transforms as p^T K p
    CHECK(killing_form(t) == p.transpose() * killing_form(make_sl2()) * p);
  }
  const StructureTensor six = testing::sl2_power_lie(2).tensor();
  CHECK(killing_form(six) == testing::naive_killing(six));
}

TEST_CASE("derived series") {
  const auto s = derived_series(heisenberg());
  REQUIRE(s.size() == 3);
  CHECK(s[0].dim() == 3);
  CHECK(s[1].dim() == 1);
  CHECK(s[2].dim() == 0);
  const auto p = derived_series(make_sl2());
  CHECK(p.size() == 1);
}

TEST_CASE("ideals") {
  const BiHomAlgebra g = BiHomAlgebra::from_lie(gl2());
  const IdealReport sl = is_ideal(g, Subspace::span(4, {unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)}));
  CHECK(sl.is_ideal);
  CHECK(sl.is_subalgebra);

  const IdealReport borel = is_ideal(g, Subspace::span(4, {unit_vector(4, 0), unit_vector(4, 1)}));
  CHECK(borel.is_subalgebra);
  CHECK(!borel.is_ideal);
  REQUIRE(borel.failing_witness);

  // alpha-stability comes first
  const BiHomAlgebra l1 = make_L1(2, 3);
  const IdealReport r = is_ideal(l1, Subspace::span(3, {VectorQ{0, 1, 1}}));
  CHECK(!r.is_ideal);
  REQUIRE(r.failing_witness);
  CHECK(r.failing_witness->kind == "alpha");

  CHECK(ideal_closure(l1, unit_vector(3, 1)).is_full());
  CHECK(ideal_closure(g, unit_vector(4, 3)).dim() == 1);
}

TEST_CASE("simplicity by Burnside") {
  for (const auto& a : {make_L1(2, 3), make_L1(1, 1), make_L2(), make_L3(3), make_L3(0)}) {
    const SimplicityReport r = simplicity(a);
    CHECK(r.enveloping_dim == 9);
    CHECK(r.simple);
    CHECK(!r.abelian);
  }
  const SimplicityReport two = simplicity(testing::sl2_power_lie(2));
  CHECK(two.enveloping_dim == 18);
  CHECK(!two.simple);

  const SimplicityReport ab = simplicity(BiHomAlgebra::from_lie(StructureTensor(1)));
  CHECK(ab.abelian);
  CHECK(!ab.simple);

  CHECK(!is_simple(BiHomAlgebra::from_lie(heisenberg())));
  CHECK(code_of([] { simplicity(printed_L3(2)); }) == ErrorCode::AxiomViolation);
}

TEST_CASE("Burnside with left multiplications only") {
  std::vector<MatrixQ> ops;
  const BiHomAlgebra l1 = make_L1(2, 3);
  for (std::size_t i = 0; i < 3; ++i) ops.push_back(l1.tensor().left_multiplication(i));
  ops.push_back(l1.alpha());
  ops.push_back(l1.beta());
  ops.push_back(MatrixQ::identity(3));
  CHECK(enveloping_dim(ops) == 9);
  CHECK(enveloping_dim({MatrixQ::identity(3)}) == 1);
  CHECK(enveloping_dim({MatrixQ::diagonal({1, 2, 3})}) == 3);
}

TEST_CASE("decompose_semisimple") {
  const auto one = decompose_semisimple(make_sl2());
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_full());

  const auto two = decompose_semisimple(testing::sl2_power_lie(2).tensor());
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Subspace::span(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)}));
  CHECK(two[1] == Subspace::span(6, {unit_vector(6, 3), unit_vector(6, 4), unit_vector(6, 5)}));

  CHECK(code_of([] { decompose_semisimple(gl2()); }) == ErrorCode::NotSemisimple);
}

TEST_CASE("decompose_semisimple on a mixed basis") {
  // sl2 (+) sl2 written in a basis that mixes the two factors
  Gen g(42);
  const StructureTensor base = testing::sl2_power_lie(2).tensor();
  for (int trial = 0; trial < 3; ++trial) {
    const MatrixQ p = g.invertible(6, 1);
    const StructureTensor t = base.change_basis(p);
    const auto ideals = decompose_semisimple(t);
    REQUIRE(ideals.size() == 2);
    const BiHomAlgebra a = BiHomAlgebra::from_lie(t);
    for (const auto& s : ideals) {
      CHECK(s.dim() == 3);
      CHECK(is_ideal(a, s).is_ideal);
    }
    CHECK(intersect(ideals[0], ideals[1]).is_zero());
  }
}

TEST_CASE("permutations of simple ideals") {
  const BiHomAlgebra two = yau_twist({testing::sl2_power_lie(2).tensor(), block_permutation(3, {1, 0}),
                                      MatrixQ::identity(6)});
  const Decomposition d = simple_ideal_decomposition(two);
  CHECK(d.ideals.size() == 2);
  CHECK(cycle_notation(d.sigma_alpha) == "(1 2)");
  CHECK(cycle_notation(d.sigma_beta) == "id");
  CHECK(d.m == 2);
  REQUIRE(d.warnings.size() == 1);

  const BiHomAlgebra three = yau_twist({testing::sl2_power_lie(3).tensor(), block_permutation(3, {1, 2, 0}),
                                        MatrixQ::identity(9)});
  const Decomposition d3 = simple_ideal_decomposition(three);
  CHECK(d3.m == 3);
  CHECK(is_transitive(d3.sigma_alpha));
  CHECK(cycle_notation(d3.sigma_alpha) == "(1 2 3)");
  CHECK(d3.warnings.empty());

  CHECK(!is_transitive({0, 1}));
  CHECK(is_transitive({0}));
  CHECK(cycle_notation({1, 0, 2}) == "(1 2)");

  const auto ideals = decompose_semisimple(testing::sl2_power_lie(2).tensor());
  MatrixQ mix = MatrixQ::identity(6);
  mix(3, 0) = 1;
  CHECK(code_of([&] { automorphism_permutation(ideals, mix); }) == ErrorCode::NotPermuted);
}

TEST_CASE("type candidates") {
  CHECK(type_candidates(3) == std::vector<TypeLabel>{{Series::A, 1, 1}});
  CHECK(type_candidates(14) == std::vector<TypeLabel>{{Series::G2, 0, 1}});
  const auto six = type_candidates(6);
  CHECK(std::find(six.begin(), six.end(), TypeLabel{Series::A, 1, 2}) != six.end());
  for (const auto& t : six) CHECK(t.series == Series::A);
  // 10 = dim B2 = dim C2, but C needs rank >= 3
  const auto ten = type_candidates(10);
  CHECK(std::find(ten.begin(), ten.end(), TypeLabel{Series::B, 2, 1}) != ten.end());
  for (const auto& t : ten) CHECK(t.series != Series::C);
  // dim D4 = 28
  const auto tw8 = type_candidates(28);
  CHECK(std::find(tw8.begin(), tw8.end(), TypeLabel{Series::D, 4, 1}) != tw8.end());
  CHECK(type_candidates(1).empty());
  CHECK(type_candidates(2).empty());
  CHECK(to_string(TypeLabel{Series::A, 1, 2}) == "(A1, 2)");
}
