#include "bihom/catalog.hpp"

#include "bihom/error.hpp"

namespace bihom {

namespace {

StructureTensor table3(const std::vector<std::pair<std::pair<int, int>, VectorQ>>& entries) {
  StructureTensor t(3);
  for (const auto& [ij, v] : entries) t.set_product(static_cast<std::size_t>(ij.first - 1),
                                                    static_cast<std::size_t>(ij.second - 1), v);
  return t;
}

}  // namespace

StructureTensor make_sl2() {
  return table3({
      {{1, 2}, {0, 2, 0}},
      {{2, 1}, {0, -2, 0}},
      {{1, 3}, {0, 0, -2}},
      {{3, 1}, {0, 0, 2}},
      {{2, 3}, {1, 0, 0}},
      {{3, 2}, {-1, 0, 0}},
  });
}

MatrixQ sl2_unipotent_basis() {
  return MatrixQ{
      {0, -1, Rational(1, 2)},
      {1, 0, Rational(-1, 4)},
      {0, 0, -2},
  };
}

MatrixQ unipotent_u() { return {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}; }

MatrixQ unipotent_power(const Rational& a) {
  return {{1, a, (a * a - a) / Rational(2)}, {0, 1, a}, {0, 0, 1}};
}

BiHomAlgebra make_L1(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroParameter, "L1 needs nonzero a and b");
  const Rational two(2);
  StructureTensor t = table3({
      {{1, 2}, {0, two * b, 0}},
      {{1, 3}, {0, 0, -two / b}},
      {{2, 1}, {0, -two * a, 0}},
      {{2, 3}, {a / b, 0, 0}},
      {{3, 1}, {0, 0, two / a}},
      {{3, 2}, {-b / a, 0, 0}},
  });
  return BiHomAlgebra(std::move(t), MatrixQ::diagonal({1, a, a.inverse()}), MatrixQ::diagonal({1, b, b.inverse()}));
}

BiHomAlgebra make_L2() {
  StructureTensor t = table3({
      {{1, 2}, {2, 0, 0}},
      {{1, 3}, {1, 2, 0}},
      {{2, 1}, {-2, 0, 0}},
      {{2, 2}, {-2, 0, 0}},
      {{2, 3}, {1, 1, 2}},
      {{3, 1}, {1, -2, 0}},
      {{3, 2}, {0, -3, -2}},
      {{3, 3}, {-1, -1, -2}},
  });
  return BiHomAlgebra(std::move(t), MatrixQ::identity(3), unipotent_u());
}

namespace {

BiHomAlgebra l3_table(const Rational& a, bool printed) {
  const Rational one(1), two(2), three(3);
  const Rational c23 = printed ? (three * a - a * a) / two : three * a - a * a;
  const Rational c33 = printed ? (one - a) * (a + Rational(4)) / two : (one - a) * (a + two) / two;
  StructureTensor t = table3({
      {{1, 2}, {2, 0, 0}},
      {{1, 3}, {two * a - one, 2, 0}},
      {{2, 1}, {-2, 0, 0}},
      {{2, 2}, {two * (one - a), 0, 0}},
      {{2, 3}, {c23, 3, 2}},
      {{3, 1}, {-1, -2, 0}},
      {{3, 2}, {-(a + one), -(one + two * a), -2}},
      {{3, 3}, {c33, one - a * a, two * (one - a)}},
  });
  return BiHomAlgebra(std::move(t), unipotent_u(), unipotent_power(a));
}

}  // namespace

BiHomAlgebra make_L3(const Rational& a) { return l3_table(a, false); }

BiHomAlgebra printed_L3(const Rational& a) { return l3_table(a, true); }

BiHomAlgebra direct_sum(const std::vector<BiHomAlgebra>& parts) {
  std::vector<StructureTensor> ts;
  std::vector<MatrixQ> as, bs;
  for (const auto& p : parts) {
    ts.push_back(p.tensor());
    as.push_back(p.alpha());
    bs.push_back(p.beta());
  }
  return BiHomAlgebra(direct_sum(ts), block_diagonal(as), block_diagonal(bs));
}

MatrixQ block_permutation(std::size_t block, const std::vector<std::size_t>& perm) {
  const std::size_t n = block * perm.size();
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t k = 0; k < block; ++k) m(perm[i] * block + k, i * block + k) = 1;
  return m;
}

CatalogEntry catalog_entry(const std::string& name, const std::vector<Rational>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorCode::InvalidArgument,
                  name + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (name == "sl2") {
    need(0);
    return {name, params, BiHomAlgebra::from_lie(make_sl2(), {"h", "e", "f"}), false};
  }
  if (name == "L1") {
    need(2);
    const bool outside = params[0].abs().is_one();
    return {name, params, make_L1(params[0], params[1]), outside};
  }
  if (name == "L2") {
    need(0);
    return {name, params, make_L2(), false};
  }
  if (name == "L3") {
    need(1);
    return {name, params, make_L3(params[0]), false};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown catalog entry \"" + name + "\" (sl2, L1, L2, L3)");
}

}  // namespace bihom
