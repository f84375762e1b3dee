#pragma once

// Published structure tables, typed in independently of src/catalog.cpp.

#include "bihom/algebra.hpp"

namespace bihom::testing {

inline void put(StructureTensor& t, int i, int j, std::initializer_list<Rational> v) {
  t.set_product(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), VectorQ(v));
}

inline StructureTensor published_L1(const Rational& a, const Rational& b) {
  StructureTensor t(3);
  put(t, 1, 2, {0, Rational(2) * b, 0});
  put(t, 1, 3, {0, 0, Rational(-2) / b});
  put(t, 2, 1, {0, Rational(-2) * a, 0});
  put(t, 2, 3, {a / b, 0, 0});
  put(t, 3, 1, {0, 0, Rational(2) / a});
  put(t, 3, 2, {-b / a, 0, 0});
  return t;
}

inline StructureTensor published_L2() {
  StructureTensor t(3);
  put(t, 1, 2, {2, 0, 0});
  put(t, 1, 3, {1, 2, 0});
  put(t, 2, 1, {-2, 0, 0});
  put(t, 2, 2, {-2, 0, 0});
  put(t, 2, 3, {1, 1, 2});
  put(t, 3, 1, {1, -2, 0});
  put(t, 3, 2, {0, -3, -2});
  put(t, 3, 3, {-1, -1, -2});
  return t;
}

inline StructureTensor published_L3(const Rational& a) {
  StructureTensor t(3);
  const Rational one(1);
  put(t, 1, 2, {2, 0, 0});
  put(t, 1, 3, {Rational(2) * a - one, 2, 0});
  put(t, 2, 1, {-2, 0, 0});
  put(t, 2, 2, {Rational(2) * (one - a), 0, 0});
  put(t, 2, 3, {(Rational(3) * a - a * a) / Rational(2), 3, 2});
  put(t, 3, 1, {-1, -2, 0});
  put(t, 3, 2, {-(a + one), -(one + Rational(2) * a), -2});
  put(t, 3, 3, {(one - a) * (a + Rational(4)) / Rational(2), one - a * a, Rational(2) * (one - a)});
  return t;
}

}  // namespace bihom::testing
