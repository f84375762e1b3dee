#include "bihom/poly.hpp"

#include "bihom/error.hpp"

namespace bihom {

PolyQ::PolyQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolyQ PolyQ::linear_factor(const Rational& r) { return PolyQ({-r, Rational(1)}); }

PolyQ PolyQ::constant(const Rational& c) { return PolyQ({c}); }

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> PolyQ::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational PolyQ::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational PolyQ::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

MatrixQ PolyQ::operator()(const MatrixQ& m) const {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "polynomial of non-square matrix");
  MatrixQ acc(m.rows(), m.cols());
  const MatrixQ id = MatrixQ::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

PolyQ PolyQ::monic() const {
  if (coeffs_.empty()) return *this;
  const Rational lead = coeffs_.back();
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x /= lead;
  return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyQ(std::move(c));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return PolyQ(std::move(c));
}

PolyQ PolyQ::divide_by_root(const Rational& r) const {
  if (coeffs_.empty()) return *this;
  // synthetic division, highest degree first
  const std::size_t n = coeffs_.size() - 1;
  std::vector<Rational> q(n);
  Rational carry;
  for (std::size_t k = n + 1; k-- > 0;) {
    carry = carry * r + coeffs_[k];
    if (k > 0) q[k - 1] = carry;
  }
  if (!carry.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, r.str() + " is not a root of " + str());
  }
  return PolyQ(std::move(q));
}

std::string PolyQ::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    Rational mag = c;
    if (c.sign() < 0) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace bihom
