#include "bihom/rational.hpp"

#include <ostream>
#include <regex>

#include "bihom/error.hpp"

namespace bihom {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw_zero_denominator();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

void Rational::throw_zero_denominator() {
  throw Error(ErrorCode::InvalidArgument, "zero denominator");
}

Rational Rational::parse(std::string_view text) {
  static const std::regex pattern("-?[0-9]+(/[1-9][0-9]*)?");
  const std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw Error(ErrorCode::ParseError, "malformed rational \"" + s + "\"");
  }
  mpq_class q(s, 10);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

std::size_t Rational::height_bits() const {
  const mpz_class n = ::abs(value_.get_num());
  const mpz_class& d = value_.get_den();
  return std::max(mpz_sizeinbase(n.get_mpz_t(), 2), mpz_sizeinbase(d.get_mpz_t(), 2));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bihom
