#include "bihom/exactlin.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "bihom/error.hpp"

namespace bihom {

RrefResult rref(const MatrixQ& m) {
  RrefResult out{m, 0, {}};
  MatrixQ& a = out.form;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const MatrixQ& m) { return rref(m).rank; }

Subspace kernel(const MatrixQ& m) {
  const RrefResult red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<VectorQ> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    VectorQ v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.form(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

MatrixQ invert(const MatrixQ& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  MatrixQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::SingularMatrix, "matrix of size " + std::to_string(n) + " is singular");
  }
  MatrixQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.form(i, n + j);
  return inv;
}

bool is_invertible(const MatrixQ& m) { return m.is_square() && rank(m) == m.rows(); }

Rational det(const MatrixQ& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  MatrixQ a = m;
  const std::size_t n = a.rows();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    const Rational inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::optional<VectorQ> solve(const MatrixQ& m, const VectorQ& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  const std::size_t n = m.cols();
  MatrixQ aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  VectorQ x(n);
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.form(r, n);
  return x;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
PolyQ char_poly(const MatrixQ& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  const MatrixQ id = MatrixQ::identity(n);
  MatrixQ mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return PolyQ(std::move(c));
}

namespace {

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out);

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = x - y;
      diff = ::abs(diff);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, unsigned> fac;
  factor_into(::abs(n), fac);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RationalRoots rational_roots(const PolyQ& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational roots of the zero polynomial");
  RationalRoots out;
  PolyQ q = p.monic();

  std::size_t zero_mult = 0;
  while (!q.is_constant() && q.coefficient(0).is_zero()) {
    q = q.divide_by_root(Rational());
    ++zero_mult;
  }

  std::vector<RootMultiplicity> found;
  if (!q.is_constant()) {
    // clear denominators to get integer coefficients
    mpz_class l = 1;
    for (const auto& c : q.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    const mpz_class lead = (q.leading() * Rational(l, mpz_class(1))).numerator();
    const mpz_class constant = (q.coefficient(0) * Rational(l, mpz_class(1))).numerator();

    std::set<Rational> candidates;
    const auto num_divs = divisors(constant);
    const auto den_divs = divisors(lead);
    for (const auto& a : num_divs)
      for (const auto& b : den_divs) {
        candidates.insert(Rational(a, b));
        candidates.insert(-Rational(a, b));
      }
    for (const auto& r : candidates) {
      std::size_t mult = 0;
      while (!q.is_constant() && q(r).is_zero()) {
        q = q.divide_by_root(r);
        ++mult;
      }
      if (mult) found.push_back({r, mult});
    }
  }
  if (zero_mult) found.push_back({Rational(), zero_mult});
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.root > b.root; });
  out.roots = std::move(found);
  out.residual = q.monic();
  return out;
}

std::vector<Subspace> generalized_eigenspace(const MatrixQ& m, const Rational& lambda) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigenspace of non-square matrix");
  const MatrixQ shifted = m - lambda * MatrixQ::identity(m.rows());
  std::vector<Subspace> chain;
  MatrixQ power = shifted;
  for (;;) {
    Subspace k = kernel(power);
    if (!chain.empty() && k.dim() == chain.back().dim()) break;
    const bool full = k.is_full();
    chain.push_back(std::move(k));
    if (full || chain.back().is_zero()) break;
    power = power * shifted;
  }
  return chain;
}

void EchelonBasis::reduce(VectorQ& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (!c.is_zero()) add_scaled(v, -c, rows_[r]);
  }
}

bool EchelonBasis::add(VectorQ v) {
  if (v.size() != length_) throw Error(ErrorCode::DimensionMismatch, "echelon basis vector length");
  VectorQ orig = v;
  reduce(v);
  std::size_t p = 0;
  while (p < length_ && v[p].is_zero()) ++p;
  if (p == length_) return false;
  const Rational inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  // keep rows fully reduced against the new pivot
  for (auto& row : rows_) {
    const Rational c = row[p];
    if (!c.is_zero()) add_scaled(row, -c, v);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  inserted_.push_back(std::move(orig));
  return true;
}

bool EchelonBasis::contains(VectorQ v) const {
  if (v.size() != length_) throw Error(ErrorCode::DimensionMismatch, "echelon basis vector length");
  reduce(v);
  return is_zero(v);
}

Subspace EchelonBasis::subspace() const { return Subspace::span(length_, rows_); }

Subspace spin(const std::vector<VectorQ>& start, const std::vector<MatrixQ>& operators) {
  if (start.empty()) throw Error(ErrorCode::InvalidArgument, "spin needs at least one start vector");
  const std::size_t n = start.front().size();
  EchelonBasis basis(n);
  std::deque<VectorQ> queue;
  for (const auto& v : start)
    if (basis.add(v)) queue.push_back(v);
  while (!queue.empty() && basis.size() < n) {
    const VectorQ v = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : operators) {
      VectorQ w = op * v;
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  }
  return basis.subspace();
}

}  // namespace bihom
