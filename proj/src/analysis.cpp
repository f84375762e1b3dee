#include "bihom/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "bihom/error.hpp"
#include "bihom/exactlin.hpp"
#include "bihom/twist.hpp"

namespace bihom {

IdealReport is_ideal(const BiHomAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  const std::size_t n = a.dim();
  IdealReport rep{s, true, true, std::nullopt};
  const auto gens = s.vectors();

  auto record = [&](std::string kind, std::size_t g, std::optional<std::size_t> partner, VectorQ img) {
    if (!rep.failing_witness) rep.failing_witness = IdealWitness{std::move(kind), g, partner, std::move(img)};
  };

  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (VectorQ img = a.alpha() * gens[g]; !s.contains(img)) {
      rep.is_subalgebra = rep.is_ideal = false;
      record("alpha", g, std::nullopt, std::move(img));
    }
    if (VectorQ img = a.beta() * gens[g]; !s.contains(img)) {
      rep.is_subalgebra = rep.is_ideal = false;
      record("beta", g, std::nullopt, std::move(img));
    }
  }
  for (std::size_t g = 0; g < gens.size() && rep.is_subalgebra; ++g)
    for (std::size_t h = 0; h < gens.size(); ++h)
      if (!s.contains(a.tensor().bracket(gens[g], gens[h]))) {
        rep.is_subalgebra = false;
        break;
      }
  if (!rep.is_subalgebra) rep.is_ideal = false;

  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t j = 0; j < n; ++j) {
      const VectorQ ej = unit_vector(n, j);
      if (VectorQ img = a.tensor().bracket(gens[g], ej); !s.contains(img)) {
        rep.is_ideal = false;
        record("[s,L]", g, j, std::move(img));
      }
      if (VectorQ img = a.tensor().bracket(ej, gens[g]); !s.contains(img)) {
        rep.is_ideal = false;
        record("[L,s]", g, j, std::move(img));
      }
    }
  return rep;
}

std::vector<MatrixQ> ideal_operators(const BiHomAlgebra& a) {
  std::vector<MatrixQ> ops;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    ops.push_back(a.tensor().left_multiplication(i));
    ops.push_back(a.tensor().right_multiplication(i));
  }
  ops.push_back(a.alpha());
  ops.push_back(a.beta());
  ops.push_back(MatrixQ::identity(a.dim()));
  return ops;
}

Subspace ideal_closure(const BiHomAlgebra& a, const VectorQ& v) {
  if (v.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "vector length");
  return spin({v}, ideal_operators(a));
}

std::size_t enveloping_dim(const std::vector<MatrixQ>& gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens)
    if (!g.is_square() || g.rows() != n) throw Error(ErrorCode::DimensionMismatch, "generators must be square of equal size");

  // spin the identity under left multiplication by the generators
  EchelonBasis basis(n * n);
  std::deque<MatrixQ> queue;
  const MatrixQ id = MatrixQ::identity(n);
  basis.add(id.entries());
  queue.push_back(id);
  while (!queue.empty() && basis.size() < n * n) {
    const MatrixQ w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      MatrixQ p = g * w;
      if (basis.add(p.entries())) queue.push_back(std::move(p));
    }
  }
  return basis.size();
}

SimplicityReport simplicity(const BiHomAlgebra& a) {
  require_axioms(a);
  SimplicityReport r;
  r.abelian = is_abelian(a.tensor());
  r.enveloping_dim = enveloping_dim(ideal_operators(a));
  r.simple = !r.abelian && r.enveloping_dim == a.dim() * a.dim();
  return r;
}

bool is_simple(const BiHomAlgebra& a) { return simplicity(a).simple; }

MatrixQ killing_form(const StructureTensor& t) {
  if (auto r = is_lie_algebra(t); !r) throw Error(ErrorCode::NotLie, "Killing form of a non-Lie bracket at " + to_string(*r.witness));
  const std::size_t n = t.dim();
  std::vector<MatrixQ> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(t.left_multiplication(i));
  MatrixQ k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ad[i] * ad[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

bool is_semisimple_lie(const StructureTensor& t) { return !det(killing_form(t)).is_zero(); }

std::vector<Subspace> derived_series(const StructureTensor& t) {
  const std::size_t n = t.dim();
  std::vector<Subspace> series{Subspace::full(n)};
  while (!series.back().is_zero()) {
    const auto vs = series.back().vectors();
    std::vector<VectorQ> prods;
    for (const auto& x : vs)
      for (const auto& y : vs) prods.push_back(t.bracket(x, y));
    Subspace next = Subspace::span(n, prods);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

namespace {

struct Splitter {
  const StructureTensor& t;
  MatrixQ killing;
  std::vector<MatrixQ> ad;

  std::vector<Subspace> split(const Subspace& ideal) const {
    if (ideal.is_zero()) return {};
    for (const auto& v : ideal.vectors()) {
      const Subspace j = spin({v}, ad);
      if (j.dim() < ideal.dim()) return split_along(ideal, j);
    }
    if (auto j = commutant_split(ideal)) return split_along(ideal, *j);
    return {ideal};
  }

  std::vector<Subspace> split_along(const Subspace& ideal, const Subspace& part) const {
    auto out = split(part);
    auto rest = split(orthogonal_complement(part, ideal, killing));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

  // A proper ideal inside `ideal` from a rational eigenspace of an element of
  // the commutant of ad restricted to it; nullopt when the commutant is scalar.
  std::optional<Subspace> commutant_split(const Subspace& ideal) const {
    const std::size_t d = ideal.dim();
    if (d <= 1) return std::nullopt;
    const auto basis = ideal.vectors();
    std::vector<MatrixQ> restricted;
    for (const auto& op : ad) {
      MatrixQ r(d, d);
      for (std::size_t c = 0; c < d; ++c) r.set_column(c, ideal.coordinates(op * basis[c]));
      restricted.push_back(std::move(r));
    }
    // Z A - A Z = 0, unknowns Z(r, c) at index r*d + c
    std::vector<VectorQ> eqs;
    for (const auto& a : restricted)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          VectorQ row(d * d);
          for (std::size_t k = 0; k < d; ++k) {
            row[r * d + k] += a(k, c);
            row[k * d + c] -= a(r, k);
          }
          if (!is_zero(row)) eqs.push_back(std::move(row));
        }
    const Subspace comm = eqs.empty() ? Subspace::full(d * d) : kernel(MatrixQ::from_rows(eqs, d * d));
    if (comm.dim() <= 1) return std::nullopt;

    bool irrational = false;
    for (const auto& zv : comm.vectors()) {
      MatrixQ z(d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) z(r, c) = zv[r * d + c];
      const RationalRoots roots = rational_roots(char_poly(z));
      for (const auto& [lambda, mult] : roots.roots) {
        const Subspace e = kernel(z - lambda * MatrixQ::identity(d));
        if (e.dim() == 0 || e.dim() == d) continue;
        std::vector<VectorQ> amb;
        for (const auto& c : e.vectors()) {
          VectorQ v(t.dim());
          for (std::size_t i = 0; i < d; ++i) add_scaled(v, c[i], basis[i]);
          amb.push_back(std::move(v));
        }
        return Subspace::span(t.dim(), amb);
      }
      if (!roots.residual.is_constant()) irrational = true;
    }
    if (irrational) {
      throw Error(ErrorCode::IrrationalSplit,
                  "an ideal of dimension " + std::to_string(d) + " splits only over an extension of Q");
    }
    return std::nullopt;
  }
};

}  // namespace

std::vector<Subspace> decompose_semisimple(const StructureTensor& t) {
  if (!is_semisimple_lie(t)) throw Error(ErrorCode::NotSemisimple, "Killing form is degenerate");
  Splitter s{t, killing_form(t), {}};
  for (std::size_t i = 0; i < t.dim(); ++i) s.ad.push_back(t.left_multiplication(i));
  auto ideals = s.split(Subspace::full(t.dim()));
  std::sort(ideals.begin(), ideals.end(),
            [](const Subspace& a, const Subspace& b) { return a.pivots() < b.pivots(); });
  return ideals;
}

Permutation automorphism_permutation(const std::vector<Subspace>& ideals, const MatrixQ& map) {
  Permutation p(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const Subspace img = ideals[i].image(map);
    auto it = std::find(ideals.begin(), ideals.end(), img);
    if (it == ideals.end()) {
      throw Error(ErrorCode::NotPermuted, "image of ideal " + std::to_string(i + 1) + " is not in the list");
    }
    p[i] = static_cast<std::size_t>(it - ideals.begin());
  }
  return p;
}

std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

bool is_transitive(const Permutation& p) {
  if (p.empty()) return true;
  std::size_t len = 1;
  for (std::size_t j = p[0]; j != 0; j = p[j]) ++len;
  return len == p.size();
}

Decomposition simple_ideal_decomposition(const BiHomAlgebra& a) {
  const InducedLie induced = induce_lie(a);
  Decomposition d;
  d.ideals = decompose_semisimple(induced.lie);
  d.sigma_alpha = automorphism_permutation(d.ideals, a.alpha());
  d.sigma_beta = automorphism_permutation(d.ideals, a.beta());
  d.m = d.ideals.size();
  if (d.m == 2) {
    d.warnings.push_back(
        "m = 2: two simple ideals exchanged by the structure maps; the usual structure statement excludes m = 2, "
        "but this algebra realizes it");
  }
  return d;
}

std::string to_string(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::G2: return "G2";
    case Series::F4: return "F4";
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
  }
  return "?";
}

std::string to_string(const TypeLabel& t) {
  std::string x = to_string(t.series);
  if (t.rank) x += std::to_string(t.rank);
  return "(" + x + ", " + std::to_string(t.m) + ")";
}

std::vector<TypeLabel> type_candidates(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  std::vector<TypeLabel> out;
  for (std::size_t m = 1; m <= dim; ++m) {
    if (dim % m) continue;
    const std::size_t d = dim / m;
    auto classical = [&](Series s, std::size_t min_rank, auto dim_of) {
      for (std::size_t l = min_rank; dim_of(l) <= d; ++l)
        if (dim_of(l) == d) out.push_back({s, l, m});
    };
    classical(Series::A, 1, [](std::size_t l) { return l * (l + 2); });
    classical(Series::B, 2, [](std::size_t l) { return l * (2 * l + 1); });
    classical(Series::C, 3, [](std::size_t l) { return l * (2 * l + 1); });
    classical(Series::D, 4, [](std::size_t l) { return l * (2 * l - 1); });
    const std::pair<Series, std::size_t> exceptional[] = {
        {Series::G2, 14}, {Series::F4, 52}, {Series::E6, 78}, {Series::E7, 133}, {Series::E8, 248}};
    for (const auto& [s, dx] : exceptional)
      if (dx == d) out.push_back({s, 0, m});
  }
  return out;
}

}  // namespace bihom
