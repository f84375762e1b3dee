// bihom: command-line front end for the BiHom-Lie library.
//
// Exit codes: 0 success, 1 the algebra fails the requested property or
// computation, 2 usage, I/O or parse errors.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bihom/analysis.hpp"
#include "bihom/catalog.hpp"
#include "bihom/classify3.hpp"
#include "bihom/error.hpp"
#include "bihom/exactlin.hpp"
#include "bihom/io.hpp"
#include "bihom/twist.hpp"

using namespace bihom;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Errors about reading input rather than about the algebra.
bool is_input_error(ErrorCode c) {
  return c == ErrorCode::IoError || c == ErrorCode::ParseError || c == ErrorCode::InvalidArgument;
}

int report(const Error& e) {
  std::cerr << "bihom: " << e.what() << "\n";
  return is_input_error(e.code()) ? kUsage : kFail;
}

/// Loading failures, including mis-sized grids, are exit 2.
template <class F>
auto load_or_exit(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error& e) {
    std::cerr << "bihom: " << e.what() << "\n";
    return std::nullopt;
  }
}

ojson vec_json(const VectorQ& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ojson matrix_json(const MatrixQ& m) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

ojson check_json(const CheckResult& r) {
  ojson o;
  o["passed"] = r.passed;
  if (r.witness) {
    ojson idx = ojson::array();
    for (auto i : r.witness->indices) idx.push_back(i + 1);
    o["witness"] = {{"indices", idx}, {"lhs", vec_json(r.witness->lhs)}, {"rhs", vec_json(r.witness->rhs)}};
  }
  return o;
}

void print(const ojson& j) { std::cout << j.dump(2) << "\n"; }

std::string line(const CheckResult& r) { return r.passed ? "pass" : "FAIL  " + to_string(*r.witness); }

std::string params_text(const std::vector<Rational>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].str();
  return s;
}

ojson params_json(const std::vector<Rational>& ps) {
  ojson a = ojson::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

// ---- commands ---------------------------------------------------------------

int cmd_check(const std::string& file, bool as_json) {
  const auto a = load_or_exit([&] { return load_algebra(file); });
  if (!a) return kUsage;
  const AxiomReport r = check_all(*a);
  if (as_json) {
    ojson o;
    o["dim"] = a->dim();
    o["commuting"] = check_json(r.commuting);
    o["multiplicative_alpha"] = check_json(r.multiplicative_alpha);
    o["multiplicative_beta"] = check_json(r.multiplicative_beta);
    o["skew"] = check_json(r.skew);
    o["jacobi"] = check_json(r.jacobi);
    o["all_passed"] = r.all_passed();
    print(o);
  } else {
    std::cout << "commuting             " << line(r.commuting) << "\n"
              << "multiplicative alpha  " << line(r.multiplicative_alpha) << "\n"
              << "multiplicative beta   " << line(r.multiplicative_beta) << "\n"
              << "BiHom skew-symmetry   " << line(r.skew) << "\n"
              << "BiHom-Jacobi          " << line(r.jacobi) << "\n";
  }
  if (!r.all_passed()) {
    std::cerr << "bihom: axiom check failed: " << r.first_failure() << "\n";
    return kFail;
  }
  return kOk;
}

int cmd_induce(const std::string& file, const std::string& out) {
  const auto a = load_or_exit([&] { return load_algebra(file); });
  if (!a) return kUsage;
  try {
    const InducedLie ind = induce_lie(*a);
    save_algebra(BiHomAlgebra(ind.lie, ind.alpha, ind.beta, a->basis_names()), out);
  } catch (const Error& e) {
    return report(e);
  }
  return kOk;
}

int cmd_twist(const std::string& lie_file, const std::string& alpha_file, const std::string& beta_file,
              const std::string& out) {
  const auto lie = load_or_exit([&] { return load_algebra(lie_file); });
  if (!lie) return kUsage;
  const auto alpha = load_or_exit([&] { return load_matrix(alpha_file); });
  if (!alpha) return kUsage;
  const auto beta = load_or_exit([&] { return load_matrix(beta_file); });
  if (!beta) return kUsage;
  try {
    const BiHomAlgebra tw = yau_twist({lie->tensor(), *alpha, *beta});
    save_algebra(BiHomAlgebra(tw.tensor(), tw.alpha(), tw.beta(), lie->basis_names()), out);
  } catch (const Error& e) {
    return report(e);
  }
  return kOk;
}

int cmd_analyze(const std::string& file, bool as_json) {
  const auto a = load_or_exit([&] { return load_algebra(file); });
  if (!a) return kUsage;
  const AxiomReport axioms = check_all(*a);
  if (!axioms.all_passed()) {
    std::cerr << "bihom: not a BiHom-Lie algebra: " << axioms.first_failure() << "\n";
    return kFail;
  }

  ojson o;
  std::vector<std::string> text;
  std::vector<std::string> warnings;
  o["dim"] = a->dim();
  const bool regular = is_regular(*a);
  o["regular"] = regular;
  const SimplicityReport s = simplicity(*a);
  o["abelian"] = s.abelian;
  o["simple"] = s.simple;
  o["enveloping_dim"] = s.enveloping_dim;
  text.push_back("regular          " + std::string(regular ? "yes" : "no"));
  text.push_back("abelian          " + std::string(s.abelian ? "yes" : "no"));
  text.push_back("simple           " + std::string(s.simple ? "yes" : "no") + " (enveloping dimension " +
                 std::to_string(s.enveloping_dim) + " of " + std::to_string(a->dim() * a->dim()) + ")");

  if (regular) {
    const InducedLie ind = induce_lie(*a);
    const Rational kdet = det(killing_form(ind.lie));
    const bool semisimple = !kdet.is_zero();
    o["induced_killing_det"] = kdet.str();
    o["induced_semisimple"] = semisimple;
    text.push_back("Killing det      " + kdet.str() + " (induced Lie algebra)");
    text.push_back("semisimple       " + std::string(semisimple ? "yes" : "no"));
    if (semisimple) {
      try {
        const Decomposition d = simple_ideal_decomposition(*a);
        ojson ideals = ojson::array();
        for (const auto& ideal : d.ideals) ideals.push_back(matrix_json(ideal.basis()));
        o["decomposition"] = {{"ideals", ideals},
                              {"sigma_alpha", cycle_notation(d.sigma_alpha)},
                              {"sigma_beta", cycle_notation(d.sigma_beta)},
                              {"m", d.m}};
        text.push_back("simple ideals    " + std::to_string(d.ideals.size()));
        for (std::size_t i = 0; i < d.ideals.size(); ++i)
          text.push_back("  I" + std::to_string(i + 1) + " dim " + std::to_string(d.ideals[i].dim()));
        text.push_back("sigma_alpha      " + cycle_notation(d.sigma_alpha));
        text.push_back("sigma_beta       " + cycle_notation(d.sigma_beta));
        text.push_back("m                " + std::to_string(d.m));
        warnings = d.warnings;
      } catch (const Error& e) {
        o["decomposition"] = nullptr;
        warnings.push_back(std::string("decomposition unavailable: ") + e.what());
      }
    }
  } else {
    o["induced_killing_det"] = nullptr;
    o["induced_semisimple"] = nullptr;
    text.push_back("Killing det      n/a (not regular)");
  }

  ojson types = ojson::array();
  std::string type_line;
  for (const auto& t : type_candidates(a->dim())) {
    types.push_back(to_string(t));
    type_line += (type_line.empty() ? "" : " ") + to_string(t);
  }
  o["type_candidates"] = types;
  o["warnings"] = warnings;
  text.push_back("type candidates  " + (type_line.empty() ? std::string("none") : type_line));

  for (const auto& w : warnings) std::cerr << "bihom: warning: " << w << "\n";
  if (as_json) {
    print(o);
  } else {
    for (const auto& l : text) std::cout << l << "\n";
  }
  return kOk;
}

ojson label_json(const ClassLabel& label) {
  ojson o;
  o["family"] = to_string(label.family);
  o["params"] = params_json(label.params);
  o["change_of_basis"] = matrix_json(label.change_of_basis);
  return o;
}

int cmd_classify3(const std::string& file, bool as_json) {
  const auto a = load_or_exit([&] { return load_algebra(file); });
  if (!a) return kUsage;
  ClassLabel label;
  try {
    label = classify3(*a);
  } catch (const Error& e) {
    return report(e);
  }
  if (as_json) {
    print(label_json(label));
  } else {
    std::cout << to_string(label.family);
    if (!label.params.empty()) std::cout << "(" << params_text(label.params) << ")";
    std::cout << "\nchange of basis (columns are the catalog basis):\n" << label.change_of_basis.str() << "\n";
  }
  return kOk;
}

int cmd_iso3(const std::string& f1, const std::string& f2, bool as_json) {
  const auto a1 = load_or_exit([&] { return load_algebra(f1); });
  if (!a1) return kUsage;
  const auto a2 = load_or_exit([&] { return load_algebra(f2); });
  if (!a2) return kUsage;
  std::optional<MatrixQ> f;
  try {
    f = bihom_isomorphic3(*a1, *a2);
  } catch (const Error& e) {
    return report(e);
  }
  if (as_json) {
    ojson o;
    o["isomorphic"] = f.has_value();
    o["map"] = f ? matrix_json(*f) : ojson(nullptr);
    print(o);
  } else if (f) {
    std::cout << "isomorphic\n" << f->str() << "\n";
  } else {
    std::cout << "not isomorphic\n";
  }
  return kOk;
}

int cmd_catalog(const std::string& name, const std::optional<std::string>& a, const std::optional<std::string>& b,
                const std::string& out) {
  try {
    std::vector<Rational> params;
    if (a) params.push_back(Rational::parse(*a));
    if (b) params.push_back(Rational::parse(*b));
    const CatalogEntry e = catalog_entry(name, params);
    if (e.outside_case_split) {
      std::cerr << "bihom: warning: a = " << e.params[0].str()
                << " lies outside the distinct-eigenvalue case of the classification\n";
    }
    save_algebra(e.algebra, out);
  } catch (const Error& e) {
    return report(e);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional BiHom-Lie algebras"};
  app.require_subcommand(1);

  std::string file, file2, out, alpha_file, beta_file, name;
  bool as_json = false;
  std::optional<std::string> pa, pb;
  int rc = kOk;

  auto* check = app.add_subcommand("check", "Verify the BiHom-Lie axioms");
  check->add_option("file", file, "Algebra file")->required();
  check->add_flag("--json", as_json, "Machine-readable report");
  check->callback([&] { rc = cmd_check(file, as_json); });

  auto* induce = app.add_subcommand("induce", "Write the induced Lie algebra");
  induce->add_option("file", file, "Algebra file")->required();
  induce->add_option("-o,--output", out, "Output file")->required();
  induce->callback([&] { rc = cmd_induce(file, out); });

  auto* twist = app.add_subcommand("twist", "Twist a Lie algebra by two commuting automorphisms");
  twist->add_option("lie-file", file, "Lie algebra file (its alpha and beta are ignored)")->required();
  twist->add_option("--alpha", alpha_file, "Matrix file for alpha")->required();
  twist->add_option("--beta", beta_file, "Matrix file for beta")->required();
  twist->add_option("-o,--output", out, "Output file")->required();
  twist->callback([&] { rc = cmd_twist(file, alpha_file, beta_file, out); });

  auto* analyze = app.add_subcommand("analyze", "Regularity, simplicity, Killing form, decomposition, types");
  analyze->add_option("file", file, "Algebra file")->required();
  analyze->add_flag("--json", as_json, "Machine-readable report");
  analyze->callback([&] { rc = cmd_analyze(file, as_json); });

  auto* cls = app.add_subcommand("classify3", "Classify a 3-dimensional simple BiHom-Lie algebra");
  cls->add_option("file", file, "Algebra file")->required();
  cls->add_flag("--json", as_json, "Machine-readable report");
  cls->callback([&] { rc = cmd_classify3(file, as_json); });

  auto* iso = app.add_subcommand("iso3", "Decide isomorphism of two 3-dimensional algebras");
  iso->add_option("file1", file, "First algebra file")->required();
  iso->add_option("file2", file2, "Second algebra file")->required();
  iso->add_flag("--json", as_json, "Machine-readable report");
  iso->callback([&] { rc = cmd_iso3(file, file2, as_json); });

  auto* cat = app.add_subcommand("catalog", "Write a catalog algebra (sl2, L1, L2, L3)");
  cat->add_option("name", name, "sl2, L1, L2 or L3")->required();
  cat->add_option("--a", pa, "Parameter a (p/q)");
  cat->add_option("--b", pb, "Parameter b (p/q)");
  cat->add_option("-o,--output", out, "Output file")->required();
  cat->callback([&] { rc = cmd_catalog(name, pa, pb, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  return rc;
}
