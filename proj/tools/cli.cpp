#include "cli.hpp"

#include "verify.hpp"

#include <asmprism/ideal.hpp>
#include <asmprism/io.hpp>
#include <asmprism/perm.hpp>
#include <asmprism/pipedream.hpp>
#include <asmprism/prism.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace asmprism::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string asm_file;
  std::string format = "text";
  int jobs = 1;
  std::string model = "parabolic";
  bool verbose = false;
  bool all = false;
  bool max_only = false;
  bool init = false;
  bool facets = false;
  int count_n = 0;
  std::string check;
  int verify_n = 3;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  bool structured() const { return opt_.format == "structured"; }

  std::string source() const { return opt_.asm_file.empty() ? "<stdin>" : opt_.asm_file; }

  template <class Parse>
  auto read(Parse parse) {
    if (opt_.asm_file.empty()) return parse(in_);
    std::ifstream file(opt_.asm_file);
    if (!file) throw ValidationError("cannot open file");
    return parse(file);
  }

  Asm read_asm() {
    return read([](std::istream& s) { return parse_asm(s); });
  }

  void emit(const json& j) { out_ << j.dump() << '\n'; }
  std::ostream& out() { return out_; }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

json cells_json(const std::vector<GridCell>& cells) {
  json a = json::array();
  for (const auto& c : cells) a.push_back({c.row, c.col});
  return a;
}

std::string cells_text(const std::vector<GridCell>& cells) {
  std::string s;
  for (const auto& c : cells) s += (s.empty() ? "" : " ") + to_string(c);
  return s;
}

json poly_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"coefficient", c.str()}, {"exponents", std::vector<unsigned>(m.exponents().begin(), m.exponents().end())}});
  }
  return {{"polynomial", p.to_string()}, {"terms", terms}};
}

json tableau_json(const PrismTableau& t) {
  json comps = json::array();
  for (const auto& c : t.components) {
    comps.push_back({{"shape", c.shape().parts()}, {"depth", c.depth()}, {"rows", c.rows()}});
  }
  return comps;
}

PrismShapeSpec model_of(const Asm& a, const std::string& model) {
  if (model == "bigr") return bigrassmannian_model(a);
  if (model == "parabolic") return parabolic_model(a);
  throw ValidationError("model '" + model + "' has no prism shape; use bigr or parabolic");
}

int do_poly(Session& s, const Options& o) {
  const Asm a = s.read_asm();
  const int n = a.size();
  Polynomial p;
  if (o.model == "schubert-sum") {
    for (const auto& w : min_perm_set(a)) p += schubert_polynomial(w, n);
  } else if (o.model == "multidegree") {
    p = multidegree(a);
  } else {
    p = asm_polynomial(model_of(a, o.model));
  }
  if (s.structured()) {
    json j = poly_json(p);
    j["model"] = o.model;
    s.emit(j);
  } else {
    s.out() << p.to_string() << '\n';
  }
  return ok;
}

int do_prism_list(Session& s, const Options& o) {
  const Asm a = s.read_asm();
  const auto spec = model_of(a, o.model);
  const auto tableaux = o.all ? enumerate_all_prism(spec) : prism_set(spec);
  std::size_t k = 0;
  for (const auto& t : tableaux) {
    ++k;
    if (s.structured()) {
      s.emit({{"index", k}, {"components", tableau_json(t)}, {"weight", prism_weight(t).to_string()}});
      continue;
    }
    if (k > 1) s.out() << '\n';
    s.out() << "tableau " << k << '\n' << t.render();
    if (o.verbose) s.out() << "weight: " << prism_weight(t).to_string() << '\n';
  }
  return ok;
}

int do_facets(Session& s, const Options& o) {
  const Asm a = s.read_asm();
  auto facets = o.max_only ? delta_fmax(a) : delta_facets(a);
  std::sort(facets.begin(), facets.end());
  bool first = true;
  for (const auto& p : facets) {
    const Perm w = diagram_product(p);
    const Monomial wt = diagram_weight(p);
    if (s.structured()) {
      s.emit({{"plus", cells_json(p.cells())}, {"permutation", w.to_string()}, {"weight", wt.to_string()}});
      continue;
    }
    if (!first) s.out() << '\n';
    first = false;
    s.out() << "# " << w.to_string() << "  " << wt.to_string() << '\n' << p.render();
  }
  return ok;
}

int do_perms(Session& s, bool minimal) {
  const Asm a = s.read_asm();
  for (const auto& w : minimal ? min_perm_set(a) : perm_set(a)) {
    if (s.structured()) {
      s.emit({{"permutation", w.one_line()}, {"length", length(w)}});
    } else {
      s.out() << w.to_string() << '\n';
    }
  }
  return ok;
}

int do_deg(Session& s) {
  const Asm a = s.read_asm();
  if (s.structured()) {
    s.emit({{"deg", deg(a)}, {"diagram_size", inversions(a).size()}});
  } else {
    s.out() << deg(a) << '\n';
  }
  return ok;
}

int do_diagram(Session& s) {
  const Asm a = s.read_asm();
  const auto cells = rothe_diagram(a);
  if (s.structured()) {
    s.emit({{"cells", cells_json(cells)}});
    return ok;
  }
  const int n = a.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) s.out() << (std::count(cells.begin(), cells.end(), GridCell{i, j}) != 0 ? '#' : '.');
    s.out() << '\n';
  }
  return ok;
}

int do_essential(Session& s) {
  const Asm a = s.read_asm();
  const CornerSum r = corner_sum(a);
  for (const auto& c : essential_set(a)) {
    if (s.structured()) {
      s.emit({{"cell", {c.row, c.col}}, {"rank", r(c.row, c.col)}});
    } else {
      s.out() << to_string(c) << " r=" << r(c.row, c.col) << '\n';
    }
  }
  return ok;
}

int do_triangle(Session& s) {
  const Asm a = s.read_asm();
  const auto t = monotone_triangle(a);
  if (s.structured()) {
    s.emit({{"rows", t.rows}});
    return ok;
  }
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) s.out() << (k > 0 ? " " : "") << row[k];
    s.out() << '\n';
  }
  return ok;
}

int do_ideal(Session& s, const Options& o) {
  const Asm a = s.read_asm();
  const auto gens = initial_ideal(a);
  if (!o.facets) {
    for (const auto& g : gens) {
      if (s.structured()) {
        s.emit({{"support", cells_json(g.support.cells())}, {"monomial", g.to_string()}});
      } else {
        s.out() << g.to_string() << '\n';
      }
    }
    return ok;
  }
  const auto complex = stanley_reisner_facets(gens, a.size());
  const auto facets = o.max_only ? max_dimensional(complex) : complex.facets;
  for (const auto& f : facets) {
    if (s.structured()) {
      s.emit(cells_json(f.cells()));
    } else {
      s.out() << cells_text(f.cells()) << '\n';
    }
  }
  return ok;
}

int do_count(Session& s, const Options& o) {
  if (o.count_n < 1) throw ValidationError("count needs N >= 1");
  unsigned long long c = 0;
  if (o.count_n <= 7) {
    for_each_asm(o.count_n, [&](const Asm&) { ++c; });
  } else {
    c = asm_count_formula(o.count_n);
  }
  if (s.structured()) {
    s.emit({{"n", o.count_n}, {"count", c}});
  } else {
    s.out() << c << '\n';
  }
  return ok;
}

int do_complete(Session& s) {
  const PartialAsm p = s.read([](std::istream& in) { return parse_partial_asm(in); });
  const Asm a = canonical_completion(p);
  if (s.structured()) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) {
      for (int j = 1; j <= a.size(); ++j) rows[static_cast<std::size_t>(i - 1)].push_back(a(i, j));
    }
    s.emit({{"size", a.size()}, {"rows", rows}});
  } else {
    s.out() << a.to_string();
  }
  return ok;
}

int do_verify(Session& s, const Options& o) {
  if (o.verify_n < 1 || o.verify_n > GridSet::max_size) throw ValidationError("--n must lie in 1..8");
  VerifyResult r;
  if (o.check == "theorem1") r = verify_theorem1(o.verify_n, o.jobs);
  if (o.check == "bijection") r = verify_bijection_all(o.verify_n, o.jobs);
  if (o.check == "groebner") r = verify_groebner(o.verify_n, o.jobs);
  if (o.check == "lattice") r = verify_lattice(o.verify_n, o.jobs);
  if (o.check == "schur") r = verify_schur(o.verify_n, o.jobs);
  if (s.structured()) {
    s.emit({{"check", o.check}, {"n", o.verify_n}, {"passed", r.passed}, {"checked", r.checked}, {"total", r.total},
            {"message", r.message}});
  } else {
    s.out() << r.message << '\n';
  }
  return r.passed ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Alternating sign matrix polynomials, prism tableaux and pipe dreams", "asmprism"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--asm", o.asm_file, "Matrix file; stdin when omitted");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--jobs", o.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);

  const std::vector<std::string> prism_models{"bigr", "parabolic"};
  auto* poly = app.add_subcommand("poly", "ASM polynomial of A");
  poly->add_option("--model", o.model, "bigr, parabolic, schubert-sum or multidegree")
      ->check(CLI::IsMember({"bigr", "parabolic", "schubert-sum", "multidegree"}));

  auto* prism = app.add_subcommand("prism", "Prism tableaux");
  prism->require_subcommand(1);
  auto* prism_list = prism->add_subcommand("list", "List Prism(A), or every filling with --all");
  prism_list->add_option("--model", o.model)->check(CLI::IsMember(prism_models));
  prism_list->add_flag("--all", o.all, "List all fillings, not only Prism");
  prism_list->add_flag("-v,--verbose", o.verbose, "Print the weight of each tableau");

  auto* facets = app.add_subcommand("facets", "Facets of Delta(Q, A) as plus diagrams");
  facets->add_flag("--max", o.max_only, "Only maximal-dimensional facets");

  auto* perm_set_cmd = app.add_subcommand("perm-set", "Perm(A)");
  auto* min_perm_cmd = app.add_subcommand("min-perm", "MinPerm(A)");
  auto* deg_cmd = app.add_subcommand("deg", "deg(A)");
  auto* diagram_cmd = app.add_subcommand("diagram", "Diagram D(A)");
  auto* essential_cmd = app.add_subcommand("essential", "Essential set with ranks");
  auto* triangle_cmd = app.add_subcommand("triangle", "Monotone triangle");

  auto* ideal = app.add_subcommand("ideal", "Antidiagonal initial ideal");
  auto* init_flag = ideal->add_flag("--init", o.init, "Minimal generators (default)");
  ideal->add_flag("--facets", o.facets, "Stanley-Reisner facets")->excludes(init_flag);
  ideal->add_flag("--max", o.max_only, "With --facets, only maximal-dimensional facets");

  auto* count = app.add_subcommand("count", "Number of n x n ASMs");
  count->add_option("N", o.count_n)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive verification");
  verify->add_option("check", o.check)->required()->check(CLI::IsMember({"theorem1", "bijection", "groebner", "lattice", "schur"}));
  verify->add_option("--n", o.verify_n, "Matrix size bound");

  auto* complete = app.add_subcommand("complete", "Canonical completion of a partial ASM");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }

  Session s(o, in, out);
  try {
    if (*poly) return do_poly(s, o);
    if (*prism_list) return do_prism_list(s, o);
    if (*facets) return do_facets(s, o);
    if (*perm_set_cmd) return do_perms(s, false);
    if (*min_perm_cmd) return do_perms(s, true);
    if (*deg_cmd) return do_deg(s);
    if (*diagram_cmd) return do_diagram(s);
    if (*essential_cmd) return do_essential(s);
    if (*triangle_cmd) return do_triangle(s);
    if (*ideal) return do_ideal(s, o);
    if (*count) return do_count(s, o);
    if (*verify) return do_verify(s, o);
    if (*complete) return do_complete(s);
  } catch (const ParseError& e) {
    err << "error: " << s.source() << ": " << e.what() << '\n';
    return invalid_input;
  } catch (const ValidationError& e) {
    err << "error: " << s.source() << ": " << e.what() << '\n';
    return invalid_input;
  }
  return invalid_input;
}

}  // namespace asmprism::cli
