#include "hopfkit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfkit/cobar.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"
#include "hopfkit/growth.hpp"
#include "hopfkit/zoo.hpp"

namespace hopfkit::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) {
    std::ostringstream os;
    os << x;
    out.push_back(os.str());
  }
  return out;
}

std::vector<std::string> elements(const std::vector<NCPoly>& v, const Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(format_element(p, a));
  return out;
}

void require_depth(int depth) {
  if (depth < 0) throw ValidationError("depth must be non-negative");
}

Report start(const std::string& command, const Input& in) {
  Report r;
  r.command = command;
  r.input = in.name;
  r.digest = digest_hex(in.loaded.hopf ? digest(*in.loaded.hopf) : digest(in.loaded.presentation));
  return r;
}

void window_warning(Report& r, int depth) {
  r.warnings.push_back("results are computed within the weight window F_" + std::to_string(depth));
}

}  // namespace

json to_json(const Report& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"name", v.name}, {"status", v.status}, {"detail", v.detail}});
  return {{"command", r.command}, {"input", r.input},       {"digest", r.digest},
          {"verdicts", verdicts}, {"tables", r.tables},     {"warnings", r.warnings},
          {"version", kVersion},  {"exit_code", r.exit_code}};
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "# " << r.command << '\n';
  if (!r.input.empty()) os << "input: " << r.input << " (digest " << r.digest << ")\n";
  os << r.text;
  for (const auto& v : r.verdicts) {
    os << v.name << ": " << v.status;
    if (!v.detail.empty()) os << "  " << v.detail;
    os << '\n';
  }
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  return os.str();
}

const HopfPresentation& Input::hopf() const {
  if (!loaded.hopf) throw ValidationError("input '" + name + "' has no [delta]/[epsilon]/[antipode] sections");
  return *loaded.hopf;
}

Input load_input(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return {spec, load_presentation_file(spec)};
  HopfPresentation H = build_family(spec);
  Presentation p = H.presentation();
  return {spec, {std::move(p), std::move(H)}};
}

Report cmd_check(const std::string& input, int bound) {
  const Input in = load_input(input);
  const Presentation& pres = in.loaded.presentation;
  const int b = bound > 0 ? bound : pres.default_confluence_bound();
  Report r = start("check " + input + " --bound " + std::to_string(b), in);
  const auto amb = check_confluence(pres, b);
  json ambiguities = json::array();
  for (const auto& a : amb) ambiguities.push_back(describe(a, pres.alphabet()));
  r.tables["confluence_bound"] = b;
  r.tables["ambiguities"] = ambiguities;
  r.verdicts.push_back({"confluence", amb.empty() ? "PASS" : "FAIL",
                        amb.empty() ? "" : describe(amb.front(), pres.alphabet())});
  for (std::size_t i = 1; i < amb.size(); ++i) r.text += "ambiguity: " + describe(amb[i], pres.alphabet()) + "\n";
  if (in.loaded.hopf) {
    if (!amb.empty() || !is_confluent(pres)) {
      r.verdicts.push_back({"bialgebra", "REFUSED", "presentation is not confluent"});
      r.verdicts.push_back({"antipode", "REFUSED", "presentation is not confluent"});
    } else {
      const CheckReport bi = check_bialgebra(*in.loaded.hopf);
      const CheckReport an = check_antipode(*in.loaded.hopf);
      for (const auto* rep : {&bi, &an}) {
        for (const auto& item : rep->items) r.verdicts.push_back({item.name, to_string(item.status), item.detail});
      }
    }
  } else {
    r.warnings.push_back("no coalgebra sections; only confluence was checked");
  }
  for (const auto& v : r.verdicts) {
    if (v.status != "PASS") r.exit_code = kCheckFailed;
  }
  return r;
}

Report cmd_growth(const std::string& input, const std::string& grading, int depth) {
  require_depth(depth);
  Grading g;
  if (grading == "length") {
    g = Grading::length;
  } else if (grading == "weight") {
    g = Grading::weight;
  } else {
    throw ValidationError("grading must be 'length' or 'weight'");
  }
  const Input in = load_input(input);
  Report r = start("growth " + input + " --grading " + grading + " --depth " + std::to_string(depth), in);
  const GrowthReport rep = growth(in.loaded.presentation, g, depth);
  r.tables["depth"] = depth;
  r.tables["grading"] = grading;
  r.tables["dims"] = strings(rep.dims);
  r.tables["cumulative"] = strings(rep.cumulative);
  r.tables["growth_degree"] = to_string(rep.growth_degree);
  r.tables["method"] = rep.method;
  r.tables["automaton"] = rep.automaton.exponential ? "EXPONENTIAL" : std::to_string(rep.automaton.degree);
  r.tables["finite_difference"] = rep.finite_difference ? json(*rep.finite_difference) : json(nullptr);
  std::ostringstream os;
  os << "degree  dim  cumulative\n";
  for (std::size_t i = 0; i < rep.dims.size(); ++i) os << i << "  " << rep.dims[i] << "  " << rep.cumulative[i] << '\n';
  r.text = os.str();
  r.verdicts.push_back({"growth_degree", to_string(rep.growth_degree), "method " + rep.method});
  if (rep.growth_degree.kind == GrowthDegree::Kind::inconclusive) {
    r.warnings.push_back("automaton and finite-difference verdicts do not agree within depth " +
                         std::to_string(depth));
  }
  return r;
}

Report cmd_primitives(const std::string& input, int depth) {
  require_depth(depth);
  const Input in = load_input(input);
  const HopfPresentation& H = in.hopf();
  Report r = start("primitives " + input + " --depth " + std::to_string(depth), in);
  const SubspaceBasis P = primitives(H, depth);
  const auto basis = elements(P.elements(), H.alphabet());
  r.tables["depth"] = depth;
  r.tables["dim"] = P.dim();
  r.tables["basis"] = basis;
  r.text = "dim P = " + std::to_string(P.dim()) + "\n";
  for (const auto& b : basis) r.text += "  " + b + "\n";
  window_warning(r, depth);
  return r;
}

Report cmd_coradical(const std::string& input, int levels, int depth) {
  require_depth(depth);
  if (levels < 0) throw ValidationError("levels must be non-negative");
  const Input in = load_input(input);
  Report r = start("coradical " + input + " --levels " + std::to_string(levels) + " --depth " + std::to_string(depth),
                   in);
  const CoradicalFiltration f = coradical_filtration(in.hopf(), levels, depth);
  std::vector<std::size_t> dims;
  for (const auto& l : f.levels) dims.push_back(l.dim());
  r.tables["depth"] = depth;
  r.tables["dims"] = dims;
  r.tables["complete_level"] = f.complete_level;
  std::ostringstream os;
  os << "level  dim H_m (within F_" << depth << ")\n";
  for (std::size_t m = 0; m < dims.size(); ++m) os << m << "  " << dims[m] << '\n';
  os << "complete through level " << f.complete_level << '\n';
  r.text = os.str();
  window_warning(r, depth);
  r.warnings.insert(r.warnings.end(), f.warnings.begin(), f.warnings.end());
  return r;
}

Report cmd_gr(const std::string& input, int depth) {
  require_depth(depth);
  const Input in = load_input(input);
  Report r = start("gr " + input + " --depth " + std::to_string(depth), in);
  const GrTable t = gr_structure(in.hopf(), depth);
  r.tables["depth"] = depth;
  r.tables["complete_degree"] = t.complete_degree;
  r.tables["hilbert"] = t.hilbert;
  r.tables["polynomial_hilbert"] = t.polynomial_hilbert;
  r.tables["degree_one_generators"] = t.degree_one_generators;
  r.tables["degree_two_generators"] = t.degree_two_generators;
  r.tables["growth_degree"] = t.growth_degree ? json(*t.growth_degree) : json(nullptr);
  std::ostringstream os;
  os << "degree  dim gr  polynomial model\n";
  for (std::size_t n = 0; n < t.hilbert.size(); ++n) {
    os << n << "  " << t.hilbert[n] << "  "
       << (n < t.polynomial_hilbert.size() ? std::to_string(t.polynomial_hilbert[n]) : "-") << '\n';
  }
  os << "generators: " << t.degree_one_generators << " in degree 1, " << t.degree_two_generators << " in degree 2\n";
  r.text = os.str();
  r.verdicts.push_back({"commutative", t.commutative ? "PASS" : "FAIL", t.commutativity_witness});
  r.verdicts.push_back({"associative", t.associative ? "PASS" : "FAIL", ""});
  r.verdicts.push_back({"hilbert_matches", t.hilbert_matches ? "PASS" : "FAIL",
                        "degrees 0.." + std::to_string(t.complete_degree)});
  window_warning(r, depth);
  r.warnings.insert(r.warnings.end(), t.warnings.begin(), t.warnings.end());
  return r;
}

Report cmd_findz(const std::string& input, const std::string& x, const std::string& y, int depth) {
  require_depth(depth);
  const Input in = load_input(input);
  const HopfPresentation& H = in.hopf();
  Report r = start("findz " + input + " --x " + x + " --y " + y + " --depth " + std::to_string(depth), in);
  const FindZResult res = find_z(H, parse_element(x, H.alphabet()), parse_element(y, H.alphabet()), depth);
  const std::string z = res.z ? format_element(*res.z, H.alphabet()) : "NONE";
  r.tables["depth"] = depth;
  r.tables["z"] = res.z ? json(z) : json(nullptr);
  r.tables["homogeneous_kernel"] = elements(res.homogeneous_kernel.elements(), H.alphabet());
  r.text = "z = " + z + "\n";
  r.verdicts.push_back({"find_z", res.z ? "FOUND" : "NONE", z});
  window_warning(r, depth);
  return r;
}

Report cmd_cobar(const std::string& input, int n, int max_weight) {
  require_depth(max_weight);
  const Input in = load_input(input);
  Report r = start("cobar " + input + " --n " + std::to_string(n) + " --depth " + std::to_string(max_weight), in);
  if (n < 0 || n > kMaxCobarDegree) {
    throw ValidationError("cobar degree must lie in 0.." + std::to_string(kMaxCobarDegree));
  }
  const CobarComplex C(in.hopf(), max_weight);
  std::vector<int> weights;
  std::vector<std::size_t> dims;
  bool square_zero = true;
  std::ostringstream os;
  os << "weight  dim H^" << n << '\n';
  for (int w = n; w <= max_weight; ++w) {
    weights.push_back(w);
    dims.push_back(C.cohomology_dim(n, w));
    os << w << "  " << dims.back() << '\n';
    for (int k = std::max(n - 1, 0); k <= n; ++k) square_zero = square_zero && C.square_zero(k, w);
  }
  r.text = os.str();
  r.tables["degree"] = n;
  r.tables["depth"] = max_weight;
  r.tables["weights"] = weights;
  r.tables["dims"] = dims;
  r.verdicts.push_back({"square_zero", square_zero ? "PASS" : "FAIL", ""});
  r.exit_code = square_zero ? kOk : kCheckFailed;
  return r;
}

namespace {

json profile_json(const InvariantProfile& p, const Alphabet& a) {
  json j;
  j["dim_P"] = p.dim_P;
  j["gk"] = to_string(p.gk);
  j["abelianization_vars"] = p.abelianization_vars;
  j["primitive_derived_dim"] = p.primitive_derived_dim;
  j["z"] = p.z ? json(format_element(*p.z, a)) : json(nullptr);
  if (p.ad) {
    json ev = json::array();
    for (const auto& e : p.ad->rational_eigenvalues) {
      ev.push_back({{"value", to_string(e.value)}, {"algebraic", e.algebraic}, {"geometric", e.geometric}});
    }
    j["ad"] = {{"primitive_basis", elements(p.ad->primitive_basis, a)},
               {"charpoly", charpoly_text(p.ad->charpoly)},
               {"rational_eigenvalues", ev},
               {"eigenvector_count", p.ad->eigenvector_count}};
  } else {
    j["ad"] = nullptr;
  }
  j["ad_note"] = p.ad_note;
  return j;
}

std::string profile_text(const InvariantProfile& p, const Alphabet& a) {
  std::ostringstream os;
  os << "dim P = " << p.dim_P << ", GK = " << to_string(p.gk) << ", abelianization vars = " << p.abelianization_vars
     << ", dim [P,P] = " << p.primitive_derived_dim << '\n';
  if (p.z) os << "z = " << format_element(*p.z, a) << '\n';
  if (p.ad) {
    os << "ad(z) charpoly: " << charpoly_text(p.ad->charpoly) << ", eigenvectors over the closure: "
       << p.ad->eigenvector_count << '\n';
  }
  if (!p.ad_note.empty()) os << "note: " << p.ad_note << '\n';
  return os.str();
}

}  // namespace

Report cmd_invariants(const std::string& input, int depth) {
  require_depth(depth);
  const Input in = load_input(input);
  Report r = start("invariants " + input + " --depth " + std::to_string(depth), in);
  const InvariantProfile p = invariant_profile(in.hopf(), depth);
  r.tables["depth"] = depth;
  r.tables["profile"] = profile_json(p, in.hopf().alphabet());
  r.text = profile_text(p, in.hopf().alphabet());
  window_warning(r, depth);
  return r;
}

Report cmd_compare(const std::string& a, const std::string& b, int depth) {
  require_depth(depth);
  const Input ia = load_input(a), ib = load_input(b);
  Report r;
  r.command = "compare " + a + " " + b + " --depth " + std::to_string(depth);
  r.input = a + " " + b;
  r.digest = digest_hex(digest(ia.hopf())) + " " + digest_hex(digest(ib.hopf()));
  const InvariantProfile pa = invariant_profile(ia.hopf(), depth), pb = invariant_profile(ib.hopf(), depth);
  const Distinction d = distinguish(pa, pb);
  r.tables["depth"] = depth;
  r.tables["profiles"] = {profile_json(pa, ia.hopf().alphabet()), profile_json(pb, ib.hopf().alphabet())};
  r.text = a + ":\n" + profile_text(pa, ia.hopf().alphabet()) + b + ":\n" + profile_text(pb, ib.hopf().alphabet());
  r.verdicts.push_back({"distinguish", d.non_isomorphic ? "NON_ISOMORPHIC" : "INCONCLUSIVE", d.certificate});
  window_warning(r, depth);
  return r;
}

Report cmd_zoo_list() {
  Report r;
  r.command = "zoo list";
  const auto catalog = family_catalog();
  r.tables["families"] = catalog;
  r.text = join(catalog, "\n") + "\n";
  return r;
}

Report cmd_zoo_emit(const std::string& family, std::string& file_text) {
  const HopfPresentation H = build_family(family);
  file_text = emit_presentation_file(H);
  Report r;
  r.command = "zoo emit " + family;
  r.input = family;
  r.digest = digest_hex(digest(H));
  r.tables["file"] = file_text;
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with presented Hopf algebras", "hopfkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON report");
  app.set_version_flag("--version", kVersion);

  std::string input, input_b, grading = "length", x, y, out_path;
  int depth = kDefaultDepth, bound = 0, levels = 3, degree = 2;

  auto* check = app.add_subcommand("check", "Confluence, bialgebra and antipode verdicts");
  check->add_option("input", input, "Family spec or presentation file")->required();
  check->add_option("--bound", bound, "Overlap weight bound (default 2 * max rule weight + 2)");

  auto* grow = app.add_subcommand("growth", "Normal-word counts and growth degree");
  grow->add_option("input", input)->required();
  grow->add_option("--grading", grading)->check(CLI::IsMember({"length", "weight"}));
  grow->add_option("--depth", depth);

  auto* prim = app.add_subcommand("primitives", "Basis of the primitive space");
  prim->add_option("input", input)->required();
  prim->add_option("--depth", depth);

  auto* corad = app.add_subcommand("coradical", "Coradical filtration dimensions");
  corad->add_option("input", input)->required();
  corad->add_option("--levels", levels);
  corad->add_option("--depth", depth);

  auto* gr = app.add_subcommand("gr", "Associated graded of the coradical filtration");
  gr->add_option("input", input)->required();
  gr->add_option("--depth", depth);

  auto* findz = app.add_subcommand("findz", "Solve reduced_delta(z) = x (x) y");
  findz->add_option("input", input)->required();
  findz->add_option("--x", x)->required();
  findz->add_option("--y", y)->required();
  findz->add_option("--depth", depth);

  auto* cobar = app.add_subcommand("cobar", "Cobar cohomology by internal weight");
  cobar->add_option("input", input)->required();
  cobar->add_option("--n", degree);
  cobar->add_option("--depth", depth);

  auto* inv = app.add_subcommand("invariants", "Isomorphism invariants");
  inv->add_option("input", input)->required();
  inv->add_option("--depth", depth);

  auto* cmp = app.add_subcommand("compare", "Try to separate two algebras by invariants");
  cmp->add_option("a", input)->required();
  cmp->add_option("b", input_b)->required();
  cmp->add_option("--depth", depth);

  auto* zoo = app.add_subcommand("zoo", "Family catalog");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "List family specs");
  auto* zoo_emit = zoo->add_subcommand("emit", "Write a presentation file for a family");
  zoo_emit->add_option("family", input)->required();
  zoo_emit->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  Report report;
  try {
    if (*check) {
      report = cmd_check(input, bound);
    } else if (*grow) {
      report = cmd_growth(input, grading, depth);
    } else if (*prim) {
      report = cmd_primitives(input, depth);
    } else if (*corad) {
      report = cmd_coradical(input, levels, depth);
    } else if (*gr) {
      report = cmd_gr(input, depth);
    } else if (*findz) {
      report = cmd_findz(input, x, y, depth);
    } else if (*cobar) {
      report = cmd_cobar(input, degree, depth);
    } else if (*inv) {
      report = cmd_invariants(input, depth);
    } else if (*cmp) {
      report = cmd_compare(input, input_b, depth);
    } else if (*zoo_list) {
      report = cmd_zoo_list();
    } else if (*zoo_emit) {
      std::string text;
      report = cmd_zoo_emit(input, text);
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f || !(f << text)) throw ValidationError("cannot write '" + out_path + "'");
        report.text = "wrote " + out_path + "\n";
      } else if (!as_json) {
        out << text;
        return kOk;
      }
    }
  } catch (const std::exception& e) {
    int code = kInternal;
    std::string status = "INTERNAL";
    if (dynamic_cast<const RefusedError*>(&e)) {
      code = kRefused;
      status = "REFUSED";
    } else if (dynamic_cast<const ValidationError*>(&e)) {
      code = kValidation;
      status = "INVALID";
    }
    err << "error: " << e.what() << '\n';
    if (as_json) {
      Report failed;
      failed.command = join(args, " ");
      failed.input = input;
      failed.verdicts.push_back({"error", status, e.what()});
      failed.exit_code = code;
      out << to_json(failed).dump(2) << '\n';
    }
    return code;
  }
  if (as_json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_text(report);
  }
  return report.exit_code;
}

}  // namespace hopfkit::cli
