#include "hopfkit/hopf.hpp"

#include <map>

#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

HopfPresentation::HopfPresentation(Presentation pres, std::vector<TensorPoly> delta, std::vector<Scalar> epsilon,
                                   std::vector<NCPoly> antipode)
    : pres_(std::move(pres)), delta_(std::move(delta)), epsilon_(std::move(epsilon)), antipode_(std::move(antipode)) {
  const Alphabet& a = pres_.alphabet();
  const std::size_t n = a.size();
  if (delta_.size() != n || epsilon_.size() != n || antipode_.size() != n) {
    throw ValidationError("delta, epsilon and antipode must be given for every generator");
  }
  auto valid = [&](const Word& w) {
    for (Letter l : w) {
      if (l >= n) throw ValidationError("letter index out of range");
    }
    return weight(w, a);
  };
  for (Letter g = 0; g < n; ++g) {
    const int wg = a.weight(g);
    for (const auto& [k, c] : delta_[g]) {
      if (valid(k.first) + valid(k.second) > wg) {
        throw ValidationError("delta(" + a[g].name + ") has a term above weight " + std::to_string(wg) + ": " +
                              format_word(k.first, a) + "@" + format_word(k.second, a));
      }
    }
    for (const auto& [w, c] : antipode_[g]) {
      if (valid(w) > wg) {
        throw ValidationError("antipode(" + a[g].name + ") has a term above weight " + std::to_string(wg) + ": " +
                              format_word(w, a));
      }
    }
  }
}

namespace {

TensorPoly unit_tensor() {
  TensorPoly t;
  t.add({Word{}, Word{}}, 1);
  return t;
}

TensorPoly delta_word(const Word& w, const HopfPresentation& H) {
  TensorPoly acc = unit_tensor();
  for (Letter l : w) acc = reduce_legs(acc * H.delta_of(l), H.presentation());
  return acc;
}

}  // namespace

TensorPoly delta(const NCPoly& p, const HopfPresentation& H) {
  TensorPoly out;
  for (const auto& [w, c] : p) out.add_scaled(delta_word(w, H), c);
  return out;
}

Scalar counit(const NCPoly& p, const HopfPresentation& H) {
  Scalar total = 0;
  for (const auto& [w, c] : p) {
    Scalar e = c;
    for (Letter l : w) {
      e *= H.epsilon_of(l);
      if (e == 0) break;
    }
    total += e;
  }
  return total;
}

TensorPoly reduced_delta(const NCPoly& p, const HopfPresentation& H) {
  if (counit(p, H) != 0) throw ValidationError("reduced comultiplication needs an element with counit 0");
  const NCPoly nf = reduce(p, H.presentation());
  TensorPoly out = delta(p, H);
  out -= tensor(constant(1), nf);
  out -= tensor(nf, constant(1));
  return out;
}

NCPoly antipode(const NCPoly& p, const HopfPresentation& H) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    NCPoly acc = constant(c);
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      acc = multiply_reduced(acc, H.antipode_of(*it), H.presentation());
    }
    out += acc;
  }
  return reduce(out, H.presentation());
}

TensorChain delta_left(const TensorPoly& t, const HopfPresentation& H) {
  TensorChain out;
  for (const auto& [k, c] : t) {
    for (const auto& [ab, d] : delta_word(k.first, H)) {
      out.add(WordTuple{ab.first, ab.second, k.second}, c * d);
    }
  }
  return reduce_legs(out, H.presentation());
}

TensorChain delta_right(const TensorPoly& t, const HopfPresentation& H) {
  TensorChain out;
  for (const auto& [k, c] : t) {
    for (const auto& [ab, d] : delta_word(k.second, H)) {
      out.add(WordTuple{k.first, ab.first, ab.second}, c * d);
    }
  }
  return reduce_legs(out, H.presentation());
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::refused:
      break;
  }
  return "REFUSED";
}

bool CheckReport::passed() const {
  if (items.empty()) return false;
  for (const auto& i : items) {
    if (i.status != Status::pass) return false;
  }
  return true;
}

const CheckItem* CheckReport::first_failure() const {
  for (const auto& i : items) {
    if (i.status != Status::pass) return &i;
  }
  return nullptr;
}

namespace {

std::string rule_name(const RewriteRule& r, const Alphabet& a) {
  return format_word(r.lhs, a) + " -> " + format_element(r.rhs, a);
}

/// Adds a confluence item; returns false (and records the ambiguities)
/// when the presentation is not confluent.
bool confluence_item(const Presentation& pres, const std::string& name, CheckReport& report) {
  auto amb = check_confluence(pres);
  if (amb.empty()) {
    report.items.push_back({name, Status::pass, ""});
    return true;
  }
  std::string detail = describe(amb.front(), pres.alphabet());
  if (amb.size() > 1) detail += " (+" + std::to_string(amb.size() - 1) + " more)";
  report.items.push_back({name, Status::refused, detail});
  report.ambiguities.insert(report.ambiguities.end(), amb.begin(), amb.end());
  return false;
}

void bialgebra_items(const HopfPresentation& H, CheckReport& report) {
  const Presentation& pres = H.presentation();
  const Alphabet& a = pres.alphabet();

  CheckItem wd{"delta_well_defined", Status::pass, ""};
  for (const auto& r : pres.rules()) {
    TensorPoly diff = delta(monomial(r.lhs), H) - delta(r.rhs, H);
    if (!diff.is_zero()) {
      wd.status = Status::fail;
      wd.detail = "rule " + rule_name(r, a) + ": delta(lhs) - delta(rhs) = " + format_tensor(diff, a);
      break;
    }
  }
  report.items.push_back(wd);

  CheckItem coassoc{"coassociativity", Status::pass, ""};
  for (Letter g = 0; g < a.size(); ++g) {
    const TensorPoly d = delta(generator(g), H);
    TensorChain diff = delta_left(d, H) - delta_right(d, H);
    if (!diff.is_zero()) {
      coassoc.status = Status::fail;
      coassoc.detail = "generator " + a[g].name + ": (delta@id - id@delta) delta = " + format_chain(diff, a);
      break;
    }
  }
  report.items.push_back(coassoc);

  CheckItem cu{"counit", Status::pass, ""};
  for (Letter g = 0; g < a.size() && cu.status == Status::pass; ++g) {
    const TensorPoly d = delta(generator(g), H);
    NCPoly left, right;
    for (const auto& [k, c] : d) {
      left.add_scaled(monomial(k.second), c * counit(monomial(k.first), H));
      right.add_scaled(monomial(k.first), c * counit(monomial(k.second), H));
    }
    const NCPoly g_nf = reduce(generator(g), pres);
    if (reduce(left, pres) != g_nf || reduce(right, pres) != g_nf) {
      cu.status = Status::fail;
      cu.detail = "generator " + a[g].name + ": (eps@id) delta = " + format_element(reduce(left, pres), a) +
                  ", (id@eps) delta = " + format_element(reduce(right, pres), a);
    }
  }
  report.items.push_back(cu);

  CheckItem cr{"counit_relations", Status::pass, ""};
  for (const auto& r : pres.rules()) {
    const Scalar diff = counit(monomial(r.lhs), H) - counit(r.rhs, H);
    if (diff != 0) {
      cr.status = Status::fail;
      cr.detail = "rule " + rule_name(r, a) + ": eps(lhs) - eps(rhs) = " + to_string(diff);
      break;
    }
  }
  report.items.push_back(cr);
}

void antipode_items(const HopfPresentation& H, CheckReport& report) {
  const Presentation& pres = H.presentation();
  const Alphabet& a = pres.alphabet();

  CheckItem conv{"antipode_convolution", Status::pass, ""};
  for (Letter g = 0; g < a.size(); ++g) {
    const TensorPoly d = delta(generator(g), H);
    NCPoly left, right;
    for (const auto& [k, c] : d) {
      left.add_scaled(multiply_reduced(antipode(monomial(k.first), H), monomial(k.second), pres), c);
      right.add_scaled(multiply_reduced(monomial(k.first), antipode(monomial(k.second), H), pres), c);
    }
    const NCPoly expected = constant(H.epsilon_of(g));
    left = reduce(left, pres);
    right = reduce(right, pres);
    if (left != expected || right != expected) {
      conv.status = Status::fail;
      conv.detail = "generator " + a[g].name + ": m(S@id)delta = " + format_element(left, a) +
                    ", m(id@S)delta = " + format_element(right, a) + ", expected " + format_element(expected, a);
      break;
    }
  }
  report.items.push_back(conv);

  CheckItem rel{"antipode_relations", Status::pass, ""};
  for (const auto& r : pres.rules()) {
    NCPoly diff = antipode(monomial(r.lhs), H) - antipode(r.rhs, H);
    if (!diff.is_zero()) {
      rel.status = Status::fail;
      rel.detail = "rule " + rule_name(r, a) + ": S(lhs) - S(rhs) = " + format_element(diff, a);
      break;
    }
  }
  report.items.push_back(rel);
}

}  // namespace

CheckReport check_bialgebra(const HopfPresentation& H) {
  CheckReport report;
  if (!confluence_item(H.presentation(), "confluence", report)) return report;
  report.items.clear();
  bialgebra_items(H, report);
  return report;
}

CheckReport check_antipode(const HopfPresentation& H) {
  CheckReport report;
  if (!confluence_item(H.presentation(), "confluence", report)) return report;
  report.items.clear();
  antipode_items(H, report);
  return report;
}

CheckReport check_hopf(const HopfPresentation& H) {
  CheckReport report;
  if (!confluence_item(H.presentation(), "confluence", report)) return report;
  bialgebra_items(H, report);
  antipode_items(H, report);
  return report;
}

NCPoly apply_morphism(const NCPoly& p, const GeneratorImages& images, const Presentation& target) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    NCPoly acc = constant(c);
    for (Letter l : w) {
      if (l >= images.size()) throw ValidationError("no image given for a source generator");
      acc = multiply_reduced(acc, images[l], target);
    }
    out += acc;
  }
  return reduce(out, target);
}

namespace {

TensorPoly apply_morphism(const TensorPoly& t, const GeneratorImages& images, const Presentation& target) {
  TensorPoly out;
  for (const auto& [k, c] : t) {
    out.add_scaled(tensor(apply_morphism(monomial(k.first), images, target),
                          apply_morphism(monomial(k.second), images, target)),
                   c);
  }
  return out;
}

std::vector<Word> words_up_to(const Presentation& pres, int max_weight) {
  std::vector<Word> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = normal_words(pres, Grading::weight, w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void truncation_comparison(const GeneratorImages& images, const Presentation& source, const Presentation& target,
                           int max_weight, MorphismReport& report) {
  const auto src_words = words_up_to(source, max_weight);
  const auto tgt_words = words_up_to(target, max_weight);
  std::map<Word, std::size_t> index;
  for (const auto& w : tgt_words) index.emplace(w, index.size());
  std::vector<NCPoly> image_polys;
  image_polys.reserve(src_words.size());
  for (const auto& w : src_words) image_polys.push_back(apply_morphism(monomial(w), images, target));
  // Words outside the target window get indices past it.
  std::vector<SparseVec> cols;
  for (const auto& p : image_polys) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [w, c] : p) {
      auto [it, inserted] = index.emplace(w, index.size());
      e.emplace_back(it->second, c);
    }
    cols.push_back(SparseVec::from_entries(std::move(e)));
  }
  const SpanSolver solver(cols);
  report.injective_on_truncation = solver.rank() == src_words.size();
  report.surjective_on_truncation = true;
  for (std::size_t i = 0; i < tgt_words.size(); ++i) {
    if (!solver.contains(SparseVec::unit(i))) {
      report.surjective_on_truncation = false;
      break;
    }
  }
}

void relations_item(const GeneratorImages& images, const Presentation& source, const Presentation& target,
                    CheckReport& report) {
  CheckItem rel{"relations_preserved", Status::pass, ""};
  for (const auto& r : source.rules()) {
    NCPoly diff = apply_morphism(monomial(r.lhs), images, target) - apply_morphism(r.rhs, images, target);
    if (!diff.is_zero()) {
      rel.status = Status::fail;
      rel.detail = "rule " + rule_name(r, source.alphabet()) + ": f(lhs) - f(rhs) = " +
                   format_element(diff, target.alphabet());
      break;
    }
  }
  report.items.push_back(rel);
}

bool morphism_preamble(const GeneratorImages& images, const Presentation& source, const Presentation& target,
                       MorphismReport& report) {
  if (images.size() != source.alphabet().size()) {
    throw ValidationError("expected " + std::to_string(source.alphabet().size()) + " generator images, got " +
                          std::to_string(images.size()));
  }
  for (const auto& img : images) {
    for (const auto& [w, c] : img) {
      for (Letter l : w) {
        if (l >= target.alphabet().size()) throw ValidationError("image uses a letter outside the target");
      }
    }
  }
  const bool ok_source = confluence_item(source, "source_confluence", report.checks);
  const bool ok_target = confluence_item(target, "target_confluence", report.checks);
  return ok_source && ok_target;
}

}  // namespace

MorphismReport check_algebra_morphism(const GeneratorImages& images, const Presentation& source,
                                      const Presentation& target, int max_weight) {
  MorphismReport report;
  report.max_weight = max_weight;
  if (!morphism_preamble(images, source, target, report)) return report;
  relations_item(images, source, target, report.checks);
  truncation_comparison(images, source, target, max_weight, report);
  return report;
}

MorphismReport check_hopf_morphism(const GeneratorImages& images, const HopfPresentation& source,
                                   const HopfPresentation& target, int max_weight) {
  MorphismReport report;
  report.max_weight = max_weight;
  const Presentation& sp = source.presentation();
  const Presentation& tp = target.presentation();
  const Alphabet& sa = sp.alphabet();
  const Alphabet& ta = tp.alphabet();
  if (!morphism_preamble(images, sp, tp, report)) return report;
  relations_item(images, sp, tp, report.checks);

  CheckItem di{"delta_intertwined", Status::pass, ""};
  CheckItem ei{"counit_intertwined", Status::pass, ""};
  CheckItem si{"antipode_intertwined", Status::pass, ""};
  for (Letter g = 0; g < sa.size(); ++g) {
    const NCPoly fg = apply_morphism(generator(g), images, tp);
    if (di.status == Status::pass) {
      TensorPoly diff = apply_morphism(delta(generator(g), source), images, tp) - delta(fg, target);
      if (!diff.is_zero()) {
        di.status = Status::fail;
        di.detail = "generator " + sa[g].name + ": (f@f)delta - delta f = " + format_tensor(diff, ta);
      }
    }
    if (ei.status == Status::pass) {
      const Scalar diff = source.epsilon_of(g) - counit(fg, target);
      if (diff != 0) {
        ei.status = Status::fail;
        ei.detail = "generator " + sa[g].name + ": eps - eps f = " + to_string(diff);
      }
    }
    if (si.status == Status::pass) {
      NCPoly diff = apply_morphism(source.antipode_of(g), images, tp) - antipode(fg, target);
      if (!diff.is_zero()) {
        si.status = Status::fail;
        si.detail = "generator " + sa[g].name + ": f S - S f = " + format_element(diff, ta);
      }
    }
  }
  report.checks.items.push_back(di);
  report.checks.items.push_back(ei);
  report.checks.items.push_back(si);
  truncation_comparison(images, sp, tp, max_weight, report);
  return report;
}

}  // namespace hopfkit
