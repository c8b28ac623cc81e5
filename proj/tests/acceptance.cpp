// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/cobar.hpp"
#include "hopfkit/corad.hpp"
#include "hopfkit/expression.hpp"
#include "hopfkit/freehopf.hpp"
#include "hopfkit/growth.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/zoo.hpp"
#include "property_support.hpp"

using namespace hopfkit;

namespace {

/// Collects the failed sub-checks of one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

const std::vector<std::string> kLiePresets3{"env:abelian", "env:heisenberg", "env:r3",
                                            "env:r3lambda", "env:sl2",      "env:e2"};

std::vector<std::string> a_instances() {
  return {"A:0,0,0", "A:0,0,1", "A:1,1,1", "A:1,0,0", "A:1,1,0", "A:1,2,0", "A:1,1/2,0"};
}

std::vector<std::string> b_instances() { return {"B:0", "B:1", "B:-3/2"}; }

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void hopf_suite(Criterion& c) {
  for (const auto& f : concat(concat(a_instances(), b_instances()), kLiePresets3)) {
    const CheckReport r = check_hopf(build_family(f));
    const CheckItem* bad = r.first_failure();
    c.expect(r.passed(), f + ": " + (bad ? bad->name + " " + bad->detail : std::string("?")));
  }
}

void perturbation_suite(Criterion& c) {
  for (int a21 = -1; a21 <= 1; ++a21) {
    for (int a22 = -1; a22 <= 1; ++a22) {
      const std::string tag = "Bpert(1," + std::to_string(a21) + "," + std::to_string(a22) + ")";
      const CheckReport r = check_hopf(build_B_perturbed(1, a21, a22));
      if (a21 == 0 && a22 == 0) {
        c.expect(r.passed(), tag + " should pass");
        continue;
      }
      c.expect(!r.passed(), tag + " should fail");
      bool zyx = false;
      for (const auto& amb : r.ambiguities) {
        zyx = zyx || (amb.kind == AmbiguityKind::overlap && amb.word == Word{2, 1, 0});
      }
      c.expect(zyx, tag + " should fail on the Z*Y*X overlap");
    }
  }
}

void gk_suite(Criterion& c) {
  auto expect_degree = [&](const std::string& f, int d) {
    const GrowthReport g = growth(build_family(f).presentation(), Grading::length, 8);
    c.expect(g.growth_degree == GrowthDegree::polynomial(d), f + ": degree " + to_string(g.growth_degree));
    c.expect(g.method == "automaton" && !g.automaton.exponential && g.automaton.degree == d &&
                 g.finite_difference == d,
             f + ": automaton and finite differences disagree");
  };
  for (const auto& f : concat(concat(a_instances(), b_instances()), kLiePresets3)) expect_degree(f, 3);
  for (const auto& f : {"env:2dim", "env:2dim-abelian"}) expect_degree(f, 2);
  expect_degree("env:1dim", 1);
}

void primitive_suite(Criterion& c) {
  auto expect_dim = [&](const std::string& f, std::size_t d) {
    const HopfPresentation H = build_family(f);
    const SubspaceBasis p4 = primitives(H, 4), p6 = primitives(H, 6);
    c.expect(p4.dim() == d && p6.dim() == d, f + ": dim P = " + std::to_string(p4.dim()) + ", " +
                                                 std::to_string(p6.dim()));
    c.expect(p4.rows.size() == p6.rows.size() && p4.elements() == p6.elements(), f + ": bases differ");
  };
  for (const auto& f : concat(a_instances(), b_instances())) expect_dim(f, 2);
  for (const auto& f : kLiePresets3) expect_dim(f, 3);
}

/// #{X^a Y^b Z^c : a + b + 2c <= min(m, D)}.
std::size_t staircase(int m, int D) {
  std::size_t n = 0;
  for (int a = 0; a <= D; ++a) {
    for (int b = 0; a + b <= D; ++b) {
      for (int k = 0; a + b + 2 * k <= D; ++k) n += a + b + 2 * k <= m ? 1 : 0;
    }
  }
  return n;
}

void coradical_suite(Criterion& c) {
  for (const auto& f : b_instances()) {
    const HopfPresentation H = build_family(f);
    const CoradicalFiltration F = coradical_filtration(H, 3, 6);
    std::vector<std::size_t> dims, expected;
    for (int m = 0; m <= 3; ++m) {
      dims.push_back(F.levels[static_cast<std::size_t>(m)].dim());
      expected.push_back(staircase(m, 6));
    }
    c.expect(dims == expected && expected == std::vector<std::size_t>{1, 3, 7, 13}, f + ": coradical dims");
    const NCPoly Z = parse_element("Z", H.alphabet());
    c.expect(F.levels[2].contains(Z) && !F.levels[1].contains(Z), f + ": Z should lie in H_2 \\ H_1");
    const SubspaceBasis K = subalgebra_span(H, {generator(0), generator(1)}, 6);
    c.expect(F.levels[2].dim() - intersection_dim(F.levels[2], K) == 1, f + ": dim H_2 / K_2 != 1");
  }
}

void gr_suite(Criterion& c) {
  for (const auto& f : concat(b_instances(), {"A:0,0,0", "A:0,0,1", "A:1,1,1", "A:1,2,0"})) {
    const HopfPresentation H = build_family(f);
    const GrTable t = gr_structure(H, 10);
    c.expect(t.complete_degree >= 5, f + ": gr complete only to degree " + std::to_string(t.complete_degree));
    c.expect(t.commutative, f + ": gr not commutative " + t.commutativity_witness);
    c.expect(t.associative, f + ": gr not associative");
    const auto poly = weighted_polynomial_hilbert({1, 1, 2}, t.complete_degree);
    bool match = true;
    for (int n = 0; n <= t.complete_degree; ++n) match = match && t.hilbert[static_cast<std::size_t>(n)] == poly[static_cast<std::size_t>(n)];
    c.expect(match && t.hilbert_matches, f + ": Hilbert function differs from k[v1, v2, w2]");
    const GrowthReport g = growth(H.presentation(), Grading::length, 8);
    c.expect(t.growth_degree && g.growth_degree == GrowthDegree::polynomial(*t.growth_degree),
             f + ": gr growth differs from algebra growth");
  }
}

void cobar_suite(Criterion& c) {
  for (const auto& f : {"env:2dim-abelian", "env:2dim"}) {
    const HopfPresentation H = build_family(f);
    const CobarComplex C(H, 6);
    std::vector<std::size_t> dims;
    for (int w = 2; w <= 6; ++w) dims.push_back(C.cohomology_dim(2, w));
    c.expect(dims == std::vector<std::size_t>{1, 0, 0, 0, 0}, std::string(f) + ": H^2 by weight");
    const TensorPoly xy = tensor(generator(0), generator(1));
    c.expect(C.apply_differential(TensorChain(WordTuple{Word{0}, Word{1}})).is_zero(),
             std::string(f) + ": x (x) y is not a cocycle");
    c.expect(!C.is_coboundary(xy, 2).has_value(), std::string(f) + ": x (x) y is a coboundary");
    for (int n = 0; n <= kMaxCobarDegree - 1; ++n) {
      for (int w = 0; w <= 6; ++w) {
        c.expect(C.square_zero(n, w), std::string(f) + ": d o d != 0 on (" + std::to_string(n) + ", " +
                                          std::to_string(w) + ")");
      }
    }
  }
}

void find_z_suite(Criterion& c) {
  for (const auto& f : concat(b_instances(), a_instances())) {
    const HopfPresentation H = build_family(f);
    const Alphabet& a = H.alphabet();
    const FindZResult r = find_z(H, parse_element("X", a), parse_element("Y", a), 4);
    c.expect(r.z && *r.z == parse_element("Z", a), f + ": z = " + (r.z ? format_element(*r.z, a) : "NONE"));
    c.expect(r.z && reduced_delta(*r.z, H) == parse_tensor("X@Y", a), f + ": reduced delta(z) != X (x) Y");
    const SubspaceBasis P = primitives(H, 4);
    c.expect(r.homogeneous_kernel.dim() == P.dim() && intersection_dim(r.homogeneous_kernel, P) == P.dim(),
             f + ": solution kernel differs from P(H)");
  }
  for (const auto& f : {"env:2dim-abelian", "env:2dim"}) {
    const HopfPresentation H = build_family(f);
    const FindZResult r = find_z(H, generator(0), generator(1), 6);
    c.expect(!r.z, std::string(f) + ": find_z should return NONE");
    c.expect(intersection_dim(r.homogeneous_kernel, primitives(H, 6)) == 2, std::string(f) + ": kernel != P(H)");
  }
}

void isomorphism_suite(Criterion& c) {
  auto morphism = [&](const std::string& tag, const GeneratorImages& f, const HopfPresentation& src,
                      const HopfPresentation& tgt) {
    const MorphismReport r = check_hopf_morphism(f, src, tgt, 4);
    const CheckItem* bad = r.checks.first_failure();
    c.expect(r.passed() && r.bijective_on_truncation(), tag + (bad ? ": " + bad->name + " " + bad->detail : ""));
    return r.passed();
  };
  const std::vector<std::pair<Scalar, Scalar>> params{{2, 3}, {-1, Scalar(1) / 2}, {3, 3}, {Scalar(5) / 4, -2}};
  for (const auto& [l1, l2] : params) {
    const HopfPresentation tgt = build_A(l1, l2, 0);
    const Alphabet& t = tgt.alphabet();
    const NCPoly x = parse_element("X", t), y = parse_element("Y", t), z = parse_element("Z", t);
    const NCPoly zxy = parse_element("Z - X*Y", t);
    const std::string tag = "(" + l1.get_str() + ", " + l2.get_str() + ")";
    morphism("A(1, l2/l1, 0) map " + tag, {(1 / l1) * x, y, (1 / l1) * z}, build_A(1, l2 / l1, 0), tgt);
    morphism("swap map " + tag, {(1 / l2) * y, -x, (1 / l2) * zxy}, build_A(1, l1 / l2, 0), tgt);
    if (l1 != l2) {
      // The scale 1/l1 on z' - x'y' intertwines delta only when l1 = l2.
      const MorphismReport lit = check_hopf_morphism({(1 / l2) * y, -x, (1 / l1) * zxy}, build_A(1, l1 / l2, 0), tgt, 4);
      c.expect(!lit.passed(), "swap map with 1/l1 on Z unexpectedly passes " + tag);
    }
  }
  for (const Scalar& l : std::vector<Scalar>{2, -1, Scalar(3) / 5}) {
    const HopfPresentation tgt = build_A(l, l, 1);
    const Alphabet& t = tgt.alphabet();
    morphism("A(1, 1, 1) map " + l.get_str(),
             {parse_element("X", t), (1 / l) * parse_element("Y", t), (1 / l) * parse_element("Z", t)},
             build_A(1, 1, 1), tgt);
  }
  for (const Scalar& l : std::vector<Scalar>{2, -1, Scalar(3) / 5, 7}) {
    const HopfPresentation tgt = build_A(1, 1 / l, 0);
    const Alphabet& t = tgt.alphabet();
    morphism("A(1, l, 0) -> A(1, 1/l, 0) for l = " + l.get_str(),
             {parse_element("Y", t), -l * parse_element("X", t), l * parse_element("Z - X*Y", t)},
             build_A(1, l, 0), tgt);
  }
  for (const Scalar& l : std::vector<Scalar>{0, 1, Scalar(-3) / 2}) {
    const SolvableCheck s = solvable_presentation_of_B(l, 4);
    c.expect(s.passed(), "Z' = Z - XY/2 on B(" + l.get_str() + ")");
  }

  // Sample matrix: INCONCLUSIVE exactly on the diagonal and on {l, 1/l}.
  struct Sample {
    std::string spec;
    std::optional<Scalar> lambda;
  };
  std::vector<Sample> samples{{"A:0,0,0", {}}, {"A:0,0,1", {}}, {"A:1,1,1", {}}};
  for (const Scalar& l : std::vector<Scalar>{0, 1, 2, Scalar(1) / 2, -1, 3, Scalar(1) / 3}) {
    samples.push_back({"A:1," + l.get_str() + ",0", l});
  }
  std::vector<InvariantProfile> profiles;
  for (const auto& s : samples) profiles.push_back(invariant_profile(build_family(s.spec), 4));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const Distinction d = distinguish(profiles[i], profiles[j]);
      const bool inverse = samples[i].lambda && samples[j].lambda && *samples[i].lambda * *samples[j].lambda == 1;
      const bool expect_inconclusive = i == j || inverse;
      c.expect(d.non_isomorphic != expect_inconclusive,
               samples[i].spec + " vs " + samples[j].spec + ": " +
                   (d.non_isomorphic ? "NON_ISOMORPHIC " + d.certificate : "INCONCLUSIVE"));
    }
  }
}

void takeuchi_suite(Criterion& c) {
  for (std::size_t g = 0; 2 * g <= 5; ++g) {
    for (std::size_t e = 0; 2 * g + e <= 5; ++e) {
      if (2 * g + e == 0) continue;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < g; ++i) names.push_back("g" + std::to_string(i));
      std::vector<Generator> extras;
      std::map<std::string, std::vector<CoalgebraTerm>> delta;
      for (std::size_t i = 0; i < e; ++i) {
        extras.push_back({"b" + std::to_string(i), 1});
        delta["b" + std::to_string(i)] = {{Scalar(1), "1", "b" + std::to_string(i)}, {Scalar(1), "b" + std::to_string(i), "1"}};
      }
      const PointedCoalgebraData d(names, extras, delta, {});
      const std::size_t letters = 2 * g + e;
      for (int n = 0; n <= 8; ++n) {
        // Adjacency-filtered enumeration of all letters^n words.
        std::size_t brute = 0;
        std::vector<std::size_t> w(static_cast<std::size_t>(n), 0);
        while (true) {
          bool ok = true;
          for (std::size_t i = 1; i < w.size(); ++i) {
            const std::size_t a = w[i - 1], b = w[i];
            if (a < 2 * g && b < 2 * g && (a + g == b || b + g == a)) ok = false;
          }
          brute += ok ? 1 : 0;
          std::size_t k = 0;
          while (k < w.size() && ++w[k] == letters) w[k++] = 0;
          if (k == w.size()) break;
        }
        c.expect(reduced_words(d, n).count == brute,
                 "g=" + std::to_string(g) + " extras=" + std::to_string(e) + " n=" + std::to_string(n));
        if (e == 0 && n >= 1) {
          mpz_class formula = 2 * g;
          for (int k = 1; k < n; ++k) formula *= 2 * g - 1;
          c.expect(reduced_words(d, n).count == formula, "free group formula g=" + std::to_string(g));
        }
      }
    }
  }
  const PointedCoalgebraData skew({"g"}, {{"x", 1}}, {{"x", {{Scalar(1), "1", "x"}, {Scalar(1), "x", "g"}}}}, {});
  c.expect(growth_class(skew).exponential, "group-like plus skew-primitive should be EXPONENTIAL");
}

void property_suite(Criterion& c) {
  unsigned long long seed = 2024;
  for (const auto& f : concat(concat(a_instances(), b_instances()), kLiePresets3)) {
    const HopfPresentation H = build_family(f);
    const auto red = testing::reduce_properties(H, 500, ++seed);
    c.expect(red.samples == 500 && red.failures == 0, f + ": reduce " + red.witness);
    const auto eps = testing::counit_properties(H, 500, ++seed);
    c.expect(eps.failures == 0, f + ": counit " + eps.witness);
    const auto conv = testing::convolution_identity(H, 5);
    c.expect(conv.samples > 0 && conv.failures == 0, f + ": convolution on F_5 " + conv.witness);
    const DomainCheck dom = spot_check_domain(H, 4, 200, ++seed);
    c.expect(dom.trials == 200 && dom.passed, f + ": zero divisor " + dom.witness);
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string title;
    std::function<void(Criterion&)> run;
    double limit_seconds;
  };
  const std::vector<Entry> entries{
      {1, "Hopf axiom suite", hopf_suite, 30},
      {2, "perturbation rejection", perturbation_suite, 0},
      {3, "GK-dimension table", gk_suite, 5},
      {4, "primitive spaces", primitive_suite, 0},
      {5, "coradical filtration of B", coradical_suite, 0},
      {6, "gr properties", gr_suite, 0},
      {7, "cobar cohomology", cobar_suite, 10},
      {8, "find_z", find_z_suite, 0},
      {9, "isomorphism suite", isomorphism_suite, 0},
      {10, "Takeuchi counts", takeuchi_suite, 0},
      {11, "property suites", property_suite, 0},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit_seconds > 0) {
      std::ostringstream os;
      os << "runtime " << secs << " s exceeds " << e.limit_seconds << " s";
      c.expect(secs < e.limit_seconds, os.str());
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << e.id << " " << (c.ok() ? "PASS" : "FAIL") << "  " << e.title << " ("
         << c.checks() << " checks, " << secs << " s)";
    std::cout << line.str() << '\n';
    for (const auto& f : c.failures()) std::cout << "    " << f << '\n';
    failed += c.ok() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
