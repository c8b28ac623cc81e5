#include <doctest.h>

#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/zoo.hpp"

using namespace hopfkit;

TEST_SUITE("hopf") {
  TEST_CASE("delta of Z and of products") {
    const HopfPresentation B = build_B(0);
    const Alphabet& a = B.alphabet();
    CHECK(delta(parse_element("Z", a), B) == parse_tensor("1@Z + X@Y + Z@1", a));
    CHECK(reduced_delta(parse_element("X*Y", a), B) == parse_tensor("X@Y + Y@X", a));
    // YX reduces to XY - Y in B; delta respects that.
    CHECK(delta(parse_element("Y*X", a), B) == delta(parse_element("X*Y - Y", a), B));
    CHECK_THROWS_AS(reduced_delta(constant(1), B), ValidationError);
  }

  TEST_CASE("counit and antipode") {
    const HopfPresentation B = build_B(2);
    const Alphabet& a = B.alphabet();
    CHECK(counit(parse_element("3 + X*Z", a), B) == 3);
    CHECK(antipode(parse_element("Z", a), B) == parse_element("-Z + X*Y", a));
    // S(XY) = S(Y)S(X) = YX = XY - Y.
    CHECK(antipode(parse_element("X*Y", a), B) == parse_element("X*Y - Y", a));
  }

  TEST_CASE("zoo families pass every Hopf check") {
    for (const char* spec : {"A:0,0,0", "A:0,0,1", "A:1,1,1", "A:1,2,0", "B:0", "B:5", "env:sl2", "env:e2",
                             "env:2dim", "free:a,b"}) {
      CAPTURE(spec);
      const auto report = check_hopf(build_family(spec));
      CHECK(report.passed());
      for (const auto& item : report.items) {
        CAPTURE(item.name);
        CHECK(item.status == Status::pass);
      }
    }
  }

  TEST_CASE("the opposite sign of [Z,X] in B is rejected") {
    // ZX -> XZ + Z instead of XZ - Z.
    const HopfPresentation B = build_B(0);
    const Alphabet& a = B.alphabet();
    std::vector<RewriteRule> rules = B.presentation().rules();
    rules[1].rhs = parse_element("X*Z + Z", a);
    const Presentation p(a, rules);
    std::vector<TensorPoly> d;
    std::vector<Scalar> e;
    std::vector<NCPoly> s;
    for (Letter g = 0; g < 3; ++g) {
      d.push_back(B.delta_of(g));
      e.push_back(B.epsilon_of(g));
      s.push_back(B.antipode_of(g));
    }
    const HopfPresentation wrong(p, d, e, s);
    const auto report = check_hopf(wrong);
    REQUIRE(report.first_failure());
    CHECK(report.first_failure()->status == Status::refused);
    CHECK_FALSE(report.passed());
  }

  TEST_CASE("bad antipode fails the convolution identity") {
    const HopfPresentation B = build_B(0);
    const Alphabet& a = B.alphabet();
    std::vector<TensorPoly> d;
    std::vector<Scalar> e;
    std::vector<NCPoly> s;
    for (Letter g = 0; g < 3; ++g) {
      d.push_back(B.delta_of(g));
      e.push_back(B.epsilon_of(g));
      s.push_back(B.antipode_of(g));
    }
    s[2] = parse_element("-Z", a);
    const auto report = check_antipode(HopfPresentation(B.presentation(), d, e, s));
    REQUIRE(report.first_failure());
    CHECK(report.first_failure()->name == "antipode_convolution");
  }

  TEST_CASE("filtered condition is validated") {
    const HopfPresentation B = build_B(0);
    const Alphabet& a = B.alphabet();
    std::vector<TensorPoly> d{B.delta_of(0), B.delta_of(1), parse_tensor("1@Z + Z@X + Z@1", a)};
    CHECK_THROWS_AS(HopfPresentation(B.presentation(), d, {0, 0, 0},
                                     {B.antipode_of(0), B.antipode_of(1), B.antipode_of(2)}),
                    ValidationError);
  }

  TEST_CASE("non-confluent input is refused") {
    const auto report = check_hopf(build_B_perturbed(0, 0, 1));
    REQUIRE(report.items.size() == 1);
    CHECK(report.items[0].status == Status::refused);
    CHECK_FALSE(report.ambiguities.empty());
  }

  TEST_CASE("morphisms between A instances") {
    // A(1, l2/l1, 0) -> A(l1, l2, 0): X, Y, Z -> x/l1, y, z/l1.
    const Scalar l1 = 2, l2 = 3;
    const HopfPresentation src = build_A(1, l2 / l1, 0);
    const HopfPresentation tgt = build_A(l1, l2, 0);
    const Alphabet& t = tgt.alphabet();
    const GeneratorImages f{parse_element("1/2*X", t), parse_element("Y", t), parse_element("1/2*Z", t)};
    const auto r = check_hopf_morphism(f, src, tgt, 4);
    CHECK(r.passed());
    CHECK(r.bijective_on_truncation());
    // Dropping the scale on Z breaks the relations.
    const GeneratorImages g{parse_element("1/2*X", t), parse_element("Y", t), parse_element("Z", t)};
    CHECK_FALSE(check_hopf_morphism(g, src, tgt, 4).passed());
  }

  TEST_CASE("swap map between A instances needs 1/l2 on Z") {
    // A(1, l1/l2, 0) -> A(l1, l2, 0): X, Y, Z -> y/l2, -x, c (z - xy).
    const Scalar l1 = 2, l2 = 3;
    const HopfPresentation src = build_A(1, l1 / l2, 0);
    const HopfPresentation tgt = build_A(l1, l2, 0);
    const Alphabet& t = tgt.alphabet();
    const GeneratorImages f{parse_element("1/3*Y", t), parse_element("-X", t), parse_element("1/3*(Z - X*Y)", t)};
    const auto r = check_hopf_morphism(f, src, tgt, 4);
    CHECK(r.passed());
    CHECK(r.bijective_on_truncation());
    const GeneratorImages g{parse_element("1/3*Y", t), parse_element("-X", t), parse_element("1/2*(Z - X*Y)", t)};
    const auto bad = check_hopf_morphism(g, src, tgt, 4);
    CHECK_FALSE(bad.passed());
    const CheckItem* first = bad.checks.first_failure();
    REQUIRE(first != nullptr);
    CHECK(first->name == "relations_preserved");
  }

  TEST_CASE("A(1, l, 0) -> A(1, 1/l, 0)") {
    for (const Scalar& l : std::vector<Scalar>{2, -1, Scalar(3) / 5}) {
      CAPTURE(l.get_str());
      const HopfPresentation src = build_A(1, l, 0);
      const HopfPresentation tgt = build_A(1, 1 / l, 0);
      const Alphabet& t = tgt.alphabet();
      const NCPoly X = parse_element("X", t), Y = parse_element("Y", t), Z = parse_element("Z - X*Y", t);
      const GeneratorImages f{Y, -l * X, l * Z};
      const auto r = check_hopf_morphism(f, src, tgt, 4);
      CHECK(r.passed());
      CHECK(r.bijective_on_truncation());
    }
  }

  TEST_CASE("the zero map is not surjective") {
    const HopfPresentation H = build_A(0, 0, 0);
    const auto r = check_algebra_morphism({NCPoly(), NCPoly(), NCPoly()}, H.presentation(), H.presentation(), 2);
    CHECK_FALSE(r.surjective_on_truncation);
    CHECK_FALSE(r.injective_on_truncation);
  }
}
