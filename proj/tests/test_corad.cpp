#include <doctest.h>

#include "hopfkit/corad.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"
#include "hopfkit/zoo.hpp"

using namespace hopfkit;

namespace {

/// #{(a, b, c) : a + b + 2c <= m, a + b + 2c <= D}: monomials X^a Y^b Z^c
/// of coradical degree <= m inside F_D.
std::size_t staircase(int m, int D) {
  std::size_t n = 0;
  for (int a = 0; a <= D; ++a) {
    for (int b = 0; a + b <= D; ++b) {
      for (int c = 0; a + b + 2 * c <= D; ++c) n += a + b + 2 * c <= m ? 1 : 0;
    }
  }
  return n;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("corad") {
  TEST_CASE("truncated bases") {
    const HopfPresentation B = build_B(0);
    const auto words = truncated_basis(B, 2);
    std::vector<std::string> text;
    for (const auto& w : words) text.push_back(format_word(w, B.alphabet()));
    CHECK(text == std::vector<std::string>{"1", "X", "Y", "X*X", "X*Y", "Y*Y", "Z"});
    CHECK(truncated_basis(B, 0).size() == 1);
    CHECK(truncated_basis(build_family("env:sl2"), 2).size() == 10);
    CHECK_THROWS_AS(truncated_basis(build_B_perturbed(0, 1, 0), 2), RefusedError);
  }

  TEST_CASE("primitive spaces") {
    const HopfPresentation B = build_B(3);
    const auto P = primitives(B, 4);
    CHECK(P.dim() == 2);
    CHECK(P.contains(parse_element("X", B.alphabet())));
    CHECK(P.contains(parse_element("Y", B.alphabet())));
    CHECK_FALSE(P.contains(parse_element("Z", B.alphabet())));
    CHECK(primitives(build_family("env:sl2"), 4).dim() == 3);
    CHECK(primitives(build_family("env:1dim"), 3).dim() == 1);
    for (Exec e : {Exec::serial, Exec::parallel}) CHECK(primitives(build_A(1, 1, 1), 5, e).dim() == 2);
  }

  TEST_CASE("connectedness") {
    const HopfPresentation B = build_B(0);
    CHECK_NOTHROW(require_connected(Truncation(B, 4)));
    // A group-like generator violates the weight filtration, so it is
    // rejected before any truncation is built.
    const Alphabet a({{"g", 1}});
    const Presentation p(a, {});
    CHECK_THROWS_AS(HopfPresentation(p, {parse_tensor("g@g", a)}, {1}, {parse_element("g", a)}), ValidationError);
  }

  TEST_CASE("coradical filtration of B matches the staircase oracle") {
    const HopfPresentation B = build_B(1);
    const auto F = coradical_filtration(B, 3, 6);
    REQUIRE(F.levels.size() == 4);
    for (int m = 0; m <= 3; ++m) CHECK(F.levels[static_cast<std::size_t>(m)].dim() == staircase(m, 6));
    CHECK(F.levels[0].dim() == 1);
    CHECK(F.levels[1].dim() == 3);
    CHECK(F.levels[2].dim() == 7);
    CHECK(F.levels[3].dim() == 13);
    const NCPoly Z = parse_element("Z", B.alphabet());
    CHECK(F.levels[2].contains(Z));
    CHECK_FALSE(F.levels[1].contains(Z));
    CHECK(F.complete_level == 3);
    CHECK(F.warnings.empty());
  }

  TEST_CASE("coradical filtration of U(g) is the PBW filtration") {
    const auto F = coradical_filtration(build_family("env:sl2"), 3, 4);
    for (std::size_t m = 0; m <= 3; ++m) CHECK(F.levels[m].dim() == binomial(m + 3, 3));
  }

  TEST_CASE("H_1 is k plus the primitives") {
    for (const char* spec : {"A:0,0,1", "B:2", "env:heisenberg"}) {
      const HopfPresentation H = build_family(spec);
      const auto F = coradical_filtration(H, 1, 4);
      CHECK(F.levels[1].dim() == 1 + primitives(H, 4).dim());
    }
  }

  TEST_CASE("the image of Z spans H_2 modulo the subalgebra of X and Y") {
    for (const char* spec : {"B:0", "A:1,1,1", "A:0,0,0"}) {
      CAPTURE(spec);
      const HopfPresentation H = build_family(spec);
      const auto F = coradical_filtration(H, 2, 6);
      const auto K = subalgebra_span(H, {generator(0), generator(1)}, 6);
      CHECK(F.levels[2].dim() - intersection_dim(F.levels[2], K) == 1);
    }
  }

  TEST_CASE("within-window warnings") {
    const auto F = coradical_filtration(build_B(0), 3, 4);
    CHECK(F.complete_level == 2);
    CHECK_FALSE(F.warnings.empty());
  }

  TEST_CASE("gr structure of B") {
    const GrTable g = gr_structure(build_B(1), 8);
    CHECK(g.complete_degree == 4);
    CHECK(g.commutative);
    CHECK(g.associative);
    CHECK(g.degree_one_generators == 2);
    CHECK(g.degree_two_generators == 1);
    CHECK(g.polynomial_hilbert == std::vector<std::size_t>{1, 2, 4, 6, 9});
    CHECK(g.hilbert_matches);
    CHECK(g.growth_degree == 3);
  }

  TEST_CASE("gr of the nonabelian two-dimensional enveloping algebra is commutative") {
    const GrTable g = gr_structure(build_family("env:2dim"), 5);
    CHECK(g.commutative);
    CHECK(g.hilbert_matches);
    CHECK(g.growth_degree == 2);
  }

  TEST_CASE("weighted polynomial Hilbert functions") {
    CHECK(weighted_polynomial_hilbert({1, 1, 2}, 5) == std::vector<std::size_t>{1, 2, 4, 6, 9, 12});
    CHECK(weighted_polynomial_hilbert({}, 2) == std::vector<std::size_t>{1, 0, 0});
  }

  TEST_CASE("find_z") {
    const HopfPresentation B = build_B(4);
    const Alphabet& a = B.alphabet();
    const auto r = find_z(B, parse_element("X", a), parse_element("Y", a), 2);
    REQUIRE(r.z);
    CHECK(*r.z == parse_element("Z", a));
    const auto P = primitives(B, 2);
    CHECK(r.homogeneous_kernel.rows == P.rows);

    const HopfPresentation A = build_A(0, 0, 0);
    const auto s = find_z(A, parse_element("Y", A.alphabet()), parse_element("X", A.alphabet()), 2);
    REQUIRE(s.z);
    CHECK(*s.z == parse_element("X*Y - Z", A.alphabet()));
    CHECK(reduced_delta(*s.z, A) == parse_tensor("Y@X", A.alphabet()));

    const HopfPresentation h = build_family("env:2dim-abelian");
    CHECK_FALSE(find_z(h, generator(0), generator(1), 6).z);
    CHECK_THROWS_AS(find_z(B, parse_element("Z", a), parse_element("Y", a), 2), ValidationError);
    CHECK_THROWS_AS(find_z(B, parse_element("X", a), parse_element("2*X", a), 2), ValidationError);
  }

  TEST_CASE("domain spot check") {
    CHECK(spot_check_domain(build_B(0), 4, 200).passed);
    CHECK(spot_check_domain(build_family("env:sl2"), 3, 100).passed);
    // X*X -> 0 makes X a zero divisor.
    const Alphabet a({{"X", 1}});
    const Presentation p(a, {{Word{0, 0}, NCPoly()}});
    const HopfPresentation H(p, {parse_tensor("1@X + X@1", a)}, {0}, {parse_element("-X", a)});
    CHECK_FALSE(spot_check_domain(H, 1, 200).passed);
  }
}
