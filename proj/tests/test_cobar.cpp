#include <doctest.h>

#include "hopfkit/cobar.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"
#include "hopfkit/zoo.hpp"

using namespace hopfkit;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("cobar") {
  TEST_CASE("pieces count tuples of non-unit normal words") {
    const HopfPresentation H = build_family("env:2dim-abelian");
    const CobarComplex C(H, 4, Exec::serial);
    // k[x, y] has w + 1 monomials of weight w.
    CHECK(C.piece(0, 0).basis.size() == 1);
    CHECK(C.piece(0, 2).basis.empty());
    CHECK(C.piece(1, 3).basis.size() == 4);
    CHECK(C.piece(2, 3).basis.size() == 2 * 3 + 3 * 2);
    CHECK(C.piece(3, 4).basis.size() == 3 * (3 * 2 * 2));
    CHECK_THROWS_AS(C.piece(1, 5), ValidationError);
  }

  TEST_CASE("first differential is minus the reduced coproduct") {
    const HopfPresentation H = build_family("env:2dim-abelian");
    const Alphabet& a = H.alphabet();
    const CobarComplex C(H, 2, Exec::serial);
    const Word xy = parse_element("x*y", a).begin()->first;
    const TensorChain d = C.apply_differential(TensorChain(WordTuple{xy}));
    const Word x{0}, y{1};
    TensorChain expected;
    expected.add(WordTuple{x, y}, -1);
    expected.add(WordTuple{y, x}, -1);
    CHECK(d == expected);
  }

  TEST_CASE("differential squares to zero") {
    for (const char* spec : {"env:2dim-abelian", "env:2dim", "env:heisenberg", "env:sl2", "free:a,b"}) {
      CAPTURE(spec);
      const HopfPresentation H = build_family(spec);
      const CobarComplex C(H, 4);
      for (int n = 0; n <= 2; ++n) {
        for (int w = 0; w <= 4; ++w) CHECK(C.square_zero(n, w));
      }
    }
  }

  TEST_CASE("serial and parallel differentials agree") {
    const HopfPresentation H = build_family("env:2dim");
    const CobarComplex S(H, 5, Exec::serial), P(H, 5, Exec::parallel);
    for (int n = 1; n <= 3; ++n) {
      CHECK(S.differential(n, 5).columns == P.differential(n, 5).columns);
    }
  }

  TEST_CASE("H^2 of two-dimensional enveloping algebras") {
    for (const char* spec : {"env:2dim-abelian", "env:2dim"}) {
      CAPTURE(spec);
      const HopfPresentation H = build_family(spec);
      const CobarComplex C(H, 6);
      std::vector<std::size_t> dims;
      for (int w = 2; w <= 6; ++w) dims.push_back(C.cohomology_dim(2, w));
      CHECK(dims == std::vector<std::size_t>{1, 0, 0, 0, 0});
    }
  }

  TEST_CASE("Koszul dual of a symmetric algebra is exterior") {
    // Cobar cohomology of k[V] is the exterior algebra on V, concentrated
    // in internal weight equal to the cohomological degree.
    for (const char* spec : {"env:2dim-abelian", "env:abelian"}) {
      CAPTURE(spec);
      const HopfPresentation H = build_family(spec);
      const std::size_t dim_v = H.alphabet().size();
      const CobarComplex C(H, 5);
      for (int n = 0; n <= kMaxCobarDegree; ++n) {
        for (int w = 0; w <= 5; ++w) {
          CAPTURE(n);
          CAPTURE(w);
          CHECK(C.cohomology_dim(n, w) == (w == n ? binomial(dim_v, n) : 0));
        }
      }
    }
  }

  TEST_CASE("H^1 is the primitive space") {
    for (const char* spec : {"env:sl2", "env:heisenberg", "env:r3"}) {
      CAPTURE(spec);
      const HopfPresentation H = build_family(spec);
      std::size_t total = 0;
      for (int w = 1; w <= 4; ++w) total += cohomology_dim(H, 1, w);
      CHECK(total == primitives(H, 4).dim());
    }
  }

  TEST_CASE("degree cap and refusals") {
    const HopfPresentation H = build_family("env:2dim-abelian");
    CHECK_THROWS_AS(cohomology_dim(H, 4, 4), ValidationError);
    // Delta-bar is not weight-homogeneous in the normal-word bases of A and B.
    CHECK_THROWS_AS(CobarComplex(build_B(0), 3), RefusedError);
    CHECK_THROWS_AS(CobarComplex(build_A(1, 2, 0), 4), RefusedError);
  }

  TEST_CASE("coboundaries") {
    const HopfPresentation H = build_family("env:2dim-abelian");
    const Alphabet& a = H.alphabet();
    CHECK_FALSE(is_coboundary(H, parse_tensor("x@y", a), 2).has_value());
    const auto v = is_coboundary(H, parse_tensor("x@y + y@x", a), 2);
    REQUIRE(v.has_value());
    CHECK(*v == parse_element("-x*y", a));
    const auto sq = is_coboundary(H, parse_tensor("x@x", a), 2);
    REQUIRE(sq.has_value());
    CHECK(*sq == parse_element("-1/2*x^2", a));
    const auto zero = is_coboundary(H, TensorPoly{}, 2);
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());
    // d^2 (x (x) xy) = x (x) x (x) y + x (x) y (x) x - ... is nonzero.
    CHECK_THROWS_AS(is_coboundary(H, parse_tensor("x@x*y", a), 3), ValidationError);
    CHECK_THROWS_AS(is_coboundary(H, parse_tensor("x@y", a), 3), ValidationError);
    CHECK_THROWS_AS(is_coboundary(H, parse_tensor("1@x*y", a), 2), ValidationError);
  }

  TEST_CASE("obstruction classes") {
    const HopfPresentation H = build_family("env:2dim-abelian");
    const Alphabet& a = H.alphabet();
    const NCPoly x = parse_element("x", a), y = parse_element("y", a);
    CHECK(cocycle_class_of_obstruction(H, parse_tensor("2*x@y + y@x", a), x, y).multiple == Scalar(1));
    CHECK(cocycle_class_of_obstruction(H, parse_tensor("x@x", a), x, y).multiple == Scalar(0));
    CHECK(cocycle_class_of_obstruction(H, parse_tensor("-3*y@x", a), x, y).multiple == Scalar(3));
    CHECK(cocycle_class_of_obstruction(H, TensorPoly{}, x, y).multiple == Scalar(0));
    // x*x (x) y has weight 3 while u has weight 2.
    CHECK_FALSE(cocycle_class_of_obstruction(H, parse_tensor("x@y", a), parse_element("x*x", a), y)
                    .multiple.has_value());
  }
}
