#include <doctest.h>

#include "hopfkit/zoo.hpp"
#include "property_support.hpp"

using namespace hopfkit;
using namespace hopfkit::testing;

namespace {

const std::vector<std::string>& families() {
  static const std::vector<std::string> f{"A:0,0,0", "A:0,0,1", "A:1,1,1", "A:1,2,0", "B:0",
                                          "B:1",     "B:-3/2",  "env:sl2", "env:heisenberg", "env:e2"};
  return f;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("reduce is idempotent and multiplicative") {
    for (const auto& f : families()) {
      CAPTURE(f);
      const PropertyResult r = reduce_properties(build_family(f), 500, 11);
      CAPTURE(r.witness);
      CHECK(r.samples == 500);
      CHECK(r.failures == 0);
    }
  }

  TEST_CASE("counit is multiplicative") {
    for (const auto& f : families()) {
      CAPTURE(f);
      const PropertyResult r = counit_properties(build_family(f), 500, 12);
      CAPTURE(r.witness);
      CHECK(r.failures == 0);
    }
  }

  TEST_CASE("delta is multiplicative on reduced products") {
    for (const auto& f : {"A:1,1,1", "B:1", "env:sl2"}) {
      CAPTURE(f);
      const HopfPresentation H = build_family(f);
      std::mt19937_64 rng(13);
      for (int i = 0; i < 100; ++i) {
        const NCPoly a = random_element(rng, H.alphabet()), b = random_element(rng, H.alphabet());
        CHECK(delta(reduce(a * b, H.presentation()), H) ==
              reduce_legs(delta(a, H) * delta(b, H), H.presentation()));
      }
    }
  }

  TEST_CASE("convolution identity on F_5") {
    for (const auto& f : families()) {
      CAPTURE(f);
      const PropertyResult r = convolution_identity(build_family(f), 5);
      CAPTURE(r.witness);
      CHECK(r.samples > 0);
      CHECK(r.failures == 0);
    }
  }

  TEST_CASE("domain spot check") {
    for (const auto& f : families()) {
      CAPTURE(f);
      const DomainCheck d = spot_check_domain(build_family(f), 4, 200, 14);
      CAPTURE(d.witness);
      CHECK(d.trials == 200);
      CHECK(d.passed);
    }
  }

  TEST_CASE("a broken antipode fails the convolution identity") {
    const HopfPresentation B = build_B(0);
    std::vector<TensorPoly> d;
    std::vector<Scalar> e;
    std::vector<NCPoly> s;
    for (Letter g = 0; g < 3; ++g) {
      d.push_back(B.delta_of(g));
      e.push_back(B.epsilon_of(g));
      s.push_back(B.antipode_of(g));
    }
    s[2] = parse_element("-Z", B.alphabet());
    const HopfPresentation bad(B.presentation(), d, e, s);
    CHECK(convolution_identity(bad, 3).failures > 0);
  }
}
