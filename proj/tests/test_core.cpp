#include <doctest.h>

#include <random>

#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/scalar.hpp"
#include "hopfkit/word.hpp"

using namespace hopfkit;

namespace {

Alphabet xyz() { return Alphabet({{"X", 1}, {"Y", 1}, {"Z", 2}}); }

/// Dense Gauss-Jordan on a small matrix, written independently of SparseVec.
std::vector<std::vector<Scalar>> dense_rref(std::vector<std::vector<Scalar>> m) {
  std::size_t row = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Scalar inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Scalar f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

SparseVec sparse(const std::vector<Scalar>& v) {
  std::vector<SparseVec::Entry> e;
  for (std::size_t i = 0; i < v.size(); ++i) e.emplace_back(i, v[i]);
  return SparseVec::from_entries(e);
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("rationals parse and print canonically") {
    CHECK(parse_rational("6/4") == Scalar(3, 2));
    CHECK(parse_rational(" -3 ") == -3);
    CHECK(to_string(Scalar(-6) / 4) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
    CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  }

  TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet({{"X", 1}, {"X", 2}}), ValidationError);
    CHECK_THROWS_AS(Alphabet({{"X", 0}}), ValidationError);
    CHECK(xyz().max_weight() == 2);
    CHECK(xyz().find("Z") == Letter(2));
    CHECK_FALSE(xyz().find("W"));
  }

  TEST_CASE("monomial order is weight first, then left-to-right") {
    const MonomialOrder ord(xyz());
    CHECK(ord.less(Word{0, 1}, Word{1, 0}));
    CHECK(ord.less(Word{1, 1}, Word{2}));
    CHECK(ord.less(Word{2}, Word{0, 0, 0}));
    CHECK(ord.less(Word{0, 2}, Word{2, 0}));
    // Compatible with concatenation on both sides.
    CHECK(ord.less(Word{0, 0, 1}, Word{0, 1, 0}));
  }

  TEST_CASE("words") {
    const Word w{0, 1, 2, 1};
    CHECK(w.find(Word{1, 2}) == std::size_t(1));
    CHECK(w.find(Word{2, 0}) == std::nullopt);
    CHECK(w.subword(1, 2) == Word{1, 2});
    CHECK(format_word(w, xyz()) == "X*Y*Z*Y");
    CHECK(format_word(Word{}, xyz()) == "1");
  }

  TEST_CASE("element parsing") {
    const Alphabet a = xyz();
    const NCPoly p = parse_element("X*Z - 1/2*Y^2 + 3", a);
    CHECK(p.coefficient(Word{0, 2}) == 1);
    CHECK(p.coefficient(Word{1, 1}) == Scalar(-1, 2));
    CHECK(p.coefficient(Word{}) == 3);
    CHECK(parse_element("2(X+Y)", a) == parse_element("2*X + 2*Y", a));
    CHECK(parse_element("(X+Y)^2", a) == parse_element("X*X + X*Y + Y*X + Y*Y", a));
    CHECK(parse_element("X - X", a).is_zero());
    CHECK(parse_element("0", a).is_zero());
  }

  TEST_CASE("parse errors carry positions") {
    const Alphabet a = xyz();
    try {
      parse_element("X + W", a);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_element("X +", a), ParseError);
    CHECK_THROWS_AS(parse_element("(X", a), ParseError);
    CHECK_THROWS_AS(parse_element("X^0", a), ParseError);
  }

  TEST_CASE("format and parse round trip") {
    const Alphabet a = xyz();
    for (const char* text : {"X*Z - 1/2*Y*Y + 3", "-Z + X*Y", "0", "-1", "2/3*X*Y*Z - X"}) {
      const NCPoly p = parse_element(text, a);
      CHECK(parse_element(format_element(p, a), a) == p);
    }
    CHECK(format_element(parse_element("Y + X*Y - Z", a), a) == "-Z + X*Y + Y");
  }

  TEST_CASE("tensor parsing and formatting") {
    const Alphabet a = xyz();
    const TensorPoly t = parse_tensor("1@Z + X@Y + Z@1", a);
    CHECK(t.size() == 3);
    CHECK(t.coefficient({Word{0}, Word{1}}) == 1);
    CHECK(parse_tensor(format_tensor(t, a), a) == t);
    const TensorPoly u = parse_tensor("2@X - 1/2*X@1", a);
    CHECK(parse_tensor(format_tensor(u, a), a) == u);
    CHECK(parse_tensor("0", a).is_zero());
    CHECK_THROWS_AS(parse_tensor("X", a), ParseError);
  }

  TEST_CASE("sparse vectors") {
    SparseVec v = SparseVec::from_entries({{3, Scalar(1)}, {1, Scalar(2)}, {3, Scalar(-1)}, {0, Scalar(0)}});
    CHECK(v.nonzeros() == 1);
    CHECK(v.leading() == 1);
    v.axpy(2, SparseVec::unit(1, -1));
    CHECK(v.is_zero());
  }

  TEST_CASE("serial and parallel rref agree with a dense oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-2, 2);
    std::uniform_int_distribution<int> dim(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
      const int r = dim(rng), c = dim(rng);
      std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(r), std::vector<Scalar>(static_cast<std::size_t>(c)));
      for (auto& row : m) {
        for (auto& x : row) x = val(rng) * (val(rng) == 0 ? 0 : 1);
      }
      std::vector<SparseVec> rows;
      for (const auto& row : m) rows.push_back(sparse(row));
      std::vector<SparseVec> expected;
      for (const auto& row : dense_rref(m)) expected.push_back(sparse(row));
      CHECK(rref_serial(rows) == expected);
      CHECK(rref_parallel(rows) == expected);
    }
  }

  TEST_CASE("kernel and span solver") {
    // v0 = (1,1), v1 = (2,2), v2 = (0,1): kernel spanned by (-2,1,0).
    std::vector<SparseVec> images{sparse({1, 1}), sparse({2, 2}), sparse({0, 1})};
    for (Exec e : {Exec::serial, Exec::parallel}) {
      const auto k = kernel(images, e);
      REQUIRE(k.size() == 1);
      CHECK(k[0] == sparse({1, Scalar(-1, 2), 0}));
      const SpanSolver s(images, e);
      CHECK(s.rank() == 2);
      auto sol = s.solve(sparse({3, 5}));
      REQUIRE(sol);
      SparseVec back;
      for (std::size_t i = 0; i < images.size(); ++i) back.axpy((*sol)[i], images[i]);
      CHECK(back == sparse({3, 5}));
      CHECK_FALSE(s.solve(SparseVec::unit(2)));
    }
  }
}
