#include "hopfkit/poly.hpp"

#include <algorithm>

namespace hopfkit {

NCPoly constant(const Scalar& c) { return NCPoly(Word{}, c); }

NCPoly monomial(const Word& w, const Scalar& c) { return NCPoly(w, c); }

NCPoly generator(Letter l) { return NCPoly(Word::letter(l)); }

NCPoly combine(const std::vector<std::pair<Scalar, NCPoly>>& pairs) {
  NCPoly out;
  for (const auto& [c, p] : pairs) out.add_scaled(p, c);
  return out;
}

NCPoly multiply(const NCPoly& p, const NCPoly& q) {
  NCPoly out;
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) out.add(u + v, a * b);
  }
  return out;
}

NCPoly operator*(const NCPoly& p, const NCPoly& q) { return multiply(p, q); }

TensorPoly multiply(const TensorPoly& s, const TensorPoly& t) {
  TensorPoly out;
  for (const auto& [k1, a] : s) {
    for (const auto& [k2, b] : t) out.add({k1.first + k2.first, k1.second + k2.second}, a * b);
  }
  return out;
}

TensorPoly operator*(const TensorPoly& s, const TensorPoly& t) { return multiply(s, t); }

TensorPoly tensor(const NCPoly& a, const NCPoly& b) {
  TensorPoly out;
  for (const auto& [u, x] : a) {
    for (const auto& [v, y] : b) out.add({u, v}, x * y);
  }
  return out;
}

NCPoly multiply_legs(const TensorPoly& t) {
  NCPoly out;
  for (const auto& [k, c] : t) out.add(k.first + k.second, c);
  return out;
}

int max_weight(const NCPoly& p, const Alphabet& alphabet) {
  int m = -1;
  for (const auto& [w, c] : p) m = std::max(m, weight(w, alphabet));
  return m;
}

}  // namespace hopfkit
