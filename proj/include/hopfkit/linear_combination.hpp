#pragma once

#include <map>
#include <utility>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

/// Sparse finite linear combination of keys with rational coefficients.
/// Zero coefficients are never stored, so equality of combinations is
/// equality of term maps.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Scalar>;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, const Scalar& coeff = 1) { add(key, coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  /// this += s * o
  void add_scaled(const LinearCombination& o, const Scalar& s) {
    if (s == 0) return;
    for (const auto& [k, c] : o.terms_) add(k, s * c);
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }

  bool operator==(const LinearCombination&) const = default;

 private:
  Terms terms_;
};

}  // namespace hopfkit
