#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

using Letter = std::uint16_t;

struct Generator {
  std::string name;
  int weight = 1;

  bool operator==(const Generator&) const = default;
};

/// Ordered generator list. The list order is the precedence used by the
/// monomial order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> generators);

  std::size_t size() const noexcept { return generators_.size(); }
  const Generator& operator[](Letter l) const { return generators_[l]; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }

  std::optional<Letter> find(std::string_view name) const;
  int weight(Letter l) const { return generators_[l].weight; }
  int max_weight() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Generator> generators_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word unit() { return Word(); }
  static Word letter(Letter l) { return Word({l}); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  bool has_factor_at(const Word& factor, std::size_t pos) const;
  /// Leftmost occurrence of `factor`, if any.
  std::optional<std::size_t> find(const Word& factor) const;

  friend Word operator+(const Word& a, const Word& b);

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

int weight(const Word& w, const Alphabet& alphabet);

/// Weight-graded lexicographic order: total weight first, then left to right
/// by generator precedence. Compatible with concatenation.
class MonomialOrder {
 public:
  explicit MonomialOrder(const Alphabet& alphabet);

  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  int weight(const Word& w) const;

 private:
  std::vector<int> weights_;
};

/// Generator names joined by '*', or "1" for the empty word.
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace hopfkit
