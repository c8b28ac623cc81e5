#include "hopfkit/word.hpp"

#include <algorithm>
#include <set>

#include "hopfkit/error.hpp"

namespace hopfkit {

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw ValidationError("empty generator name");
    if (g.weight < 1) throw ValidationError("generator '" + g.name + "' must have weight >= 1");
    if (!seen.insert(g.name).second) throw ValidationError("duplicate generator '" + g.name + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

int Alphabet::max_weight() const {
  int m = 0;
  for (const auto& g : generators_) m = std::max(m, g.weight);
  return m;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::has_factor_at(const Word& factor, std::size_t pos) const {
  if (pos + factor.size() > size()) return false;
  return std::equal(factor.begin(), factor.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> Word::find(const Word& factor) const {
  if (factor.size() > size()) return std::nullopt;
  for (std::size_t i = 0; i + factor.size() <= size(); ++i) {
    if (has_factor_at(factor, i)) return i;
  }
  return std::nullopt;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

int weight(const Word& w, const Alphabet& alphabet) {
  int total = 0;
  for (Letter l : w) total += alphabet.weight(l);
  return total;
}

MonomialOrder::MonomialOrder(const Alphabet& alphabet) {
  weights_.reserve(alphabet.size());
  for (const auto& g : alphabet.generators()) weights_.push_back(g.weight);
}

int MonomialOrder::weight(const Word& w) const {
  int total = 0;
  for (Letter l : w) total += weights_[l];
  return total;
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (auto c = weight(a) <=> weight(b); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += alphabet[w[i]].name;
  }
  return out;
}

}  // namespace hopfkit
