#include "hopfkit/presentation.hpp"

#include <algorithm>
#include <set>

#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"

namespace hopfkit {

namespace {

void check_letters(const Word& w, const Alphabet& alphabet) {
  for (Letter l : w) {
    if (l >= alphabet.size()) throw ValidationError("letter index out of range");
  }
}

}  // namespace

Presentation::Presentation(Alphabet alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), order_(alphabet_) {
  std::set<Word> lhs_seen;
  for (const auto& rule : rules_) {
    check_letters(rule.lhs, alphabet_);
    const std::string where = "rule " + format_word(rule.lhs, alphabet_) + " -> " + format_element(rule.rhs, alphabet_);
    if (rule.lhs.empty()) throw ValidationError(where + ": empty left-hand side");
    if (!lhs_seen.insert(rule.lhs).second) throw ValidationError(where + ": duplicate left-hand side");
    if (rule.lhs.size() < 2 && !rule.rhs.is_zero()) {
      throw ValidationError(where + ": a single-letter left-hand side may only rewrite to 0");
    }
    for (const auto& [w, c] : rule.rhs) {
      check_letters(w, alphabet_);
      if (!order_.less(w, rule.lhs)) {
        throw ValidationError(where + ": right-hand word " + format_word(w, alphabet_) +
                              " is not below the left-hand side in the monomial order");
      }
    }
  }
}

int Presentation::max_rule_weight() const {
  int m = 0;
  for (const auto& r : rules_) m = std::max(m, order_.weight(r.lhs));
  return m;
}

int Presentation::default_confluence_bound() const { return 2 * max_rule_weight() + 2; }

}  // namespace hopfkit
