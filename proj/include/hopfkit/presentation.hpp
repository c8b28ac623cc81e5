#pragma once

#include <vector>

#include "hopfkit/poly.hpp"

namespace hopfkit {

/// Oriented relation lhs -> rhs.
struct RewriteRule {
  Word lhs;
  NCPoly rhs;

  bool operator==(const RewriteRule&) const = default;
};

/// Generators plus oriented rewrite rules. Construction validates that
/// every rule decreases in the monomial order (which forces termination and
/// the filtered condition weight(lhs) >= weight(rhs words)), that lhs are
/// pairwise distinct, and that a length-one lhs only rewrites to 0.
class Presentation {
 public:
  Presentation() = default;
  Presentation(Alphabet alphabet, std::vector<RewriteRule> rules);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  const MonomialOrder& order() const noexcept { return order_; }

  int max_rule_weight() const;
  /// 2 * max rule weight + 2: covers every overlap of two rule lhs.
  int default_confluence_bound() const;

  bool operator==(const Presentation& o) const {
    return alphabet_ == o.alphabet_ && rules_ == o.rules_;
  }

 private:
  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  MonomialOrder order_{Alphabet{}};
};

}  // namespace hopfkit
