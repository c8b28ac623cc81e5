#include "hopfkit/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hopfkit/automaton.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"

namespace hopfkit {

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(b, a); }
};

struct Match {
  std::size_t pos;
  std::size_t rule;
};

std::optional<Match> leftmost_match(const Word& w, const std::vector<RewriteRule>& rules) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (w.has_factor_at(rules[r].lhs, pos)) return Match{pos, r};
    }
  }
  return std::nullopt;
}

NCPoly wrap(const Word& prefix, const NCPoly& p, const Word& suffix) {
  NCPoly out;
  for (const auto& [w, c] : p) out.add(prefix + w + suffix, c);
  return out;
}

}  // namespace

NCPoly reduce(const NCPoly& p, const Presentation& pres) {
  const auto& rules = pres.rules();
  std::map<Word, Scalar, Descending> work(Descending{&pres.order()});
  for (const auto& [w, c] : p) work.emplace(w, c);
  NCPoly out;
  // The largest word is popped first and every rewrite produces strictly
  // smaller words, so a word moved to `out` never reappears.
  while (!work.empty()) {
    auto it = work.begin();
    const Word w = it->first;
    const Scalar c = it->second;
    work.erase(it);
    auto match = leftmost_match(w, rules);
    if (!match) {
      out.add(w, c);
      continue;
    }
    const auto& rule = rules[match->rule];
    const Word prefix = w.subword(0, match->pos);
    const Word suffix = w.subword(match->pos + rule.lhs.size(), w.size() - match->pos - rule.lhs.size());
    for (const auto& [rw, rc] : rule.rhs) {
      const Scalar delta = c * rc;
      auto [jt, inserted] = work.try_emplace(prefix + rw + suffix, delta);
      if (!inserted) {
        jt->second += delta;
        if (jt->second == 0) work.erase(jt);
      }
    }
  }
  return out;
}

NCPoly reduce_word(const Word& w, const Presentation& pres) { return reduce(monomial(w), pres); }

bool is_normal(const Word& w, const Presentation& pres) { return !leftmost_match(w, pres.rules()); }

NCPoly multiply_reduced(const NCPoly& p, const NCPoly& q, const Presentation& pres) {
  return reduce(p * q, pres);
}

TensorPoly reduce_legs(const TensorPoly& t, const Presentation& pres) {
  std::map<Word, NCPoly> memo;
  auto nf = [&](const Word& w) -> const NCPoly& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, reduce_word(w, pres)).first;
    return it->second;
  };
  TensorPoly out;
  for (const auto& [k, c] : t) {
    const NCPoly& a = nf(k.first);
    const NCPoly& b = nf(k.second);
    for (const auto& [u, x] : a) {
      for (const auto& [v, y] : b) out.add({u, v}, c * x * y);
    }
  }
  return out;
}

TensorChain reduce_legs(const TensorChain& t, const Presentation& pres) {
  std::map<Word, NCPoly> memo;
  auto nf = [&](const Word& w) -> const NCPoly& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, reduce_word(w, pres)).first;
    return it->second;
  };
  TensorChain out;
  for (const auto& [legs, c] : t) {
    std::vector<std::pair<WordTuple, Scalar>> partial{{WordTuple{}, c}};
    for (const Word& leg : legs) {
      std::vector<std::pair<WordTuple, Scalar>> next;
      for (const auto& [prefix, pc] : partial) {
        for (const auto& [u, x] : nf(leg)) {
          WordTuple ext = prefix;
          ext.push_back(u);
          next.emplace_back(std::move(ext), pc * x);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [k, x] : partial) out.add(k, x);
  }
  return out;
}

std::vector<UnresolvedAmbiguity> check_confluence(const Presentation& pres, int max_weight) {
  const auto& rules = pres.rules();
  const auto& ord = pres.order();
  std::vector<UnresolvedAmbiguity> out;
  auto record = [&](AmbiguityKind kind, const Word& word, std::size_t r1, std::size_t r2, const NCPoly& first,
                    const NCPoly& second) {
    NCPoly a = reduce(first, pres);
    NCPoly b = reduce(second, pres);
    if (a == b) return;
    NCPoly defect = b - a;
    out.push_back({kind, word, r1, r2, std::move(a), std::move(b), std::move(defect)});
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lhs;
      // Overlaps: a proper suffix of l1 equals a proper prefix of l2.
      const std::size_t max_k = std::min(l1.size(), l2.size());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (!l1.has_factor_at(l2.subword(0, k), l1.size() - k)) continue;
        const Word a = l1.subword(0, l1.size() - k);
        const Word c = l2.subword(k, l2.size() - k);
        const Word word = a + l2;
        if (ord.weight(word) > max_weight) continue;
        record(AmbiguityKind::overlap, word, i, j, wrap(Word{}, rules[i].rhs, c), wrap(a, rules[j].rhs, Word{}));
      }
      // Inclusions: l2 is a factor of l1.
      if (i != j && l2.size() <= l1.size() && ord.weight(l1) <= max_weight) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (!l1.has_factor_at(l2, pos)) continue;
          const Word a = l1.subword(0, pos);
          const Word c = l1.subword(pos + l2.size(), l1.size() - pos - l2.size());
          record(AmbiguityKind::inclusion, l1, i, j, rules[i].rhs, wrap(a, rules[j].rhs, c));
        }
      }
    }
  }
  return out;
}

std::vector<UnresolvedAmbiguity> check_confluence(const Presentation& pres) {
  return check_confluence(pres, pres.default_confluence_bound());
}

bool is_confluent(const Presentation& pres) { return check_confluence(pres).empty(); }

std::string describe(const UnresolvedAmbiguity& a, const Alphabet& alphabet) {
  std::string s = a.kind == AmbiguityKind::overlap ? "overlap " : "inclusion ";
  s += format_word(a.word, alphabet);
  s += " (rules " + std::to_string(a.first_rule) + ", " + std::to_string(a.second_rule) + "): ";
  s += format_element(a.via_first, alphabet) + " vs " + format_element(a.via_second, alphabet);
  s += "; defect " + format_element(a.defect, alphabet);
  return s;
}

void require_confluent(const Presentation& pres) {
  const auto ambiguities = check_confluence(pres);
  if (ambiguities.empty()) return;
  std::string msg = "presentation is not confluent: ";
  msg += describe(ambiguities.front(), pres.alphabet());
  if (ambiguities.size() > 1) msg += " (+" + std::to_string(ambiguities.size() - 1) + " more)";
  throw RefusedError(msg);
}

std::vector<Word> normal_words(const Presentation& pres, Grading grading, int degree) {
  std::vector<Word> out;
  if (degree < 0) return out;
  const NormalWordDFA dfa = build_dfa(pres);
  const Alphabet& alphabet = pres.alphabet();
  std::vector<Letter> current;
  std::function<void(int, int)> extend = [&](int state, int used) {
    if (used == degree) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t l = 0; l < dfa.letters; ++l) {
      const int step = grading == Grading::length ? 1 : alphabet.weight(static_cast<Letter>(l));
      if (used + step > degree) continue;
      const int next = dfa.next[static_cast<std::size_t>(state)][l];
      if (next == NormalWordDFA::kDead) continue;
      current.push_back(static_cast<Letter>(l));
      extend(next, used + step);
      current.pop_back();
    }
  };
  extend(dfa.start, 0);
  const auto& ord = pres.order();
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return ord.less(a, b); });
  return out;
}

}  // namespace hopfkit
