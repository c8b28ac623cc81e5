#include "hopfkit/growth.hpp"

#include "hopfkit/error.hpp"

namespace hopfkit {

std::string to_string(const GrowthDegree& g) {
  switch (g.kind) {
    case GrowthDegree::Kind::polynomial:
      return std::to_string(g.degree);
    case GrowthDegree::Kind::exponential:
      return "EXPONENTIAL";
    case GrowthDegree::Kind::inconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

std::optional<int> finite_difference_degree(const std::vector<mpz_class>& cumulative) {
  std::vector<mpz_class> diff = cumulative;
  for (int d = 0;; ++d) {
    // diff currently holds the d-th difference; take one more.
    if (diff.size() < 3) return std::nullopt;
    std::vector<mpz_class> next(diff.size() - 1);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next[i] = diff[i + 1] - diff[i];
    diff = std::move(next);
    bool zero = true;
    for (const auto& v : diff) zero = zero && v == 0;
    if (zero) return d;
  }
}

namespace {

std::vector<mpz_class> count_by_weight(const NormalWordDFA& dfa, const Alphabet& alphabet, int depth) {
  // ways[w][s]: normal words of weight w ending in state s.
  std::vector<std::vector<mpz_class>> ways(static_cast<std::size_t>(depth) + 1,
                                           std::vector<mpz_class>(dfa.states(), 0));
  ways[0][static_cast<std::size_t>(dfa.start)] = 1;
  std::vector<mpz_class> out(static_cast<std::size_t>(depth) + 1, 0);
  for (int w = 0; w <= depth; ++w) {
    const auto wi = static_cast<std::size_t>(w);
    for (std::size_t s = 0; s < dfa.states(); ++s) {
      if (ways[wi][s] == 0) continue;
      out[wi] += ways[wi][s];
      for (std::size_t l = 0; l < dfa.letters; ++l) {
        const int t = dfa.next[s][l];
        const int nw = w + alphabet.weight(static_cast<Letter>(l));
        if (t == NormalWordDFA::kDead || nw > depth) continue;
        ways[static_cast<std::size_t>(nw)][static_cast<std::size_t>(t)] += ways[wi][s];
      }
    }
  }
  return out;
}

std::vector<mpz_class> prefix_sums(const std::vector<mpz_class>& v) {
  std::vector<mpz_class> out(v.size());
  mpz_class acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = acc += v[i];
  return out;
}

}  // namespace

GrowthReport growth(const Presentation& pres, Grading grading, int depth) {
  if (depth < 0) throw ValidationError("depth must be non-negative");
  require_confluent(pres);
  const NormalWordDFA dfa = build_dfa(pres);
  GrowthReport r;
  r.grading = grading;
  r.depth = depth;
  const auto by_length = count_by_length(dfa, depth);
  r.dims = grading == Grading::length ? by_length : count_by_weight(dfa, pres.alphabet(), depth);
  r.cumulative = prefix_sums(r.dims);
  r.automaton = analyze_growth(dfa);
  r.finite_difference = finite_difference_degree(prefix_sums(by_length));
  if (r.automaton.exponential && !r.finite_difference) {
    r.growth_degree = GrowthDegree::exponential();
    r.method = "automaton";
  } else if (!r.automaton.exponential && r.finite_difference == r.automaton.degree) {
    r.growth_degree = GrowthDegree::polynomial(r.automaton.degree);
    r.method = "automaton";
  } else {
    r.growth_degree = GrowthDegree::inconclusive();
    r.method = "unconfirmed";
  }
  return r;
}

}  // namespace hopfkit
