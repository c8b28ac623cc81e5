#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "hopfkit/presentation.hpp"

namespace hopfkit {

/// Deterministic automaton accepting exactly the words that contain none
/// of a finite set of forbidden factors. Built by the Aho-Corasick failure
/// construction; states that complete a forbidden factor are removed, so a
/// transition of -1 means "rejected". Every remaining state accepts.
struct NormalWordDFA {
  static constexpr int kDead = -1;

  std::size_t letters = 0;
  int start = 0;
  /// next[state][letter]
  std::vector<std::vector<int>> next;

  std::size_t states() const noexcept { return next.size(); }
};

NormalWordDFA build_dfa(std::size_t letters, const std::vector<Word>& forbidden);
/// Forbidden factors are the rule lhs set.
NormalWordDFA build_dfa(const Presentation& pres);

bool accepts(const NormalWordDFA& dfa, const Word& w);

/// Number of accepted words of each length 0..max_length.
std::vector<mpz_class> count_by_length(const NormalWordDFA& dfa, int max_length);

/// Growth of the cumulative word count.
struct GrowthClass {
  bool exponential = false;
  /// Polynomial degree of the cumulative count (meaningful when !exponential).
  int degree = 0;

  bool operator==(const GrowthClass&) const = default;
};

/// Exact growth from the strongly connected components reachable from the
/// start state: exponential as soon as a nontrivial component is more than
/// a single cycle; otherwise the largest number of cyclic components along
/// a path of the condensation.
GrowthClass analyze_growth(const NormalWordDFA& dfa);

}  // namespace hopfkit
