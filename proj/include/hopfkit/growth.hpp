#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hopfkit/automaton.hpp"
#include "hopfkit/rewrite.hpp"

namespace hopfkit {

struct GrowthDegree {
  enum class Kind { polynomial, exponential, inconclusive };

  Kind kind = Kind::inconclusive;
  int degree = 0;

  static GrowthDegree polynomial(int d) { return {Kind::polynomial, d}; }
  static GrowthDegree exponential() { return {Kind::exponential, 0}; }
  static GrowthDegree inconclusive() { return {Kind::inconclusive, 0}; }

  bool operator==(const GrowthDegree&) const = default;
};

std::string to_string(const GrowthDegree& g);

struct GrowthReport {
  Grading grading = Grading::length;
  int depth = 0;
  /// Number of normal words of each degree 0..depth in `grading`.
  std::vector<mpz_class> dims;
  std::vector<mpz_class> cumulative;
  GrowthDegree growth_degree;
  /// "automaton" when the automaton verdict stands (cross-checked).
  std::string method;
  GrowthClass automaton;
  /// Least d whose (d+1)-th difference of the length-graded cumulative
  /// count vanishes on the whole window.
  std::optional<int> finite_difference;
};

/// Least d such that the (d+1)-th finite difference of `cumulative` is
/// identically zero over the window, requiring at least two values of that
/// difference. nullopt when no such d fits in the window.
std::optional<int> finite_difference_degree(const std::vector<mpz_class>& cumulative);

/// Dimension sequence and growth degree. The degree is computed on length
/// grading regardless of `grading` (weight grading would give a
/// quasi-polynomial count); disagreement of the two methods or a window too
/// short to confirm yields INCONCLUSIVE. Refuses non-confluent input.
GrowthReport growth(const Presentation& pres, Grading grading, int depth);

}  // namespace hopfkit
