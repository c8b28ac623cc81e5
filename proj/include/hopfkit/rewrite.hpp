#pragma once

#include <string>
#include <vector>

#include "hopfkit/presentation.hpp"

namespace hopfkit {

/// Normal form under the rules: repeatedly rewrites the leftmost rule
/// occurrence in the largest reducible word. Unique when the presentation
/// is confluent; deterministic otherwise.
NCPoly reduce(const NCPoly& p, const Presentation& pres);
NCPoly reduce_word(const Word& w, const Presentation& pres);
bool is_normal(const Word& w, const Presentation& pres);

/// Reduced product reduce(p * q).
NCPoly multiply_reduced(const NCPoly& p, const NCPoly& q, const Presentation& pres);

TensorPoly reduce_legs(const TensorPoly& t, const Presentation& pres);
TensorChain reduce_legs(const TensorChain& t, const Presentation& pres);

enum class AmbiguityKind { overlap, inclusion };

/// An ambiguity whose two resolutions have different normal forms.
/// For an overlap w = a*b*c with a*b = lhs(first_rule), b*c = lhs(second_rule):
///   via_first  = reduce(rhs(first) * c),
///   via_second = reduce(a * rhs(second)),
///   defect     = via_second - via_first.
/// For an inclusion lhs(first) = a * lhs(second) * c:
///   via_first = reduce(rhs(first)), via_second = reduce(a * rhs(second) * c).
struct UnresolvedAmbiguity {
  AmbiguityKind kind = AmbiguityKind::overlap;
  Word word;
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
  NCPoly via_first;
  NCPoly via_second;
  NCPoly defect;
};

/// Resolves every overlap and inclusion ambiguity of weight <= max_weight.
/// An empty result means the presentation is confluent on all checked
/// ambiguities (Diamond Lemma).
std::vector<UnresolvedAmbiguity> check_confluence(const Presentation& pres, int max_weight);
std::vector<UnresolvedAmbiguity> check_confluence(const Presentation& pres);
bool is_confluent(const Presentation& pres);

/// Throws RefusedError listing the unresolved ambiguities when `pres`
/// is not confluent at the default bound.
void require_confluent(const Presentation& pres);

std::string describe(const UnresolvedAmbiguity& a, const Alphabet& alphabet);

enum class Grading { length, weight };

/// All normal words of the given degree, ascending in the monomial order.
std::vector<Word> normal_words(const Presentation& pres, Grading grading, int degree);

}  // namespace hopfkit
