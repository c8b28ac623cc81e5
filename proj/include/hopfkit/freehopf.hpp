#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "hopfkit/automaton.hpp"
#include "hopfkit/scalar.hpp"
#include "hopfkit/word.hpp"

namespace hopfkit {

/// One term c * left (x) right of a comultiplication value. Names refer to
/// "1", a group-like or an extra basis element.
struct CoalgebraTerm {
  Scalar coeff;
  std::string left;
  std::string right;
};

/// Finite-dimensional pointed coalgebra with basis {1} ∪ G ∪ B. The unit
/// group-like "1" is identified with the unit of the free Hopf algebra and
/// contributes no letter. Construction validates coassociativity and the
/// counit axiom on the whole basis.
class PointedCoalgebraData {
 public:
  PointedCoalgebraData(std::vector<std::string> grouplikes, std::vector<Generator> extras,
                       std::map<std::string, std::vector<CoalgebraTerm>> delta,
                       std::map<std::string, Scalar> counit);

  const std::vector<std::string>& grouplikes() const noexcept { return grouplikes_; }
  const std::vector<Generator>& extras() const noexcept { return extras_; }

  /// Group-likes only, no extras: the coalgebra kG.
  static PointedCoalgebraData group_algebra(std::vector<std::string> grouplikes);
  /// Connected: extras all primitive.
  static PointedCoalgebraData primitive_extras(std::vector<Generator> extras);

 private:
  std::vector<std::string> grouplikes_;
  std::vector<Generator> extras_;
  std::map<std::string, std::vector<CoalgebraTerm>> delta_;
  std::map<std::string, Scalar> counit_;
};

/// Letters g_1.., g_1^-1.., then the extras. Forbidden: (g, g^-1), (g^-1, g).
struct ReducedWordLanguage {
  std::vector<std::string> letter_names;
  std::vector<int> letter_weights;
  std::vector<Word> forbidden;
  std::size_t grouplike_count = 0;

  std::size_t letters() const noexcept { return letter_names.size(); }
};

ReducedWordLanguage reduced_word_language(const PointedCoalgebraData& data);

struct ReducedWordCount {
  mpz_class count;
  /// Only filled when requested.
  std::vector<Word> words;
};

/// Reduced sequences of length n, counted with the transfer matrix on
/// "last letter" states.
ReducedWordCount reduced_words(const PointedCoalgebraData& data, int length, bool materialize = false);

struct GradedDim {
  bool infinite = false;
  mpz_class value;
};

/// Dimension of the weight-w piece (group-likes have weight 0).
GradedDim graded_dims(const PointedCoalgebraData& data, int weight);

GrowthClass growth_class(const PointedCoalgebraData& data);

}  // namespace hopfkit
