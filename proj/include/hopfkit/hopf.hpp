#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/presentation.hpp"
#include "hopfkit/rewrite.hpp"

namespace hopfkit {

/// Presentation plus the values of comultiplication, counit and antipode on
/// generators. Construction validates shapes and the filtered conditions:
/// every term u (x) v of delta(g) has weight(u) + weight(v) <= weight(g), and
/// the antipode of g has weight <= weight(g).
class HopfPresentation {
 public:
  HopfPresentation() = default;
  HopfPresentation(Presentation pres, std::vector<TensorPoly> delta, std::vector<Scalar> epsilon,
                   std::vector<NCPoly> antipode);

  const Presentation& presentation() const noexcept { return pres_; }
  const Alphabet& alphabet() const noexcept { return pres_.alphabet(); }
  const TensorPoly& delta_of(Letter g) const { return delta_[g]; }
  const Scalar& epsilon_of(Letter g) const { return epsilon_[g]; }
  const NCPoly& antipode_of(Letter g) const { return antipode_[g]; }

  bool operator==(const HopfPresentation&) const = default;

 private:
  Presentation pres_;
  std::vector<TensorPoly> delta_;
  std::vector<Scalar> epsilon_;
  std::vector<NCPoly> antipode_;
};

/// Multiplicative extension of delta. The words of p are not reduced
/// first; both tensor legs of the result are in normal form.
TensorPoly delta(const NCPoly& p, const HopfPresentation& H);
/// delta(p) - 1 (x) p - p (x) 1. Rejects p with counit != 0.
TensorPoly reduced_delta(const NCPoly& p, const HopfPresentation& H);
Scalar counit(const NCPoly& p, const HopfPresentation& H);
/// Anti-multiplicative extension, reduced.
NCPoly antipode(const NCPoly& p, const HopfPresentation& H);

/// (delta (x) id) t and (id (x) delta) t, legs reduced.
TensorChain delta_left(const TensorPoly& t, const HopfPresentation& H);
TensorChain delta_right(const TensorPoly& t, const HopfPresentation& H);

enum class Status { pass, fail, refused };
std::string to_string(Status s);

struct CheckItem {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  /// Filled when the check was refused for lack of confluence.
  std::vector<UnresolvedAmbiguity> ambiguities;

  bool passed() const;
  const CheckItem* first_failure() const;
};

/// Delta well defined on every rule, coassociativity and counit axioms on
/// generators, counit killing every rule. Refused on non-confluent input.
CheckReport check_bialgebra(const HopfPresentation& H);
/// Convolution identities on generators and S respecting every rule.
CheckReport check_antipode(const HopfPresentation& H);
/// Confluence (default bound) + bialgebra + antipode.
CheckReport check_hopf(const HopfPresentation& H);

using GeneratorImages = std::vector<NCPoly>;

/// Image of p under the algebra map sending generator i of the source to
/// images[i], reduced in `target`.
NCPoly apply_morphism(const NCPoly& p, const GeneratorImages& images, const Presentation& target);

struct MorphismReport {
  CheckReport checks;
  bool surjective_on_truncation = false;
  bool injective_on_truncation = false;
  int max_weight = 0;

  bool passed() const { return checks.passed() && surjective_on_truncation; }
  bool bijective_on_truncation() const { return surjective_on_truncation && injective_on_truncation; }
};

/// Relations of the source hold for the images, and the truncation
/// comparison: images of the source normal words of weight <= max_weight
/// span the target's normal words of weight <= max_weight (surjective), and
/// are linearly independent (injective).
MorphismReport check_algebra_morphism(const GeneratorImages& images, const Presentation& source,
                                      const Presentation& target, int max_weight);
/// Algebra morphism checks plus delta, counit and antipode intertwined on
/// generators.
MorphismReport check_hopf_morphism(const GeneratorImages& images, const HopfPresentation& source,
                                   const HopfPresentation& target, int max_weight);

}  // namespace hopfkit
