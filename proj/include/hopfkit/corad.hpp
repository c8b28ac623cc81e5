#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

/// Normal words of weight <= D, ascending in the monomial order (so the
/// unit comes first). Refuses non-confluent presentations.
std::vector<Word> truncated_basis(const HopfPresentation& H, int max_weight);

/// The weight window F_D together with the reduced comultiplication of its
/// augmentation-ideal basis w - eps(w), in pair coordinates u * dim + v.
class Truncation {
 public:
  Truncation(const HopfPresentation& H, int max_weight, Exec exec = Exec::parallel);

  const HopfPresentation& hopf() const noexcept { return *hopf_; }
  int max_weight() const noexcept { return max_weight_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t dim() const noexcept { return words_.size(); }
  std::optional<std::size_t> index_of(const Word& w) const;

  /// Coordinates of a reduced element; throws if it leaves the window.
  SparseVec coordinates(const NCPoly& p) const;
  /// Coordinates in pair space; throws if a leg leaves the window.
  SparseVec pair_coordinates(const TensorPoly& t) const;
  NCPoly element(const SparseVec& v) const;
  TensorPoly pair_element(const SparseVec& v) const;

  /// Ambient vector of the augmentation-ideal basis element w_i - eps(w_i).
  const SparseVec& augmented(std::size_t i) const { return augmented_[i]; }
  /// reduced_delta(w_i - eps(w_i)) in pair coordinates (index 0 is the unit).
  const SparseVec& reduced_delta_of(std::size_t i) const { return reduced_delta_[i]; }
  Exec exec() const noexcept { return exec_; }

 private:
  const HopfPresentation* hopf_;
  int max_weight_;
  Exec exec_;
  std::vector<Word> words_;
  std::map<Word, std::size_t> index_;
  std::vector<SparseVec> augmented_;
  std::vector<SparseVec> reduced_delta_;
};

/// Row-reduced basis of a subspace of the window F_D.
struct SubspaceBasis {
  std::vector<Word> ambient;
  std::vector<SparseVec> rows;

  std::size_t dim() const noexcept { return rows.size(); }
  NCPoly element(std::size_t i) const;
  std::vector<NCPoly> elements() const;
  bool contains(const NCPoly& p) const;
};

/// Throws RefusedError unless the only normal word w of F_D with
/// delta(w) = w (x) w is the unit.
void require_connected(const Truncation& T);

/// Kernel of p -> reduced_delta(p) on the augmentation ideal of F_D.
SubspaceBasis primitives(const HopfPresentation& H, int max_weight, Exec exec = Exec::parallel);
SubspaceBasis primitives(const Truncation& T);

struct CoradicalFiltration {
  int max_weight = 0;
  /// H_0 ⊆ H_1 ⊆ ... each intersected with F_D.
  std::vector<SubspaceBasis> levels;
  /// Levels m <= complete_level satisfy D >= m * (max generator weight).
  int complete_level = 0;
  std::vector<std::string> warnings;
};

/// H_0 = k1, H_m = k1 + {p in F_D^+ : reduced_delta(p) in H_{m-1} (x) H_{m-1}}.
CoradicalFiltration coradical_filtration(const HopfPresentation& H, int levels, int max_weight,
                                         Exec exec = Exec::parallel);
CoradicalFiltration coradical_filtration(const Truncation& T, int levels);

/// Associated graded of the coradical filtration within F_D.
struct GrTable {
  int max_weight = 0;
  int complete_degree = 0;
  /// Representatives of bases of H_n / H_{n-1}, n = 0..top.
  std::vector<std::vector<NCPoly>> representatives;
  std::vector<std::size_t> hilbert;
  /// constants[{i, a, j, b}] = coordinates of [r_i,a][r_j,b] in degree i+j.
  std::map<std::tuple<int, std::size_t, int, std::size_t>, std::vector<Scalar>> constants;
  bool commutative = true;
  bool associative = true;
  std::string commutativity_witness;
  /// Polynomial model: generators of degree 1 (= dim P) and new generators
  /// in degree 2 (dim gr(2) minus the rank of gr(1) * gr(1)).
  std::size_t degree_one_generators = 0;
  std::size_t degree_two_generators = 0;
  std::vector<std::size_t> polynomial_hilbert;
  /// Hilbert functions agree on degrees 0..complete_degree.
  bool hilbert_matches = false;
  /// Number of polynomial generators when the Hilbert function matches.
  std::optional<int> growth_degree;
  std::vector<std::string> warnings;
};

GrTable gr_structure(const HopfPresentation& H, int max_weight, Exec exec = Exec::parallel);

/// Hilbert function of k[v_1..v_n] with the given positive degrees.
std::vector<std::size_t> weighted_polynomial_hilbert(const std::vector<int>& degrees, int top);

struct FindZResult {
  /// Canonical solution of reduced_delta(z) = x (x) y: zero coordinates on
  /// the unit and on the pivots of the primitive basis. nullopt when the
  /// system has no solution in F_D.
  std::optional<NCPoly> z;
  /// Solutions of the homogeneous system (equals the primitive space).
  SubspaceBasis homogeneous_kernel;
};

/// x, y must be primitive and linearly independent.
FindZResult find_z(const HopfPresentation& H, const NCPoly& x, const NCPoly& y, int max_weight,
                   Exec exec = Exec::parallel);

/// Span of all reduced products of `gens` lying in F_D.
SubspaceBasis subalgebra_span(const HopfPresentation& H, const std::vector<NCPoly>& gens, int max_weight);

/// dim(A ∩ B) for subspaces of the same window.
std::size_t intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b);

struct DomainCheck {
  bool passed = true;
  std::size_t trials = 0;
  std::string witness;
};

/// Multiplies `trials` random pairs of nonzero elements of F_D and checks
/// every product is nonzero.
DomainCheck spot_check_domain(const HopfPresentation& H, int max_weight, std::size_t trials,
                              unsigned long long seed = 0x5eed);

}  // namespace hopfkit
