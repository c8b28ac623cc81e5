#pragma once

#include <optional>
#include <vector>

#include "hopfkit/corad.hpp"

namespace hopfkit {

inline constexpr int kMaxCobarDegree = 3;

/// n-fold tensors of non-unit normal words with weights summing to w.
struct CobarPiece {
  int degree = 0;
  int weight = 0;
  std::vector<WordTuple> basis;
};

/// Matrix of the cobar differential
///   d^n = sum_{i=0}^{n-1} (-1)^{i+1} Id^{(x)i} (x) reduced_delta (x) Id^{(x)(n-i-1)}
/// from piece (n, w) to (n+1, w); one sparse column per domain tensor.
struct CobarDifferentialMatrix {
  CobarPiece domain;
  CobarPiece codomain;
  std::vector<SparseVec> columns;
};

/// Cobar complex of the coalgebra of H in internal weight <= max_weight.
/// Requires H confluent, connected, with counit zero on generators and a
/// weight-homogeneous reduced comultiplication.
class CobarComplex {
 public:
  CobarComplex(const HopfPresentation& H, int max_weight, Exec exec = Exec::parallel);

  const HopfPresentation& hopf() const noexcept { return truncation_.hopf(); }
  int max_weight() const noexcept { return truncation_.max_weight(); }

  CobarPiece piece(int n, int w) const;
  CobarDifferentialMatrix differential(int n, int w) const;
  std::size_t cohomology_dim(int n, int w) const;
  /// d^{n+1} o d^n vanishes on the (n, w) piece.
  bool square_zero(int n, int w) const;

  TensorChain apply_differential(const TensorChain& c) const;
  /// Preimage v with d^1(v) = t, canonical modulo the primitives; nullopt
  /// if t is not a coboundary. Rejects non-cocycles.
  std::optional<NCPoly> is_coboundary(const TensorPoly& t, int w) const;

 private:
  TensorChain reduced_delta_word(const Word& w) const;

  Truncation truncation_;
  Exec exec_;
  std::vector<std::vector<Word>> words_by_weight_;
};

CobarDifferentialMatrix cobar_differential(const HopfPresentation& H, int n, int w,
                                           Exec exec = Exec::parallel);
std::size_t cohomology_dim(const HopfPresentation& H, int n, int w, Exec exec = Exec::parallel);
std::optional<NCPoly> is_coboundary(const HopfPresentation& H, const TensorPoly& t, int w,
                                    Exec exec = Exec::parallel);

struct ObstructionClass {
  /// [u] = a [x (x) y] in H^2; nullopt when [u] is not a multiple.
  std::optional<Scalar> multiple;
};

/// Decides whether u - a (x (x) y) is a coboundary for some scalar a.
/// u must be a cocycle of a single internal weight.
ObstructionClass cocycle_class_of_obstruction(const HopfPresentation& H, const TensorPoly& u,
                                              const NCPoly& x, const NCPoly& y,
                                              Exec exec = Exec::parallel);

}  // namespace hopfkit
