#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/corad.hpp"
#include "hopfkit/growth.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/lie.hpp"

namespace hopfkit {

/// A(l1, l2, alpha): [X,Y] = 0, [Z,X] = l1 X + alpha Y, [Z,Y] = l2 Y with
/// X, Y primitive and delta(Z) = 1(x)Z + X(x)Y + Z(x)1, S(Z) = -Z + XY.
/// Requires alpha = 0 if l1 != l2, alpha in {0, 1} otherwise.
HopfPresentation build_A(const Scalar& l1, const Scalar& l2, const Scalar& alpha);

/// B(lambda): [X,Y] = Y, [Z,X] = -Z + lambda Y, [Z,Y] = Y^2/2, same
/// coalgebra and antipode as A.
HopfPresentation build_B(const Scalar& lambda);

/// B-type relations with [Z,Y] = Y^2/2 + a21 X + a22 Y. Only (0, 0) gives
/// a confluent presentation.
HopfPresentation build_B_perturbed(const Scalar& lambda, const Scalar& a21, const Scalar& a22);

/// U(g) with PBW-oriented rules e_i e_j -> e_j e_i + [e_i, e_j] (i > j),
/// generators primitive of weight 1, S = -id on generators.
HopfPresentation build_enveloping(const LieAlgebra& lie);

/// Tensor Hopf algebra on primitive generators (no relations).
HopfPresentation build_free(const std::vector<std::string>& names);

/// "A:l1,l2,alpha", "B:lambda", "Bpert:lambda,a21,a22", "env:<preset>",
/// "env:x,y,z;[x,y]=z;..." and "free:a,b,...".
HopfPresentation build_family(std::string_view spec);
std::vector<std::string> family_catalog();

/// Number of surviving variables (Krull dimension) of H/[H,H].
int abelianization_vars(const HopfPresentation& H);

/// Characteristic polynomial t^n + c_1 t^{n-1} + ... + c_n stored as
/// {1, c_1, ..., c_n}.
using CharPoly = std::vector<Scalar>;

CharPoly characteristic_polynomial(const std::vector<std::vector<Scalar>>& m);

struct Eigenvalue {
  Scalar value;
  int algebraic = 0;
  int geometric = 0;
};

struct AdProfile {
  std::vector<NCPoly> primitive_basis;
  /// Column j holds the coordinates of [z, p_j].
  std::vector<std::vector<Scalar>> matrix;
  CharPoly charpoly;
  std::vector<Eigenvalue> rational_eigenvalues;
  /// Independent eigenvectors over the algebraic closure: dim ker r(ad z)
  /// where r is the square-free part of the characteristic polynomial.
  int eigenvector_count = 0;
};

/// ad(z) on P(H) (computed in F_D). Rejects z whose ad leaves P(H).
AdProfile ad_profile(const HopfPresentation& H, const NCPoly& z, int max_weight = 4);

/// Whether {mu_i} = {a nu_i} for some nonzero a in the algebraic closure.
bool projectively_equivalent(const CharPoly& a, const CharPoly& b);

/// "t^2 - 2*t + 1".
std::string charpoly_text(const CharPoly& c);

struct InvariantProfile {
  std::size_t dim_P = 0;
  GrowthDegree gk;
  int abelianization_vars = 0;
  std::size_t primitive_derived_dim = 0;
  /// Present when dim P = 2 with P abelian and find_z succeeds.
  std::optional<NCPoly> z;
  std::optional<AdProfile> ad;
  std::string ad_note;
};

InvariantProfile invariant_profile(const HopfPresentation& H, int max_weight = 4);

struct Distinction {
  bool non_isomorphic = false;
  /// Separating invariant when non_isomorphic.
  std::string certificate;
};

/// One-sided: NON_ISOMORPHIC with a certificate, or INCONCLUSIVE.
Distinction distinguish(const InvariantProfile& a, const InvariantProfile& b);
Distinction distinguish(const HopfPresentation& a, const HopfPresentation& b);

struct SolvableCheck {
  /// New generator names and their images in the original algebra.
  std::vector<std::string> names;
  GeneratorImages substitution;
  /// Brackets recomputed by reduction, written in the new generators.
  std::vector<std::string> brackets;
  bool brackets_match = false;
  bool lie_is_solvable = false;
  MorphismReport morphism;

  bool passed() const { return brackets_match && lie_is_solvable && morphism.passed() && morphism.bijective_on_truncation(); }
};

/// Z' = Z - XY/2 turns B(lambda) into U(g), g solvable with
/// [X,Y] = Y, [Z',X] = -Z' + lambda Y, [Z',Y] = 0.
SolvableCheck solvable_presentation_of_B(const Scalar& lambda, int max_weight = 4);
/// A(l1, l2, alpha) is already U(g) for the solvable g its relations define.
SolvableCheck solvable_presentation_of_A(const Scalar& l1, const Scalar& l2, const Scalar& alpha,
                                         int max_weight = 4);

}  // namespace hopfkit
