#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

/// Finite-dimensional Lie algebra by structure constants
/// [e_i, e_j] = sum_k c_{ij}^k e_k. Antisymmetry and the Jacobi identity are
/// validated on construction.
class LieAlgebra {
 public:
  using Vector = std::vector<Scalar>;

  /// `brackets` lists [e_i, e_j] for i < j; missing pairs are zero.
  LieAlgebra(std::vector<std::string> names, const std::map<std::pair<std::size_t, std::size_t>, Vector>& brackets);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Vector& bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }
  Vector bracket(const Vector& a, const Vector& b) const;

  bool is_abelian() const;
  /// Dimension of [g, g].
  std::size_t derived_dim() const;
  bool is_solvable() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Vector>> table_;
};

/// Presets: "abelian", "heisenberg", "r3", "r3lambda" (optionally
/// "r3lambda(p/q)", default 2), "sl2", "e2", and the low-dimensional
/// "2dim" ([x,y]=y), "2dim-nonabelian", "2dim-abelian", "1dim".
LieAlgebra lie_preset(std::string_view name);
std::vector<std::string> lie_preset_names();
/// The six three-dimensional presets.
std::vector<std::string> lie_presets_3dim();

}  // namespace hopfkit
