#pragma once

#include <map>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

/// Commutative polynomial over Q: exponent vector -> coefficient.
using Exponents = std::vector<int>;
using CommPoly = std::map<Exponents, Scalar>;

/// Reduced Groebner basis for the graded reverse lexicographic order.
std::vector<CommPoly> groebner_basis(std::vector<CommPoly> generators, std::size_t nvars);

/// Krull dimension of k[x_1..x_n]/I from a Groebner basis: the largest set
/// of variables containing the support of no leading monomial. Returns -1
/// for the zero ring.
int krull_dimension(const std::vector<CommPoly>& basis, std::size_t nvars);

}  // namespace hopfkit
