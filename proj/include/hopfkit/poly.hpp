#pragma once

#include <utility>
#include <vector>

#include "hopfkit/linear_combination.hpp"
#include "hopfkit/word.hpp"

namespace hopfkit {

/// Element of the free algebra: sparse map Word -> Scalar.
using NCPoly = LinearCombination<Word>;
/// Element of the tensor square: sparse map (Word, Word) -> Scalar.
using WordPair = std::pair<Word, Word>;
using TensorPoly = LinearCombination<WordPair>;
/// n-fold tensors of words (triple tensors, cobar chains).
using WordTuple = std::vector<Word>;
using TensorChain = LinearCombination<WordTuple>;

NCPoly constant(const Scalar& c);
NCPoly monomial(const Word& w, const Scalar& c = 1);
NCPoly generator(Letter l);

/// Sum of c_i * p_i with zero terms dropped.
NCPoly combine(const std::vector<std::pair<Scalar, NCPoly>>& pairs);

/// Free (unreduced) product: bilinear extension of concatenation.
NCPoly multiply(const NCPoly& p, const NCPoly& q);
NCPoly operator*(const NCPoly& p, const NCPoly& q);

/// (a (x) b)(c (x) d) = ac (x) bd, no reduction.
TensorPoly multiply(const TensorPoly& s, const TensorPoly& t);
TensorPoly operator*(const TensorPoly& s, const TensorPoly& t);

TensorPoly tensor(const NCPoly& a, const NCPoly& b);

/// Multiplication map m: H (x) H -> H in the free algebra.
NCPoly multiply_legs(const TensorPoly& t);

/// Largest total weight among the words of p (-1 for p = 0).
int max_weight(const NCPoly& p, const Alphabet& alphabet);

}  // namespace hopfkit
