#pragma once

#include <string>
#include <string_view>

#include "hopfkit/poly.hpp"

namespace hopfkit {

/// Grammar (whitespace insignificant):
///   element  := ['+'|'-'] term (('+'|'-') term)*
///   term     := [rational ['*']] factor ('*' factor)*  |  rational
///   factor   := generator | '1' | '(' element ')' | factor '^' positive-int
///   rational := int ['/' positive-int]
///   tensor   := ['+'|'-'] tterm (('+'|'-') tterm)*
///   tterm    := term '@' term
/// Throws ParseError (with position) on syntax errors and unknown names.
NCPoly parse_element(std::string_view text, const Alphabet& alphabet);
TensorPoly parse_tensor(std::string_view text, const Alphabet& alphabet);

/// Canonical text, terms in descending monomial order. parse_element
/// inverts it exactly.
std::string format_element(const NCPoly& p, const Alphabet& alphabet);
std::string format_tensor(const TensorPoly& t, const Alphabet& alphabet);
std::string format_chain(const TensorChain& t, const Alphabet& alphabet);

}  // namespace hopfkit
