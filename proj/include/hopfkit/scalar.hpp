#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfkit {

/// Exact rational scalar. gmpxx keeps results of arithmetic canonical
/// (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Parses "p" or "p/q" (q > 0). Throws ValidationError on malformed input.
Scalar parse_rational(std::string_view text);

std::string to_string(const Scalar& s);

}  // namespace hopfkit
