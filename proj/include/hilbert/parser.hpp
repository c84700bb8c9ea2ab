#ifndef HILBERT_PARSER_HPP
#define HILBERT_PARSER_HPP

#include <string_view>
#include <vector>

#include "hilbert/polynomial.hpp"

namespace hilbert {

/// Parses "5*x^3 - 2*x + 1", "1/2 x^2 + 1/2 x", ... into a Polynomial.
///
///   expr  := term (('+'|'-') term)*
///   term  := coeff? ('*'? 'x' ('^' uint)?)?
///   coeff := int | int '/' uint
///
/// Whitespace is insignificant; at least one term is required; duplicate
/// powers are summed. Throws SyntaxError (with byte offset) or
/// ZeroDenominator.
Polynomial parse_poly(std::string_view text);

/// Parses monomial generators like "x1^2, x1*x2" into exponent vectors of
/// length n_vars. Variables are x1..xn. An empty (or all-blank) string
/// yields no generators. Throws SyntaxError.
std::vector<std::vector<unsigned>> parse_generators(std::string_view text, unsigned n_vars);

}  // namespace hilbert

#endif
