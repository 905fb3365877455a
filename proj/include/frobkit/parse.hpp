#pragma once

#include <string>
#include <string_view>

#include "frobkit/poly.hpp"

namespace frobkit {

/// Parses the textual polynomial grammar:
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' natural]
///   atom   := variable | natural | '(' expr ')'
///
/// Integer literals are reduced mod p. Unknown variable names, negative or
/// malformed exponents and any other syntax problem raise ParseError with a
/// 1-based character position.
Polynomial parse_poly(const RingPtr& ring, std::string_view text);

/// Canonical rendering, inverse to parse_poly on canonical forms: terms in
/// ring order (descending), coefficients in [1, p), explicit '*' and '^',
/// "0" for the zero polynomial.
std::string format_poly(const Polynomial& f);

std::string format_monomial(const RingContext& ring, const Monomial& m);

}  // namespace frobkit
