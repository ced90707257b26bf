#pragma once

/**
 * Text form of polynomials.
 *
 * Grammar (whitespace insignificant):
 *   expr  := term (('+' | '-') term)*
 *   term  := unary ('*' unary)*
 *   unary := ('+' | '-') unary | power
 *   power := atom ('^' integer)?
 *   atom  := integer ('/' integer)? | variable | '(' expr ')'
 *
 * Implicit multiplication is rejected ("2*z^2", never "2z^2").
 */

#include <string>
#include <string_view>

#include "amoh/bivar.hpp"
#include "amoh/jacobian.hpp"
#include "amoh/rational_function.hpp"

namespace amoh {

/// Largest exponent and result degree accepted by the parsers.
inline constexpr std::size_t kMaxParsedDegree = 4096;

/// Throws ParseError with the offending position and the expected tokens.
QPoly parse_poly(std::string_view text, char variable = 'z');

/// Polynomial in x and y, returned as a formal expression with X = x, Y = y.
BivarExpr<Rational> parse_bivariate(std::string_view text);

std::string render(const QPoly& p, std::string_view variable = "z");
std::string render(const BivarExpr<Rational>& e, std::string_view x = "X", std::string_view y = "Y");
std::string render(const RationalFunction& r, std::string_view variable = "x");
std::string render(const BiPoly& p);
std::string render(const BivarExpr<RationalFunction>& e);

}  // namespace amoh
