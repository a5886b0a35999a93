#pragma once

#include <string>

#include "gdua/poly.hpp"
#include "gdua/scalar.hpp"

namespace gdua {

/*
 * Text surface for scalars and polynomials:
 *
 *   scalar   := term (('+' | '-') term)*
 *   term     := rational ('*' root)? | root
 *   root     := 'zeta(' nat ')' ('^' int)?
 *   rational := int ('/' nat)?
 *   poly     := pterm (('+' | '-') pterm)*
 *   pterm    := term ('*' 'h' ('^' nat)?)? | 'h' ('^' nat)?
 *
 * Whitespace is allowed between tokens. Errors are reported as SyntaxError
 * with the byte offset of the offending character.
 */

/// A single-term nonzero input canonicalizes to MonomialScalar; sums (and the
/// literal zero) stay CycloNumber even when the value happens to be monomial.
ScalarValue parse_scalar(const std::string& text);

Poly parse_poly(const std::string& text);

std::string format_rational(const Rational& q);
std::string format_cyclo(const CycloNumber& v);
std::string format_scalar(const ScalarValue& v);
/// Terms in descending h-exponent; format_poly(parse_poly(x)) is canonical.
std::string format_poly(const Poly& p);

}  // namespace gdua
