#pragma once

#include <string>
#include <string_view>

#include "diq/polynomial.hpp"
#include "diq/ring.hpp"

namespace diq {

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' natural)?
///   atom   := rational | identifier | '(' expr ')'
/// with rational := natural ('/' natural)?. Whitespace is ignored.
/// Throws ParseError (with the offending offset) on syntax errors and on
/// variables not in `ring`.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Canonical text: terms in descending order of the polynomial's order,
/// `*` between factors, unit coefficients omitted, "0" for zero.
std::string format_poly(const Polynomial& p);

std::string format_coeff(const Coeff& c);

}  // namespace diq
