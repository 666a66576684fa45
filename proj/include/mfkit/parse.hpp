#pragma once

#include <string_view>

#include "mfkit/polynomial.hpp"

namespace mfkit {

/// Parses the polynomial grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := ('+' | '-') factor | atom ('^' ['-'] integer)?
///   atom   := integer ['/' integer] | identifier | '(' expr ')'
/// The identifier zetaK denotes a primitive K-th root of unity. Negative
/// exponents are accepted only on nonzero constants.
///
/// `order` is the session's cyclotomic order; it must be positive.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, unsigned order = 1);

/// Parses a coefficient literal (a polynomial with no variables).
Cyclo parse_cyclo(std::string_view text);

/// Identifiers in order of first appearance; zetaK tokens are constants, not variables.
Ring variables_of(std::string_view text);

}  // namespace mfkit
