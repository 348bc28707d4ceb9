#ifndef NPS_PARSE_HPP
#define NPS_PARSE_HPP

#include <string>
#include <string_view>

#include "nps/poly.hpp"

namespace nps {

// Expression grammar (whitespace insensitive):
//
//   expr   := ['-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := base [ '^' natural ]
//   base   := natural | variable | '(' expr ')'
//
// Variables are x and y for bivariate input, t for parametrizations.
// Coefficient literals are integers; they reduce into the field.

/// Parse a bivariate integer-coefficient expression in x, y.
Poly parse_poly(std::string_view text, const Field& field);

/// Parse a univariate expression in `var` (default t).
UniPoly parse_uniseries(std::string_view text, const Field& field, char var = 't');

/// Canonical text form: terms sorted by (total degree, alpha) ascending,
/// e.g. "x^2 + y^3". parse_poly(render_poly(f)) == f for exact f.
std::string render_poly(const Poly& f);

std::string render_uniseries(const UniPoly& u, char var = 't');

} // namespace nps

#endif
