#ifndef LINKFOL_PARSE_HPP
#define LINKFOL_PARSE_HPP

#include <map>
#include <string>

#include "linkfol/forms.hpp"

namespace linkfol {

/// Named constants usable inside polynomial and form expressions.
using ConstantEnv = std::map<std::string, QuadraticNumber>;

/// Grammar (whitespace insensitive):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-'|'+')* base ('^' nonneg-integer)?
///   base   := integer | 'x' | 'y' | 'dx' | 'dy' | 'sqrt' '(' integer ')'
///           | named constant | '(' expr ')'
/// '/' requires a constant divisor. 'dx'/'dy' are only legal in forms, each
/// monomial of which must be linear in them.
Poly2 parse_poly(const std::string& text, const ConstantEnv& env = {}, std::string chart = "");
OneForm parse_form(const std::string& text, const ConstantEnv& env = {}, std::string chart = "");

/// Exact number literals: "a", "a/b", "(a+b*sqrt(d))/c" and any other
/// constant expression in the grammar above.
QuadraticNumber parse_quadratic(const std::string& text);
Rational parse_rational(const std::string& text);

} // namespace linkfol

#endif
