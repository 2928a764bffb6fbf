#pragma once

#include "qlt/algebra.hpp"
#include "qlt/opexpr.hpp"

#include <string>

namespace qlt {

// Parses the ASCII expression grammar:
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := atom ('^' signed-int)?
//   atom    := generator | 'i' | 'hbar' | 'c' | 'm' | integer | '(' expr ')'
//            | 'comm(' expr ',' expr ')' | 'acomm(' expr ',' expr ')'
//            | 'sym(' expr ',' expr ')'
//
// Generators come from the algebra ('t','x','p','H' for rel; 'x','p' for nonrel).
// '/' binds like '*' and requires an invertible scalar right operand;
// operator division is rejected. Negative exponents are only allowed on
// invertible generators and invertible scalars.
//
// The returned expression is formal (unnormalized), except that comm/acomm/sym
// subexpressions are normalized by construction. Throws parse_error with the
// byte offset of the offending token.
OpExpr parse(const std::string& text, const AlgebraSpec& spec);

// Deterministic canonical printer. Terms appear in canonical word order with
// exact rational coefficients and unit monomials, e.g. "x*p - i*hbar".
// The empty expression renders as "0". For normalized e, parse(render(e)) == e.
std::string render(const OpExpr& e, const AlgebraSpec& spec);

} // namespace qlt
