#pragma once

#include <string>

#include "jetbrackets/context.hpp"
#include "jetbrackets/expr.hpp"
#include "jetbrackets/exterior.hpp"

namespace jetbrackets {

/// Recursive-descent readers for the surface grammar. Whitespace is
/// insignificant; multiindices are written as repeated base-index lists
/// (u[2;1,1] is the second fiber coordinate differentiated twice along x1).
///
///   expr    := ["+"|"-"] term (("+"|"-") term)*
///   term    := factor (("*"|"/") factor | factor)*     juxtaposition multiplies
///   factor  := primary ("^" nat)*
///   primary := rational | coord | opaque | "(" expr ")" | "-" factor
///   coord   := "x" nat | "u" "[" nat (";" idxlist)? "]" | "u"    (bare u only when m = 1)
///   opaque  := name "(" "x" (";" idxlist)? ")"       idxlist names formal derivatives
///   form    := ["+"|"-"] fterm (("+"|"-") fterm)*
///   fterm   := expr | expr? cov ("^" cov)*           a bare expr is a degree-0 term
///   cov     := "dx" nat | "du" "[" nat (";" idxlist)? "]"
///   idxlist := nat ("," nat)*
///
/// Multivector source uses "Dx"/"Du" in place of "dx"/"du". Division demands
/// a constant divisor. Rationals may be written "p/q". ParseError offsets
/// are 1-based byte positions into the input.
Expr parse_expr(const std::string& text, const CtxPtr& ctx);
Form parse_form(const std::string& text, const CtxPtr& ctx);
Multivector parse_multivector(const std::string& text, const CtxPtr& ctx);

} // namespace jetbrackets
