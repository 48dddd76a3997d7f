#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "jetbrackets/expr.hpp"
#include "jetbrackets/exterior.hpp"
#include "jetbrackets/hamiltonian.hpp"

namespace jetbrackets {

/// Output formats. Text for expressions, forms, and multivectors is the
/// surface grammar, so parse(render(v, Text)) == v. Text for equation
/// systems is the display notation (u^1_{11} + u^1 = 0). Latex matches the
/// display notation with braced indices. Json is deterministic: object keys
/// are sorted and rationals are exact "p/q" strings.
enum class RenderFormat { Text, Latex, Json };

/// Accepts "text", "latex", "json"; throws ConfigError otherwise.
RenderFormat render_format_from_string(const std::string& name);
std::string to_string(RenderFormat format);

std::string render(const Expr& e, RenderFormat format);
std::string render(const Form& w, RenderFormat format);
std::string render(const Multivector& X, RenderFormat format);

/// Equation systems render one equation per line. Text and latex print
/// "lhs = 0" with the normalized left-hand side; when the system has more
/// than one equation, text lines carry a "dx1^dx2^dx3: " monomial label.
std::string render(const PDESystem& sys, RenderFormat format);

/// The json document behind render(sys, Json):
///   { "equations": [ { "dx_monomial": [indices],
///                      "lhs": [ { "coeff": "p/q",
///                                 "monomial": [[generator, power], ...] } ] } ],
///     "metadata": { "n", "m", "phi", "degrees", "scales" } }
/// Generators are surface-grammar strings; lhs terms are ordered leading
/// monomial first; "scales" holds each equation's original leading
/// coefficient.
nlohmann::json pdesystem_to_json(const PDESystem& sys);

} // namespace jetbrackets
