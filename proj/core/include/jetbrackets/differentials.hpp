#pragma once

#include "jetbrackets/exterior.hpp"

namespace jetbrackets {

/// Vertical differential of a function: the fiber-direction gradient
/// sum over jet coordinates u^alpha_I of (df/du^alpha_I) du^alpha_I.
Form d_vertical(const Expr& f);

/// Vertical differential on forms. Acts on coefficients only and kills
/// both kinds of basis covectors; anti-derivation of degree +1 that raises
/// the fiber degree by one and squares to zero.
Form d_vertical(const Form& w);

/// Horizontal differential of a function: sum_i D_i(f) dx^i with D_i the
/// total derivative.
Form d_horizontal(const Expr& f);

/// Horizontal differential on forms: anti-derivation of degree +1 that
/// raises the base degree by one, with coefficients taken through the total
/// derivative, dx^i closed, and
///   dH(du^alpha_I) = sum_i dx^i ^ du^alpha_{I + e_i}.
/// Squares to zero and anticommutes with the vertical differential. Raising
/// a jet order past the context cap throws OrderOverflow.
Form d_horizontal(const Form& w);

} // namespace jetbrackets
