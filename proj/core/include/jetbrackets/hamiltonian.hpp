#pragma once

#include "jetbrackets/differentials.hpp"
#include "jetbrackets/poisson.hpp"

namespace jetbrackets {

/// A complete evolution problem: potential chi (a function), observable
/// phi, attested Poisson structure, and the metric the musical maps use.
/// All members share one context.
class HamiltonianProblem {
public:
  static HamiltonianProblem create(Expr chi, Form phi, PoissonStructure P, Metric g);

  const CtxPtr& ctx() const { return P_.ctx(); }
  const Expr& chi() const { return chi_; }
  const Form& phi() const { return phi_; }
  const PoissonStructure& poisson() const { return P_; }
  const Metric& metric() const { return g_; }

private:
  HamiltonianProblem(Expr chi, Form phi, PoissonStructure P, Metric g)
      : chi_(std::move(chi)), phi_(std::move(phi)), P_(std::move(P)), g_(std::move(g)) {}

  Expr chi_;
  Form phi_;
  PoissonStructure P_;
  Metric g_;
};

/// The evolution form d_horizontal(phi) - {chi, phi}. Every homogeneous
/// component has degree deg(phi)+1 for the standard degree-3 Poisson
/// multivector.
Form evolution_form(const HamiltonianProblem& prob);

/// Pullback along the prolongation of a generic section: an algebra
/// homomorphism fixing coefficients, dx^i -> dx^i,
/// du^alpha_I -> sum_i u^alpha_{I+e_i} dx^i. The output is purely
/// horizontal; jet coordinates in it read as derivatives of the unknown
/// fields. Throws OrderOverflow past the context cap.
Form jet_pullback(const Form& alpha);

/// One emitted equation: the coefficient of a dx-wedge monomial, read as
/// lhs = 0. lhs is normalized so its leading canonical monomial has
/// coefficient +1; `scale` is that original leading coefficient.
struct PDEEquation {
  std::vector<int> dx_monomial; // strictly increasing base indices
  Expr lhs;
  Rational scale;
};

/// The equations read off a horizontal form, one per surviving dx-wedge
/// monomial, in canonical monomial order; plus reporting metadata.
struct PDESystem {
  CtxPtr ctx;
  std::vector<PDEEquation> equations;
  Form phi;                  // the originating observable
  std::vector<int> degrees;  // distinct equation degrees, ascending
};

/// Reads the equations off a purely horizontal form. Throws NotHorizontal
/// when any du factor remains. The zero form gives an empty system. The
/// one-argument overload records the input itself as the observable.
PDESystem emit_pde(const Form& horizontal, const Form& phi);
PDESystem emit_pde(const Form& horizontal);

/// Full pipeline: emit_pde(jet_pullback(evolution_form(prob))).
PDESystem derive_field_equations(const HamiltonianProblem& prob);

} // namespace jetbrackets
