#include "jetbrackets/hamiltonian.hpp"

#include "jetbrackets/errors.hpp"

#include <algorithm>

namespace jetbrackets {

HamiltonianProblem HamiltonianProblem::create(Expr chi, Form phi, PoissonStructure P,
                                              Metric g) {
  require_same_context(chi.ctx(), P.ctx());
  require_same_context(phi.ctx(), P.ctx());
  require_same_context(g.ctx(), P.ctx());
  return HamiltonianProblem(std::move(chi), std::move(phi), std::move(P), std::move(g));
}

Form evolution_form(const HamiltonianProblem& prob) {
  Form bracket = poisson_leibniz(Form::scalar(prob.chi()), prob.phi(), prob.poisson(),
                                 prob.metric());
  return d_horizontal(prob.phi()) - bracket;
}

Form jet_pullback(const Form& alpha) {
  const CtxPtr& ctx = alpha.ctx();
  Form out(ctx);
  for (const auto& [mono, c] : alpha.terms()) {
    Form acc = Form::scalar(c);
    for (const BasisElem& e : mono) {
      if (acc.is_zero()) break;
      if (!e.fiber) {
        acc = wedge(acc, Form::base_elem(ctx, e.idx));
        continue;
      }
      Form image(ctx);
      for (int i = 1; i <= ctx->n(); ++i) {
        MultiIndex raised = e.mi.inserted(i, ctx->order_cap());
        image += Form::base_elem(ctx, i).scaled(Expr::jet_coord(ctx, e.idx, raised));
      }
      acc = wedge(acc, image);
    }
    out += acc;
  }
  return out;
}

PDESystem emit_pde(const Form& horizontal, const Form& phi) {
  const CtxPtr& ctx = horizontal.ctx();
  require_same_context(ctx, phi.ctx());
  PDESystem sys{ctx, {}, phi, {}};
  for (const auto& [mono, c] : horizontal.terms()) {
    std::vector<int> dx_monomial;
    dx_monomial.reserve(mono.size());
    for (const BasisElem& e : mono) {
      if (e.fiber) throw NotHorizontal("a fiber covector remains in the emitted form");
      dx_monomial.push_back(e.idx);
    }
    // Normalize: leading canonical monomial gets coefficient +1.
    Rational scale = c.terms().rbegin()->second;
    sys.equations.push_back(PDEEquation{std::move(dx_monomial), c / scale, scale});
  }
  for (const PDEEquation& eq : sys.equations) {
    int d = static_cast<int>(eq.dx_monomial.size());
    if (std::find(sys.degrees.begin(), sys.degrees.end(), d) == sys.degrees.end())
      sys.degrees.push_back(d);
  }
  std::sort(sys.degrees.begin(), sys.degrees.end());
  return sys;
}

PDESystem emit_pde(const Form& horizontal) { return emit_pde(horizontal, horizontal); }

PDESystem derive_field_equations(const HamiltonianProblem& prob) {
  return emit_pde(jet_pullback(evolution_form(prob)), prob.phi());
}

} // namespace jetbrackets
