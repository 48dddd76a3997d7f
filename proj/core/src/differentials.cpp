#include "jetbrackets/differentials.hpp"

namespace jetbrackets {

Form d_vertical(const Expr& f) {
  Form out(f.ctx());
  for (const Gen& g : f.jet_generators()) {
    Expr df = partial_fiber(f, g.idx, g.mi);
    if (df.is_zero()) continue;
    out += Form::fiber_elem(f.ctx(), g.idx, g.mi).scaled(df);
  }
  return out;
}

Form d_vertical(const Form& w) {
  Form out(w.ctx());
  for (const auto& [mono, c] : w.terms()) {
    for (const Gen& g : c.jet_generators()) {
      Expr dc = partial_fiber(c, g.idx, g.mi);
      if (dc.is_zero()) continue;
      WedgeMono factors;
      factors.reserve(mono.size() + 1);
      factors.push_back(BasisElem::fiber_elem(w.ctx(), g.idx, g.mi));
      factors.insert(factors.end(), mono.begin(), mono.end());
      out += Form::term(w.ctx(), std::move(factors), dc);
    }
  }
  return out;
}

Form d_horizontal(const Expr& f) {
  Form out(f.ctx());
  for (int i = 1; i <= f.ctx()->n(); ++i) {
    Expr di = total_derivative(f, i);
    if (di.is_zero()) continue;
    out += Form::base_elem(f.ctx(), i).scaled(di);
  }
  return out;
}

Form d_horizontal(const Form& w) {
  const CtxPtr& ctx = w.ctx();
  Form out(ctx);
  for (const auto& [mono, c] : w.terms()) {
    // Coefficient part: sum_i D_i(c) dx^i ^ mono.
    for (int i = 1; i <= ctx->n(); ++i) {
      Expr di = total_derivative(c, i);
      if (di.is_zero()) continue;
      WedgeMono factors;
      factors.reserve(mono.size() + 1);
      factors.push_back(BasisElem::base(ctx, i));
      factors.insert(factors.end(), mono.begin(), mono.end());
      out += Form::term(ctx, std::move(factors), di);
    }
    // Factor part: replace factor j in place by its differential, with the
    // anti-derivation sign for passing the first j degree-1 factors.
    for (std::size_t j = 0; j < mono.size(); ++j) {
      if (!mono[j].fiber) continue; // dx^i is closed
      Expr signed_c = (j % 2 == 0) ? c : -c;
      for (int i = 1; i <= ctx->n(); ++i) {
        MultiIndex raised = mono[j].mi.inserted(i, ctx->order_cap());
        WedgeMono factors;
        factors.reserve(mono.size() + 1);
        factors.insert(factors.end(), mono.begin(), mono.begin() + static_cast<long>(j));
        factors.push_back(BasisElem::base(ctx, i));
        factors.push_back(BasisElem::fiber_elem(ctx, mono[j].idx, raised));
        factors.insert(factors.end(), mono.begin() + static_cast<long>(j) + 1, mono.end());
        out += Form::term(ctx, std::move(factors), signed_c);
      }
    }
  }
  return out;
}

} // namespace jetbrackets
