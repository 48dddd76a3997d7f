#include "jetbrackets/poisson.hpp"

#include "jetbrackets/errors.hpp"

#include <sstream>

namespace jetbrackets {

Multivector poisson_multivector(const std::vector<std::vector<Rational>>& eta_fields,
                                const OrderTable& eta_orders, const CtxPtr& ctx) {
  const std::size_t m = static_cast<std::size_t>(ctx->m());
  if (eta_fields.size() != m)
    throw ConfigError("field coefficient matrix must have " + std::to_string(m) + " rows");
  for (const auto& row : eta_fields)
    if (row.size() != m) throw ConfigError("field coefficient matrix must be square");

  OrderTable orders;
  if (eta_orders.empty()) {
    MultiIndex zero = ctx->zero_index();
    orders[{zero, zero}] = rat(1);
  } else {
    for (const auto& [ij, v] : eta_orders) {
      ctx->check_jet_order(ij.first);
      ctx->check_jet_order(ij.second);
      auto mirror = std::make_pair(ij.second, ij.first);
      auto it = orders.find(mirror);
      if (it != orders.end() && it->second != v)
        throw ConfigError("order coefficient table is not symmetric");
      orders[ij] = v;
      orders[mirror] = v;
    }
  }

  Multivector P(ctx);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Rational& hf = eta_fields[a][b];
      if (hf == 0) continue;
      for (const auto& [ij, ho] : orders) {
        if (ho == 0) continue;
        Rational c = hf;
        c *= ho;
        for (int i = 1; i <= ctx->n(); ++i) {
          MultiIndex raised = ij.second.inserted(i, ctx->order_cap());
          WedgeMono factors{
              BasisElem::fiber_elem(ctx, static_cast<int>(a) + 1, ij.first),
              BasisElem::fiber_elem(ctx, static_cast<int>(b) + 1, raised),
              BasisElem::base(ctx, i)};
          P += Multivector::term(ctx, std::move(factors), Expr::constant(ctx, c));
        }
      }
    }
  return P;
}

PoissonStructure PoissonStructure::create(const Multivector& P) {
  Multivector self = vsn_bracket(P, P);
  if (!self.is_zero()) {
    std::ostringstream os;
    os << "self bracket does not vanish: [[P, P]] = " << self;
    throw PoissonCheckFailed(os.str());
  }
  return PoissonStructure(P);
}

Form poisson_leibniz(const Form& alpha, const Form& beta, const PoissonStructure& P,
                     const Metric& g) {
  require_same_context(alpha.ctx(), P.ctx());
  require_same_context(beta.ctx(), P.ctx());
  require_same_context(g.ctx(), P.ctx());
  Multivector inner = vsn_bracket(sharp(alpha, g), P.multivector());
  Multivector outer = vsn_bracket(inner, sharp(beta, g));
  return flat(outer, g);
}

Form poisson_leibniz(const Form& alpha, const Form& beta, const Multivector& P,
                     const Metric& g) {
  return poisson_leibniz(alpha, beta, PoissonStructure::create(P), g);
}

} // namespace jetbrackets
