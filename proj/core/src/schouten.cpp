#include "jetbrackets/schouten.hpp"

#include "jetbrackets/errors.hpp"

#include <sstream>

namespace jetbrackets {

namespace {

Multivector term_bracket(const CtxPtr& ctx, const WedgeMono& mx, const Expr& a,
                         const WedgeMono& my, const Expr& b) {
  const std::size_t p = mx.size();
  const std::size_t q = my.size();
  Multivector out(ctx);

  if (p == 0 && q == 0) return out;

  if (p == 0) {
    // [[f, Y]] = (-1)^q co_insert(dV f, Y)
    Form da = d_vertical(a);
    if (da.is_zero()) return out;
    Multivector r = co_insert(da, Multivector::term(ctx, my, b));
    return (q % 2 != 0) ? -r : r;
  }

  if (q == 0) {
    // [[X, g]] = co_insert(dV g, X)
    Form db = d_vertical(b);
    if (db.is_zero()) return out;
    return co_insert(db, Multivector::term(ctx, mx, a));
  }

  if (p == 1 && q == 1) {
    const BasisElem& V = mx[0];
    const BasisElem& W = my[0];
    if (V.fiber) {
      Expr db = partial_fiber(b, V.idx, V.mi);
      if (!db.is_zero()) out += Multivector::basis(ctx, W).scaled(a * db);
    }
    if (W.fiber) {
      Expr da = partial_fiber(a, W.idx, W.mi);
      if (!da.is_zero()) out -= Multivector::basis(ctx, V).scaled(b * da);
    }
    return out;
  }

  const Expr one = Expr::constant(ctx, rat(1));

  if (p >= 2) {
    // [[A^B, Y]] = [[A,Y]]^B + (-1)^{q+1} A^[[B,Y]] with A = a V_1, B = rest.
    WedgeMono head{mx[0]};
    WedgeMono rest(mx.begin() + 1, mx.end());
    Multivector A = Multivector::term(ctx, head, a);
    Multivector B = Multivector::term(ctx, rest, one);
    Multivector AY = term_bracket(ctx, head, a, my, b);
    Multivector BY = term_bracket(ctx, rest, one, my, b);
    Multivector first = wedge(AY, B);
    Multivector second = wedge(A, BY);
    return (q % 2 == 0) ? first - second : first + second;
  }

  // p == 1, q >= 2: [[X, A^B]] = A^[[X,B]] + [[X,A]]^B with A = b W_1.
  WedgeMono head{my[0]};
  WedgeMono rest(my.begin() + 1, my.end());
  Multivector A = Multivector::term(ctx, head, b);
  Multivector B = Multivector::term(ctx, rest, one);
  Multivector XB = term_bracket(ctx, mx, a, rest, one);
  Multivector XA = term_bracket(ctx, mx, a, head, b);
  return wedge(A, XB) + wedge(XA, B);
}

} // namespace

Multivector vsn_bracket(const Multivector& X, const Multivector& Y) {
  require_same_context(X.ctx(), Y.ctx());
  Multivector out(X.ctx());
  for (const auto& [mx, a] : X.terms())
    for (const auto& [my, b] : Y.terms()) out += term_bracket(X.ctx(), mx, a, my, b);
  return out;
}

OracleReport vsn_oracle_check(const Multivector& X, const Multivector& Y,
                              const ProbePolicy& policy) {
  require_same_context(X.ctx(), Y.ctx());
  const CtxPtr& ctx = X.ctx();
  Endo lhs = Endo::insertion(vsn_bracket(X, Y));
  Endo rhs = graded_commutator(
      graded_commutator(Endo::insertion(X), Endo::vertical(ctx)), Endo::insertion(Y));
  std::vector<Form> probes = probe_family(ctx, policy);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    Form l = lhs.apply(probes[k]);
    Form r = rhs.apply(probes[k]);
    if (l != r) {
      std::ostringstream os;
      os << "mismatch on probe " << k << " (" << probes[k] << "): insertion of the bracket gives "
         << l << ", the operator route gives " << r;
      return {false, os.str()};
    }
  }
  std::ostringstream os;
  os << "match on " << probes.size() << " probes";
  return {true, os.str()};
}

int vsn_pairwise_sign(int p, int q) {
  auto eps = [](int k) { return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1; };
  return eps(p) * eps(q) * eps(p + q - 1);
}

Multivector vsn_pairwise(const std::vector<Multivector>& xs,
                         const std::vector<Multivector>& ys) {
  if (xs.empty() || ys.empty())
    throw DegreeError("pairwise expansion needs at least one factor per side");
  const CtxPtr& ctx = xs[0].ctx();
  for (const auto& v : xs) {
    require_same_context(ctx, v.ctx());
    if (!v.is_homogeneous() || (!v.is_zero() && v.degree() != 1))
      throw DegreeError("pairwise expansion factors must have degree 1");
  }
  for (const auto& v : ys) {
    require_same_context(ctx, v.ctx());
    if (!v.is_homogeneous() || (!v.is_zero() && v.degree() != 1))
      throw DegreeError("pairwise expansion factors must have degree 1");
  }
  const int p = static_cast<int>(xs.size());
  const int q = static_cast<int>(ys.size());
  Multivector sum(ctx);
  for (int k = 0; k < p; ++k)
    for (int l = 0; l < q; ++l) {
      Multivector acc = vsn_bracket(xs[static_cast<std::size_t>(k)],
                                    ys[static_cast<std::size_t>(l)]);
      if (acc.is_zero()) continue;
      for (int kk = 0; kk < p; ++kk)
        if (kk != k) acc = wedge(acc, xs[static_cast<std::size_t>(kk)]);
      for (int ll = 0; ll < q; ++ll)
        if (ll != l) acc = wedge(acc, ys[static_cast<std::size_t>(ll)]);
      sum += ((k + l) % 2 == 0) ? acc : -acc;
    }
  return vsn_pairwise_sign(p, q) > 0 ? sum : -sum;
}

} // namespace jetbrackets
