// The attested structure multivector and the bracket it induces on forms.

#include "doctest.h"
#include "jetbrackets/context.hpp"
#include "jetbrackets/differentials.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/metric.hpp"
#include "jetbrackets/poisson.hpp"

using namespace jetbrackets;

namespace {

MultiIndex mi(const CtxPtr& ctx, std::vector<int> ix) {
  return MultiIndex::from_indices(ctx->n(), ix, ctx->order_cap());
}

} // namespace

TEST_SUITE("poisson") {

TEST_CASE("the first-order structure multivector is attested") {
  auto ctx = JetContext::create(1, 1);
  Multivector P = poisson_multivector({{rat(1)}}, {}, ctx);
  CHECK(P.degree() == 3);
  CHECK(vsn_bracket(P, P).is_zero());
  PoissonStructure PS = PoissonStructure::create(P);
  CHECK(PS.multivector() == P);
}

TEST_CASE("a field-dependent candidate is rejected") {
  // u_1 Du ^ Dx1 + u Du_1 ^ Dx2 over n=2, m=1 has a nonzero self bracket.
  auto ctx = JetContext::create(2, 1);
  Expr u = Expr::fiber_coord(ctx, 1);
  Expr u1 = Expr::jet_coord(ctx, 1, mi(ctx, {1}));
  Multivector bad =
      wedge(Multivector::fiber_elem(ctx, 1, MultiIndex(2)), Multivector::base_elem(ctx, 1))
          .scaled(u1) +
      wedge(Multivector::fiber_elem(ctx, 1, mi(ctx, {1})), Multivector::base_elem(ctx, 2))
          .scaled(u);
  CHECK(!vsn_bracket(bad, bad).is_zero());
  CHECK_THROWS_AS(PoissonStructure::create(bad), PoissonCheckFailed);
}

TEST_CASE("higher-order coefficient tables stay attested") {
  auto ctx = JetContext::create(2, 2);
  OrderTable orders;
  MultiIndex zero(2);
  orders[{zero, zero}] = rat(1);
  orders[{zero, mi(ctx, {1})}] = rat(1) / rat(2); // symmetric mirror implied
  Multivector P = poisson_multivector({{rat(1), rat(0)}, {rat(0), rat(-1)}}, orders, ctx);
  CHECK(vsn_bracket(P, P).is_zero());
  CHECK_NOTHROW(PoissonStructure::create(P));
}

TEST_CASE("frozen bracket values in the first-order scalar setting") {
  auto ctx = JetContext::create(1, 1);
  PoissonStructure PS = PoissonStructure::create(poisson_multivector({{rat(1)}}, {}, ctx));
  Metric g = Metric::create(ctx, {{rat(1)}});
  Expr u = Expr::fiber_coord(ctx, 1);
  Form fu = Form::scalar(u);
  Form fu1 = Form::scalar(Expr::jet_coord(ctx, 1, mi(ctx, {1})));
  Form dx1 = Form::base_elem(ctx, 1);

  CHECK(poisson_leibniz(fu, fu, PS, g).is_zero());
  CHECK(poisson_leibniz(fu, fu1, PS, g) == -dx1);

  // The convenience overload validates P on every call.
  CHECK(poisson_leibniz(fu, fu1, PS.multivector(), g) == -dx1);
}

TEST_CASE("the form bracket is Leibniz in its second slot") {
  auto ctx = JetContext::create(1, 1);
  PoissonStructure PS = PoissonStructure::create(poisson_multivector({{rat(1)}}, {}, ctx));
  Metric g = Metric::create(ctx, {{rat(1)}});
  Expr u = Expr::fiber_coord(ctx, 1);
  Form chi = Form::scalar(u * u * (rat(1) / rat(2)));
  Form a = Form::fiber_elem(ctx, 1, MultiIndex(1)).scaled(u);
  Form b = d_vertical(Expr::jet_coord(ctx, 1, mi(ctx, {1})));

  // {chi, a ^ b} = a ^ {chi, b} + (-1)^{|b|} {chi, a} ^ b.
  Form lhs = poisson_leibniz(chi, wedge(a, b), PS, g);
  Form rhs = wedge(a, poisson_leibniz(chi, b, PS, g)) -
             wedge(poisson_leibniz(chi, a, PS, g), b);
  CHECK(lhs == rhs);
}

TEST_CASE("the fiber metric must be symmetric and definite unless waived") {
  auto ctx = JetContext::create(1, 2);
  // Indefinite diagonal fiber entries are rejected without the waiver.
  std::vector<Metric::FiberEntry> entries = {
      {{1, MultiIndex(1)}, {1, MultiIndex(1)}, rat(1)},
      {{2, MultiIndex(1)}, {2, MultiIndex(1)}, rat(-1)},
  };
  CHECK_THROWS_AS(Metric::create(ctx, {{rat(1)}}, entries, false), ConfigError);
  CHECK_NOTHROW(Metric::create(ctx, {{rat(1)}}, entries, true));
}

} // TEST_SUITE
