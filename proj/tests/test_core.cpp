// Exact arithmetic, multiindices, polynomial generators, and formal
// derivatives: the layer everything else sits on.

#include <sstream>
#include <string>

#include "doctest.h"
#include "jetbrackets/context.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/expr.hpp"
#include "jetbrackets/multiindex.hpp"
#include "jetbrackets/rational.hpp"

using namespace jetbrackets;

namespace {

std::string text_of(const Expr& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("rationals are exact and canonical") {
  CHECK(rational_to_string(rat(1) / rat(3)) == "1/3");
  CHECK(rational_to_string(rational_from_string("2/4")) == "1/2");
  CHECK(rational_to_string(rational_from_string("-6/4")) == "-3/2");
  CHECK(rational_to_string(rational_from_string("7")) == "7");
  Rational third = rat(1) / rat(3);
  CHECK(third + third + third == rat(1));
  CHECK_THROWS_AS(rational_from_string("1.5"), ConfigError);
  CHECK_THROWS_AS(rational_from_string("1/0"), ConfigError);
  CHECK_THROWS_AS(rational_from_string("abc"), ConfigError);
}

TEST_CASE("multiindices count repeated base indices") {
  MultiIndex I = MultiIndex::from_indices(3, {1, 3, 1}, 8);
  CHECK(I.order() == 3);
  CHECK(I.to_indices() == std::vector<int>{1, 1, 3});
  MultiIndex J = I.inserted(2, 8);
  CHECK(J.order() == 4);
  CHECK(J.to_indices() == std::vector<int>{1, 1, 2, 3});
  CHECK_THROWS_AS(MultiIndex::from_indices(3, {4}, 8), RangeError);
  CHECK_THROWS_AS(MultiIndex::from_indices(1, {1, 1, 1, 1, 1, 1, 1, 1, 1}, 8), OrderOverflow);
}

TEST_CASE("order cap is a hard error, never a truncation") {
  auto ctx = JetContext::create(1, 1, 2);
  Expr u2 = Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1, 1}, 2));
  CHECK_THROWS_AS(total_derivative(u2, 1), OrderOverflow);
}

TEST_CASE("polynomial arithmetic is canonical") {
  auto ctx = JetContext::create(2, 1);
  Expr x1 = Expr::base_coord(ctx, 1);
  Expr u = Expr::fiber_coord(ctx, 1);
  Expr p = (u + x1) * (u - x1);
  CHECK(p == u * u - x1 * x1);
  CHECK((p - p).is_zero());
  CHECK((u + Expr::constant(ctx, rat(1))).pow(2) ==
        u * u + rat(2) * u + Expr::constant(ctx, rat(1)));
  CHECK(text_of((u + Expr::constant(ctx, rat(1))).pow(2)) == "u[1]^2 + 2*u[1] + 1");
  CHECK(text_of(-u * x1) == "-x1*u[1]");
}

TEST_CASE("jet coordinates of higher order lead") {
  auto ctx = JetContext::create(1, 1);
  Expr u = Expr::fiber_coord(ctx, 1);
  Expr u11 = Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1, 1}, 8));
  Expr e = u * u * u + u11;
  auto [mono, coeff] = e.leading();
  CHECK(coeff == rat(1));
  REQUIRE(mono.factors.size() == 1);
  CHECK(mono.factors[0].first.mi.order() == 2);
  CHECK(text_of(e) == "u[1;1,1] + u[1]^3");
}

TEST_CASE("partial derivatives treat jet coordinates independently") {
  auto ctx = JetContext::create(2, 1);
  Expr x1 = Expr::base_coord(ctx, 1);
  Expr u = Expr::fiber_coord(ctx, 1);
  MultiIndex e1 = MultiIndex::from_indices(2, {1}, 8);
  Expr u1 = Expr::jet_coord(ctx, 1, e1);

  CHECK(partial_base(x1 * x1, 1) == rat(2) * x1);
  CHECK(partial_base(u, 1).is_zero());
  CHECK(partial_base(u1, 1).is_zero());
  CHECK(partial_fiber(u * u, 1, MultiIndex(2)) == rat(2) * u);
  CHECK(partial_fiber(u1, 1, e1) == Expr::constant(ctx, rat(1)));
  CHECK(partial_fiber(u1, 1, MultiIndex(2)).is_zero());
}

TEST_CASE("total derivatives promote jet coordinates") {
  auto ctx = JetContext::create(1, 1);
  Expr u = Expr::fiber_coord(ctx, 1);
  Expr u1 = Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1}, 8));
  Expr u11 = Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1, 1}, 8));
  CHECK(total_derivative(u, 1) == u1);
  CHECK(total_derivative(u * u, 1) == rat(2) * u * u1);
  CHECK(total_derivative(u1, 1) == u11);
  // D_1 D_2 = D_2 D_1 on a mixed polynomial.
  auto ctx2 = JetContext::create(2, 2);
  Expr f = Expr::fiber_coord(ctx2, 1) * Expr::fiber_coord(ctx2, 2) +
           Expr::base_coord(ctx2, 1) * Expr::fiber_coord(ctx2, 2);
  CHECK(total_derivative(total_derivative(f, 1), 2) ==
        total_derivative(total_derivative(f, 2), 1));
}

TEST_CASE("opaque atoms carry formal base derivatives") {
  auto ctx = JetContext::create(2, 1, 8, {"f"});
  Expr f = Expr::opaque(ctx, "f");
  Expr f1 = Expr::opaque_derivative(ctx, "f", MultiIndex::from_indices(2, {1}, 8));
  Expr f12 = Expr::opaque_derivative(ctx, "f", MultiIndex::from_indices(2, {1, 2}, 8));
  CHECK(total_derivative(f, 1) == f1);
  CHECK(total_derivative(f1, 2) == f12);
  CHECK(partial_fiber(f, 1, MultiIndex(2)).is_zero());
  CHECK(text_of(f12) == "f(x;1,2)");
  // Unknown names are rejected by the context.
  CHECK(!ctx->has_opaque("g"));
}

TEST_CASE("contexts validate ranges") {
  auto ctx = JetContext::create(2, 3);
  CHECK(ctx->n() == 2);
  CHECK(ctx->m() == 3);
  CHECK(ctx->order_cap() == 8);
  CHECK_THROWS_AS(Expr::base_coord(ctx, 3), RangeError);
  CHECK_THROWS_AS(Expr::fiber_coord(ctx, 4), RangeError);
  CHECK_THROWS_AS(Expr::base_coord(ctx, 0), RangeError);
}

} // TEST_SUITE
