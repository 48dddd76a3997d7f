// The two differentials of the bigraded complex: nilpotency,
// anticommutation, the anti-derivation laws, and their action on the
// generator coordinates.

#include "doctest.h"
#include "jetbrackets/context.hpp"
#include "jetbrackets/differentials.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/sampling.hpp"

using namespace jetbrackets;

TEST_SUITE("differentials") {

TEST_CASE("vertical differential on generators") {
  auto ctx = JetContext::create(1, 1);
  Expr u = Expr::fiber_coord(ctx, 1);
  Form du = Form::fiber_elem(ctx, 1, MultiIndex(1));
  CHECK(d_vertical(u) == du);
  CHECK(d_vertical(u * u) == du.scaled(rat(2) * u));
  CHECK(d_vertical(Expr::base_coord(ctx, 1)).is_zero());
  CHECK(d_vertical(Expr::constant(ctx, rat(5))).is_zero());
}

TEST_CASE("horizontal differential on generators") {
  auto ctx = JetContext::create(2, 1, 8, {"f"});
  Expr u = Expr::fiber_coord(ctx, 1);
  MultiIndex e1 = MultiIndex::from_indices(2, {1}, 8);
  MultiIndex e2 = MultiIndex::from_indices(2, {2}, 8);
  Form dx1 = Form::base_elem(ctx, 1);
  Form dx2 = Form::base_elem(ctx, 2);

  Form dHu = d_horizontal(u);
  CHECK(dHu == dx1.scaled(Expr::jet_coord(ctx, 1, e1)) +
                   dx2.scaled(Expr::jet_coord(ctx, 1, e2)));

  // The base coordinate and an opaque source differentiate along the base.
  CHECK(d_horizontal(Expr::base_coord(ctx, 1)) == dx1);
  CHECK(d_horizontal(Expr::opaque(ctx, "f")) ==
        dx1.scaled(Expr::opaque_derivative(ctx, "f", e1)) +
            dx2.scaled(Expr::opaque_derivative(ctx, "f", e2)));
}

TEST_CASE("contact structure: the vertical basis forms are d_H-coupled") {
  // d_H(du^alpha_I) = sum_i dx^i ^ du^alpha_{I+e_i}; the sign is forced by
  // the anticommutation of the two differentials on u.
  auto ctx = JetContext::create(1, 1);
  Form du = Form::fiber_elem(ctx, 1, MultiIndex(1));
  Form dHdu = d_horizontal(du);
  CHECK(dHdu == -d_vertical(d_horizontal(Expr::fiber_coord(ctx, 1))));
  Form expected = wedge(Form::base_elem(ctx, 1),
                        Form::fiber_elem(ctx, 1, MultiIndex::from_indices(1, {1}, 8)));
  CHECK(dHdu == expected);
}

TEST_CASE("nilpotency and anticommutation on seeded forms") {
  Rng rng(505);
  SampleOptions opt;
  opt.max_terms = 3;
  opt.max_degree = 2;
  opt.max_jet_order = 2;
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    auto ctx = JetContext::create(n, m);
    for (int k = 0; k < 10; ++k) {
      int deg = static_cast<int>(rng.uniform(0, 3));
      Form w = random_form(rng, ctx, deg, opt);
      CHECK(d_vertical(d_vertical(w)).is_zero());
      CHECK(d_horizontal(d_horizontal(w)).is_zero());
      CHECK((d_horizontal(d_vertical(w)) + d_vertical(d_horizontal(w))).is_zero());
    }
  }
}

TEST_CASE("anti-derivation laws on seeded pairs") {
  Rng rng(707);
  SampleOptions opt;
  opt.max_terms = 2;
  opt.max_degree = 2;
  opt.max_jet_order = 1;
  auto ctx = JetContext::create(2, 2);
  for (int k = 0; k < 12; ++k) {
    int p = static_cast<int>(rng.uniform(0, 2));
    int q = static_cast<int>(rng.uniform(0, 2));
    Form a = random_form(rng, ctx, p, opt);
    Form b = random_form(rng, ctx, q, opt);
    int sign = (p % 2 == 0) ? 1 : -1;
    CHECK(d_vertical(wedge(a, b)) ==
          wedge(d_vertical(a), b) + wedge(a, d_vertical(b)).scaled(rat(sign)));
    CHECK(d_horizontal(wedge(a, b)) ==
          wedge(d_horizontal(a), b) + wedge(a, d_horizontal(b)).scaled(rat(sign)));
  }
}

TEST_CASE("horizontal differential respects the order cap") {
  auto ctx = JetContext::create(1, 1, 3);
  Expr top = Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1, 1, 1}, 3));
  CHECK_THROWS_AS(d_horizontal(top), OrderOverflow);
}

} // TEST_SUITE
