// The covariant evolution pipeline: evolution form, prolongation pullback,
// equation emission, and the two built-in reference problems.

#include <vector>

#include "doctest.h"
#include "jetbrackets/config.hpp"
#include "jetbrackets/context.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/hamiltonian.hpp"
#include "jetbrackets/presets.hpp"
#include "jetbrackets/render.hpp"

using namespace jetbrackets;

namespace {

MultiIndex mi(const CtxPtr& ctx, std::vector<int> ix) {
  return MultiIndex::from_indices(ctx->n(), ix, ctx->order_cap());
}

} // namespace

TEST_SUITE("hamiltonian") {

TEST_CASE("prolongation pullback substitutes jet coordinates") {
  auto ctx = JetContext::create(2, 1);
  Form du = Form::fiber_elem(ctx, 1, MultiIndex(2));
  Form pulled = jet_pullback(du);
  Form expected = Form::base_elem(ctx, 1).scaled(Expr::jet_coord(ctx, 1, mi(ctx, {1}))) +
                  Form::base_elem(ctx, 2).scaled(Expr::jet_coord(ctx, 1, mi(ctx, {2})));
  CHECK(pulled == expected);

  // Horizontal forms and coefficients pass through unchanged.
  Form dx1 = Form::base_elem(ctx, 1).scaled(Expr::fiber_coord(ctx, 1));
  CHECK(jet_pullback(dx1) == dx1);

  // The pullback is an algebra map.
  Form du1 = Form::fiber_elem(ctx, 1, mi(ctx, {1}));
  CHECK(jet_pullback(wedge(du, du1)) == wedge(jet_pullback(du), jet_pullback(du1)));
}

TEST_CASE("emission rejects non-horizontal input and normalizes the lead") {
  auto ctx = JetContext::create(1, 1);
  Form du = Form::fiber_elem(ctx, 1, MultiIndex(1));
  CHECK_THROWS_AS(emit_pde(du), NotHorizontal);

  Expr u = Expr::fiber_coord(ctx, 1);
  Expr u11 = Expr::jet_coord(ctx, 1, mi(ctx, {1, 1}));
  Form w = Form::base_elem(ctx, 1).scaled(rat(-3) * (u11 + u));
  PDESystem sys = emit_pde(w);
  REQUIRE(sys.equations.size() == 1);
  CHECK(sys.equations[0].dx_monomial == std::vector<int>{1});
  CHECK(sys.equations[0].lhs == u11 + u);
  CHECK(sys.equations[0].scale == rat(-3));
  CHECK(emit_pde(Form(ctx)).equations.empty());
}

TEST_CASE("the one-dimensional oscillator derivation") {
  HamiltonianProblem prob = oscillator_problem();
  PDESystem sys = derive_field_equations(prob);
  REQUIRE(sys.equations.size() == 1);
  CHECK(render(sys, RenderFormat::Text) == "u^1_{11} + u^1 = 0");

  const auto& ctx = prob.ctx();
  Expr target = Expr::jet_coord(ctx, 1, mi(ctx, {1, 1})) + Expr::fiber_coord(ctx, 1);
  CHECK(sys.equations[0].lhs == target);
  CHECK(sys.equations[0].scale == rat(1));
  CHECK(sys.degrees == std::vector<int>{1});
}

TEST_CASE("the four-dimensional source-coupled derivation") {
  HamiltonianProblem prob = maxwell_problem();
  PDESystem sys = derive_field_equations(prob);
  REQUIRE(sys.equations.size() == 4);
  const auto& ctx = prob.ctx();

  // Signature diag(1,1,1,-1); the target rows are
  //   E_mu = eta^{nu rho} u^mu_{nu rho} - eta^{mu nu} u^rho_{nu rho} - j^mu.
  std::vector<Rational> eta = {rat(1), rat(1), rat(1), rat(-1)};
  auto E = [&](int mu) {
    Expr e(ctx);
    for (int nu = 1; nu <= 4; ++nu)
      e += eta[nu - 1] * Expr::jet_coord(ctx, mu, mi(ctx, {nu, nu}));
    for (int rho = 1; rho <= 4; ++rho)
      e -= eta[mu - 1] * Expr::jet_coord(ctx, rho, mi(ctx, {mu, rho}));
    e -= Expr::opaque(ctx, "j" + std::to_string(mu));
    return e;
  };

  // Raw coefficient of dx^{abc} is the signed complementary row: the sign
  // of the permutation taking (a, b, c, mu) to (1, 2, 3, 4).
  struct Row {
    std::vector<int> dxs;
    int mu;
    int sign;
  };
  std::vector<Row> rows = {
      {{1, 2, 3}, 4, +1}, {{1, 2, 4}, 3, -1}, {{1, 3, 4}, 2, +1}, {{2, 3, 4}, 1, -1}};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CAPTURE(k);
    const PDEEquation& eq = sys.equations[k];
    CHECK(eq.dx_monomial == rows[k].dxs);
    Expr raw = eq.lhs * eq.scale;
    CHECK(raw == E(rows[k].mu) * rat(rows[k].sign));
  }
  CHECK(sys.degrees == std::vector<int>{3});
}

TEST_CASE("the evolution form is horizontal after pullback") {
  HamiltonianProblem prob = oscillator_problem();
  Form ev = evolution_form(prob);
  CHECK(!ev.is_zero());
  Form pulled = jet_pullback(ev);
  for (const auto& [mono, coeff] : pulled.terms()) {
    auto [h, v] = bigrade_of(mono);
    CHECK(v == 0);
  }
}

TEST_CASE("config-built presets agree with the direct constructions") {
  for (bool maxwell : {false, true}) {
    ProblemConfig cfg = maxwell ? maxwell_config() : oscillator_config();
    HamiltonianProblem via_config = build_problem(cfg);
    HamiltonianProblem direct = maxwell ? maxwell_problem() : oscillator_problem();
    CHECK(render(derive_field_equations(via_config), RenderFormat::Json) ==
          render(derive_field_equations(direct), RenderFormat::Json));
  }
}

} // TEST_SUITE
