// Deterministic rendering in the three output formats, pinned against the
// reference strings.

#include <nlohmann/json.hpp>
#include <string>

#include "doctest.h"
#include "jetbrackets/context.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/hamiltonian.hpp"
#include "jetbrackets/presets.hpp"
#include "jetbrackets/render.hpp"

using namespace jetbrackets;

TEST_SUITE("render") {

TEST_CASE("format names") {
  CHECK(render_format_from_string("text") == RenderFormat::Text);
  CHECK(render_format_from_string("latex") == RenderFormat::Latex);
  CHECK(render_format_from_string("json") == RenderFormat::Json);
  CHECK_THROWS_AS(render_format_from_string("xml"), ConfigError);
  CHECK(to_string(RenderFormat::Latex) == std::string("latex"));
}

TEST_CASE("pinned form rendering") {
  auto ctx = JetContext::create(2, 1);
  Form dx1 = Form::base_elem(ctx, 1);
  CHECK(render(dx1, RenderFormat::Text) == "dx1");
  Form w = wedge(dx1, Form::fiber_elem(ctx, 1, MultiIndex::from_indices(2, {1, 2}, 8)));
  CHECK(render(w, RenderFormat::Text) == "dx1^du[1;1,2]");
  CHECK(render(w, RenderFormat::Latex) == "dx^{1} \\wedge du^{1}_{12}");
  CHECK(render(Form(ctx), RenderFormat::Text) == "0");
}

TEST_CASE("pinned expression rendering") {
  auto ctx = JetContext::create(1, 1, 8, {"j1"});
  Expr u = Expr::fiber_coord(ctx, 1);
  Expr u11 = Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1, 1}, 8));
  CHECK(render(u11 + u, RenderFormat::Text) == "u[1;1,1] + u[1]");
  CHECK(render(u11 + u, RenderFormat::Latex) == "u^{1}_{11} + u^{1}");
  CHECK(render(u * (rat(-1) / rat(2)), RenderFormat::Text) == "-1/2*u[1]");
  CHECK(render(u * (rat(-1) / rat(2)), RenderFormat::Latex) == "-\\frac{1}{2} u^{1}");
  CHECK(render(Expr::opaque_derivative(ctx, "j1", MultiIndex::from_indices(1, {1}, 8)),
               RenderFormat::Latex) == "j1_{,1}(x)");
}

TEST_CASE("pinned systems in all three formats") {
  PDESystem osc = derive_field_equations(oscillator_problem());
  CHECK(render(osc, RenderFormat::Text) == "u^1_{11} + u^1 = 0");
  CHECK(render(osc, RenderFormat::Latex) == "u^{1}_{11} + u^{1} = 0");

  PDESystem mx = derive_field_equations(maxwell_problem());
  std::string mx_text = render(mx, RenderFormat::Text);
  // Multi-equation text labels each row by its dx monomial.
  CHECK(mx_text.find("dx1^dx2^dx3: ") == 0);
  CHECK(mx_text.find("dx2^dx3^dx4: ") != std::string::npos);
  CHECK(std::count(mx_text.begin(), mx_text.end(), '\n') == 3);
}

TEST_CASE("system JSON carries exact rationals and sorted keys") {
  PDESystem mx = derive_field_equations(maxwell_problem());
  nlohmann::json doc = pdesystem_to_json(mx);
  REQUIRE(doc.contains("equations"));
  REQUIRE(doc["equations"].size() == 4);
  const auto& eq0 = doc["equations"][0];
  CHECK(eq0["dx_monomial"] == nlohmann::json({1, 2, 3}));
  REQUIRE(eq0["lhs"].is_array());
  for (const auto& term : eq0["lhs"]) {
    CHECK(term["coeff"].is_string());
    std::string c = term["coeff"].get<std::string>();
    CHECK(c.find('.') == std::string::npos); // decimal-free p/q strings
    REQUIRE(term["monomial"].is_array());
    for (const auto& fac : term["monomial"]) {
      REQUIRE(fac.is_array());
      REQUIRE(fac.size() == 2);
      CHECK(fac[0].is_string());
      CHECK(fac[1].is_number_integer());
      CHECK(fac[1].get<int>() >= 1);
    }
  }
  CHECK(doc["metadata"]["n"] == 4);
  CHECK(doc["metadata"]["m"] == 4);
  CHECK(doc["metadata"]["degrees"] == nlohmann::json({3}));
  CHECK(doc["metadata"]["scales"].size() == 4);

  // Determinism: rendering twice gives identical bytes.
  CHECK(render(mx, RenderFormat::Json) == render(mx, RenderFormat::Json));
  CHECK(render(mx, RenderFormat::Json) == doc.dump(2));
}

TEST_CASE("leading terms print first with elided unit coefficients") {
  auto ctx = JetContext::create(1, 1);
  Expr u = Expr::fiber_coord(ctx, 1);
  Expr u1 = Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1}, 8));
  Expr e = u1 * u1 - u + Expr::constant(ctx, rat(1) / rat(3));
  CHECK(render(e, RenderFormat::Text) == "u[1;1]^2 - u[1] + 1/3");
}

} // TEST_SUITE
