// Source-text parsing: grammar anchors, error offsets, and round-trips
// through the text renderer.

#include <string>
#include <vector>

#include "doctest.h"
#include "jetbrackets/context.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/parse.hpp"
#include "jetbrackets/render.hpp"
#include "jetbrackets/sampling.hpp"

using namespace jetbrackets;

namespace {

std::size_t offset_of(const std::string& text, const CtxPtr& ctx) {
  try {
    (void)parse_expr(text, ctx);
  } catch (const ParseError& e) {
    return e.offset;
  }
  return 0;
}

} // namespace

TEST_SUITE("parse") {

TEST_CASE("grammar anchors") {
  auto ctx = JetContext::create(4, 2, 8, {"f"});
  Expr u211 = Expr::jet_coord(ctx, 2, MultiIndex::from_indices(4, {1, 1}, 8));

  CHECK(parse_expr("u[2;1,1]", ctx) == u211);
  CHECK(parse_expr("1/2 * u[2;1,1]", ctx) == u211 * (rat(1) / rat(2)));
  CHECK(parse_expr("u[2;1,1]/2", ctx) == u211 * (rat(1) / rat(2)));
  CHECK(parse_expr("x1 x2", ctx) ==
        Expr::base_coord(ctx, 1) * Expr::base_coord(ctx, 2)); // juxtaposition
  CHECK(parse_expr("x1^3", ctx) == Expr::base_coord(ctx, 1).pow(3));
  CHECK(parse_expr("-(u[1] - 2)", ctx) ==
        Expr::constant(ctx, rat(2)) - Expr::fiber_coord(ctx, 1));
  CHECK(parse_expr("f(x)", ctx) == Expr::opaque(ctx, "f"));
  CHECK(parse_expr("f(x;1,2)", ctx) ==
        Expr::opaque_derivative(ctx, "f", MultiIndex::from_indices(4, {1, 2}, 8)));

  // Whitespace-insensitive.
  CHECK(parse_expr(" u[2;1,1] + x1 ", ctx) == parse_expr("u[2;1,1]+x1", ctx));
}

TEST_CASE("bare u is only a coordinate in the single-field case") {
  auto one_field = JetContext::create(1, 1);
  CHECK(parse_expr("u", one_field) == Expr::fiber_coord(one_field, 1));
  CHECK(parse_expr("u^2 + 1", one_field) ==
        Expr::fiber_coord(one_field, 1).pow(2) + Expr::constant(one_field, rat(1)));
  auto two_fields = JetContext::create(1, 2);
  CHECK_THROWS_AS(parse_expr("u + 1", two_fields), ParseError);
}

TEST_CASE("error offsets are one-based byte positions") {
  auto ctx = JetContext::create(2, 1, 8, {"f"});
  CHECK(offset_of("u[1 + ", ctx) == 5);
  CHECK(offset_of("", ctx) == 1);
  CHECK(offset_of("x", ctx) == 1);       // bare x is not a coordinate
  CHECK(offset_of("foo(x)", ctx) == 1);  // unknown name
  CHECK(offset_of("f(y)", ctx) == 3);    // opaque arguments are base-only
  CHECK(offset_of("u/0", ctx) == 3);     // division by zero
  CHECK(offset_of("u/u", ctx) == 3);     // divisor must be constant
  CHECK(offset_of("u[1] + + 2", ctx) == 8);
}

TEST_CASE("range and order violations surface as their own errors") {
  auto ctx = JetContext::create(2, 2);
  CHECK_THROWS_AS(parse_expr("u[7]", ctx), RangeError);
  CHECK_THROWS_AS(parse_expr("x3", ctx), RangeError); // base index out of range
  CHECK_THROWS_AS(parse_expr("u[1;1,1,1,1,1,1,1,1,1]", ctx), OrderOverflow);
  CHECK_THROWS_AS(parse_expr("u[1]^65", ctx), ParseError); // exponent cap
}

TEST_CASE("forms and multivectors use their own factor alphabets") {
  auto ctx = JetContext::create(2, 1);
  Form f = parse_form("(u[1] + 1) dx1 ^ du[1;2] - 3 dx2", ctx);
  Form expected =
      wedge(Form::base_elem(ctx, 1),
            Form::fiber_elem(ctx, 1, MultiIndex::from_indices(2, {2}, 8)))
          .scaled(Expr::fiber_coord(ctx, 1) + Expr::constant(ctx, rat(1))) -
      Form::base_elem(ctx, 2).scaled(rat(3));
  CHECK(f == expected);

  Multivector X = parse_multivector("u[1] Dx1 ^ Du[1]", ctx);
  Multivector expectedX =
      wedge(Multivector::base_elem(ctx, 1), Multivector::fiber_elem(ctx, 1, MultiIndex(2)))
          .scaled(Expr::fiber_coord(ctx, 1));
  CHECK(X == expectedX);

  // Wrong variance is rejected at the offending factor.
  CHECK_THROWS_AS(parse_form("Dx1", ctx), ParseError);
  CHECK_THROWS_AS(parse_multivector("dx1", ctx), ParseError);
}

TEST_CASE("scalar forms parse as degree zero") {
  auto ctx = JetContext::create(1, 1);
  Form s = parse_form("u^2 + 1", ctx);
  CHECK(s.is_homogeneous());
  CHECK(s.degree() == 0);
  CHECK(s == Form::scalar(Expr::fiber_coord(ctx, 1).pow(2) + Expr::constant(ctx, rat(1))));
}

TEST_CASE("seeded round-trips through the text renderer") {
  Rng rng(20260816);
  SampleOptions opt;
  opt.max_terms = 3;
  opt.max_degree = 2;
  opt.max_jet_order = 2;
  opt.allow_opaque = true;
  for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {4, 4}}) {
    auto ctx = JetContext::create(n, m, 8, {"f", "g"});
    for (int k = 0; k < 25; ++k) {
      Expr e = random_expr(rng, ctx, opt);
      CHECK(parse_expr(render(e, RenderFormat::Text), ctx) == e);
      int deg = static_cast<int>(rng.uniform(0, 3));
      Form w = random_form(rng, ctx, deg, opt);
      CHECK(parse_form(render(w, RenderFormat::Text), ctx) == w);
      Multivector X = random_multivector(rng, ctx, deg, opt);
      CHECK(parse_multivector(render(X, RenderFormat::Text), ctx) == X);
    }
  }
}

} // TEST_SUITE
