// Graded endomorphism calculus: the commutator, its two structure
// identities, the derived bracket, and the square-zero guard.

#include "doctest.h"
#include "jetbrackets/context.hpp"
#include "jetbrackets/endo.hpp"
#include "jetbrackets/errors.hpp"

using namespace jetbrackets;

namespace {

// Smaller probe family: plenty for the fixed operators used here, and it
// keeps the unit suite fast. The acceptance runs use the full default.
ProbePolicy fast_policy() {
  ProbePolicy p;
  p.random_monomials = 8;
  p.random_forms = 6;
  return p;
}

} // namespace

TEST_SUITE("operators") {

TEST_CASE("generators report degree and parity") {
  auto ctx = JetContext::create(1, 1);
  Multivector Du = Multivector::fiber_elem(ctx, 1, MultiIndex(1));
  Form du = Form::fiber_elem(ctx, 1, MultiIndex(1));

  CHECK(Endo::identity(ctx).degree() == 0);
  CHECK(Endo::vertical(ctx).degree() == 1);
  CHECK(Endo::vertical(ctx).parity() == 1);
  CHECK(Endo::insertion(Du).degree() == -1);
  CHECK(Endo::insertion(Du).parity() == 1);
  CHECK(Endo::mult(du).degree() == 1);
  CHECK(Endo::mult(Form::scalar(Expr::fiber_coord(ctx, 1))).degree() == 0);

  // A sum of degrees 1 and -1 has odd parity but no single degree.
  Endo mixed = Endo::mult(du) + Endo::insertion(Du);
  CHECK(!mixed.degree().has_value());
  CHECK(mixed.parity() == 1);

  // Degrees 0 and 1 leave even no parity.
  Endo no_parity = Endo::identity(ctx) + Endo::vertical(ctx);
  CHECK(!no_parity.parity().has_value());
  CHECK_THROWS_AS(graded_commutator(no_parity, Endo::identity(ctx)), DegreeError);
}

TEST_CASE("the commutator is graded-skew on probes") {
  auto ctx = JetContext::create(1, 1);
  ProbePolicy pol = fast_policy();
  Multivector Du = Multivector::fiber_elem(ctx, 1, MultiIndex(1));
  Form du = Form::fiber_elem(ctx, 1, MultiIndex(1));

  Endo F = Endo::insertion(Du);            // odd
  Endo G = Endo::mult(du);                 // odd
  Endo H = Endo::mult(Form::scalar(Expr::fiber_coord(ctx, 1))); // even

  // odd/odd: [F,G] = +[G,F]; odd/even: [F,H] = -[H,F].
  CHECK(endo_equal(graded_commutator(F, G), graded_commutator(G, F), pol));
  CHECK(endo_equal(graded_commutator(F, H),
                   graded_commutator(H, F).scaled(rat(-1)), pol));

  // The canonical pairing: [insertion(Du), mult(du)] = identity.
  CHECK(endo_equal(graded_commutator(F, G), Endo::identity(ctx), pol));
}

TEST_CASE("vertical Lie derivative via the derived bracket") {
  auto ctx = JetContext::create(1, 1);
  ProbePolicy pol = fast_policy();
  Multivector Du = Multivector::fiber_elem(ctx, 1, MultiIndex(1));
  Form u_scalar = Form::scalar(Expr::fiber_coord(ctx, 1));

  // [[insertion(Du), d_V], mult(u)] multiplies by Du(u) = 1.
  Endo got = derived_bracket(Endo::insertion(Du), Endo::mult(u_scalar),
                             Endo::vertical(ctx), pol);
  CHECK(endo_equal(got, Endo::identity(ctx), pol));
}

TEST_CASE("the derived bracket rejects a non-square-zero delta") {
  auto ctx = JetContext::create(1, 1);
  ProbePolicy pol = fast_policy();
  Multivector Du = Multivector::fiber_elem(ctx, 1, MultiIndex(1));
  Form du = Form::fiber_elem(ctx, 1, MultiIndex(1));
  // delta = mult(du) + insertion(Du) is odd with [delta, delta] = 2 * id
  // on scalars, so the guard must fire.
  Endo bad_delta = Endo::mult(du) + Endo::insertion(Du);
  CHECK_THROWS_AS(derived_bracket(Endo::identity(ctx), Endo::identity(ctx), bad_delta, pol),
                  DeltaNotSquareZero);
}

TEST_CASE("structure identities hold on fixed triples") {
  auto ctx = JetContext::create(1, 1);
  ProbePolicy pol = fast_policy();
  Multivector Du = Multivector::fiber_elem(ctx, 1, MultiIndex(1));
  Multivector Du1 =
      Multivector::fiber_elem(ctx, 1, MultiIndex::from_indices(1, {1}, ctx->order_cap()));
  Form du = Form::fiber_elem(ctx, 1, MultiIndex(1));
  Expr u = Expr::fiber_coord(ctx, 1);

  auto sgn = [](int k) { return k % 2 == 0 ? rat(1) : rat(-1); };
  Endo dV = Endo::vertical(ctx);

  auto check_triple = [&](const Endo& F, const Endo& G, const Endo& H) {
    int pF = *F.parity(), pG = *G.parity();

    // Jacobi form: [F,[G,H]] = [[F,G],H] + (-1)^{|F||G|} [G,[F,H]].
    Endo lhs = graded_commutator(F, graded_commutator(G, H));
    Endo rhs = graded_commutator(graded_commutator(F, G), H) +
               graded_commutator(G, graded_commutator(F, H)).scaled(sgn(pF * pG));
    CHECK(endo_equal(lhs, rhs, pol));

    // Derivation form over composition: [F, G o H] = [F,G] o H
    //                                   + (-1)^{|F||G|} G o [F,H].
    Endo lhs2 = graded_commutator(F, compose(G, H));
    Endo rhs2 = compose(graded_commutator(F, G), H) +
                compose(G, graded_commutator(F, H)).scaled(sgn(pF * pG));
    CHECK(endo_equal(lhs2, rhs2, pol));

    // The d_V-derived bracket satisfies the same two identities with every
    // parity shifted by one.
    auto db = [&](const Endo& A, const Endo& B) { return derived_bracket(A, B, dV, pol); };
    Endo lhs3 = db(F, db(G, H));
    Endo rhs3 = db(db(F, G), H) + db(G, db(F, H)).scaled(sgn((pF + 1) * (pG + 1)));
    CHECK(endo_equal(lhs3, rhs3, pol));

    Endo lhs4 = db(F, compose(G, H));
    Endo rhs4 = compose(db(F, G), H) + compose(G, db(F, H)).scaled(sgn((pF + 1) * pG));
    CHECK(endo_equal(lhs4, rhs4, pol));
  };

  // odd F, even G, odd-parity mixed H.
  check_triple(Endo::insertion(Du),
               Endo::mult(wedge(Form::base_elem(ctx, 1), du).scaled(u)),
               Endo::mult(du) + Endo::insertion(Du1).scaled(rat(3)));
  // odd F, odd G, even H: exercises the (-1)^{|F||G|} branch.
  check_triple(Endo::insertion(Du1), Endo::mult(du.scaled(u)),
               Endo::mult(Form::scalar(u)).scaled(rat(2)));
}

TEST_CASE("structurally zero operands short-circuit") {
  auto ctx = JetContext::create(1, 1);
  Endo Z = Endo::zero(ctx);
  CHECK(Z.known_zero());
  CHECK(graded_commutator(Z, Endo::vertical(ctx)).known_zero());
  CHECK(endo_is_zero_on_probes(Z, fast_policy()));
}

} // TEST_SUITE
