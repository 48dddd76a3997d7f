#include "jetbrackets/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "jetbrackets/differentials.hpp"
#include "jetbrackets/endo.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/hamiltonian.hpp"
#include "jetbrackets/metric.hpp"
#include "jetbrackets/poisson.hpp"
#include "jetbrackets/sampling.hpp"
#include "jetbrackets/schouten.hpp"

namespace jetbrackets {

namespace {

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Per-law pass/fail counter with a capped list of failure details, so a
/// broken law produces a short reproducible description instead of a wall
/// of terms.
struct LawTally {
  std::string label;
  int run = 0;
  int failed = 0;
  std::vector<std::string> details;

  explicit LawTally(std::string l) : label(std::move(l)) {}

  void note(bool ok, const std::function<std::string()>& detail) {
    ++run;
    if (!ok) {
      ++failed;
      if (details.size() < 3) details.push_back(detail());
    }
  }
  void note(bool ok, int case_index) {
    note(ok, [case_index] { return "case " + std::to_string(case_index); });
  }
};

SuiteReport assemble(const std::string& name, std::uint64_t seed, int cases,
                     const std::vector<const LawTally*>& laws,
                     const std::vector<std::string>& extra_lines = {}) {
  SuiteReport rep;
  rep.name = name;
  rep.cases_run = cases;
  std::ostringstream os;
  os << name << " suite: seed " << seed << ", " << cases << " cases\n";
  for (const LawTally* law : laws) {
    rep.failures += law->failed;
    if (law->failed == 0) {
      os << "  " << law->label << ": OK (" << law->run << " checks)\n";
    } else {
      os << "  " << law->label << ": FAILED " << law->failed << "/" << law->run << " checks\n";
      for (const auto& d : law->details) os << "    " << d << "\n";
    }
  }
  for (const auto& line : extra_lines) os << line << "\n";
  os << "result: " << (rep.failures == 0 ? "PASSED" : "FAILED") << "\n";
  rep.text = os.str();
  return rep;
}

std::vector<CtxPtr> small_contexts(bool with_opaque) {
  std::vector<std::pair<int, int>> dims = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}};
  std::vector<CtxPtr> out;
  for (auto [n, m] : dims) {
    std::vector<std::string> names;
    if (with_opaque) names = {"f"};
    out.push_back(JetContext::create(n, m, 8, names));
  }
  return out;
}

int sign_pow(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

} // namespace

SuiteReport run_differentials_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  auto pool = small_contexts(true);
  SampleOptions opt;
  opt.max_terms = 2;
  opt.max_degree = 2;
  opt.max_jet_order = 3;
  opt.allow_opaque = true;

  LawTally dv2("d_V o d_V = 0");
  LawTally dh2("d_H o d_H = 0");
  LawTally mixed("d_H o d_V + d_V o d_H = 0");
  LawTally leib_v("d_V(a ^ b) = d_V(a) ^ b + (-1)^|a| a ^ d_V(b)");
  LawTally leib_h("d_H(a ^ b) = d_H(a) ^ b + (-1)^|a| a ^ d_H(b)");

  for (int k = 0; k < cases; ++k) {
    const CtxPtr& ctx = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
    long pool_size = static_cast<long>(basis_pool(ctx, opt.max_jet_order).size());
    int da = static_cast<int>(rng.uniform(0, std::min<long>(4, pool_size)));
    int db = static_cast<int>(rng.uniform(0, std::min<long>(2, pool_size)));
    Form a = random_form(rng, ctx, da, opt);
    Form b = random_form(rng, ctx, db, opt);

    dv2.note(d_vertical(d_vertical(a)).is_zero(), k);
    dh2.note(d_horizontal(d_horizontal(a)).is_zero(), k);
    mixed.note((d_horizontal(d_vertical(a)) + d_vertical(d_horizontal(a))).is_zero(), k);

    int sa = sign_pow(da);
    Form lhs_v = d_vertical(wedge(a, b));
    Form rhs_v = wedge(d_vertical(a), b) + wedge(a, d_vertical(b)).scaled(rat(sa));
    leib_v.note(lhs_v == rhs_v, k);
    Form lhs_h = d_horizontal(wedge(a, b));
    Form rhs_h = wedge(d_horizontal(a), b) + wedge(a, d_horizontal(b)).scaled(rat(sa));
    leib_h.note(lhs_h == rhs_h, k);
  }
  return assemble("differentials", seed, cases, {&dv2, &dh2, &mixed, &leib_v, &leib_h});
}

namespace {

/// Random homogeneous operator: insertions, multiplications, the vertical
/// differential, compositions, and scalings — everything the commutator
/// calculus is defined over.
Endo random_endo(Rng& rng, const CtxPtr& ctx, const SampleOptions& opt, bool allow_compound) {
  long kinds = allow_compound ? 4 : 2;
  switch (rng.uniform(0, kinds)) {
    case 0: {
      long pool_size = static_cast<long>(basis_pool(ctx, opt.max_jet_order).size());
      int deg = static_cast<int>(rng.uniform(1, std::min<long>(2, pool_size)));
      return Endo::insertion(random_multivector(rng, ctx, deg, opt));
    }
    case 1:
      return Endo::mult(random_form(rng, ctx, static_cast<int>(rng.uniform(0, 2)), opt));
    case 2:
      return Endo::vertical(ctx);
    case 3:
      return compose(random_endo(rng, ctx, opt, false), random_endo(rng, ctx, opt, false));
    case 4:
    default:
      return random_endo(rng, ctx, opt, false).scaled(random_rational(rng));
  }
}

} // namespace

SuiteReport run_brackets_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  std::vector<CtxPtr> pool = {JetContext::create(1, 1, 8), JetContext::create(2, 1, 8),
                              JetContext::create(1, 2, 8)};
  SampleOptions opt;
  opt.max_terms = 2;
  opt.max_degree = 2;
  opt.max_jet_order = 1;

  LawTally skew("[F, G] = -(-1)^{|F||G|} [G, F]");
  LawTally jacobi0("[F, [G, H]] = [[F, G], H] + (-1)^{|F||G|} [G, [F, H]]");
  LawTally leibniz0("[F, G o H] = [F, G] o H + (-1)^{|F||G|} G o [F, H]");
  LawTally jacobi1(
      "[F, [G, H]]_dV = [[F, G]_dV, H]_dV + (-1)^{(|F|+1)(|G|+1)} [G, [F, H]]_dV");
  LawTally leibniz1("[F, G o H]_dV = [F, G]_dV o H + (-1)^{(|F|+1)|G|} G o [F, H]_dV");

  for (int k = 0; k < cases; ++k) {
    const CtxPtr& ctx = pool[static_cast<std::size_t>(k) % pool.size()];
    ProbePolicy policy;
    policy.seed = seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k + 1));
    Endo F = random_endo(rng, ctx, opt, true);
    Endo G = random_endo(rng, ctx, opt, true);
    Endo H = random_endo(rng, ctx, opt, true);
    int df = *F.degree();
    int dg = *G.degree();

    skew.note(endo_equal(graded_commutator(F, G),
                         graded_commutator(G, F).scaled(rat(-sign_pow(df * dg))), policy),
              k);
    {
      Endo lhs = graded_commutator(F, graded_commutator(G, H));
      Endo rhs = graded_commutator(graded_commutator(F, G), H) +
                 graded_commutator(G, graded_commutator(F, H)).scaled(rat(sign_pow(df * dg)));
      jacobi0.note(endo_equal(lhs, rhs, policy), k);
    }
    {
      Endo lhs = graded_commutator(F, compose(G, H));
      Endo rhs = compose(graded_commutator(F, G), H) +
                 compose(G, graded_commutator(F, H)).scaled(rat(sign_pow(df * dg)));
      leibniz0.note(endo_equal(lhs, rhs, policy), k);
    }
    Endo dv = Endo::vertical(ctx);
    auto bra = [&](const Endo& A, const Endo& B) {
      return derived_bracket(A, B, dv, policy);
    };
    {
      Endo lhs = bra(F, bra(G, H));
      Endo rhs = bra(bra(F, G), H) +
                 bra(G, bra(F, H)).scaled(rat(sign_pow((df + 1) * (dg + 1))));
      jacobi1.note(endo_equal(lhs, rhs, policy), k);
    }
    {
      Endo lhs = bra(F, compose(G, H));
      Endo rhs = compose(bra(F, G), H) +
                 compose(G, bra(F, H)).scaled(rat(sign_pow((df + 1) * dg)));
      leibniz1.note(endo_equal(lhs, rhs, policy), k);
    }
  }
  return assemble("brackets", seed, cases, {&skew, &jacobi0, &leibniz0, &jacobi1, &leibniz1});
}

SuiteReport run_schouten_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  std::vector<CtxPtr> pool = {JetContext::create(1, 1, 8), JetContext::create(2, 1, 8),
                              JetContext::create(2, 2, 8), JetContext::create(3, 1, 8)};
  SampleOptions opt;
  opt.max_terms = 2;
  opt.max_degree = 2;
  opt.max_jet_order = 2;

  LawTally oracle("insertion oracle i_[[X,Y]] = [[i_X, d_V], i_Y] on probes");
  LawTally symmetry("[[X, Y]] = (-1)^{|X|+|Y|+|X||Y|} [[Y, X]]");
  LawTally gradient("[[X, g]] = co_insert(d_V g, X) and [[f, Y]] = (-1)^{|Y|} co_insert(d_V f, Y)");
  LawTally pairwise("pairwise expansion on decomposables matches the bracket");
  LawTally degree_law("deg [[X, Y]] = |X| + |Y| - 1");

  for (int k = 0; k < cases; ++k) {
    const CtxPtr& ctx = pool[static_cast<std::size_t>(k) % pool.size()];
    ProbePolicy policy;
    policy.seed = seed ^ (0xBF58476D1CE4E5B9ULL * static_cast<std::uint64_t>(k + 1));
    long pool_size = static_cast<long>(basis_pool(ctx, opt.max_jet_order).size());
    long max_deg = std::min<long>(3, pool_size);
    int p = static_cast<int>(rng.uniform(0, max_deg));
    int q = static_cast<int>(rng.uniform(0, max_deg));
    Multivector X = random_multivector(rng, ctx, p, opt);
    Multivector Y = random_multivector(rng, ctx, q, opt);

    OracleReport rep = vsn_oracle_check(X, Y, policy);
    oracle.note(rep.match, [&] { return "case " + std::to_string(k) + ": " + rep.detail; });

    Multivector lhs = vsn_bracket(X, Y);
    Multivector rhs = vsn_bracket(Y, X).scaled(rat(sign_pow(p + q + p * q)));
    symmetry.note(lhs == rhs, k);

    Expr f = random_expr(rng, ctx, opt);
    gradient.note(vsn_bracket(X, Multivector::scalar(f)) == co_insert(d_vertical(f), X) &&
                      vsn_bracket(Multivector::scalar(f), Y) ==
                          co_insert(d_vertical(f), Y).scaled(rat(sign_pow(q))),
                  k);

    {
      int pp = static_cast<int>(rng.uniform(1, std::min<long>(3, pool_size)));
      int qq = static_cast<int>(rng.uniform(1, std::min<long>(3, pool_size)));
      std::vector<Multivector> xs, ys;
      Multivector Xw = Multivector::scalar(Expr::constant(ctx, rat(1)));
      Multivector Yw = Xw;
      for (int i = 0; i < pp; ++i) {
        xs.push_back(random_multivector(rng, ctx, 1, opt));
        Xw = wedge(Xw, xs.back());
      }
      for (int i = 0; i < qq; ++i) {
        ys.push_back(random_multivector(rng, ctx, 1, opt));
        Yw = wedge(Yw, ys.back());
      }
      pairwise.note(vsn_pairwise(xs, ys) == vsn_bracket(Xw, Yw), k);
    }

    bool deg_ok = true;
    if (!lhs.is_zero()) {
      for (const auto& [mono, c] : lhs.terms()) {
        (void)c;
        if (static_cast<int>(mono.size()) != p + q - 1) deg_ok = false;
      }
    }
    degree_law.note(deg_ok, k);
  }
  return assemble("schouten", seed, cases,
                  {&oracle, &symmetry, &gradient, &pairwise, &degree_law});
}

SuiteReport run_poisson_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);

  LawTally anchors("first-order anchor values {u, u} = 0 and {u, u_1} = -dx1");
  LawTally attest("random constant-coefficient structures attest [[P, P]] = 0");
  LawTally reject("a field-dependent candidate is rejected");

  {
    auto ctx = JetContext::create(1, 1, 8);
    PoissonStructure ps = PoissonStructure::create(poisson_multivector({{rat(1)}}, {}, ctx));
    Metric g = Metric::identity(ctx);
    Expr u = Expr::fiber_coord(ctx, 1);
    Expr u1 = Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1}, 8));
    Form uu = poisson_leibniz(Form::scalar(u), Form::scalar(u), ps, g);
    Form uu1 = poisson_leibniz(Form::scalar(u), Form::scalar(u1), ps, g);
    Form want = Form::term(ctx, {BasisElem::base(ctx, 1)}, Expr::constant(ctx, rat(-1)));
    anchors.note(uu.is_zero(), [&] { return "{u, u} = " + str(uu); });
    anchors.note(uu1 == want, [&] { return "{u, u_1} = " + str(uu1); });
  }

  for (int k = 0; k < cases; ++k) {
    int n = static_cast<int>(rng.uniform(1, 3));
    int m = static_cast<int>(rng.uniform(1, 3));
    auto ctx = JetContext::create(n, m, 8);
    std::vector<std::vector<Rational>> eta(static_cast<std::size_t>(m),
                                           std::vector<Rational>(static_cast<std::size_t>(m), rat(0)));
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        Rational v = rng.chance(1, 3) ? rat(0) : random_rational(rng);
        if (a == b && rational_sign(v) == 0) v = rat(1);
        eta[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
        eta[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
      }
    OrderTable orders;
    if (rng.chance(1, 2)) {
      auto mis = multiindices_up_to(n, 1);
      const MultiIndex& I = mis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(mis.size()) - 1))];
      const MultiIndex& J = mis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(mis.size()) - 1))];
      orders[{I, J}] = random_rational(rng);
    }
    bool ok = true;
    std::string why;
    try {
      Multivector P = poisson_multivector(eta, orders, ctx);
      PoissonStructure::create(P);
      ok = vsn_bracket(P, P).is_zero();
      if (!ok) why = "self bracket is nonzero";
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    attest.note(ok, [&] { return "case " + std::to_string(k) + ": " + why; });
  }

  {
    auto ctx = JetContext::create(2, 1, 8);
    MultiIndex e1 = MultiIndex::from_indices(2, {1}, 8);
    Multivector bad(ctx);
    bad += Multivector::term(ctx,
                             {BasisElem::fiber_elem(ctx, 1, MultiIndex::from_indices(2, {}, 8)),
                              BasisElem::base(ctx, 1)},
                             Expr::jet_coord(ctx, 1, e1));
    bad += Multivector::term(ctx, {BasisElem::fiber_elem(ctx, 1, e1), BasisElem::base(ctx, 2)},
                             Expr::fiber_coord(ctx, 1));
    bool threw = false;
    try {
      PoissonStructure::create(bad);
    } catch (const PoissonCheckFailed&) {
      threw = true;
    }
    reject.note(threw, [] { return std::string("field-dependent candidate was accepted"); });
  }

  return assemble("poisson", seed, cases, {&anchors, &attest, &reject});
}

SuiteReport run_closure_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  std::vector<CtxPtr> pool = {JetContext::create(2, 1, 8), JetContext::create(1, 2, 8),
                              JetContext::create(3, 1, 8)};
  SampleOptions opt;
  opt.max_terms = 2;
  opt.max_degree = 2;
  opt.max_jet_order = 1;

  LawTally second_slot("{chi, a ^ b} = a ^ {chi, b} + (-1)^{|b|} {chi, a} ^ b");
  LawTally two_sided(
      "pull(T(a ^ b)) = pull(d_H a - (-1)^{|b|} {chi, a}) ^ pull(b)"
      " + pull(a) ^ pull((-1)^{|a|} d_H b - {chi, b})");

  // For each degree of the first factor, how samples relate to the
  // constant-sign hypothesis: compatible with +1 only, with -1 only, with
  // both (the second product vanishes), or with neither.
  std::map<int, std::array<int, 4>> sign_survey; // deg -> {plus, minus, either, neither}
  std::string counterexample;

  for (int k = 0; k < cases; ++k) {
    const CtxPtr& ctx = pool[static_cast<std::size_t>(k) % pool.size()];
    std::vector<std::vector<Rational>> eta(
        static_cast<std::size_t>(ctx->m()),
        std::vector<Rational>(static_cast<std::size_t>(ctx->m()), rat(0)));
    for (std::size_t a = 0; a < eta.size(); ++a) eta[a][a] = rat(1);
    PoissonStructure ps = PoissonStructure::create(poisson_multivector(eta, {}, ctx));
    Metric g = Metric::identity(ctx);
    SampleOptions copt = opt;
    copt.allow_base = false;
    Expr chi = random_expr(rng, ctx, copt);
    auto bracket = [&](const Form& w) { return poisson_leibniz(Form::scalar(chi), w, ps, g); };
    auto theta = [&](const Form& w) { return d_horizontal(w) - bracket(w); };

    long pool_size = static_cast<long>(basis_pool(ctx, opt.max_jet_order).size());
    int da = static_cast<int>(rng.uniform(0, std::min<long>(2, pool_size)));
    int db = static_cast<int>(rng.uniform(0, std::min<long>(2, pool_size)));
    Form a = random_form(rng, ctx, da, opt);
    Form b = random_form(rng, ctx, db, opt);
    Form ab = wedge(a, b);

    second_slot.note(bracket(ab) == wedge(a, bracket(b)) +
                                        wedge(bracket(a), b).scaled(rat(sign_pow(db))),
                     k);

    Form left = jet_pullback(theta(ab));
    two_sided.note(
        left == wedge(jet_pullback(d_horizontal(a) - bracket(a).scaled(rat(sign_pow(db)))),
                      jet_pullback(b)) +
                    wedge(jet_pullback(a),
                          jet_pullback(d_horizontal(b).scaled(rat(sign_pow(da))) - bracket(b))),
        k);

    Form first = wedge(jet_pullback(theta(a)), jet_pullback(b));
    Form second = wedge(jet_pullback(a), jet_pullback(theta(b)));
    bool plus = left == first + second;
    bool minus = left == first - second;
    int slot = plus && minus ? 2 : plus ? 0 : minus ? 1 : 3;
    auto& row = sign_survey[da];
    ++row[static_cast<std::size_t>(slot)];
    if (slot == 3 && counterexample.empty())
      counterexample = "  first neither-sign sample: case " + std::to_string(k) +
                       ", deg a = " + std::to_string(da) + ", deg b = " + std::to_string(db) +
                       ", a = " + str(a) + ", b = " + str(b);
  }

  // The hypothesis asks for one constant sign per first-factor degree.
  bool constant_sign_exists = true;
  std::vector<std::string> extra;
  extra.push_back("  sign survey for pull(T(a^b)) = pull(T a)^pull(b) + "
                  "eps(|a|) pull(a)^pull(T b):");
  for (const auto& [deg, row] : sign_survey) {
    bool plus_ok = row[3] == 0 && row[1] == 0;
    bool minus_ok = row[3] == 0 && row[0] == 0;
    if (!plus_ok && !minus_ok) constant_sign_exists = false;
    std::ostringstream line;
    line << "    deg " << deg << ": +1-only " << row[0] << ", -1-only " << row[1] << ", either "
         << row[2] << ", neither " << row[3] << " -> "
         << (plus_ok && minus_ok ? "either sign" : plus_ok ? "+1" : minus_ok ? "-1" : "no sign");
    extra.push_back(line.str());
  }
  if (!counterexample.empty()) extra.push_back(counterexample);

  LawTally hypothesis("a constant sign eps(deg a) closes the one-sided product rule");
  hypothesis.note(constant_sign_exists, [] {
    return std::string(
        "no admissible sign assignment (expected; see docs/conventions.md)");
  });
  return assemble("closure", seed, cases, {&second_slot, &two_sided, &hypothesis}, extra);
}

} // namespace jetbrackets
