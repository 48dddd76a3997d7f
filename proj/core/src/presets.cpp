#include "jetbrackets/presets.hpp"

#include "jetbrackets/render.hpp"

namespace jetbrackets {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] == perm[b]) return 0;
      if (perm[a] > perm[b]) ++inversions;
    }
  return inversions % 2 == 0 ? 1 : -1;
}

HamiltonianProblem oscillator_problem() {
  auto ctx = JetContext::create(1, 1, 8);
  Expr u = Expr::fiber_coord(ctx, 1);
  Expr chi = (u * u) / rat(2);
  Form phi = Form::scalar(Expr::jet_coord(ctx, 1, MultiIndex::from_indices(1, {1}, 8)));
  Multivector P = poisson_multivector({{rat(1)}}, {}, ctx);
  return HamiltonianProblem::create(chi, phi, PoissonStructure::create(P),
                                    Metric::identity(ctx));
}

HamiltonianProblem maxwell_problem() {
  auto ctx = JetContext::create(4, 4, 8, {"j1", "j2", "j3", "j4"});

  std::vector<std::vector<Rational>> eta(4, std::vector<Rational>(4, rat(0)));
  eta[0][0] = rat(1);
  eta[1][1] = rat(1);
  eta[2][2] = rat(1);
  eta[3][3] = rat(-1);

  // chi = -(1/3) eta_{mu nu} u^mu j^nu; the sign makes the source terms land
  // on the right-hand side of the emitted equations.
  Expr chi(ctx);
  for (int mu = 1; mu <= 4; ++mu) {
    Rational c = eta[static_cast<std::size_t>(mu - 1)][static_cast<std::size_t>(mu - 1)];
    c = -c / rat(3);
    chi += Expr::fiber_coord(ctx, mu) * Expr::opaque(ctx, "j" + std::to_string(mu)) * c;
  }

  // phi = (1/2) eps^mu_{nu rho sigma} u^nu_{(e_mu)} dx^rho ^ dx^sigma,
  // summed over all permutations (mu, nu, rho, sigma) of (1,2,3,4).
  Form phi(ctx);
  MultiIndex zero(4);
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu)
      for (int rho = 1; rho <= 4; ++rho)
        for (int sigma = 1; sigma <= 4; ++sigma) {
          int sign = permutation_sign({mu, nu, rho, sigma});
          if (sign == 0) continue;
          Rational c = eta[static_cast<std::size_t>(mu - 1)][static_cast<std::size_t>(mu - 1)];
          c *= rat(sign, 2);
          Expr coeff = Expr::jet_coord(ctx, nu, zero.inserted(mu, 8)) * c;
          phi += Form::term(ctx, {BasisElem::base(ctx, rho), BasisElem::base(ctx, sigma)},
                            coeff);
        }

  Multivector P = poisson_multivector(eta, {}, ctx);
  Metric g = Metric::create(ctx, eta);
  return HamiltonianProblem::create(chi, phi, PoissonStructure::create(P), g);
}

namespace {

ProblemConfig config_of(const HamiltonianProblem& prob,
                        std::vector<std::vector<Rational>> eta_fields) {
  ProblemConfig cfg;
  const auto& ctx = prob.ctx();
  cfg.n = ctx->n();
  cfg.m = ctx->m();
  cfg.order_cap = ctx->order_cap();
  cfg.opaque = ctx->opaque_names();
  cfg.metric_base = prob.metric().base_block();
  for (const auto& e : prob.metric().fiber_entries())
    cfg.metric_fiber.push_back({e.row.first, e.row.second.to_indices(), e.col.first,
                                e.col.second.to_indices(), e.value});
  cfg.metric_allow_indefinite = prob.metric().indefinite_fiber_allowed();
  cfg.eta_fields = std::move(eta_fields);
  cfg.chi = render(prob.chi(), RenderFormat::Text);
  cfg.phi = render(prob.phi(), RenderFormat::Text);
  return cfg;
}

} // namespace

ProblemConfig oscillator_config() {
  return config_of(oscillator_problem(), {{rat(1)}});
}

ProblemConfig maxwell_config() {
  std::vector<std::vector<Rational>> eta(4, std::vector<Rational>(4, rat(0)));
  eta[0][0] = rat(1);
  eta[1][1] = rat(1);
  eta[2][2] = rat(1);
  eta[3][3] = rat(-1);
  return config_of(maxwell_problem(), std::move(eta));
}

} // namespace jetbrackets
