// Microbenchmarks for the hot operations: total derivatives, the horizontal
// differential, the multivector bracket, the form bracket, and the full
// four-dimensional field-equation derivation.

#include <benchmark/benchmark.h>

#include "jetbrackets/context.hpp"
#include "jetbrackets/differentials.hpp"
#include "jetbrackets/expr.hpp"
#include "jetbrackets/hamiltonian.hpp"
#include "jetbrackets/poisson.hpp"
#include "jetbrackets/presets.hpp"
#include "jetbrackets/sampling.hpp"
#include "jetbrackets/schouten.hpp"

namespace jb = jetbrackets;

namespace {

jb::Expr dense_expr(const jb::CtxPtr& ctx) {
  jb::Rng rng(17);
  jb::SampleOptions opt;
  opt.max_terms = 6;
  opt.max_degree = 3;
  opt.max_jet_order = 2;
  return jb::random_expr(rng, ctx, opt);
}

void BM_total_derivative(benchmark::State& state) {
  auto ctx = jb::JetContext::create(3, 2);
  jb::Expr f = dense_expr(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jb::total_derivative(f, 1));
  }
}
BENCHMARK(BM_total_derivative);

void BM_horizontal_differential(benchmark::State& state) {
  auto ctx = jb::JetContext::create(3, 2);
  jb::Rng rng(23);
  jb::SampleOptions opt;
  opt.max_terms = 4;
  jb::Form w = jb::random_form(rng, ctx, 2, opt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jb::d_horizontal(w));
  }
}
BENCHMARK(BM_horizontal_differential);

void BM_vsn_bracket(benchmark::State& state) {
  auto ctx = jb::JetContext::create(2, 2);
  jb::Rng rng(31);
  jb::SampleOptions opt;
  opt.max_terms = 3;
  jb::Multivector X = jb::random_multivector(rng, ctx, 2, opt);
  jb::Multivector Y = jb::random_multivector(rng, ctx, 2, opt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jb::vsn_bracket(X, Y));
  }
}
BENCHMARK(BM_vsn_bracket);

void BM_poisson_leibniz(benchmark::State& state) {
  jb::HamiltonianProblem prob = jb::maxwell_problem();
  jb::Rng rng(41);
  jb::SampleOptions opt;
  opt.max_terms = 2;
  opt.max_jet_order = 1;
  jb::Form a = jb::random_form(rng, prob.ctx(), 1, opt);
  jb::Form b = jb::random_form(rng, prob.ctx(), 1, opt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jb::poisson_leibniz(a, b, prob.poisson(), prob.metric()));
  }
}
BENCHMARK(BM_poisson_leibniz);

void BM_maxwell_derivation(benchmark::State& state) {
  for (auto _ : state) {
    jb::HamiltonianProblem prob = jb::maxwell_problem();
    benchmark::DoNotOptimize(jb::derive_field_equations(prob));
  }
}
BENCHMARK(BM_maxwell_derivation);

} // namespace

BENCHMARK_MAIN();
