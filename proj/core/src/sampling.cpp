#include "jetbrackets/sampling.hpp"

#include "jetbrackets/errors.hpp"

#include <algorithm>

namespace jetbrackets {

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw RangeError("empty sampling range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

bool Rng::chance(long num, long den) { return uniform(1, den) <= num; }

Rational random_rational(Rng& rng) {
  static const Rational pool[] = {rat(1),     rat(-1),    rat(2),     rat(1, 2),
                                  rat(-3),    rat(1, 3),  rat(5, 2),  rat(-2, 5),
                                  rat(3),     rat(-1, 2), rat(7, 3),  rat(-4)};
  return pool[rng.next() % (sizeof(pool) / sizeof(pool[0]))];
}

namespace {

// Coefficient generator pool: jet coordinates up to the order bound, plus
// base coordinates and opaque atoms when enabled.
std::vector<Gen> gen_pool(const CtxPtr& ctx, const SampleOptions& opt) {
  std::vector<Gen> pool;
  if (opt.allow_base)
    for (int i = 1; i <= ctx->n(); ++i) pool.push_back(Gen::base(ctx, i));
  for (const MultiIndex& I : multiindices_up_to(ctx->n(), opt.max_jet_order))
    for (int alpha = 1; alpha <= ctx->m(); ++alpha)
      pool.push_back(Gen::jet(ctx, alpha, I));
  if (opt.allow_opaque)
    for (const std::string& name : ctx->opaque_names())
      pool.push_back(Gen::opaque_atom(ctx, name, ctx->zero_index()));
  return pool;
}

} // namespace

std::vector<BasisElem> basis_pool(const CtxPtr& ctx, int max_jet_order) {
  std::vector<BasisElem> pool;
  for (int i = 1; i <= ctx->n(); ++i) pool.push_back(BasisElem::base(ctx, i));
  for (const MultiIndex& I : multiindices_up_to(ctx->n(), max_jet_order))
    for (int alpha = 1; alpha <= ctx->m(); ++alpha)
      pool.push_back(BasisElem::fiber_elem(ctx, alpha, I));
  std::sort(pool.begin(), pool.end(), basis_less);
  return pool;
}

Expr random_expr(Rng& rng, const CtxPtr& ctx, const SampleOptions& opt) {
  std::vector<Gen> pool = gen_pool(ctx, opt);
  Expr out(ctx);
  long terms = rng.uniform(1, opt.max_terms);
  for (long t = 0; t < terms; ++t) {
    Expr mono = Expr::constant(ctx, random_rational(rng));
    long factors = rng.uniform(0, opt.max_degree);
    for (long f = 0; f < factors; ++f)
      mono = mono * Expr::from_gen(ctx, pool[rng.next() % pool.size()]);
    out += mono;
  }
  if (out.is_zero()) out = Expr::constant(ctx, random_rational(rng));
  return out;
}

namespace {

template <Variance V>
GradedSum<V> random_graded(Rng& rng, const CtxPtr& ctx, int degree,
                           const SampleOptions& opt) {
  if (degree < 0) throw RangeError("negative form degree");
  std::vector<BasisElem> pool = basis_pool(ctx, opt.max_jet_order);
  if (degree > static_cast<int>(pool.size()))
    throw RangeError("requested degree exceeds the factor pool");
  GradedSum<V> out(ctx);
  long terms = rng.uniform(1, opt.max_terms);
  for (long t = 0; t < terms; ++t) {
    // Draw `degree` distinct pool indices so the monomial is nonzero.
    std::vector<std::size_t> picks;
    while (static_cast<int>(picks.size()) < degree) {
      std::size_t k = rng.next() % pool.size();
      if (std::find(picks.begin(), picks.end(), k) == picks.end()) picks.push_back(k);
    }
    WedgeMono factors;
    factors.reserve(picks.size());
    for (std::size_t k : picks) factors.push_back(pool[k]);
    out += GradedSum<V>::term(ctx, std::move(factors), random_expr(rng, ctx, opt));
  }
  if (out.terms().empty()) {
    // Cancellation between terms; retry with a single fresh term.
    std::vector<std::size_t> picks;
    while (static_cast<int>(picks.size()) < degree) {
      std::size_t k = rng.next() % pool.size();
      if (std::find(picks.begin(), picks.end(), k) == picks.end()) picks.push_back(k);
    }
    WedgeMono factors;
    for (std::size_t k : picks) factors.push_back(pool[k]);
    out += GradedSum<V>::term(ctx, std::move(factors),
                              Expr::constant(ctx, random_rational(rng)));
  }
  return out;
}

} // namespace

Form random_form(Rng& rng, const CtxPtr& ctx, int degree, const SampleOptions& opt) {
  return random_graded<Variance::Covector>(rng, ctx, degree, opt);
}

Multivector random_multivector(Rng& rng, const CtxPtr& ctx, int degree,
                               const SampleOptions& opt) {
  return random_graded<Variance::Vector>(rng, ctx, degree, opt);
}

} // namespace jetbrackets
