#pragma once

#include "jetbrackets/exterior.hpp"

#include <cstdint>

namespace jetbrackets {

/// Deterministic 64-bit generator (splitmix64). Every randomized check in
/// the library draws from this so reports and tests are byte-identical
/// across runs and platforms for a fixed seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  long uniform(long lo, long hi);

  /// True with probability num/den.
  bool chance(long num, long den);

private:
  std::uint64_t state_;
};

/// Knobs for random sample generation.
struct SampleOptions {
  int max_terms = 3;     // terms per polynomial / graded sum
  int max_degree = 2;    // generators multiplied per monomial
  int max_jet_order = 2; // jet order of coordinates that may appear
  bool allow_base = true;    // base coordinates in coefficients
  bool allow_opaque = false; // opaque atoms in coefficients
};

/// Draws from a fixed pool of generic nonzero rationals (mixed signs and
/// denominators) so samples exercise non-unit arithmetic.
Rational random_rational(Rng& rng);

/// Random polynomial with up to max_terms monomials; never the zero
/// polynomial. Generators drawn from jet coordinates with order up to
/// max_jet_order, plus base coordinates / opaque atoms when allowed.
Expr random_expr(Rng& rng, const CtxPtr& ctx, const SampleOptions& opt);

/// Homogeneous random form of the given degree with up to max_terms terms
/// and random_expr coefficients; degree 0 gives a scalar form. Factors are
/// drawn from the full dx/du pool with jet order up to max_jet_order.
Form random_form(Rng& rng, const CtxPtr& ctx, int degree, const SampleOptions& opt);

/// Same shape on the vector side (Dx/Du factors).
Multivector random_multivector(Rng& rng, const CtxPtr& ctx, int degree,
                               const SampleOptions& opt);

/// The factor pool the random graded sums draw from: all base directions
/// and all (alpha, I) with |I| <= max_jet_order, in canonical order.
std::vector<BasisElem> basis_pool(const CtxPtr& ctx, int max_jet_order);

} // namespace jetbrackets
