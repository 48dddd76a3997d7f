#pragma once

#include "jetbrackets/metric.hpp"
#include "jetbrackets/schouten.hpp"

#include <map>

namespace jetbrackets {

/// Sparse symmetric coefficient table on pairs of jet multiindices:
/// (I, J) -> eta^{IJ}. Missing mirror entries are filled symmetrically;
/// conflicting mirrors are rejected.
using OrderTable = std::map<std::pair<MultiIndex, MultiIndex>, Rational>;

/// The degree-3 multivector
///   P = sum_{alpha,beta,(I,J),i} eta^{alpha beta} eta^{IJ}
///       Du^alpha_I ^ Du^beta_{J+e_i} ^ Dx^i
/// with constant coefficient matrices. eta_fields must be m x m; an empty
/// eta_orders table means the first-order convention eta^{(0)(0)} = 1 with
/// all other entries zero. Raising J past the order cap throws
/// OrderOverflow; factors are assembled in the displayed order and
/// canonicalized, so coincident factors drop out automatically.
Multivector poisson_multivector(const std::vector<std::vector<Rational>>& eta_fields,
                                const OrderTable& eta_orders, const CtxPtr& ctx);

/// A multivector together with the sealed attestation that its self
/// bracket vanishes. create() computes vsn_bracket(P, P) symbolically and
/// throws PoissonCheckFailed unless it is exactly zero; the value is
/// immutable afterwards, so the check never needs repeating.
class PoissonStructure {
public:
  static PoissonStructure create(const Multivector& P);

  const Multivector& multivector() const { return P_; }
  const CtxPtr& ctx() const { return P_.ctx(); }

private:
  explicit PoissonStructure(Multivector P) : P_(std::move(P)) {}
  Multivector P_;
};

/// The bracket on forms induced by P through the musical isomorphisms:
///   {alpha, beta} = flat( [[ [[sharp(alpha), P]], sharp(beta) ]] )
/// where [[ , ]] is vsn_bracket. Degree |alpha|+|beta|+1 for the standard
/// degree-3 P. Leibniz in the second slot over the wedge product.
Form poisson_leibniz(const Form& alpha, const Form& beta, const PoissonStructure& P,
                     const Metric& g);

/// Convenience overload validating the self-bracket of P on every call;
/// throws PoissonCheckFailed when [[P, P]] != 0.
Form poisson_leibniz(const Form& alpha, const Form& beta, const Multivector& P,
                     const Metric& g);

} // namespace jetbrackets
