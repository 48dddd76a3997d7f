#pragma once

#include "jetbrackets/context.hpp"
#include "jetbrackets/expr.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace jetbrackets {

/// Distinguishes the covector algebra (dx^i, du^alpha_I) from the vector
/// algebra (Dx^i, Du^alpha_I). The two share all structure; insertion and
/// the musical maps pair them.
enum class Variance : std::uint8_t { Covector, Vector };

/// One wedge factor: a base-direction element (dx^i or Dx^i) or a
/// fiber-direction element (du^alpha_I or Du^alpha_I).
struct BasisElem {
  bool fiber;
  int idx;       // base index i, or fiber index alpha
  MultiIndex mi; // fiber only; zero multiindex for base elements

  static BasisElem base(const CtxPtr& ctx, int i);
  static BasisElem fiber_elem(const CtxPtr& ctx, int alpha, MultiIndex I);

  friend bool operator==(const BasisElem&, const BasisElem&) = default;
};

/// Strict total order: base elements first (by index), then fiber elements
/// by (|I|, I, alpha). Wedge monomials are kept strictly increasing.
bool basis_less(const BasisElem& a, const BasisElem& b);

/// Strictly increasing factor list; the empty list is the scalar monomial.
using WedgeMono = std::vector<BasisElem>;

struct WedgeLess {
  bool operator()(const WedgeMono& a, const WedgeMono& b) const;
};

/// (#base factors, #fiber factors) of one monomial.
std::pair<int, int> bigrade_of(const WedgeMono& mono);

/// Canonical sum of Expr-coefficient wedge monomials. Always canonical:
/// strictly increasing monomials, reordering signs absorbed into the
/// coefficients, no zero terms. Immutable value semantics.
template <Variance V>
class GradedSum {
public:
  using TermMap = std::map<WedgeMono, Expr, WedgeLess>;

  explicit GradedSum(CtxPtr ctx);

  /// Degree-0 element with the given coefficient.
  static GradedSum scalar(const Expr& coeff);
  /// Single basis factor of degree 1.
  static GradedSum basis(const CtxPtr& ctx, const BasisElem& b);
  static GradedSum base_elem(const CtxPtr& ctx, int i);
  static GradedSum fiber_elem(const CtxPtr& ctx, int alpha, MultiIndex I);
  /// coeff times the wedge of `factors` in the order given; the factor list
  /// is canonicalized with the antisymmetry sign, repeated factors give 0.
  static GradedSum term(const CtxPtr& ctx, std::vector<BasisElem> factors, const Expr& coeff);

  const CtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True when every monomial has the same degree (zero counts as
  /// homogeneous of any degree).
  bool is_homogeneous() const;
  /// Degree of a homogeneous value; 0 for zero; throws DegreeError on mixed.
  int degree() const;
  /// The part of the given degree.
  GradedSum homogeneous_part(int deg) const;
  /// Largest monomial degree present (0 for zero).
  int max_degree() const;

  GradedSum operator-() const;
  GradedSum& operator+=(const GradedSum& rhs);
  GradedSum& operator-=(const GradedSum& rhs);
  friend GradedSum operator+(GradedSum lhs, const GradedSum& rhs) { return lhs += rhs; }
  friend GradedSum operator-(GradedSum lhs, const GradedSum& rhs) { return lhs -= rhs; }

  /// Multiplication by a function (degree-0 coefficient).
  GradedSum scaled(const Expr& c) const;
  GradedSum scaled(const Rational& c) const;

  friend bool operator==(const GradedSum& a, const GradedSum& b) {
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedSum& a, const GradedSum& b) { return !(a == b); }

  /// Internal: adds coeff * mono, canonicalizing away zero coefficients.
  /// The monomial must already be strictly increasing.
  void add_canonical(const WedgeMono& mono, const Expr& coeff);

private:
  CtxPtr ctx_;
  TermMap terms_;
};

using Form = GradedSum<Variance::Covector>;
using Multivector = GradedSum<Variance::Vector>;

/// Graded-commutative exterior product in canonical form.
template <Variance V>
GradedSum<V> wedge(const GradedSum<V>& a, const GradedSum<V>& b);

/// Insertion of a multivector into a form. A single vector acts as the
/// degree -1 anti-derivation pairing Dx^i with dx^i and Du^alpha_I with
/// du^alpha_I; for a decomposable X_1 ^ ... ^ X_p the factors act in list
/// order, the first innermost, so that insert(X ^ Y, a) equals
/// insert(Y, insert(X, a)). A degree-0 component of X multiplies.
Form insert(const Multivector& X, const Form& alpha);

/// Conjugate insertion: contraction of a one-form into a multivector,
/// the degree -1 anti-derivation with co_insert(w, V) = <w, V> on single
/// vectors. Throws DegreeError unless every term of w has degree 1.
Multivector co_insert(const Form& omega, const Multivector& X);

/// Grammar-conformant text (dx1^du[1], Dx1^Du[1;2], ...); doctest printer.
std::ostream& operator<<(std::ostream& os, const Form& f);
std::ostream& operator<<(std::ostream& os, const Multivector& X);

} // namespace jetbrackets
