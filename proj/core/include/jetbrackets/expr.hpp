#pragma once

#include "jetbrackets/context.hpp"
#include "jetbrackets/errors.hpp"
#include "jetbrackets/multiindex.hpp"
#include "jetbrackets/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jetbrackets {

/// Generator kinds, in ascending canonical rank.
enum class GenKind : std::uint8_t { Opaque = 0, Base = 1, Jet = 2 };

/// A polynomial generator: a base coordinate x^i, a fiber jet coordinate
/// u^alpha_I, or an opaque atom (name, D) standing for the |D|-th formal
/// base derivative of an externally prescribed function of the base
/// coordinates. Opaque atoms never carry fiber dependence.
struct Gen {
  GenKind kind;
  int idx;        // Base: i in 1..n; Jet: alpha in 1..m; Opaque: unused (0)
  MultiIndex mi;  // Jet: the jet multiindex; Opaque: the derivative multiindex
  std::string name; // Opaque only

  static Gen base(const CtxPtr& ctx, int i);
  static Gen jet(const CtxPtr& ctx, int alpha, MultiIndex I);
  static Gen opaque_atom(const CtxPtr& ctx, const std::string& name, MultiIndex D);

  friend bool operator==(const Gen&, const Gen&) = default;
};

/// Strict total order on generators: Opaque < Base < Jet; opaque atoms by
/// (name, |D|, D), base coordinates by index, jet coordinates by
/// (|I|, I, alpha) so that higher jet orders rank higher. The leading
/// monomial of an emitted equation is selected through this order.
bool gen_less(const Gen& a, const Gen& b);

/// A product of generator powers, factors sorted ascending by gen_less,
/// generators unique, powers >= 1. The empty monomial is the constant 1.
struct Monomial {
  std::vector<std::pair<Gen, int>> factors;

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical total order on monomials: compare factor lists from the
/// largest generator downward; the first differing generator or power
/// decides, and a monomial extending another ranks higher. The empty
/// monomial is the minimum.
bool mono_less(const Monomial& a, const Monomial& b);

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

/// Exact-rational multivariate polynomial over the generators of one
/// context. Always canonical: no zero coefficients, monomials merged and
/// ordered. Immutable value semantics; all operations are pure.
class Expr {
public:
  using TermMap = std::map<Monomial, Rational, MonoLess>;

  /// The zero polynomial.
  explicit Expr(CtxPtr ctx);

  static Expr constant(CtxPtr ctx, const Rational& value);
  static Expr base_coord(const CtxPtr& ctx, int i);
  static Expr jet_coord(const CtxPtr& ctx, int alpha, MultiIndex I);
  /// Plain jet coordinate u^alpha with empty multiindex.
  static Expr fiber_coord(const CtxPtr& ctx, int alpha);
  static Expr opaque(const CtxPtr& ctx, const std::string& name);
  static Expr opaque_derivative(const CtxPtr& ctx, const std::string& name, MultiIndex D);
  static Expr from_gen(CtxPtr ctx, const Gen& g);
  /// Single term; the monomial must be canonical over ctx.
  static Expr term(CtxPtr ctx, Monomial mono, const Rational& coeff);

  const CtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero included).
  Rational constant_value() const;

  /// The maximal monomial and its coefficient. Throws DegreeError on zero.
  std::pair<Monomial, Rational> leading() const;

  /// All distinct jet generators appearing in any term, ascending.
  std::vector<Gen> jet_generators() const;

  Expr operator-() const;
  Expr& operator+=(const Expr& rhs);
  Expr& operator-=(const Expr& rhs);
  friend Expr operator+(Expr lhs, const Expr& rhs) { return lhs += rhs; }
  friend Expr operator-(Expr lhs, const Expr& rhs) { return lhs -= rhs; }
  friend Expr operator*(const Expr& lhs, const Expr& rhs);
  friend Expr operator*(const Rational& c, const Expr& e);
  friend Expr operator*(const Expr& e, const Rational& c) { return c * e; }
  /// Division by a nonzero rational.
  friend Expr operator/(const Expr& e, const Rational& c);
  Expr pow(int k) const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  /// Grammar-conformant text; also the doctest printer.
  friend std::ostream& operator<<(std::ostream& os, const Expr& e);

private:
  void add_term(const Monomial& mono, const Rational& coeff);

  CtxPtr ctx_;
  TermMap terms_;
};

/// Formal partial derivative along base direction i: jet coordinates are
/// independent generators (derivative zero), an opaque atom (name, D)
/// differentiates to (name, D + e_i). Throws OrderOverflow when an opaque
/// derivative order would exceed the cap.
Expr partial_base(const Expr& f, int i);

/// Formal partial derivative with respect to u^alpha_I under the
/// distinct-exponent-vector convention: a plain Kronecker delta on
/// generators, no combinatorial factor. Opaque atoms differentiate to zero.
Expr partial_fiber(const Expr& f, int alpha, const MultiIndex& I);

/// Total derivative D_i f = partial_base(f, i)
///                        + sum over jet generators u^alpha_I of f of
///                          partial_fiber(f, alpha, I) * u^alpha_{I+e_i}.
/// Throws OrderOverflow when any promoted jet coordinate would exceed the
/// cap; silently truncating would corrupt the differential identities.
Expr total_derivative(const Expr& f, int i);

/// Grammar-conformant rendering of a single generator (x1, u[2;1,1], j(x;2)).
std::string gen_to_text(const Gen& g);

} // namespace jetbrackets
