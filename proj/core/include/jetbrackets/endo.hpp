#pragma once

#include "jetbrackets/differentials.hpp"
#include "jetbrackets/sampling.hpp"

#include <memory>
#include <optional>
#include <string>

namespace jetbrackets {

/// Reproducibility contract for probe-based operator equality: operators
/// are compared by applying them to a fixed deterministic family of forms.
/// The family is the full enumeration of wedge monomials up to enum_degree
/// over the sub-basis with jet order <= enum_jet_order (coefficients cycled
/// from a seeded generic polynomial pool), plus seeded random monomials of
/// higher degree and seeded random multi-term forms.
struct ProbePolicy {
  std::uint64_t seed = 0xA5F152E6D1C3B797ULL;
  int enum_degree = 2;
  int enum_jet_order = 1;
  int random_monomials = 24; // single-monomial probes of higher degree
  int max_degree = 4;        // top probe degree
  int random_jet_order = 2;  // jet order bound for the random probes
  int random_forms = 16;     // multi-term mixed-degree probes
};

/// The probe family for a context under the given policy. Deterministic:
/// depends only on (context, policy).
std::vector<Form> probe_family(const CtxPtr& ctx, const ProbePolicy& policy = {});

/// Graded endomorphism of the form algebra: an immutable build-tree over
/// the generators {identity, insertion by a multivector, the vertical
/// differential, left exterior multiplication by a form} closed under
/// scaling, sum, composition, and graded commutator. Evaluation is lazy
/// and pure; the tree is retained for reporting via describe().
class Endo {
public:
  /// Generators.
  static Endo identity(const CtxPtr& ctx);
  static Endo zero(const CtxPtr& ctx);
  static Endo insertion(const Multivector& X);
  static Endo vertical(const CtxPtr& ctx);
  static Endo mult(const Form& w);

  /// Combinators.
  Endo scaled(const Rational& c) const;
  friend Endo operator+(const Endo& a, const Endo& b);
  friend Endo operator-(const Endo& a, const Endo& b);
  /// f after g: compose(f, g) applies g first.
  friend Endo compose(const Endo& f, const Endo& g);

  const CtxPtr& ctx() const { return ctx_; }

  /// Graded degree when the tree is homogeneous; nullopt for genuinely
  /// mixed sums. Zero reports degree 0.
  std::optional<int> degree() const { return degree_; }

  /// Graded parity (0 even, 1 odd) when defined; a sum of components whose
  /// degrees differ by an even amount still has a parity. The commutator
  /// sign only depends on parity, so this is what the brackets require.
  std::optional<int> parity() const { return parity_; }

  /// Structurally zero (evaluates to 0 on everything, no probes needed).
  bool known_zero() const { return known_zero_; }

  /// Evaluate on a form. Linear; propagates OrderOverflow from the
  /// differential generators.
  Form apply(const Form& alpha) const;

  /// Human-readable rendering of the build-tree.
  std::string describe() const;

  /// Implementation detail exposed for the evaluator; not part of the API.
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

private:
  friend Endo graded_commutator(const Endo& F, const Endo& G);

  Endo(CtxPtr ctx, NodePtr node, std::optional<int> degree, std::optional<int> parity,
       bool known_zero);

  CtxPtr ctx_;
  NodePtr node_;
  std::optional<int> degree_;
  std::optional<int> parity_;
  bool known_zero_;
};

/// Evaluation entry point mirroring Endo::apply.
Form endo_apply(const Endo& F, const Form& alpha);

/// F o G - (-1)^{|F||G|} G o F. Operands must have a defined graded parity
/// (DegreeError otherwise); a structurally zero operand short-circuits to
/// the zero operator.
Endo graded_commutator(const Endo& F, const Endo& G);

/// Derived bracket [[F, delta], G]. Requires the graded commutator
/// [delta, delta] to vanish on the probe family; throws DeltaNotSquareZero
/// when the check fails.
Endo derived_bracket(const Endo& F, const Endo& G, const Endo& delta,
                     const ProbePolicy& policy = {});

/// Probe-family equality: applies both operators to every probe and
/// compares the resulting forms exactly.
bool endo_equal(const Endo& F, const Endo& G, const ProbePolicy& policy = {});

/// True when the operator annihilates the whole probe family.
bool endo_is_zero_on_probes(const Endo& F, const ProbePolicy& policy = {});

} // namespace jetbrackets
