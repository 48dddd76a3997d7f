#include "jetbrackets/endo.hpp"

#include "jetbrackets/errors.hpp"

#include <functional>
#include <sstream>

namespace jetbrackets {

// ---------------------------------------------------------------------------
// Probe family
// ---------------------------------------------------------------------------

namespace {

void combinations(const std::vector<BasisElem>& pool, int degree,
                  std::size_t start, WedgeMono& current,
                  const std::function<void(const WedgeMono&)>& emit) {
  if (degree == 0) {
    emit(current);
    return;
  }
  for (std::size_t k = start; k + static_cast<std::size_t>(degree) <= pool.size() + 1 &&
                              k < pool.size();
       ++k) {
    current.push_back(pool[k]);
    combinations(pool, degree - 1, k + 1, current, emit);
    current.pop_back();
  }
}

} // namespace

std::vector<Form> probe_family(const CtxPtr& ctx, const ProbePolicy& policy) {
  std::vector<Form> probes;
  Rng rng(policy.seed);

  // Generic coefficient pool, fixed by the seed.
  SampleOptions copt;
  copt.max_terms = 2;
  copt.max_degree = 2;
  copt.max_jet_order = 1;
  std::vector<Expr> coeffs;
  for (int k = 0; k < 6; ++k) coeffs.push_back(random_expr(rng, ctx, copt));
  std::size_t ci = 0;
  auto next_coeff = [&]() -> const Expr& { return coeffs[ci++ % coeffs.size()]; };

  // Full enumeration up to enum_degree over the low-order sub-basis.
  std::vector<BasisElem> pool = basis_pool(ctx, policy.enum_jet_order);
  for (int d = 0; d <= policy.enum_degree && d <= static_cast<int>(pool.size()); ++d) {
    WedgeMono current;
    combinations(pool, d, 0, current, [&](const WedgeMono& mono) {
      probes.push_back(Form::term(ctx, mono, next_coeff()));
    });
  }

  // Seeded random monomial probes of higher degree.
  std::vector<BasisElem> rpool = basis_pool(ctx, policy.random_jet_order);
  SampleOptions mopt;
  mopt.max_terms = 1;
  mopt.max_degree = 2;
  mopt.max_jet_order = policy.random_jet_order;
  int lo = policy.enum_degree + 1;
  int hi = std::min(policy.max_degree, static_cast<int>(rpool.size()));
  for (int k = 0; k < policy.random_monomials && lo <= hi; ++k) {
    int d = static_cast<int>(rng.uniform(lo, hi));
    probes.push_back(random_form(rng, ctx, d, mopt));
  }

  // Seeded multi-term probes of mixed degrees.
  SampleOptions fopt;
  fopt.max_terms = 3;
  fopt.max_degree = 2;
  fopt.max_jet_order = policy.random_jet_order;
  for (int k = 0; k < policy.random_forms; ++k) {
    int d = static_cast<int>(rng.uniform(0, hi >= 0 ? hi : 0));
    probes.push_back(random_form(rng, ctx, d, fopt));
  }

  return probes;
}

// ---------------------------------------------------------------------------
// Build tree
// ---------------------------------------------------------------------------

struct Endo::Node {
  enum class Kind { Identity, Insert, Vertical, Mult, Scale, Sum, Compose, Commutator };

  Kind kind;
  // Insert / Mult payloads.
  std::shared_ptr<const Multivector> mv;
  std::shared_ptr<const Form> form;
  // Scale payload.
  Rational factor;
  // Children: Scale uses one; Compose/Commutator use two (left, right);
  // Sum uses any number.
  std::vector<NodePtr> children;
  // Commutator sign exponent |F||G|, frozen at construction.
  int sign_exponent = 0;
};

Endo::Endo(CtxPtr ctx, NodePtr node, std::optional<int> degree, std::optional<int> parity,
           bool known_zero)
    : ctx_(std::move(ctx)), node_(std::move(node)), degree_(degree), parity_(parity),
      known_zero_(known_zero) {}

namespace {

// Degree when homogeneous, parity when the term degrees only differ evenly.
template <Variance V>
std::pair<std::optional<int>, std::optional<int>> grading_of(const GradedSum<V>& s) {
  if (s.is_zero()) return {0, 0};
  std::optional<int> deg;
  std::optional<int> par;
  bool first = true;
  for (const auto& [mono, c] : s.terms()) {
    (void)c;
    int d = static_cast<int>(mono.size());
    if (first) {
      deg = d;
      par = d & 1;
      first = false;
    } else {
      if (deg && *deg != d) deg.reset();
      if (par && *par != (d & 1)) par.reset();
    }
  }
  return {deg, par};
}

} // namespace

Endo Endo::identity(const CtxPtr& ctx) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Identity;
  return Endo(ctx, n, 0, 0, false);
}

Endo Endo::zero(const CtxPtr& ctx) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Sum; // empty sum
  return Endo(ctx, n, 0, 0, true);
}

Endo Endo::insertion(const Multivector& X) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Insert;
  n->mv = std::make_shared<Multivector>(X);
  auto [deg, par] = grading_of(X);
  if (deg) deg = -*deg;
  return Endo(X.ctx(), n, deg, par, X.is_zero());
}

Endo Endo::vertical(const CtxPtr& ctx) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Vertical;
  return Endo(ctx, n, 1, 1, false);
}

Endo Endo::mult(const Form& w) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Mult;
  n->form = std::make_shared<Form>(w);
  auto [deg, par] = grading_of(w);
  return Endo(w.ctx(), n, deg, par, w.is_zero());
}

Endo Endo::scaled(const Rational& c) const {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Scale;
  n->factor = c;
  n->children = {node_};
  return Endo(ctx_, n, degree_, parity_, known_zero_ || c == 0);
}

Endo operator+(const Endo& a, const Endo& b) {
  require_same_context(a.ctx(), b.ctx());
  if (a.known_zero()) return b;
  if (b.known_zero()) return a;
  auto n = std::make_shared<Endo::Node>();
  n->kind = Endo::Node::Kind::Sum;
  n->children = {a.node_, b.node_};
  std::optional<int> deg;
  if (a.degree_ && b.degree_ && *a.degree_ == *b.degree_) deg = a.degree_;
  std::optional<int> par;
  if (a.parity_ && b.parity_ && *a.parity_ == *b.parity_) par = a.parity_;
  return Endo(a.ctx_, n, deg, par, false);
}

Endo operator-(const Endo& a, const Endo& b) { return a + b.scaled(rat(-1)); }

Endo compose(const Endo& f, const Endo& g) {
  require_same_context(f.ctx(), g.ctx());
  if (f.known_zero() || g.known_zero()) return Endo::zero(f.ctx());
  auto n = std::make_shared<Endo::Node>();
  n->kind = Endo::Node::Kind::Compose;
  n->children = {f.node_, g.node_};
  std::optional<int> deg;
  if (f.degree_ && g.degree_) deg = *f.degree_ + *g.degree_;
  std::optional<int> par;
  if (f.parity_ && g.parity_) par = (*f.parity_ + *g.parity_) & 1;
  return Endo(f.ctx_, n, deg, par, false);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

Form apply_node(const Endo::Node&, const CtxPtr&, const Form&);

} // namespace

Form Endo::apply(const Form& alpha) const {
  require_same_context(ctx_, alpha.ctx());
  if (known_zero_) return Form(ctx_);
  return apply_node(*node_, ctx_, alpha);
}

namespace {

Form apply_node(const Endo::Node& node, const CtxPtr& ctx, const Form& alpha) {
  using Kind = Endo::Node::Kind;
  switch (node.kind) {
    case Kind::Identity: return alpha;
    case Kind::Insert: return insert(*node.mv, alpha);
    case Kind::Vertical: return d_vertical(alpha);
    case Kind::Mult: return wedge(*node.form, alpha);
    case Kind::Scale: return apply_node(*node.children[0], ctx, alpha).scaled(node.factor);
    case Kind::Sum: {
      Form out(ctx);
      for (const auto& child : node.children) out += apply_node(*child, ctx, alpha);
      return out;
    }
    case Kind::Compose:
      return apply_node(*node.children[0], ctx, apply_node(*node.children[1], ctx, alpha));
    case Kind::Commutator: {
      const auto& f = *node.children[0];
      const auto& g = *node.children[1];
      Form fg = apply_node(f, ctx, apply_node(g, ctx, alpha));
      Form gf = apply_node(g, ctx, apply_node(f, ctx, alpha));
      return (node.sign_exponent % 2 == 0) ? fg - gf : fg + gf;
    }
  }
  throw Error("unreachable endo node kind");
}

std::string describe_node(const Endo::Node& node) {
  using Kind = Endo::Node::Kind;
  std::ostringstream os;
  switch (node.kind) {
    case Kind::Identity: return "id";
    case Kind::Insert:
      os << "insert(" << *node.mv << ")";
      return os.str();
    case Kind::Vertical: return "dV";
    case Kind::Mult:
      os << "mult(" << *node.form << ")";
      return os.str();
    case Kind::Scale:
      os << rational_to_string(node.factor) << "*" << describe_node(*node.children[0]);
      return os.str();
    case Kind::Sum: {
      if (node.children.empty()) return "0";
      os << "(";
      for (std::size_t k = 0; k < node.children.size(); ++k) {
        if (k) os << " + ";
        os << describe_node(*node.children[k]);
      }
      os << ")";
      return os.str();
    }
    case Kind::Compose:
      os << describe_node(*node.children[0]) << " o " << describe_node(*node.children[1]);
      return os.str();
    case Kind::Commutator:
      os << "[" << describe_node(*node.children[0]) << ", " << describe_node(*node.children[1])
         << "]";
      return os.str();
  }
  return "?";
}

} // namespace

std::string Endo::describe() const { return describe_node(*node_); }

Form endo_apply(const Endo& F, const Form& alpha) { return F.apply(alpha); }

// ---------------------------------------------------------------------------
// Brackets
// ---------------------------------------------------------------------------

Endo graded_commutator(const Endo& F, const Endo& G) {
  require_same_context(F.ctx(), G.ctx());
  if (F.known_zero() || G.known_zero()) return Endo::zero(F.ctx());
  if (!F.parity() || !G.parity())
    throw DegreeError("graded commutator needs operands of defined parity");
  auto n = std::make_shared<Endo::Node>();
  n->kind = Endo::Node::Kind::Commutator;
  n->children = {F.node_, G.node_};
  n->sign_exponent = (*F.parity() != 0 && *G.parity() != 0) ? 1 : 0;
  std::optional<int> deg;
  if (F.degree_ && G.degree_) deg = *F.degree_ + *G.degree_;
  return Endo(F.ctx_, n, deg, (*F.parity() + *G.parity()) & 1, false);
}

bool endo_equal(const Endo& F, const Endo& G, const ProbePolicy& policy) {
  require_same_context(F.ctx(), G.ctx());
  for (const Form& probe : probe_family(F.ctx(), policy))
    if (F.apply(probe) != G.apply(probe)) return false;
  return true;
}

bool endo_is_zero_on_probes(const Endo& F, const ProbePolicy& policy) {
  for (const Form& probe : probe_family(F.ctx(), policy))
    if (!F.apply(probe).is_zero()) return false;
  return true;
}

Endo derived_bracket(const Endo& F, const Endo& G, const Endo& delta,
                     const ProbePolicy& policy) {
  require_same_context(F.ctx(), delta.ctx());
  require_same_context(G.ctx(), delta.ctx());
  if (!delta.known_zero()) {
    Endo delta_sq = graded_commutator(delta, delta);
    if (!endo_is_zero_on_probes(delta_sq, policy))
      throw DeltaNotSquareZero("the bracket generator does not square to zero");
  }
  return graded_commutator(graded_commutator(F, delta), G);
}

} // namespace jetbrackets
