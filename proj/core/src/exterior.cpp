#include "jetbrackets/exterior.hpp"

#include "jetbrackets/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace jetbrackets {

BasisElem BasisElem::base(const CtxPtr& ctx, int i) {
  ctx->check_base_index(i);
  return BasisElem{false, i, ctx->zero_index()};
}

BasisElem BasisElem::fiber_elem(const CtxPtr& ctx, int alpha, MultiIndex I) {
  ctx->check_fiber_index(alpha);
  ctx->check_jet_order(I);
  return BasisElem{true, alpha, std::move(I)};
}

bool basis_less(const BasisElem& a, const BasisElem& b) {
  if (a.fiber != b.fiber) return !a.fiber;
  if (!a.fiber) return a.idx < b.idx;
  if (a.mi.order() != b.mi.order()) return a.mi.order() < b.mi.order();
  if (a.mi != b.mi) return a.mi < b.mi;
  return a.idx < b.idx;
}

bool WedgeLess::operator()(const WedgeMono& a, const WedgeMono& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), basis_less);
}

std::pair<int, int> bigrade_of(const WedgeMono& mono) {
  int p = 0;
  int q = 0;
  for (const auto& e : mono) (e.fiber ? q : p) += 1;
  return {p, q};
}

namespace {

// Merges two strictly increasing factor lists, counting the inversions the
// interleave performs. Returns 0 and an unspecified `out` when a factor
// repeats, otherwise the antisymmetry sign.
int merge_wedge(const WedgeMono& a, const WedgeMono& b, WedgeMono& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t ia = 0;
  std::size_t ib = 0;
  long inversions = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) return 0;
    if (basis_less(a[ia], b[ib])) {
      out.push_back(a[ia++]);
    } else {
      out.push_back(b[ib++]);
      inversions += static_cast<long>(a.size() - ia);
    }
  }
  while (ia < a.size()) out.push_back(a[ia++]);
  while (ib < b.size()) out.push_back(b[ib++]);
  return (inversions % 2 == 0) ? 1 : -1;
}

void check_elem(const CtxPtr& ctx, const BasisElem& e) {
  if (e.fiber) {
    ctx->check_fiber_index(e.idx);
    ctx->check_jet_order(e.mi);
  } else {
    ctx->check_base_index(e.idx);
  }
}

} // namespace

template <Variance V>
GradedSum<V>::GradedSum(CtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw RangeError("graded sum needs a context");
}

template <Variance V>
GradedSum<V> GradedSum<V>::scalar(const Expr& coeff) {
  GradedSum out(coeff.ctx());
  out.add_canonical({}, coeff);
  return out;
}

template <Variance V>
GradedSum<V> GradedSum<V>::basis(const CtxPtr& ctx, const BasisElem& b) {
  check_elem(ctx, b);
  GradedSum out(ctx);
  out.add_canonical({b}, Expr::constant(ctx, rat(1)));
  return out;
}

template <Variance V>
GradedSum<V> GradedSum<V>::base_elem(const CtxPtr& ctx, int i) {
  return basis(ctx, BasisElem::base(ctx, i));
}

template <Variance V>
GradedSum<V> GradedSum<V>::fiber_elem(const CtxPtr& ctx, int alpha, MultiIndex I) {
  return basis(ctx, BasisElem::fiber_elem(ctx, alpha, std::move(I)));
}

template <Variance V>
GradedSum<V> GradedSum<V>::term(const CtxPtr& ctx, std::vector<BasisElem> factors,
                                const Expr& coeff) {
  require_same_context(ctx, coeff.ctx());
  for (const auto& e : factors) check_elem(ctx, e);
  // Insertion sort, tracking the antisymmetry sign; a repeat gives zero.
  int sign = 1;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && basis_less(factors[j], factors[j - 1])) {
      std::swap(factors[j], factors[j - 1]);
      sign = -sign;
      --j;
    }
    if (j > 0 && factors[j] == factors[j - 1]) return GradedSum(ctx);
  }
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] == factors[i - 1]) return GradedSum(ctx);
  GradedSum out(ctx);
  out.add_canonical(factors, sign < 0 ? -coeff : coeff);
  return out;
}

template <Variance V>
bool GradedSum<V>::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::size_t d = terms_.begin()->first.size();
  for (const auto& [mono, c] : terms_)
    if (mono.size() != d) return false;
  return true;
}

template <Variance V>
int GradedSum<V>::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw DegreeError("graded sum is not homogeneous");
  return static_cast<int>(terms_.begin()->first.size());
}

template <Variance V>
GradedSum<V> GradedSum<V>::homogeneous_part(int deg) const {
  GradedSum out(ctx_);
  for (const auto& [mono, c] : terms_)
    if (static_cast<int>(mono.size()) == deg) out.terms_.emplace(mono, c);
  return out;
}

template <Variance V>
int GradedSum<V>::max_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.size()));
  return d;
}

template <Variance V>
void GradedSum<V>::add_canonical(const WedgeMono& mono, const Expr& coeff) {
  if (coeff.is_zero()) return;
  require_same_context(ctx_, coeff.ctx());
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <Variance V>
GradedSum<V> GradedSum<V>::operator-() const {
  GradedSum out(ctx_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

template <Variance V>
GradedSum<V>& GradedSum<V>::operator+=(const GradedSum& rhs) {
  require_same_context(ctx_, rhs.ctx_);
  for (const auto& [mono, c] : rhs.terms_) add_canonical(mono, c);
  return *this;
}

template <Variance V>
GradedSum<V>& GradedSum<V>::operator-=(const GradedSum& rhs) {
  require_same_context(ctx_, rhs.ctx_);
  for (const auto& [mono, c] : rhs.terms_) add_canonical(mono, -c);
  return *this;
}

template <Variance V>
GradedSum<V> GradedSum<V>::scaled(const Expr& c) const {
  GradedSum out(ctx_);
  for (const auto& [mono, k] : terms_) out.add_canonical(mono, c * k);
  return out;
}

template <Variance V>
GradedSum<V> GradedSum<V>::scaled(const Rational& c) const {
  GradedSum out(ctx_);
  for (const auto& [mono, k] : terms_) out.add_canonical(mono, c * k);
  return out;
}

template <Variance V>
GradedSum<V> wedge(const GradedSum<V>& a, const GradedSum<V>& b) {
  require_same_context(a.ctx(), b.ctx());
  GradedSum<V> out(a.ctx());
  WedgeMono merged;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int sign = merge_wedge(ma, mb, merged);
      if (sign == 0) continue;
      Expr c = ca * cb;
      out.add_canonical(merged, sign < 0 ? -c : c);
    }
  return out;
}

namespace {

// Pairing between a vector-side and a covector-side basis element.
bool pairs_with(const BasisElem& v, const BasisElem& w) {
  return v == w;
}

// Single interior product: the degree -1 anti-derivation by one basis
// vector, applied to every term of a form-like sum.
template <Variance V>
GradedSum<V> interior_single(const BasisElem& v, const GradedSum<V>& alpha) {
  GradedSum<V> out(alpha.ctx());
  for (const auto& [mono, c] : alpha.terms()) {
    for (std::size_t j = 0; j < mono.size(); ++j) {
      if (!pairs_with(v, mono[j])) continue;
      WedgeMono rest;
      rest.reserve(mono.size() - 1);
      rest.insert(rest.end(), mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(j));
      rest.insert(rest.end(), mono.begin() + static_cast<std::ptrdiff_t>(j) + 1, mono.end());
      out.add_canonical(rest, (j % 2 == 0) ? c : -c);
      break; // factors are strictly increasing, at most one match
    }
  }
  return out;
}

} // namespace

Form insert(const Multivector& X, const Form& alpha) {
  require_same_context(X.ctx(), alpha.ctx());
  Form out(alpha.ctx());
  for (const auto& [xmono, xcoeff] : X.terms()) {
    Form cur = alpha;
    for (const auto& factor : xmono) {
      cur = interior_single(factor, cur);
      if (cur.is_zero()) break;
    }
    out += cur.scaled(xcoeff);
  }
  return out;
}

Multivector co_insert(const Form& omega, const Multivector& X) {
  require_same_context(omega.ctx(), X.ctx());
  for (const auto& [wmono, wc] : omega.terms())
    if (wmono.size() != 1)
      throw DegreeError("conjugate insertion needs a one-form");
  Multivector out(X.ctx());
  for (const auto& [wmono, wc] : omega.terms()) {
    const BasisElem& w = wmono.front();
    for (const auto& [xmono, xc] : X.terms()) {
      for (std::size_t j = 0; j < xmono.size(); ++j) {
        if (!pairs_with(xmono[j], w)) continue;
        WedgeMono rest;
        rest.reserve(xmono.size() - 1);
        rest.insert(rest.end(), xmono.begin(), xmono.begin() + static_cast<std::ptrdiff_t>(j));
        rest.insert(rest.end(), xmono.begin() + static_cast<std::ptrdiff_t>(j) + 1, xmono.end());
        Expr c = wc * xc;
        out.add_canonical(rest, (j % 2 == 0) ? c : -c);
        break;
      }
    }
  }
  return out;
}

namespace {

template <Variance V>
std::ostream& print_graded(std::ostream& os, const GradedSum<V>& s) {
  const char* base_name = (V == Variance::Covector) ? "dx" : "Dx";
  const char* fiber_name = (V == Variance::Covector) ? "du" : "Du";
  if (s.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [mono, c] : s.terms()) {
    bool multi_term = c.terms().size() > 1;
    bool negative = !multi_term && rational_sign(c.terms().begin()->second) < 0;
    std::ostringstream coeff;
    coeff << (negative ? -c : c);
    std::string ct = coeff.str();
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << (multi_term ? "(" + ct + ")" : ct);
      continue;
    }
    if (multi_term) {
      os << "(" << ct << ") ";
    } else if (ct != "1") {
      os << ct << " ";
    }
    bool first_factor = true;
    for (const auto& e : mono) {
      if (!first_factor) os << "^";
      first_factor = false;
      if (!e.fiber) {
        os << base_name << e.idx;
      } else {
        os << fiber_name << "[" << e.idx;
        auto idxs = e.mi.to_indices();
        for (std::size_t k = 0; k < idxs.size(); ++k) os << (k == 0 ? ";" : ",") << idxs[k];
        os << "]";
      }
    }
  }
  return os;
}

} // namespace

std::ostream& operator<<(std::ostream& os, const Form& f) { return print_graded(os, f); }
std::ostream& operator<<(std::ostream& os, const Multivector& X) { return print_graded(os, X); }

template class GradedSum<Variance::Covector>;
template class GradedSum<Variance::Vector>;

template Form wedge<Variance::Covector>(const Form&, const Form&);
template Multivector wedge<Variance::Vector>(const Multivector&, const Multivector&);

} // namespace jetbrackets
