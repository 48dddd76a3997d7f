#include "jetbrackets/expr.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace jetbrackets {

Gen Gen::base(const CtxPtr& ctx, int i) {
  ctx->check_base_index(i);
  return Gen{GenKind::Base, i, ctx->zero_index(), {}};
}

Gen Gen::jet(const CtxPtr& ctx, int alpha, MultiIndex I) {
  ctx->check_fiber_index(alpha);
  ctx->check_jet_order(I);
  return Gen{GenKind::Jet, alpha, std::move(I), {}};
}

Gen Gen::opaque_atom(const CtxPtr& ctx, const std::string& name, MultiIndex D) {
  if (!ctx->has_opaque(name))
    throw RangeError("unknown opaque function '" + name + "'");
  ctx->check_jet_order(D);
  return Gen{GenKind::Opaque, 0, std::move(D), name};
}

bool gen_less(const Gen& a, const Gen& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  switch (a.kind) {
    case GenKind::Base:
      return a.idx < b.idx;
    case GenKind::Jet: {
      if (a.mi.order() != b.mi.order()) return a.mi.order() < b.mi.order();
      if (a.mi != b.mi) return a.mi < b.mi;
      return a.idx < b.idx;
    }
    case GenKind::Opaque: {
      if (a.name != b.name) return a.name < b.name;
      if (a.mi.order() != b.mi.order()) return a.mi.order() < b.mi.order();
      return a.mi < b.mi;
    }
  }
  return false;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [g, p] : factors) d += p;
  return d;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  auto ia = a.factors.rbegin();
  auto ib = b.factors.rbegin();
  for (; ia != a.factors.rend() && ib != b.factors.rend(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return gen_less(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.factors.rend() && ib != b.factors.rend();
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  while (ia != a.factors.end() && ib != b.factors.end()) {
    if (ia->first == ib->first) {
      out.factors.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    } else if (gen_less(ia->first, ib->first)) {
      out.factors.push_back(*ia++);
    } else {
      out.factors.push_back(*ib++);
    }
  }
  out.factors.insert(out.factors.end(), ia, a.factors.end());
  out.factors.insert(out.factors.end(), ib, b.factors.end());
  return out;
}

// Removes one power of the factor at position k.
Monomial mono_decrement(const Monomial& m, std::size_t k) {
  Monomial out = m;
  if (out.factors[k].second > 1) {
    --out.factors[k].second;
  } else {
    out.factors.erase(out.factors.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

void check_canonical(const CtxPtr& ctx, const Monomial& mono) {
  for (std::size_t k = 0; k < mono.factors.size(); ++k) {
    const auto& [g, p] = mono.factors[k];
    if (p < 1) throw RangeError("monomial power must be positive");
    if (k + 1 < mono.factors.size() && !gen_less(g, mono.factors[k + 1].first))
      throw RangeError("monomial factors out of canonical order");
    switch (g.kind) {
      case GenKind::Base: ctx->check_base_index(g.idx); break;
      case GenKind::Jet:
        ctx->check_fiber_index(g.idx);
        ctx->check_jet_order(g.mi);
        break;
      case GenKind::Opaque:
        if (!ctx->has_opaque(g.name)) throw RangeError("unknown opaque function '" + g.name + "'");
        ctx->check_jet_order(g.mi);
        break;
    }
  }
}

} // namespace

Expr::Expr(CtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw RangeError("expression needs a context");
}

Expr Expr::constant(CtxPtr ctx, const Rational& value) {
  Expr e(std::move(ctx));
  e.add_term(Monomial{}, value);
  return e;
}

Expr Expr::base_coord(const CtxPtr& ctx, int i) {
  return from_gen(ctx, Gen::base(ctx, i));
}

Expr Expr::jet_coord(const CtxPtr& ctx, int alpha, MultiIndex I) {
  return from_gen(ctx, Gen::jet(ctx, alpha, std::move(I)));
}

Expr Expr::fiber_coord(const CtxPtr& ctx, int alpha) {
  return jet_coord(ctx, alpha, ctx->zero_index());
}

Expr Expr::opaque(const CtxPtr& ctx, const std::string& name) {
  return from_gen(ctx, Gen::opaque_atom(ctx, name, ctx->zero_index()));
}

Expr Expr::opaque_derivative(const CtxPtr& ctx, const std::string& name, MultiIndex D) {
  return from_gen(ctx, Gen::opaque_atom(ctx, name, std::move(D)));
}

Expr Expr::from_gen(CtxPtr ctx, const Gen& g) {
  Expr e(std::move(ctx));
  e.add_term(Monomial{{{g, 1}}}, rat(1));
  return e;
}

Expr Expr::term(CtxPtr ctx, Monomial mono, const Rational& coeff) {
  Expr e(std::move(ctx));
  check_canonical(e.ctx_, mono);
  e.add_term(mono, coeff);
  return e;
}

bool Expr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
}

Rational Expr::constant_value() const {
  if (terms_.empty()) return rat(0);
  if (!is_constant()) throw DegreeError("expression is not constant");
  return terms_.begin()->second;
}

std::pair<Monomial, Rational> Expr::leading() const {
  if (terms_.empty()) throw DegreeError("zero expression has no leading monomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

std::vector<Gen> Expr::jet_generators() const {
  std::vector<Gen> out;
  for (const auto& [mono, c] : terms_)
    for (const auto& [g, p] : mono.factors)
      if (g.kind == GenKind::Jet) out.push_back(g);
  std::sort(out.begin(), out.end(), gen_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Expr::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Expr Expr::operator-() const {
  Expr out(ctx_);
  for (const auto& [mono, c] : terms_) {
    Rational neg = c;
    neg = -neg;
    out.terms_.emplace(mono, neg);
  }
  return out;
}

Expr& Expr::operator+=(const Expr& rhs) {
  require_same_context(ctx_, rhs.ctx_);
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& rhs) {
  require_same_context(ctx_, rhs.ctx_);
  for (const auto& [mono, c] : rhs.terms_) {
    Rational neg = c;
    neg = -neg;
    add_term(mono, neg);
  }
  return *this;
}

Expr operator*(const Expr& lhs, const Expr& rhs) {
  require_same_context(lhs.ctx_, rhs.ctx_);
  Expr out(lhs.ctx_);
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      Rational c = ca;
      c *= cb;
      out.add_term(mono_mul(ma, mb), c);
    }
  return out;
}

Expr operator*(const Rational& c, const Expr& e) {
  Expr out(e.ctx_);
  if (c == 0) return out;
  for (const auto& [mono, k] : e.terms_) {
    Rational ck = c;
    ck *= k;
    out.terms_.emplace(mono, ck);
  }
  return out;
}

Expr operator/(const Expr& e, const Rational& c) {
  if (c == 0) throw RangeError("division by zero rational");
  Rational inv = 1 / c;
  return inv * e;
}

Expr Expr::pow(int k) const {
  if (k < 0) throw RangeError("negative power of a polynomial");
  Expr out = Expr::constant(ctx_, rat(1));
  for (int j = 0; j < k; ++j) out = out * *this;
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

Expr partial_base(const Expr& f, int i) {
  f.ctx()->check_base_index(i);
  Expr out(f.ctx());
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t k = 0; k < mono.factors.size(); ++k) {
      const auto& [g, p] = mono.factors[k];
      if (g.kind == GenKind::Base && g.idx == i) {
        Rational cp = c;
        cp *= p;
        out += Expr::term(f.ctx(), mono_decrement(mono, k), cp);
      } else if (g.kind == GenKind::Opaque) {
        Gen dg = Gen::opaque_atom(f.ctx(), g.name, g.mi.inserted(i, f.ctx()->order_cap()));
        Monomial rest = mono_mul(mono_decrement(mono, k), Monomial{{{dg, 1}}});
        Rational cp = c;
        cp *= p;
        out += Expr::term(f.ctx(), rest, cp);
      }
    }
  }
  return out;
}

Expr partial_fiber(const Expr& f, int alpha, const MultiIndex& I) {
  f.ctx()->check_fiber_index(alpha);
  f.ctx()->check_jet_order(I);
  Expr out(f.ctx());
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t k = 0; k < mono.factors.size(); ++k) {
      const auto& [g, p] = mono.factors[k];
      if (g.kind == GenKind::Jet && g.idx == alpha && g.mi == I) {
        Rational cp = c;
        cp *= p;
        out += Expr::term(f.ctx(), mono_decrement(mono, k), cp);
      }
    }
  }
  return out;
}

Expr total_derivative(const Expr& f, int i) {
  Expr out = partial_base(f, i);
  for (const Gen& g : f.jet_generators()) {
    Gen promoted = Gen::jet(f.ctx(), g.idx, g.mi.inserted(i, f.ctx()->order_cap()));
    out += partial_fiber(f, g.idx, g.mi) * Expr::from_gen(f.ctx(), promoted);
  }
  return out;
}

std::string gen_to_text(const Gen& g) {
  std::ostringstream os;
  switch (g.kind) {
    case GenKind::Base:
      os << "x" << g.idx;
      break;
    case GenKind::Jet: {
      os << "u[" << g.idx;
      auto idxs = g.mi.to_indices();
      for (std::size_t k = 0; k < idxs.size(); ++k) os << (k == 0 ? ";" : ",") << idxs[k];
      os << "]";
      break;
    }
    case GenKind::Opaque: {
      os << g.name << "(x";
      auto idxs = g.mi.to_indices();
      for (std::size_t k = 0; k < idxs.size(); ++k) os << (k == 0 ? ";" : ",") << idxs[k];
      os << ")";
      break;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) {
  if (e.is_zero()) return os << "0";
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (rational_sign(c) < 0) os << "-";
      first = false;
    } else {
      os << (rational_sign(c) < 0 ? " - " : " + ");
    }
    bool coeff_shown = (a != 1) || mono.factors.empty();
    if (coeff_shown) os << rational_to_string(a);
    bool need_star = coeff_shown;
    for (const auto& [g, p] : mono.factors) {
      if (need_star) os << "*";
      os << gen_to_text(g);
      if (p > 1) os << "^" << p;
      need_star = true;
    }
  }
  return os;
}

} // namespace jetbrackets
