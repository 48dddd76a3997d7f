#include "jetbrackets/render.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "jetbrackets/errors.hpp"
#include "jetbrackets/rational.hpp"

namespace jetbrackets {

namespace {

std::string index_list(const std::vector<int>& idx) {
  bool wide = false;
  for (int i : idx)
    if (i > 9) wide = true;
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) out += ",";
    out += std::to_string(idx[k]);
  }
  return out;
}

/// Surface-grammar spelling of one generator (round-trips through parse).
std::string gen_grammar(const Gen& g) {
  switch (g.kind) {
    case GenKind::Base:
      return "x" + std::to_string(g.idx);
    case GenKind::Jet: {
      std::string out = "u[" + std::to_string(g.idx);
      auto idx = g.mi.to_indices();
      for (std::size_t k = 0; k < idx.size(); ++k)
        out += (k == 0 ? ";" : ",") + std::to_string(idx[k]);
      return out + "]";
    }
    case GenKind::Opaque:
    default: {
      std::string out = g.name + "(x";
      auto idx = g.mi.to_indices();
      for (std::size_t k = 0; k < idx.size(); ++k)
        out += (k == 0 ? ";" : ",") + std::to_string(idx[k]);
      return out + ")";
    }
  }
}

/// Display spelling: x^1, u^1, u^1_{11}, j4(x), j4(x;1,2).
std::string gen_pretty(const Gen& g) {
  switch (g.kind) {
    case GenKind::Base:
      return "x^" + std::to_string(g.idx);
    case GenKind::Jet: {
      std::string out = "u^" + std::to_string(g.idx);
      auto idx = g.mi.to_indices();
      if (!idx.empty()) out += "_{" + index_list(idx) + "}";
      return out;
    }
    case GenKind::Opaque:
    default:
      return gen_grammar(g);
  }
}

/// Latex spelling: x^{1}, u^{1}_{11}, j4(x), j4_{,12}(x).
std::string gen_latex(const Gen& g) {
  switch (g.kind) {
    case GenKind::Base:
      return "x^{" + std::to_string(g.idx) + "}";
    case GenKind::Jet: {
      std::string out = "u^{" + std::to_string(g.idx) + "}";
      auto idx = g.mi.to_indices();
      if (!idx.empty()) out += "_{" + index_list(idx) + "}";
      return out;
    }
    case GenKind::Opaque:
    default: {
      auto idx = g.mi.to_indices();
      if (idx.empty()) return g.name + "(x)";
      return g.name + "_{," + index_list(idx) + "}(x)";
    }
  }
}

std::string rational_latex(const Rational& q) {
  std::string s = rational_to_string(q);
  auto slash = s.find('/');
  if (slash == std::string::npos) return s;
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  std::string sign;
  if (!num.empty() && num[0] == '-') {
    sign = "-";
    num = num.substr(1);
  }
  return sign + "\\frac{" + num + "}{" + den + "}";
}

enum class ExprStyle { Pretty, Latex };

std::string expr_display(const Expr& e, ExprStyle style) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
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
    bool coeff_shown = mono.factors.empty() || a != rat(1);
    if (coeff_shown) os << (style == ExprStyle::Latex ? rational_latex(a) : rational_to_string(a));
    bool need_sep = coeff_shown;
    for (const auto& [g, p] : mono.factors) {
      if (need_sep) os << " ";
      need_sep = true;
      std::string gs = (style == ExprStyle::Latex) ? gen_latex(g) : gen_pretty(g);
      if (p > 1) {
        os << "(" << gs << ")^" << (style == ExprStyle::Latex ? "{" + std::to_string(p) + "}"
                                                              : std::to_string(p));
      } else {
        os << gs;
      }
    }
  }
  return os.str();
}

template <Variance V>
std::string wedge_factor_latex(const BasisElem& e) {
  std::string core;
  if (!e.fiber) {
    core = "x^{" + std::to_string(e.idx) + "}";
  } else {
    core = "u^{" + std::to_string(e.idx) + "}";
    auto idx = e.mi.to_indices();
    if (!idx.empty()) core += "_{" + index_list(idx) + "}";
  }
  if constexpr (V == Variance::Covector)
    return "d" + core;
  else
    return "\\partial_{" + core + "}";
}

template <Variance V>
std::string graded_latex(const GradedSum<V>& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : s.terms()) {
    bool multi_term = c.terms().size() > 1;
    bool negative = !multi_term && rational_sign(c.terms().begin()->second) < 0;
    std::string ct = expr_display(negative ? -c : c, ExprStyle::Latex);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << (multi_term ? "\\left(" + ct + "\\right)" : ct);
      continue;
    }
    if (multi_term) {
      os << "\\left(" << ct << "\\right)\\, ";
    } else if (ct != "1") {
      os << ct << "\\, ";
    }
    bool first_factor = true;
    for (const auto& e : mono) {
      if (!first_factor) os << " \\wedge ";
      first_factor = false;
      os << wedge_factor_latex<V>(e);
    }
  }
  return os.str();
}

std::string wedge_factor_grammar(const BasisElem& e, Variance v) {
  const char* base_name = (v == Variance::Covector) ? "dx" : "Dx";
  const char* fiber_name = (v == Variance::Covector) ? "du" : "Du";
  if (!e.fiber) return base_name + std::to_string(e.idx);
  std::string out = std::string(fiber_name) + "[" + std::to_string(e.idx);
  auto idx = e.mi.to_indices();
  for (std::size_t k = 0; k < idx.size(); ++k)
    out += (k == 0 ? ";" : ",") + std::to_string(idx[k]);
  return out + "]";
}

nlohmann::json expr_terms_json(const Expr& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [g, p] : mono.factors)
      factors.push_back(nlohmann::json::array({gen_grammar(g), p}));
    terms.push_back({{"coeff", rational_to_string(c)}, {"monomial", std::move(factors)}});
  }
  return terms;
}

template <Variance V>
nlohmann::json graded_terms_json(const GradedSum<V>& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, c] : s.terms()) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& e : mono) factors.push_back(wedge_factor_grammar(e, V));
    terms.push_back({{"factors", std::move(factors)}, {"coeff", expr_terms_json(c)}});
  }
  return terms;
}

template <typename T>
std::string grammar_text(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string dx_label(const std::vector<int>& dx_monomial) {
  std::string out;
  for (std::size_t k = 0; k < dx_monomial.size(); ++k) {
    if (k > 0) out += "^";
    out += "dx" + std::to_string(dx_monomial[k]);
  }
  return out;
}

} // namespace

RenderFormat render_format_from_string(const std::string& name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "latex") return RenderFormat::Latex;
  if (name == "json") return RenderFormat::Json;
  throw ConfigError("unknown output format '" + name + "' (use text, latex, or json)");
}

std::string to_string(RenderFormat format) {
  switch (format) {
    case RenderFormat::Text: return "text";
    case RenderFormat::Latex: return "latex";
    case RenderFormat::Json:
    default: return "json";
  }
}

std::string render(const Expr& e, RenderFormat format) {
  switch (format) {
    case RenderFormat::Text: return grammar_text(e);
    case RenderFormat::Latex: return expr_display(e, ExprStyle::Latex);
    case RenderFormat::Json:
    default: return nlohmann::json{{"terms", expr_terms_json(e)}}.dump(2);
  }
}

std::string render(const Form& w, RenderFormat format) {
  switch (format) {
    case RenderFormat::Text: return grammar_text(w);
    case RenderFormat::Latex: return graded_latex(w);
    case RenderFormat::Json:
    default: return nlohmann::json{{"terms", graded_terms_json(w)}}.dump(2);
  }
}

std::string render(const Multivector& X, RenderFormat format) {
  switch (format) {
    case RenderFormat::Text: return grammar_text(X);
    case RenderFormat::Latex: return graded_latex(X);
    case RenderFormat::Json:
    default: return nlohmann::json{{"terms", graded_terms_json(X)}}.dump(2);
  }
}

nlohmann::json pdesystem_to_json(const PDESystem& sys) {
  nlohmann::json equations = nlohmann::json::array();
  nlohmann::json scales = nlohmann::json::array();
  for (const auto& eq : sys.equations) {
    equations.push_back(
        {{"dx_monomial", eq.dx_monomial}, {"lhs", expr_terms_json(eq.lhs)}});
    scales.push_back(rational_to_string(eq.scale));
  }
  nlohmann::json metadata{{"n", sys.ctx->n()},
                          {"m", sys.ctx->m()},
                          {"phi", grammar_text(sys.phi)},
                          {"degrees", sys.degrees},
                          {"scales", std::move(scales)}};
  return nlohmann::json{{"equations", std::move(equations)}, {"metadata", std::move(metadata)}};
}

std::string render(const PDESystem& sys, RenderFormat format) {
  if (format == RenderFormat::Json) return pdesystem_to_json(sys).dump(2);
  std::ostringstream os;
  bool label = sys.equations.size() > 1 && format == RenderFormat::Text;
  bool first = true;
  for (const auto& eq : sys.equations) {
    if (!first) os << "\n";
    first = false;
    if (label) os << dx_label(eq.dx_monomial) << ": ";
    os << expr_display(eq.lhs, format == RenderFormat::Latex ? ExprStyle::Latex
                                                             : ExprStyle::Pretty)
       << " = 0";
  }
  return os.str();
}

} // namespace jetbrackets
