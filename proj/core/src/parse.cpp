#include "jetbrackets/parse.hpp"

#include <cctype>
#include <string_view>
#include <vector>

#include "jetbrackets/errors.hpp"
#include "jetbrackets/multiindex.hpp"
#include "jetbrackets/rational.hpp"

namespace jetbrackets {

namespace {

enum class Tok {
  Int,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semi,
  Comma,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos; // 1-based byte offset
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t size = text.size();
  while (i < size) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t pos = i + 1;
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < size && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, text.substr(i, j - i), pos});
      i = j;
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < size && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), pos});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ';': kind = Tok::Semi; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'",
                         pos);
    }
    out.push_back({kind, text.substr(i, 1), pos});
    ++i;
  }
  out.push_back({Tok::End, "", size + 1});
  return out;
}

/// What an identifier token denotes. Built-in coordinate and covector
/// spellings take precedence; everything else is an opaque-function name.
enum class IdKind {
  BaseCoord,    // x1, x2, ...
  FiberHead,    // u
  CovBase,      // dx1, ...
  CovFiberHead, // du
  VecBase,      // Dx1, ...
  VecFiberHead, // Du
  XMark,        // bare x (only valid as the opaque argument)
  Name,
};

bool all_digits(std::string_view v) {
  if (v.empty()) return false;
  for (char c : v)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

IdKind classify(const std::string& s) {
  if (s == "u") return IdKind::FiberHead;
  if (s == "du") return IdKind::CovFiberHead;
  if (s == "Du") return IdKind::VecFiberHead;
  if (s == "x") return IdKind::XMark;
  if (s.size() > 1 && s[0] == 'x' && all_digits(std::string_view(s).substr(1)))
    return IdKind::BaseCoord;
  if (s.size() > 2 && s.compare(0, 2, "dx") == 0 && all_digits(std::string_view(s).substr(2)))
    return IdKind::CovBase;
  if (s.size() > 2 && s.compare(0, 2, "Dx") == 0 && all_digits(std::string_view(s).substr(2)))
    return IdKind::VecBase;
  return IdKind::Name;
}

int int_of_digits(std::string_view digits, std::size_t pos) {
  if (digits.size() > 9) throw ParseError("integer literal too large for an index", pos);
  int v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

class Parser {
public:
  Parser(const std::string& text, CtxPtr ctx) : ctx_(std::move(ctx)), toks_(lex(text)) {}

  Expr expr_document() {
    Expr e = parse_expr();
    expect_end();
    return e;
  }

  template <Variance V>
  GradedSum<V> graded_document() {
    GradedSum<V> s = parse_graded<V>();
    expect_end();
    return s;
  }

private:
  CtxPtr ctx_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token expect(Tok k, const char* what) {
    if (!at(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    return advance();
  }
  void expect_end() {
    if (!at(Tok::End)) throw ParseError("unexpected trailing input", peek().pos);
  }

  IdKind head_kind() const {
    return peek().kind == Tok::Ident ? classify(peek().text) : IdKind::Name;
  }

  bool starts_factor() const {
    switch (peek().kind) {
      case Tok::Int:
      case Tok::LParen:
        return true;
      case Tok::Ident: {
        IdKind k = classify(peek().text);
        return k == IdKind::BaseCoord || k == IdKind::FiberHead || k == IdKind::Name;
      }
      default:
        return false;
    }
  }

  // idxlist := nat ("," nat)*  — already positioned after the ';'.
  std::vector<int> parse_idxlist() {
    std::vector<int> idx;
    Token t = expect(Tok::Int, "a base index");
    idx.push_back(int_of_digits(t.text, t.pos));
    while (at(Tok::Comma)) {
      advance();
      Token u = expect(Tok::Int, "a base index");
      idx.push_back(int_of_digits(u.text, u.pos));
    }
    return idx;
  }

  // "[" nat (";" idxlist)? "]" — returns (fiber index, multiindex).
  std::pair<int, MultiIndex> parse_fiber_brackets() {
    expect(Tok::LBracket, "'['");
    Token a = expect(Tok::Int, "a fiber index");
    int alpha = int_of_digits(a.text, a.pos);
    std::vector<int> idx;
    if (at(Tok::Semi)) {
      advance();
      idx = parse_idxlist();
    }
    expect(Tok::RBracket, "']'");
    return {alpha, MultiIndex::from_indices(ctx_->n(), idx, ctx_->order_cap())};
  }

  Expr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        advance();
        return Expr::constant(ctx_, rational_from_string(t.text));
      }
      case Tok::LParen: {
        advance();
        Expr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Minus: {
        advance();
        return -parse_factor();
      }
      case Tok::Ident: {
        switch (classify(t.text)) {
          case IdKind::BaseCoord: {
            advance();
            return Expr::base_coord(ctx_, int_of_digits(std::string_view(t.text).substr(1), t.pos));
          }
          case IdKind::FiberHead: {
            advance();
            if (at(Tok::LBracket)) {
              auto [alpha, mi] = parse_fiber_brackets();
              return Expr::jet_coord(ctx_, alpha, mi);
            }
            if (ctx_->m() != 1)
              throw ParseError("bare 'u' needs a fiber index when m > 1", t.pos);
            return Expr::fiber_coord(ctx_, 1);
          }
          case IdKind::Name: {
            advance();
            if (!ctx_->has_opaque(t.text))
              throw ParseError("unknown name '" + t.text + "'", t.pos);
            expect(Tok::LParen, "'(' after an opaque function name");
            Token arg = expect(Tok::Ident, "'x'");
            if (arg.text != "x") throw ParseError("expected 'x'", arg.pos);
            std::vector<int> idx;
            if (at(Tok::Semi)) {
              advance();
              idx = parse_idxlist();
            }
            expect(Tok::RParen, "')'");
            if (idx.empty()) return Expr::opaque(ctx_, t.text);
            return Expr::opaque_derivative(
                ctx_, t.text, MultiIndex::from_indices(ctx_->n(), idx, ctx_->order_cap()));
          }
          case IdKind::XMark:
            throw ParseError("bare 'x' is not a coordinate (use x1, x2, ...)", t.pos);
          default:
            throw ParseError("unexpected '" + t.text + "' in a scalar expression", t.pos);
        }
      }
      default:
        throw ParseError("expected a term", t.pos);
    }
  }

  Expr parse_factor() {
    Expr base = parse_primary();
    while (at(Tok::Caret) && peek(1).kind == Tok::Int) {
      advance();
      Token e = advance();
      int p = int_of_digits(e.text, e.pos);
      if (p > 64) throw ParseError("exponent too large", e.pos);
      Expr acc = Expr::constant(ctx_, rat(1));
      for (int k = 0; k < p; ++k) acc = acc * base;
      base = acc;
    }
    return base;
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    for (;;) {
      if (at(Tok::Star)) {
        advance();
        acc = acc * parse_factor();
      } else if (at(Tok::Slash)) {
        advance();
        std::size_t off = peek().pos;
        Expr d = parse_factor();
        if (d.terms().empty()) throw ParseError("division by zero", off);
        if (d.terms().size() != 1 || !d.terms().begin()->first.factors.empty())
          throw ParseError("divisor must be a rational constant", off);
        acc = acc / d.terms().begin()->second;
      } else if (starts_factor()) {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Expr parse_expr() {
    int sign = 1;
    if (at(Tok::Plus)) {
      advance();
    } else if (at(Tok::Minus)) {
      advance();
      sign = -1;
    }
    Expr acc = parse_term();
    if (sign < 0) acc = -acc;
    for (;;) {
      if (at(Tok::Plus)) {
        advance();
        acc += parse_term();
      } else if (at(Tok::Minus)) {
        advance();
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  template <Variance V>
  bool at_wedge_head() const {
    if (peek().kind != Tok::Ident) return false;
    IdKind k = classify(peek().text);
    if constexpr (V == Variance::Covector)
      return k == IdKind::CovBase || k == IdKind::CovFiberHead;
    else
      return k == IdKind::VecBase || k == IdKind::VecFiberHead;
  }

  template <Variance V>
  BasisElem parse_wedge_factor() {
    const char* want = (V == Variance::Covector) ? "a wedge factor (dx<i> or du[...])"
                                                 : "a wedge factor (Dx<i> or Du[...])";
    if (peek().kind != Tok::Ident) throw ParseError(std::string("expected ") + want, peek().pos);
    Token t = peek();
    IdKind k = classify(t.text);
    if constexpr (V == Variance::Covector) {
      if (k == IdKind::CovBase) {
        advance();
        return BasisElem::base(ctx_, int_of_digits(std::string_view(t.text).substr(2), t.pos));
      }
      if (k == IdKind::CovFiberHead) {
        advance();
        auto [alpha, mi] = parse_fiber_brackets();
        return BasisElem::fiber_elem(ctx_, alpha, mi);
      }
    } else {
      if (k == IdKind::VecBase) {
        advance();
        return BasisElem::base(ctx_, int_of_digits(std::string_view(t.text).substr(2), t.pos));
      }
      if (k == IdKind::VecFiberHead) {
        advance();
        auto [alpha, mi] = parse_fiber_brackets();
        return BasisElem::fiber_elem(ctx_, alpha, mi);
      }
    }
    throw ParseError(std::string("expected ") + want, t.pos);
  }

  template <Variance V>
  GradedSum<V> parse_fterm(int sign) {
    bool have_coeff = starts_factor();
    Expr coeff = have_coeff ? parse_term() : Expr::constant(ctx_, rat(1));
    if (sign < 0) coeff = -coeff;
    if (!at_wedge_head<V>()) {
      if (!have_coeff)
        throw ParseError("expected a term", peek().pos);
      return GradedSum<V>::scalar(coeff);
    }
    std::vector<BasisElem> factors;
    factors.push_back(parse_wedge_factor<V>());
    while (at(Tok::Caret)) {
      advance();
      factors.push_back(parse_wedge_factor<V>());
    }
    return GradedSum<V>::term(ctx_, std::move(factors), coeff);
  }

  template <Variance V>
  GradedSum<V> parse_graded() {
    int sign = 1;
    if (at(Tok::Plus)) {
      advance();
    } else if (at(Tok::Minus)) {
      advance();
      sign = -1;
    }
    GradedSum<V> acc = parse_fterm<V>(sign);
    for (;;) {
      if (at(Tok::Plus)) {
        advance();
        acc += parse_fterm<V>(1);
      } else if (at(Tok::Minus)) {
        advance();
        acc += parse_fterm<V>(-1);
      } else {
        break;
      }
    }
    return acc;
  }
};

} // namespace

Expr parse_expr(const std::string& text, const CtxPtr& ctx) {
  return Parser(text, ctx).expr_document();
}

Form parse_form(const std::string& text, const CtxPtr& ctx) {
  return Parser(text, ctx).graded_document<Variance::Covector>();
}

Multivector parse_multivector(const std::string& text, const CtxPtr& ctx) {
  return Parser(text, ctx).graded_document<Variance::Vector>();
}

} // namespace jetbrackets
