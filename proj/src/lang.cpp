#include "qba/lang.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "qba/error.hpp"

namespace qba {

// --- lexer ------------------------------------------------------------------

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::optional<GenKind> mono_kind_of(std::string_view name) {
  if (name == "x") return GenKind::X;
  if (name == "w") return GenKind::W;
  if (name == "m") return GenKind::M;
  if (name == "y") return GenKind::Y;
  if (name == "s") return GenKind::S;
  return std::nullopt;
}

char mono_letter(GenKind k) {
  switch (k) {
    case GenKind::X: return 'x';
    case GenKind::W: return 'w';
    case GenKind::M: return 'm';
    case GenKind::Y: return 'y';
    case GenKind::S: return 's';
  }
  return '?';
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto simple = [&](TokenKind k, std::size_t len = 1) {
    out.push_back(Token{k, i, {}, GenKind::X, {}});
    i += len;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      const std::size_t start = i;
      while (i < src.size() && ident_char(src[i])) ++i;
      const std::string name(src.substr(start, i - start));
      const auto kind = mono_kind_of(name);
      if (kind && i < src.size() && src[i] == '{') {
        const std::size_t close = src.find('}', i);
        if (close == std::string_view::npos) throw ParseError("unterminated set literal", i);
        Subset mask;
        try {
          mask = parse_subset(src.substr(i, close + 1 - i));
        } catch (const ParseError& e) {
          throw ParseError(e.detail(), i + e.offset());
        }
        out.push_back(Token{TokenKind::Mono, start, {}, *kind, mask});
        i = close + 1;
      } else {
        out.push_back(Token{TokenKind::Ident, start, name, GenKind::X, {}});
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      const std::string_view digits = src.substr(start, i - start);
      if (digits != "0" && digits != "1") throw ParseError("only the constants 0 and 1 are allowed", start);
      out.push_back(Token{digits == "0" ? TokenKind::Zero : TokenKind::One, start, {}, GenKind::X, {}});
    } else {
      switch (c) {
        case '~': simple(TokenKind::Tilde); break;
        case '+': simple(TokenKind::Plus); break;
        case '.': simple(TokenKind::Dot); break;
        case '(': simple(TokenKind::LParen); break;
        case ')': simple(TokenKind::RParen); break;
        case '|': simple(TokenKind::Or); break;
        case '&': simple(TokenKind::And); break;
        case '!': simple(TokenKind::Not); break;
        case '-':
          if (i + 1 < src.size() && src[i + 1] == '>') {
            simple(TokenKind::Implies, 2);
            break;
          }
          [[fallthrough]];
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
    }
  }
  out.push_back(Token{TokenKind::End, src.size(), {}, GenKind::X, {}});
  return out;
}

// --- parser -----------------------------------------------------------------

namespace {

Expr negate(Expr p) { return Expr::sum({std::move(p), Expr::one()}); }

Expr disjoin(Expr p, Expr q) {
  Expr both = Expr::prod({p, q});
  return Expr::sum({std::move(p), std::move(q), std::move(both)});
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::End)
      throw ParseError("token stream must end with End", 0);
  }

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != TokenKind::End) fail("unexpected token");
    return e;
  }

 private:
  Expr expr() {
    Expr lhs = disj();
    if (peek().kind == TokenKind::Implies) {
      ++pos_;
      Expr rhs = expr();
      return disjoin(negate(std::move(lhs)), std::move(rhs));
    }
    return lhs;
  }

  Expr disj() {
    Expr lhs = sum();
    while (peek().kind == TokenKind::Or) {
      ++pos_;
      lhs = disjoin(std::move(lhs), sum());
    }
    return lhs;
  }

  Expr sum() {
    std::vector<Expr> terms;
    terms.push_back(term());
    while (peek().kind == TokenKind::Plus) {
      ++pos_;
      terms.push_back(term());
    }
    return terms.size() == 1 ? std::move(terms.front()) : Expr::sum(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(factor());
    while (true) {
      const TokenKind k = peek().kind;
      if (k == TokenKind::Dot || k == TokenKind::And) {
        ++pos_;
        factors.push_back(factor());
      } else if (starts_factor(k)) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return factors.size() == 1 ? std::move(factors.front()) : Expr::prod(std::move(factors));
  }

  static bool starts_factor(TokenKind k) {
    switch (k) {
      case TokenKind::Ident:
      case TokenKind::Tilde:
      case TokenKind::Zero:
      case TokenKind::One:
      case TokenKind::Mono:
      case TokenKind::LParen:
      case TokenKind::Not: return true;
      default: return false;
    }
  }

  Expr factor() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Not: ++pos_; return negate(factor());
      case TokenKind::Zero: ++pos_; return Expr::zero();
      case TokenKind::One: ++pos_; return Expr::one();
      case TokenKind::Ident: ++pos_; return Expr::var(t.text);
      case TokenKind::Mono: ++pos_; return Expr::mono(t.mono_kind, t.mono_mask);
      case TokenKind::Tilde: {
        ++pos_;
        if (peek().kind != TokenKind::Ident) fail("expected a variable after '~'");
        return Expr::tilde(toks_[pos_++].text);
      }
      case TokenKind::LParen: {
        ++pos_;
        Expr inner = expr();
        if (peek().kind != TokenKind::RParen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      case TokenKind::End: fail("unexpected end of input");
      default: fail("unexpected token");
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().offset); }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_all(); }

Expr parse(std::string_view src) { return parse(tokenize(src)); }

std::string format(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Zero: return "0";
    case K::One: return "1";
    case K::Var: return e.name;
    case K::TildeVar: return "~" + e.name;
    case K::Mono: return mono_letter(e.mono_kind) + to_string(e.mono_mask);
    case K::Sum:
    case K::Prod: {
      const bool is_sum = e.kind == K::Sum;
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        if (i) out += is_sum ? " + " : " ";
        const bool wrap = c.kind == K::Sum || (!is_sum && c.kind == K::Prod);
        out += wrap ? "(" + format(c) + ")" : format(c);
      }
      return out;
    }
  }
  return {};
}

// --- variable contexts ------------------------------------------------------

VarContext::VarContext(std::vector<std::string> names, unsigned min_dim) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw EvalError("duplicate variable name '" + names_[i] + "'");
  n_ = std::max<unsigned>({static_cast<unsigned>(names_.size()), min_dim, 1u});
  check_dim(n_);
}

namespace {

void collect(const Expr& e, std::vector<std::string>& names, unsigned& max_index) {
  switch (e.kind) {
    case Expr::Kind::Var:
    case Expr::Kind::TildeVar:
      if (std::find(names.begin(), names.end(), e.name) == names.end()) names.push_back(e.name);
      break;
    case Expr::Kind::Mono:
      for (unsigned i : elements(e.mono_mask)) max_index = std::max(max_index, i);
      break;
    default:
      for (const Expr& c : e.children) collect(c, names, max_index);
  }
}

}  // namespace

VarContext VarContext::infer(std::span<const Expr> exprs) {
  std::vector<std::string> names;
  unsigned max_index = 0;
  for (const Expr& e : exprs) collect(e, names, max_index);
  return VarContext(std::move(names), max_index);
}

std::optional<unsigned> VarContext::position(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<unsigned>(i + 1);
  return std::nullopt;
}

VarContext VarContext::with_min_dim(unsigned n) const { return VarContext(names_, std::max(n, n_)); }

// --- evaluation -------------------------------------------------------------

bool is_operator_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::TildeVar: return true;
    case Expr::Kind::Mono: return e.mono_kind == GenKind::Y || e.mono_kind == GenKind::S;
    default:
      return std::any_of(e.children.begin(), e.children.end(), [](const Expr& c) { return is_operator_expr(c); });
  }
}

namespace {

unsigned lookup(const Expr& e, const VarContext& ctx) {
  const auto pos = ctx.position(e.name);
  if (!pos) throw EvalError("unknown variable '" + e.name + "'");
  return *pos;
}

void check_literal(const Expr& e, const VarContext& ctx) {
  if (!valid_for(e.mono_mask, ctx.dim()))
    throw EvalError("literal " + format(e) + " exceeds n=" + std::to_string(ctx.dim()));
}

RingBasis ring_basis_of(GenKind k) {
  switch (k) {
    case GenKind::W: return RingBasis::W;
    case GenKind::M: return RingBasis::M;
    default: return RingBasis::X;
  }
}

}  // namespace

RingElem eval_classical(const Expr& e, const VarContext& ctx) {
  const unsigned n = ctx.dim();
  switch (e.kind) {
    case Expr::Kind::Zero: return RingElem(n, RingBasis::X);
    case Expr::Kind::One: return ring_one(n);
    case Expr::Kind::Var: return coordinate(lookup(e, ctx), n);
    case Expr::Kind::TildeVar: throw EvalError("operator expression in classical context");
    case Expr::Kind::Mono:
      if (e.mono_kind == GenKind::Y || e.mono_kind == GenKind::S)
        throw EvalError("operator expression in classical context");
      check_literal(e, ctx);
      return convert(ring_monomial(ring_basis_of(e.mono_kind), e.mono_mask, n), RingBasis::X);
    case Expr::Kind::Sum: {
      RingElem acc(n, RingBasis::X);
      for (const Expr& c : e.children) acc = ring_add(acc, eval_classical(c, ctx));
      return acc;
    }
    case Expr::Kind::Prod: {
      RingElem acc = ring_one(n);
      for (const Expr& c : e.children) acc = ring_mul(acc, eval_classical(c, ctx));
      return acc;
    }
  }
  return RingElem(n, RingBasis::X);
}

OpCoeffs eval_quantum(const Expr& e, const VarContext& ctx) {
  const unsigned n = ctx.dim();
  switch (e.kind) {
    case Expr::Kind::Zero: return op_zero(n, OpBasis::XY);
    case Expr::Kind::One: return op_identity(n);
    case Expr::Kind::Var: return op_monomial(n, OpBasis::XY, Subset::singleton(lookup(e, ctx)), Subset{});
    case Expr::Kind::TildeVar: return op_monomial(n, OpBasis::XY, Subset{}, Subset::singleton(lookup(e, ctx)));
    case Expr::Kind::Mono: {
      check_literal(e, ctx);
      if (e.mono_kind == GenKind::X) return op_monomial(n, OpBasis::XY, e.mono_mask, Subset{});
      if (e.mono_kind == GenKind::Y) return op_monomial(n, OpBasis::XY, Subset{}, e.mono_mask);
      const Generator g[] = {{e.mono_kind, e.mono_mask}};
      return convert_op_basis(normal_order(g, n), OpBasis::XY);
    }
    case Expr::Kind::Sum: {
      OpCoeffs acc = op_zero(n, OpBasis::XY);
      for (const Expr& c : e.children) acc = op_add(acc, eval_quantum(c, ctx));
      return acc;
    }
    case Expr::Kind::Prod: {
      OpCoeffs acc = op_identity(n);
      for (const Expr& c : e.children) acc = op_mul(acc, eval_quantum(c, ctx));
      return acc;
    }
  }
  return op_zero(n, OpBasis::XY);
}

bool equivalent(const Expr& p, const Expr& q, const VarContext& ctx) {
  return to_matrix(eval_quantum(p, ctx)) == to_matrix(eval_quantum(q, ctx));
}

bool entails_classical(const Expr& p, const Expr& q, const VarContext& ctx) {
  const BitVector fp = convert(eval_classical(p, ctx), RingBasis::M).coeffs();
  BitVector both = fp;
  both &= convert(eval_classical(q, ctx), RingBasis::M).coeffs();
  return both == fp;
}

EntailResult entails_quantum(const Expr& p, const Expr& q, const VarContext& ctx, bool want_witness) {
  const Gf2Matrix s = to_matrix(eval_quantum(p, ctx));
  const Gf2Matrix t = to_matrix(eval_quantum(q, ctx));
  ColspaceResult r = colspace_contains(t, s, want_witness);
  return EntailResult{r.contained, std::move(r.witness)};
}

// --- normal form ------------------------------------------------------------

Expr expr_from_op(const OpCoeffs& f, const VarContext& ctx) {
  const OpCoeffs g = convert_op_basis(f, OpBasis::XY);
  const auto& names = ctx.names();
  auto factor = [&](unsigned i, bool tilde) {
    if (i <= names.size()) return tilde ? Expr::tilde(names[i - 1]) : Expr::var(names[i - 1]);
    return Expr::mono(tilde ? GenKind::Y : GenKind::X, Subset::singleton(i));
  };

  std::vector<Expr> terms;
  for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
    std::vector<Expr> factors;
    for (unsigned i : elements(it->left)) factors.push_back(factor(i, false));
    for (unsigned i : elements(it->right)) factors.push_back(factor(i, true));
    if (factors.empty())
      terms.push_back(Expr::one());
    else if (factors.size() == 1)
      terms.push_back(std::move(factors.front()));
    else
      terms.push_back(Expr::prod(std::move(factors)));
  }
  if (terms.empty()) return Expr::zero();
  if (terms.size() == 1) return std::move(terms.front());
  return Expr::sum(std::move(terms));
}

Expr normalize(const Expr& e, const VarContext& ctx) { return expr_from_op(eval_quantum(e, ctx), ctx); }

}  // namespace qba
