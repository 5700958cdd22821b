#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qba/bweyl.hpp"
#include "qba/gf2.hpp"
#include "qba/ring.hpp"

namespace qba {

enum class TokenKind {
  Ident,
  Tilde,
  Plus,
  Dot,
  LParen,
  RParen,
  Zero,
  One,
  Mono,   // literal monomial such as x{1,2}
  Or,     // '|'
  And,    // '&'
  Not,    // '!'
  Implies,  // '->'
  End,
};

struct Token {
  TokenKind kind;
  std::size_t offset;
  std::string text;                // identifier name
  GenKind mono_kind = GenKind::X;  // for Mono
  Subset mono_mask{};
  bool operator==(const Token&) const = default;
};

/// Splits source text into tokens, always terminated by an End token.
/// Throws ParseError with the byte offset of an illegal character.
std::vector<Token> tokenize(std::string_view src);

/// Syntax tree of propositions and operators. Product children are ordered;
/// sums are kept exactly as written.
struct Expr {
  enum class Kind { Zero, One, Var, TildeVar, Mono, Sum, Prod };

  Kind kind = Kind::Zero;
  std::string name;  // Var, TildeVar
  GenKind mono_kind = GenKind::X;
  Subset mono_mask{};
  std::vector<Expr> children;  // Sum, Prod

  static Expr zero() { return {}; }
  static Expr one() { return Expr{Kind::One, {}, GenKind::X, {}, {}}; }
  static Expr var(std::string n) { return Expr{Kind::Var, std::move(n), GenKind::X, {}, {}}; }
  static Expr tilde(std::string n) { return Expr{Kind::TildeVar, std::move(n), GenKind::X, {}, {}}; }
  static Expr mono(GenKind k, Subset m) { return Expr{Kind::Mono, {}, k, m, {}}; }
  static Expr sum(std::vector<Expr> c) { return Expr{Kind::Sum, {}, GenKind::X, {}, std::move(c)}; }
  static Expr prod(std::vector<Expr> c) { return Expr{Kind::Prod, {}, GenKind::X, {}, std::move(c)}; }

  bool operator==(const Expr&) const = default;
};

/// Grammar (product binds tighter than sum; juxtaposition, '.' and '&' all mean product):
///   expr   := disj ('->' expr)?
///   disj   := sum ('|' sum)*
///   sum    := term ('+' term)*
///   term   := factor (('.' | '&')? factor)*
///   factor := '!' factor | '0' | '1' | IDENT | '~' IDENT | MONO | '(' expr ')'
/// The connectives '|', '!', '->' expand on the spot: p|q = p + q + pq,
/// !p = p + 1, p -> q = !p | q.
Expr parse(const std::vector<Token>& tokens);
Expr parse(std::string_view src);

/// Inverse of parse on trees it produces: single spaces for products, " + " for sums.
std::string format(const Expr& e);

/// Ordered variable names; position i (1-based) is the coordinate x_i.
class VarContext {
 public:
  VarContext() = default;
  /// Throws EvalError on duplicate names.
  explicit VarContext(std::vector<std::string> names, unsigned min_dim = 0);

  /// Names in order of first occurrence across `exprs`; the dimension also
  /// covers every index used by a literal monomial.
  static VarContext infer(std::span<const Expr> exprs);

  unsigned dim() const noexcept { return n_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// 1-based position of `name`, if known.
  std::optional<unsigned> position(std::string_view name) const;
  /// Returns a copy with dimension raised to at least `n`.
  VarContext with_min_dim(unsigned n) const;

 private:
  std::vector<std::string> names_;
  unsigned n_ = 0;
};

/// True if e mentions a tilde variable or a y/s literal.
bool is_operator_expr(const Expr& e);

/// Valuation into Z_2[A^n] (X basis). Throws EvalError on operator syntax or unknown names.
RingElem eval_classical(const Expr& e, const VarContext& ctx);
/// Valuation into the Boole-Weyl algebra (XY basis): a -> x_a, ~a -> d_a.
OpCoeffs eval_quantum(const Expr& e, const VarContext& ctx);

/// p ~ q iff both denote the same operator.
bool equivalent(const Expr& p, const Expr& q, const VarContext& ctx);
/// Pointwise order of truth functions.
bool entails_classical(const Expr& p, const Expr& q, const VarContext& ctx);

struct EntailResult {
  bool entails = false;
  /// R with p^ = q^ R, when requested and entails.
  std::optional<Gf2Matrix> witness;
};

/// p |- q iff p^ = q^ R for some operator R.
EntailResult entails_quantum(const Expr& p, const Expr& q, const VarContext& ctx,
                             bool want_witness = false);

/// Canonical sum of monomials x^a y^b, highest (a, b) first, written with the
/// context's names. Idempotent and valuation-preserving.
Expr normalize(const Expr& e, const VarContext& ctx);
/// Expression for an XY-basis element; other bases are converted first.
Expr expr_from_op(const OpCoeffs& f, const VarContext& ctx);

}  // namespace qba
