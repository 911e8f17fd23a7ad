// First-order arithmetic syntax with a predicate variable R and primitive
// ordinal symbols. Bound variables are de Bruijn indices (locally nameless),
// so alpha-equivalent expressions are structurally equal and substitution
// never captures.
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slowcon/ordinal.hpp"

namespace slowcon::fol {

enum class Kind : std::uint8_t {
  // terms
  Var,     // free variable (named)
  BVar,    // bound variable (de Bruijn index)
  Zero,
  Succ,
  Add,
  Mul,
  OrdLit,  // ordinal notation constant
  Tower,   // tower(t) = w_t
  Oplus,   // oplus(b, g) = b + w^g
  Omul,    // omul(b, g, m) = b + w^g * m
  Fs,      // fs(a, x) = {a}(x)
  // prime formulas
  Eq,
  Lt,
  R,
  Fgraph,  // F(a, x, y): F_a(x) = y
  Fiter,   // I(b, i, x, y): F_b^i(x) = y
  // compound formulas
  Not,
  And,
  Or,
  Imp,
  Iff,
  Forall,
  Exists,
};

bool is_term(Kind k);
bool is_prime(Kind k);
bool is_connective(Kind k);  // Not, And, Or, Imp, Iff
bool is_binder(Kind k);

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::uint32_t index = 0;          // BVar
  std::string name;                 // Var; binder and BVar name hint
  std::shared_ptr<const Ordinal> ordinal;  // OrdLit
  std::vector<Expr> args;

  // cached, computed at construction
  std::size_t hash = 0;          // alpha-invariant
  std::uint64_t length = 0;      // normative symbol count
  std::uint64_t raw_length = 0;  // variables count their name's characters
  std::uint32_t loose = 0;       // 1 + largest loose de Bruijn index, 0 if none
  std::uint64_t loose_mask = 0;  // bit i set if index i is loose (i < 64)
  std::uint64_t r_count = 0;     // occurrences of R
  std::shared_ptr<const std::vector<std::string>> free_names;  // sorted

  const Expr& arg(std::size_t i) const { return args[i]; }
  const Expr& body() const { return args[0]; }  // binders
};

enum class CountMode { Normative, Raw };

// ---- construction -------------------------------------------------------
Expr var(std::string name);
Expr bvar(std::uint32_t index, std::string hint = "x");
Expr zero();
Expr one();  // S(0)
Expr succ(Expr t);
Expr plus(Expr a, Expr b);
Expr times(Expr a, Expr b);
Expr ord_lit(const Ordinal& a);
Expr tower(Expr t);
Expr oplus(Expr b, Expr g);
Expr omul(Expr b, Expr g, Expr m);
Expr fs(Expr a, Expr x);

Expr eq(Expr a, Expr b);
Expr lt(Expr a, Expr b);
Expr rel_r(Expr t);
Expr fgraph(Expr a, Expr x, Expr y);
Expr fiter(Expr b, Expr i, Expr x, Expr y);

Expr neg(Expr a);
Expr conj(Expr a, Expr b);
Expr disj(Expr a, Expr b);
Expr imp(Expr a, Expr b);
Expr iff(Expr a, Expr b);
// Binds the free variable `name` of body.
Expr forall(const std::string& name, const Expr& body);
Expr exists(const std::string& name, const Expr& body);
// Binder over a body whose index 0 is already the bound variable.
Expr make_binder(Kind k, std::string hint, Expr body);
// Rebuilds e with new children (same kind and payload).
Expr rebuild(const Expr& e, std::vector<Expr> args);

// Right-nested implication chain a_1 -> (a_2 -> ... -> c).
Expr imp_chain(const std::vector<Expr>& premises, Expr conclusion);

// ---- structure ---------------------------------------------------------
bool same(const Expr& a, const Expr& b);
struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e->hash; }
};
struct ExprEq {
  bool operator()(const Expr& a, const Expr& b) const { return same(a, b); }
};

std::uint64_t length(const Expr& e, CountMode mode = CountMode::Normative);
std::uint64_t occurrences_of_r(const Expr& e);
bool is_closed(const Expr& e);  // no loose de Bruijn indices
bool has_free(const Expr& e, const std::string& name);
const std::vector<std::string>& free_vars(const Expr& e);
// A name of the form prefix<number> not free in any of es.
std::string fresh_name(const std::string& prefix, const std::vector<Expr>& es);

// ---- substitution ------------------------------------------------------
// Shifts loose indices >= cutoff by delta.
Expr lift(const Expr& e, std::uint32_t delta, std::uint32_t cutoff = 0);
// body[t/0] for the body of a binder: index 0 becomes t, higher loose indices
// drop by one. t may itself have loose indices.
Expr instantiate(const Expr& body, const Expr& t);
// Opens a binder with the term t.
inline Expr open(const Expr& binder, const Expr& t) { return instantiate(binder->body(), t); }
// Replaces free variable `name` by index `depth` (under depth binders).
Expr abstract(const Expr& e, const std::string& name);
Expr subst_free(const Expr& e, const std::string& name, const Expr& t);

// A formula with a distinguished parameter variable, standing for a predicate.
struct PredicateAbstract {
  std::string param;
  Expr formula;

  static PredicateAbstract identity();  // g. R(g)
  Expr apply(const Expr& t) const;      // psi(t)
};

// Replaces every R(t) by psi(t).
Expr subst_r(const Expr& e, const PredicateAbstract& psi);

// subst_r with one memo kept across calls, so shared subterms of many
// formulas are rewritten once.
class RSubstituter {
 public:
  explicit RSubstituter(const PredicateAbstract& psi);
  ~RSubstituter();
  RSubstituter(const RSubstituter&) = delete;
  RSubstituter& operator=(const RSubstituter&) = delete;
  Expr operator()(const Expr& e);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ---- text ----------------------------------------------------------------
std::string to_string(const Expr& e);
Expr parse_formula(std::string_view text);
Expr parse_term(std::string_view text);
Expr parse_expr(std::string_view text);  // either

class SyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- arithmetic --------------------------------------------------------
// 0 = 0, (2n+2) = (n+1)*(1+1), (2n+1) = n*(1+1)+1.
Expr numeral(const Natural& n);
Expr two();  // (1 + 1)

}  // namespace slowcon::fol
