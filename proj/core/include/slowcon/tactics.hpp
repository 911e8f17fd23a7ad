// Natural-deduction style combinators that emit Hilbert lines.
//
// A Fact is a proved line of the form C1 -> (C2 -> ... -> (Cm -> A)), read as
// "A under hypotheses C1..Cm". Every combinator appends real, checkable
// lines; none of them is trusted. Sizes below count emitted lines and are
// independent of the formulas involved; symbol counts are linear in the
// lengths of the formulas that appear.
#pragma once

#include <unordered_map>

#include "slowcon/hilbert.hpp"

namespace slowcon::tactics {

using fol::Expr;
using Context = std::vector<Expr>;

struct Fact {
  Context ctx;
  Expr concl;
  std::size_t line = 0;  // 1-based, proves imp_chain(ctx, concl)
};

class TacticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ProofBuilder {
 public:
  // Axiom lines are checked against `theory` as they are emitted.
  explicit ProofBuilder(hilbert::Theory theory);

  // ---- raw lines (deduplicated: an existing line is reused) ----
  std::size_t axiom(const Expr& f, const std::string& schema);
  std::size_t mp(std::size_t minor, std::size_t major);
  std::size_t gen(std::size_t premise, const std::string& x);
  const Expr& formula(std::size_t line) const { return proof_.lines.at(line - 1).formula; }
  std::size_t size() const { return proof_.lines.size(); }
  const hilbert::HilbertProof& proof() const { return proof_; }
  hilbert::HilbertProof take() { return std::move(proof_); }
  // Appends the lines of an accepted proof, renumbering references; returns
  // the new line number of each old line.
  std::vector<std::size_t> splice(const hilbert::HilbertProof& p);

  // ---- facts ----
  Fact theorem(std::size_t line) const { return {{}, formula(line), line}; }
  // 1 line: the tautology ctx -> a, a in ctx.
  Fact assume(const Context& ctx, const Expr& a);
  // 1 axiom line, then weakening: at most 3 lines.
  Fact axiom_fact(const Context& ctx, const Expr& f, const std::string& schema);
  // Any propositional consequence: the tautology L1 -> ... -> Lk -> (ctx -> goal)
  // over the premise lines, then k modus ponens. k + 1 lines.
  Fact implication_chain(const std::vector<Fact>& premises, const Context& ctx, const Expr& goal);
  Fact weaken(const Fact& f, const Context& ctx) { return implication_chain({f}, ctx, f.concl); }
  // From ctx -> (A -> B) and ctx -> A: 2 emitted lines plus 1 for the tautology.
  Fact modus_ponens(const Fact& ab, const Fact& a, const Context& ctx);
  // Moves the last hypothesis into the conclusion. The line is unchanged,
  // so this emits nothing.
  static Fact deduction_transform(const Fact& f);
  // Adds a hypothesis in front of the conclusion: ctx -> (h -> A) from ctx + [h] -> A.
  // Equivalent to deduction_transform when h is last; otherwise <= 2 lines.
  Fact discharge(const Fact& f, const Expr& h);

  // Gen over a variable not free in the hypotheses: <= 8 lines.
  Fact forall_intro(const Fact& f, const std::string& x);
  // From ctx -> Ax A: A[t]. 3 lines.
  Fact forall_instantiate(const Fact& f, const Expr& t);
  // From ctx -> A[t]: Ex A. 3 lines.
  Fact exists_intro(const Fact& f, const Expr& ex, const Expr& t);
  // From ctx -> Ey A and ctx + [A(y)] -> B with y fresh: ctx -> B. <= 9 lines.
  Fact exists_elim(const Fact& ex, const std::string& y, const Fact& body);
  // From ctx -> t = s and ctx -> A: A' where A' replaces some t by s. 4 lines.
  Fact rewrite(const Fact& eq, const Fact& f, const Expr& target);
  // From ctx -> A(0) and ctx -> Ax (A(x) -> A(S(x))): ctx -> goal (= Ax A). 4 lines.
  Fact induction(const Fact& base, const Fact& step, const Expr& goal);

  // Conjunction of a context, right nested; empty contexts are not allowed.
  static Expr conjunction(const Context& ctx);

 private:
  std::size_t push(const Expr& f, hilbert::Justification j);

  hilbert::Theory theory_;
  hilbert::HilbertProof proof_;
  std::unordered_map<Expr, std::size_t, fol::ExprHash, fol::ExprEq> index_;
};

}  // namespace slowcon::tactics
