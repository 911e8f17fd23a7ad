// Shorthands for writing proof scripts against the tactic layer.
#pragma once

#include <functional>

#include "slowcon/tactics.hpp"

namespace slowcon::script {

using fol::Expr;
using tactics::Context;
using tactics::Fact;

inline Context with(Context c, const Expr& e) {
  c.push_back(e);
  return c;
}

class Script {
 public:
  explicit Script(hilbert::Theory t) : b(std::move(t)) {}

  tactics::ProofBuilder b;

  Fact hyp(const Context& c, const Expr& a) { return b.assume(c, a); }
  Fact ax(const Context& c, const Expr& f, const char* id) { return b.axiom_fact(c, f, id); }
  Fact by(const Context& c, const Expr& goal, const std::vector<Fact>& fs) {
    return b.implication_chain(fs, c, goal);
  }
  Fact weaken(const Fact& f, const Context& c) { return b.weaken(f, c); }
  Fact refl(const Context& c, const Expr& t) { return ax(c, fol::eq(t, t), "e1"); }

  // s = t from t = s, via (t = s -> (t = t -> s = t)).
  Fact symm(const Fact& e) {
    const Expr& t = e.concl->arg(0);
    const Expr& s = e.concl->arg(1);
    return b.rewrite(e, refl(e.ctx, t), fol::eq(s, t));
  }
  // Rewrites some occurrences of the left side of `e` in f to its right side.
  Fact rw(const Fact& e, const Fact& f, const Expr& target) { return b.rewrite(e, f, target); }
  // l = x' from l = x and x = x' (or any equation rewriting x into x').
  Fact step(const Fact& cur, const Fact& e, const Expr& new_rhs) {
    return rw(e, cur, fol::eq(cur.concl->arg(0), new_rhs));
  }
  Fact trans(const Fact& ab, const Fact& bc) { return step(ab, bc, bc.concl->arg(1)); }

  Fact inst(Fact f, std::initializer_list<Expr> ts) {
    for (const auto& t : ts) f = b.forall_instantiate(f, t);
    return f;
  }
  Fact mp(const Context& c, const Fact& ab, const Fact& a) { return b.modus_ponens(ab, a, c); }
  Fact all(const Fact& f, const std::string& x) { return b.forall_intro(f, x); }
  // Discharges h, then generalizes x.
  Fact all(const Fact& f, const Expr& h, const std::string& x) { return b.forall_intro(b.discharge(f, h), x); }
  Fact discharge(const Fact& f, const Expr& h) { return b.discharge(f, h); }
  Fact some(const Fact& f, const Expr& ex, const Expr& t) { return b.exists_intro(f, ex, t); }

  // Opens the existential of `ex` with a fresh variable y and continues with
  // body(ctx + [A(y)], A(y)).
  Fact elim(const Fact& ex, const std::string& y, const std::function<Fact(const Context&, const Expr&)>& body) {
    Expr ay = fol::open(ex.concl, fol::var(y));
    Fact inner = body(with(ex.ctx, ay), ay);
    return b.exists_elim(ex, y, inner);
  }
};

}  // namespace slowcon::script
