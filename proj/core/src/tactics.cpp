#include "slowcon/tactics.hpp"

#include <algorithm>

namespace slowcon::tactics {

using fol::Kind;
using hilbert::Justification;

namespace {

bool mentions(const Context& ctx, const std::string& x) {
  return std::any_of(ctx.begin(), ctx.end(), [&](const Expr& c) { return fol::has_free(c, x); });
}

}  // namespace

ProofBuilder::ProofBuilder(hilbert::Theory theory) : theory_(std::move(theory)) {}

std::size_t ProofBuilder::push(const Expr& f, Justification j) {
  auto it = index_.find(f);
  if (it != index_.end()) return it->second;
  proof_.lines.push_back({f, std::move(j)});
  std::size_t no = proof_.lines.size();
  index_.emplace(f, no);
  return no;
}

std::size_t ProofBuilder::axiom(const Expr& f, const std::string& schema) {
  if (auto it = index_.find(f); it != index_.end()) return it->second;
  const hilbert::Schema* s = theory_.find(schema);
  if (!s) throw TacticError("unknown schema " + schema);
  if (!s->matches(f)) throw TacticError("not an instance of " + schema + ": " + fol::to_string(f));
  return push(f, Justification::axiom(schema));
}

std::size_t ProofBuilder::mp(std::size_t minor, std::size_t major) {
  const Expr& m = formula(major);
  if (m->kind != Kind::Imp || !fol::same(m->arg(0), formula(minor)))
    throw TacticError("modus ponens mismatch: " + fol::to_string(m) + " with " +
                      fol::to_string(formula(minor)));
  return push(m->arg(1), Justification::mp(minor, major));
}

std::size_t ProofBuilder::gen(std::size_t premise, const std::string& x) {
  return push(fol::forall(x, formula(premise)), Justification::gen(premise, x));
}

std::vector<std::size_t> ProofBuilder::splice(const hilbert::HilbertProof& p) {
  std::vector<std::size_t> map(p.lines.size() + 1, 0);
  for (std::size_t k = 0; k < p.lines.size(); ++k) {
    Justification j = p.lines[k].just;
    if (j.rule == hilbert::Rule::ModusPonens) {
      j.minor = map.at(j.minor);
      j.major = map.at(j.major);
    } else if (j.rule == hilbert::Rule::Generalization) {
      j.minor = map.at(j.minor);
    }
    map[k + 1] = push(p.lines[k].formula, std::move(j));
  }
  return map;
}

Expr ProofBuilder::conjunction(const Context& ctx) {
  if (ctx.empty()) throw TacticError("conjunction of an empty context");
  Expr out = ctx.back();
  for (auto it = ctx.rbegin() + 1; it != ctx.rend(); ++it) out = fol::conj(*it, out);
  return out;
}

Fact ProofBuilder::assume(const Context& ctx, const Expr& a) {
  return {ctx, a, axiom(fol::imp_chain(ctx, a), "taut")};
}

Fact ProofBuilder::axiom_fact(const Context& ctx, const Expr& f, const std::string& schema) {
  Fact t = theorem(axiom(f, schema));
  return ctx.empty() ? t : weaken(t, ctx);
}

Fact ProofBuilder::implication_chain(const std::vector<Fact>& premises, const Context& ctx,
                                     const Expr& goal) {
  Expr target = fol::imp_chain(ctx, goal);
  if (auto it = index_.find(target); it != index_.end()) return {ctx, goal, it->second};
  std::vector<Expr> lines;
  lines.reserve(premises.size());
  for (const auto& p : premises) lines.push_back(formula(p.line));
  std::size_t cur = axiom(fol::imp_chain(lines, target), "taut");
  for (const auto& p : premises) cur = mp(p.line, cur);
  return {ctx, goal, cur};
}

Fact ProofBuilder::modus_ponens(const Fact& ab, const Fact& a, const Context& ctx) {
  if (ab.concl->kind != Kind::Imp) throw TacticError("modus_ponens: not an implication");
  return implication_chain({ab, a}, ctx, ab.concl->arg(1));
}

Fact ProofBuilder::deduction_transform(const Fact& f) {
  if (f.ctx.empty()) throw TacticError("deduction_transform: no hypothesis");
  Fact out = f;
  out.concl = fol::imp(out.ctx.back(), out.concl);
  out.ctx.pop_back();
  return out;
}

Fact ProofBuilder::discharge(const Fact& f, const Expr& h) {
  if (!f.ctx.empty() && fol::same(f.ctx.back(), h)) return deduction_transform(f);
  Context rest;
  for (const auto& c : f.ctx)
    if (!fol::same(c, h)) rest.push_back(c);
  return implication_chain({f}, rest, fol::imp(h, f.concl));
}

Fact ProofBuilder::forall_intro(const Fact& f, const std::string& x) {
  if (mentions(f.ctx, x)) throw TacticError("forall_intro: " + x + " is free in a hypothesis");
  Expr all = fol::forall(x, f.concl);
  if (f.ctx.empty()) return {{}, all, gen(f.line, x)};
  Expr c = conjunction(f.ctx);
  Fact packed = implication_chain({f}, {}, fol::imp(c, f.concl));
  std::size_t g = gen(packed.line, x);
  std::size_t q2 = axiom(fol::imp(formula(g), fol::imp(c, all)), "q2");
  Fact moved = theorem(mp(g, q2));
  return implication_chain({moved}, f.ctx, all);
}

Fact ProofBuilder::forall_instantiate(const Fact& f, const Expr& t) {
  if (f.concl->kind != Kind::Forall) throw TacticError("forall_instantiate: not a universal");
  Expr inst = fol::open(f.concl, t);
  Fact q1 = theorem(axiom(fol::imp(f.concl, inst), "q1"));
  return implication_chain({f, q1}, f.ctx, inst);
}

Fact ProofBuilder::exists_intro(const Fact& f, const Expr& ex, const Expr& t) {
  if (ex->kind != Kind::Exists) throw TacticError("exists_intro: not an existential");
  if (!fol::same(fol::open(ex, t), f.concl))
    throw TacticError("exists_intro: witness does not match " + fol::to_string(f.concl));
  Fact q3 = theorem(axiom(fol::imp(f.concl, ex), "q3"));
  return implication_chain({f, q3}, f.ctx, ex);
}

Fact ProofBuilder::exists_elim(const Fact& ex, const std::string& y, const Fact& body) {
  if (ex.concl->kind != Kind::Exists) throw TacticError("exists_elim: not an existential");
  if (mentions(ex.ctx, y) || fol::has_free(ex.concl, y) || fol::has_free(body.concl, y))
    throw TacticError("exists_elim: " + y + " is not fresh");
  Expr ay = fol::open(ex.concl, fol::var(y));
  Expr d = ex.ctx.empty() ? body.concl : fol::imp(conjunction(ex.ctx), body.concl);
  Fact k1 = implication_chain({body}, {}, fol::imp(ay, d));
  std::size_t g = gen(k1.line, y);
  std::size_t q4 = axiom(fol::imp(formula(g), fol::imp(ex.concl, d)), "q4");
  Fact ed = theorem(mp(g, q4));
  return implication_chain({ex, ed}, ex.ctx, body.concl);
}

Fact ProofBuilder::rewrite(const Fact& eq, const Fact& f, const Expr& target) {
  if (eq.concl->kind != Kind::Eq) throw TacticError("rewrite: not an equation");
  Fact e2 = theorem(axiom(fol::imp(eq.concl, fol::imp(f.concl, target)), "e2"));
  return implication_chain({eq, f, e2}, f.ctx, target);
}

Fact ProofBuilder::induction(const Fact& base, const Fact& step, const Expr& goal) {
  Fact ind = theorem(axiom(fol::imp(base.concl, fol::imp(step.concl, goal)), "ind"));
  return implication_chain({base, step, ind}, base.ctx, goal);
}

}  // namespace slowcon::tactics
