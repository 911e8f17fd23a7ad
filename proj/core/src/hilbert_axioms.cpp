#include <map>

#include "slowcon/hilbert.hpp"

namespace slowcon::hilbert {

using fol::Kind;
using fol::same;

namespace {

// ---- pattern schemas -----------------------------------------------------

// Free variables named ?x in the pattern stand for arbitrary terms; the
// matched subterm must not mention binders of the surrounding formula.
bool match(const Expr& p, const Expr& e, std::map<std::string, Expr>& bind) {
  if (p->kind == Kind::Var && !p->name.empty() && p->name[0] == '?') {
    if (!fol::is_term(e->kind) || e->loose != 0) return false;
    auto [it, fresh] = bind.emplace(p->name, e);
    return fresh || same(it->second, e);
  }
  if (p->kind != e->kind || p->args.size() != e->args.size()) return false;
  switch (p->kind) {
    case Kind::Var:
      if (p->name != e->name) return false;
      break;
    case Kind::BVar:
      if (p->index != e->index) return false;
      break;
    case Kind::OrdLit:
      if (*p->ordinal != *e->ordinal) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < p->args.size(); ++i)
    if (!match(p->args[i], e->args[i], bind)) return false;
  return true;
}

Schema pattern(std::string id, const std::string& text) {
  Expr p = fol::parse_formula(text);
  return {std::move(id), text, [p](const Expr& f) {
            std::map<std::string, Expr> bind;
            return match(p, f, bind);
          }};
}

// ---- quantifier schemas --------------------------------------------------

// Finds t with instantiate(body, t) == target by locating the first
// occurrence of the bound variable, then confirms by instantiating.
bool is_instance_of_body(const Expr& body, const Expr& target) {
  std::optional<Expr> t;
  std::function<bool(const Expr&, const Expr&, std::uint32_t)> walk =
      [&](const Expr& b, const Expr& e, std::uint32_t depth) -> bool {
    if (t) return true;
    bool mentions = b->loose > depth && (depth >= 64 || ((b->loose_mask >> depth) & 1) != 0);
    if (!mentions) return true;  // settled by the final instantiation check
    if (b->kind == Kind::BVar) {
      if (b->index == depth) {
        if (!fol::is_term(e->kind) || e->loose != 0) return false;
        t = e;
      }
      return true;
    }
    if (b->kind != e->kind || b->args.size() != e->args.size()) return false;
    std::uint32_t d = fol::is_binder(b->kind) ? depth + 1 : depth;
    for (std::size_t i = 0; i < b->args.size(); ++i)
      if (!walk(b->args[i], e->args[i], d)) return false;
    return true;
  };
  if (!walk(body, target, 0)) return false;
  return same(fol::instantiate(body, t ? *t : fol::zero()), target);
}

// Body without index 0, lowered: same(body, lift(a, 1)).
bool lowers_to(const Expr& body, const Expr& a) { return same(body, fol::lift(a, 1)); }

bool q1(const Expr& f) {
  return f->kind == Kind::Imp && f->arg(0)->kind == Kind::Forall &&
         is_instance_of_body(f->arg(0)->body(), f->arg(1));
}

bool q3(const Expr& f) {
  return f->kind == Kind::Imp && f->arg(1)->kind == Kind::Exists &&
         is_instance_of_body(f->arg(1)->body(), f->arg(0));
}

// Ax (A -> B) -> (A -> Ax B), x not free in A
bool q2(const Expr& f) {
  if (f->kind != Kind::Imp) return false;
  const Expr& l = f->arg(0);
  const Expr& r = f->arg(1);
  if (l->kind != Kind::Forall || l->body()->kind != Kind::Imp || r->kind != Kind::Imp ||
      r->arg(1)->kind != Kind::Forall)
    return false;
  return lowers_to(l->body()->arg(0), r->arg(0)) && same(l->body()->arg(1), r->arg(1)->body());
}

// Ax (A -> B) -> (Ex A -> B), x not free in B
bool q4(const Expr& f) {
  if (f->kind != Kind::Imp) return false;
  const Expr& l = f->arg(0);
  const Expr& r = f->arg(1);
  if (l->kind != Kind::Forall || l->body()->kind != Kind::Imp || r->kind != Kind::Imp ||
      r->arg(0)->kind != Kind::Exists)
    return false;
  return same(l->body()->arg(0), r->arg(0)->body()) && lowers_to(l->body()->arg(1), r->arg(1));
}

// ---- equality --------------------------------------------------------------

bool e1(const Expr& f) { return f->kind == Kind::Eq && same(f->arg(0), f->arg(1)); }

// b arises from a by replacing some occurrences of t with s.
bool replaces_some(const Expr& a, const Expr& b, const Expr& t, const Expr& s) {
  if (same(a, b)) return true;
  if (same(a, t) && same(b, s)) return true;
  if (a->kind != b->kind || a->args.size() != b->args.size() || a->args.empty()) return false;
  if (a->kind == Kind::OrdLit || a->kind == Kind::Var || a->kind == Kind::BVar) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!replaces_some(a->args[i], b->args[i], t, s)) return false;
  return true;
}

// t = s -> (A -> A')
bool e2(const Expr& f) {
  if (f->kind != Kind::Imp || f->arg(0)->kind != Kind::Eq || f->arg(1)->kind != Kind::Imp) return false;
  const Expr& t = f->arg(0)->arg(0);
  const Expr& s = f->arg(0)->arg(1);
  return replaces_some(f->arg(1)->arg(0), f->arg(1)->arg(1), t, s);
}

// ---- induction ---------------------------------------------------------------

// A(0) -> (Ax (A(x) -> A(S(x))) -> Ax A(x))
bool induction(const Expr& f) {
  if (f->kind != Kind::Imp || f->arg(1)->kind != Kind::Imp) return false;
  const Expr& base = f->arg(0);
  const Expr& step = f->arg(1)->arg(0);
  const Expr& goal = f->arg(1)->arg(1);
  if (step->kind != Kind::Forall || step->body()->kind != Kind::Imp || goal->kind != Kind::Forall)
    return false;
  const Expr& c = goal->body();
  if (!same(step->body()->arg(0), c)) return false;
  if (!same(base, fol::instantiate(c, fol::zero()))) return false;
  Expr next = fol::instantiate(fol::lift(c, 1, 1), fol::succ(fol::bvar(0, goal->name)));
  return same(step->body()->arg(1), next);
}

// ---- ordinal literals ------------------------------------------------------

// [a] = oplus([b],[c]) whenever a = b + w^c, and [0] = 0.
bool literal(const Expr& f) {
  if (f->kind != Kind::Eq || f->arg(0)->kind != Kind::OrdLit) return false;
  const Ordinal& a = *f->arg(0)->ordinal;
  const Expr& r = f->arg(1);
  if (a.is_zero()) return r->kind == Kind::Zero;
  if (a.is_epsilon_zero() || r->kind != Kind::Oplus) return false;
  if (r->arg(0)->kind != Kind::OrdLit || r->arg(1)->kind != Kind::OrdLit) return false;
  const Ordinal& b = *r->arg(0)->ordinal;
  const Ordinal& c = *r->arg(1)->ordinal;
  if (b.is_epsilon_zero() || c.is_epsilon_zero()) return false;
  return add_power(b, c) == a;
}

std::vector<Schema> logic_schemas() {
  return {
      {"taut", "any propositional tautology (prime and quantified subformulas as atoms)", is_tautology},
      {"q1", "(Ax A -> A[t])", q1},
      {"q2", "(Ax (A -> B) -> (A -> Ax B)), x not free in A", q2},
      {"q3", "(A[t] -> Ex A)", q3},
      {"q4", "(Ax (A -> B) -> (Ex A -> B)), x not free in B", q4},
      {"e1", "t = t", e1},
      {"e2", "(t = s -> (A -> A')), A' replaces some occurrences of t in A by s", e2},
  };
}

std::vector<Schema> arithmetic_schemas() {
  return {
      pattern("p1", "~S(?t) = 0"),
      pattern("p2", "(S(?t) = S(?s) -> ?t = ?s)"),
      pattern("p3", "(?t + 0) = ?t"),
      pattern("p4", "(?t + S(?s)) = S((?t + ?s))"),
      pattern("p5", "(?t * 0) = 0"),
      pattern("p6", "(?t * S(?s)) = ((?t * ?s) + ?t)"),
      {"ind", "(A(0) -> (Ax (A(x) -> A(S(x))) -> Ax A(x))), any formula A", induction},
  };
}

std::vector<Schema> ordinal_schemas() {
  return {
      pattern("o1", "~?t < 0"),
      pattern("o2", "(?t < oplus(?s,?r) -> ((?t < ?s | ?t = ?s) | Eg (g < ?r & Em ?t < omul(?s,g,m))))"),
      pattern("o3", "omul(?s,?r,0) = ?s"),
      pattern("o4", "omul(?s,?r,S(?m)) = oplus(omul(?s,?r,?m),?r)"),
      pattern("o5", "tower(0) = oplus(0,0)"),
      pattern("o6", "tower(S(?t)) = oplus(0,tower(?t))"),
      pattern("o7", "?s < oplus(?s,?r)"),
      pattern("o8", "(~?a = 0 -> (~Eb ?a = oplus(b,0) -> fs(?a,?x) < ?a))"),
      {"o9", "[a] = oplus([b],[c]) when a = b + w^c; [0] = 0", literal},
  };
}

std::vector<Schema> graph_schemas() {
  return {
      pattern("f1", "F(0,?x,S(?x))"),
      pattern("f2", "I(?b,0,?x,?x)"),
      pattern("f3", "(I(?b,?i,?x,?y) -> (F(?b,?y,?z) -> I(?b,S(?i),?x,?z)))"),
      pattern("f4", "(I(?b,S(?x),?x,?y) -> F(oplus(?b,0),?x,?y))"),
      pattern("f5", "(~?a = 0 -> (~Eb ?a = oplus(b,0) -> (F(fs(?a,?x),?x,?y) -> F(?a,?x,?y))))"),
  };
}

Theory build(std::string id, std::initializer_list<std::vector<Schema>> packs) {
  Theory t{std::move(id), {}};
  for (const auto& p : packs) t.schemas.insert(t.schemas.end(), p.begin(), p.end());
  return t;
}

}  // namespace

const Schema* Theory::find(const std::string& schema_id) const {
  for (const auto& s : schemas)
    if (s.id == schema_id) return &s;
  return nullptr;
}

std::optional<std::string> Theory::classify(const Expr& f) const {
  for (const auto& s : schemas)
    if (s.matches(f)) return s.id;
  return std::nullopt;
}

Theory logic_theory() { return build("logic", {logic_schemas()}); }

Theory with_extra_axioms(Theory base, const std::vector<Expr>& extra, std::string id) {
  base.id = std::move(id);
  for (std::size_t i = 0; i < extra.size(); ++i) {
    Expr a = extra[i];
    base.schemas.push_back(
        {"extra" + std::to_string(i + 1), fol::to_string(a), [a](const Expr& f) { return same(a, f); }});
  }
  return base;
}

Theory pa_theory() { return build("pa", {logic_schemas(), arithmetic_schemas()}); }
Theory pa_o_theory() { return build("pa-o", {logic_schemas(), arithmetic_schemas(), ordinal_schemas()}); }
Theory pa_o_f_theory() {
  return build("pa-o-f", {logic_schemas(), arithmetic_schemas(), ordinal_schemas(), graph_schemas()});
}

Expr contradiction() { return fol::eq(fol::zero(), fol::one()); }

std::vector<std::string> theory_ids() { return {"logic", "logic+contradiction", "pa", "pa-o", "pa-o-f"}; }

std::optional<Theory> theory_by_id(const std::string& id) {
  if (id == "logic") return logic_theory();
  if (id == "logic+contradiction") return with_extra_axioms(logic_theory(), {contradiction()}, id);
  if (id == "pa") return pa_theory();
  if (id == "pa-o") return pa_o_theory();
  if (id == "pa-o-f") return pa_o_f_theory();
  return std::nullopt;
}

}  // namespace slowcon::hilbert
