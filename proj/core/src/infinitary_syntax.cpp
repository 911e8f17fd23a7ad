#include <algorithm>

#include "slowcon/infinitary.hpp"

namespace slowcon::inf {

// ---------------------------------------------------------------- terms

TermPtr num(const Natural& n) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Num;
  t->value = n;
  return t;
}

TermPtr tvar(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->name = std::move(name);
  return t;
}

namespace {

TermPtr make_term(Term::Kind k, TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

}  // namespace

TermPtr tsucc(TermPtr a) { return make_term(Term::Kind::Succ, std::move(a), nullptr); }
TermPtr tadd(TermPtr a, TermPtr b) { return make_term(Term::Kind::Add, std::move(a), std::move(b)); }
TermPtr tmul(TermPtr a, TermPtr b) { return make_term(Term::Kind::Mul, std::move(a), std::move(b)); }

std::optional<Natural> term_value(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Num: return t.value;
    case Term::Kind::Var: return std::nullopt;
    case Term::Kind::Succ: {
      auto a = term_value(*t.a);
      if (!a) return std::nullopt;
      return *a + 1;
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      auto a = term_value(*t.a), b = term_value(*t.b);
      if (!a || !b) return std::nullopt;
      return t.kind == Term::Kind::Add ? Natural(*a + *b) : Natural(*a * *b);
    }
  }
  return std::nullopt;
}

namespace {

using Scope = std::vector<std::string>;  // innermost binder last

std::string render(const Term& t, const Scope* scope) {
  switch (t.kind) {
    case Term::Kind::Num: return t.value.str();
    case Term::Kind::Var:
      if (scope) {
        for (std::size_t i = scope->size(); i-- > 0;)
          if ((*scope)[i] == t.name) return "#" + std::to_string(scope->size() - 1 - i);
      }
      return t.name;
    case Term::Kind::Succ: return "(S " + render(*t.a, scope) + ")";
    case Term::Kind::Add: return "(+ " + render(*t.a, scope) + " " + render(*t.b, scope) + ")";
    case Term::Kind::Mul: return "(* " + render(*t.a, scope) + " " + render(*t.b, scope) + ")";
  }
  return "?";
}

const char* rel_name(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::FepsStar: return "feps*";
  }
  return "?";
}

// With a scope, bound variables print as de Bruijn indices so that keys do
// not depend on the names chosen.
std::string render(const Formula& f, Scope* scope) {
  switch (f.kind) {
    case Formula::Kind::Prime: {
      std::string p = std::string("(") + rel_name(f.rel) + " " + render(*f.lhs, scope) + " " +
                      render(*f.rhs, scope) + ")";
      return f.positive ? p : "(not " + p + ")";
    }
    case Formula::Kind::Mem:
      return std::string(f.positive ? "(in " : "(notin ") + render(*f.lhs, scope) + ")";
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return std::string(f.kind == Formula::Kind::And ? "(and " : "(or ") + render(*f.left, scope) + " " +
             render(*f.right, scope) + ")";
    case Formula::Kind::ExistsN:
    case Formula::Kind::ForallN: {
      std::string head = f.kind == Formula::Kind::ExistsN ? "(exN " : "(allN ";
      if (!scope) return head + f.var + " " + render(*f.left, nullptr) + ")";
      scope->push_back(f.var);
      std::string body = render(*f.left, scope);
      scope->pop_back();
      return head + body + ")";
    }
  }
  return "?";
}

FormulaPtr finish(std::shared_ptr<Formula> f) {
  Scope scope;
  f->key = render(*f, &scope);
  return f;
}

bool term_closed(const Term& t, Scope& bound) {
  switch (t.kind) {
    case Term::Kind::Num: return true;
    case Term::Kind::Var: return std::find(bound.begin(), bound.end(), t.name) != bound.end();
    case Term::Kind::Succ: return term_closed(*t.a, bound);
    default: return term_closed(*t.a, bound) && term_closed(*t.b, bound);
  }
}

bool formula_closed(const Formula& f, Scope& bound) {
  switch (f.kind) {
    case Formula::Kind::Prime: return term_closed(*f.lhs, bound) && term_closed(*f.rhs, bound);
    case Formula::Kind::Mem: return term_closed(*f.lhs, bound);
    case Formula::Kind::And:
    case Formula::Kind::Or: return formula_closed(*f.left, bound) && formula_closed(*f.right, bound);
    default: {
      bound.push_back(f.var);
      bool ok = formula_closed(*f.left, bound);
      bound.pop_back();
      return ok;
    }
  }
}

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& r) {
  switch (t->kind) {
    case Term::Kind::Num: return t;
    case Term::Kind::Var: return t->name == x ? r : t;
    case Term::Kind::Succ: return tsucc(subst(t->a, x, r));
    default: return make_term(t->kind, subst(t->a, x, r), subst(t->b, x, r));
  }
}

FormulaPtr subst(const FormulaPtr& f, const std::string& x, const TermPtr& r) {
  switch (f->kind) {
    case Formula::Kind::Prime: return prime(f->rel, subst(f->lhs, x, r), subst(f->rhs, x, r), f->positive);
    case Formula::Kind::Mem: return f->positive ? mem(subst(f->lhs, x, r)) : not_mem(subst(f->lhs, x, r));
    case Formula::Kind::And: return conj(subst(f->left, x, r), subst(f->right, x, r));
    case Formula::Kind::Or: return disj(subst(f->left, x, r), subst(f->right, x, r));
    default: {
      if (f->var == x) return f;
      FormulaPtr body = subst(f->left, x, r);
      return f->kind == Formula::Kind::ExistsN ? exists_n(f->var, body) : forall_n(f->var, body);
    }
  }
}

}  // namespace

// ------------------------------------------------------------- formulas

FormulaPtr prime(Rel rel, TermPtr a, TermPtr b, bool positive) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Prime;
  f->rel = rel;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  f->positive = positive;
  return finish(std::move(f));
}

static FormulaPtr membership(TermPtr t, bool positive) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Mem;
  // closed arguments are folded, so that S(m) in N and m+1 in N coincide
  auto v = term_value(*t);
  f->lhs = v ? num(*v) : std::move(t);
  f->positive = positive;
  return finish(std::move(f));
}

FormulaPtr mem(TermPtr t) { return membership(std::move(t), true); }
FormulaPtr not_mem(TermPtr t) { return membership(std::move(t), false); }

static FormulaPtr binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->left = std::move(a);
  f->right = std::move(b);
  return finish(std::move(f));
}

FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::Or, std::move(a), std::move(b)); }

static FormulaPtr quantifier(Formula::Kind k, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->var = std::move(var);
  f->left = std::move(body);
  return finish(std::move(f));
}

FormulaPtr exists_n(std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::ExistsN, std::move(var), std::move(body));
}
FormulaPtr forall_n(std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::ForallN, std::move(var), std::move(body));
}

FormulaPtr feps_total_at(const Natural& m) { return exists_n("y", prime(Rel::FepsStar, num(m), tvar("y"))); }

FormulaPtr negate(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Prime: return prime(f->rel, f->lhs, f->rhs, !f->positive);
    case Formula::Kind::Mem: return membership(f->lhs, !f->positive);
    case Formula::Kind::And: return disj(negate(f->left), negate(f->right));
    case Formula::Kind::Or: return conj(negate(f->left), negate(f->right));
    case Formula::Kind::ExistsN: return forall_n(f->var, negate(f->left));
    case Formula::Kind::ForallN: return exists_n(f->var, negate(f->left));
  }
  return f;
}

FormulaPtr instantiate(const FormulaPtr& q, const Natural& n) { return subst(q->left, q->var, num(n)); }

bool same(const FormulaPtr& a, const FormulaPtr& b) { return a == b || a->key == b->key; }

bool closed(const FormulaPtr& f) {
  Scope bound;
  return formula_closed(*f, bound);
}

bool is_arithmetical_prime(const FormulaPtr& f) { return f->kind == Formula::Kind::Prime; }

bool is_sigma_n(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Prime: return true;
    case Formula::Kind::Mem: return f->positive;
    case Formula::Kind::And:
    case Formula::Kind::Or: return is_sigma_n(f->left) && is_sigma_n(f->right);
    case Formula::Kind::ExistsN: return is_sigma_n(f->left);
    case Formula::Kind::ForallN: return false;
  }
  return false;
}

std::string to_string(const FormulaPtr& f) { return render(*f, nullptr); }

// -------------------------------------------------------------- sequents

Sequent::Sequent(std::initializer_list<FormulaPtr> fs) {
  for (const auto& f : fs) insert(f);
}

Sequent::Sequent(const std::vector<FormulaPtr>& fs) {
  for (const auto& f : fs) insert(f);
}

void Sequent::insert(const FormulaPtr& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f,
                             [](const FormulaPtr& a, const FormulaPtr& b) { return a->key < b->key; });
  if (it != items_.end() && (*it)->key == f->key) return;
  items_.insert(it, f);
}

bool Sequent::contains(const FormulaPtr& f) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), f,
                             [](const FormulaPtr& a, const FormulaPtr& b) { return a->key < b->key; });
  return it != items_.end() && (*it)->key == f->key;
}

bool Sequent::subset_of(const Sequent& other) const {
  return std::all_of(items_.begin(), items_.end(), [&](const FormulaPtr& f) { return other.contains(f); });
}

Sequent Sequent::with(const FormulaPtr& f) const {
  Sequent s = *this;
  s.insert(f);
  return s;
}

Sequent Sequent::with(const Sequent& other) const {
  Sequent s = *this;
  for (const auto& f : other.items_) s.insert(f);
  return s;
}

Sequent Sequent::without(const FormulaPtr& f) const {
  Sequent s;
  for (const auto& g : items_)
    if (g->key != f->key) s.items_.push_back(g);
  return s;
}

bool operator==(const Sequent& a, const Sequent& b) {
  return a.items_.size() == b.items_.size() &&
         std::equal(a.items_.begin(), a.items_.end(), b.items_.begin(),
                    [](const FormulaPtr& x, const FormulaPtr& y) { return x->key == y->key; });
}

std::string to_string(const Sequent& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += to_string(s.items()[i]);
  }
  return out + ")";
}

static bool is_side_formula(const FormulaPtr& f) { return f->kind == Formula::Kind::Mem && !f->positive; }

bool is_sigma_n_sequent(const Sequent& s) {
  return std::all_of(s.items().begin(), s.items().end(),
                     [](const FormulaPtr& f) { return is_side_formula(f) || is_sigma_n(f); });
}

Natural k_of(const Sequent& s) {
  Natural k = 2;
  for (const auto& f : s.items()) {
    if (!is_side_formula(f)) continue;
    auto n = term_value(*f->lhs);
    if (n && 3 * *n > k) k = 3 * *n;
  }
  return k;
}

// ------------------------------------------------------------- semantics

std::string to_string(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Undecided: return "undecided";
  }
  return "?";
}

Interpretation interpretation_at(const Natural& K) {
  Interpretation in;
  in.member = [K](const Natural& m) { return 3 * m < K ? Truth::True : Truth::False; };
  in.search_cap = std::numeric_limits<std::uint64_t>::max();
  return in;
}

static Truth from_bool(bool b) { return b ? Truth::True : Truth::False; }
static Truth flip(Truth t) {
  return t == Truth::Undecided ? t : (t == Truth::True ? Truth::False : Truth::True);
}

Truth evaluate_prime(const FormulaPtr& f, const EvalBudget& budget) {
  auto a = term_value(*f->lhs), b = term_value(*f->rhs);
  if (!a || !b) return Truth::Undecided;
  Truth t = Truth::Undecided;
  switch (f->rel) {
    case Rel::Eq: t = from_bool(*a == *b); break;
    case Rel::Lt: t = from_bool(*a < *b); break;
    case Rel::Le: t = from_bool(*a <= *b); break;
    case Rel::FepsStar: {
      EvalOutcome r = feps_star(*a, {budget.max_steps, *b});
      if (r.converged()) t = from_bool(r.value == *b);
      else if (r.kind == EvalOutcome::Kind::DivergedValue) t = Truth::False;
      break;
    }
  }
  return f->positive ? t : flip(t);
}

Truth evaluate(const FormulaPtr& f, const Interpretation& in) {
  switch (f->kind) {
    case Formula::Kind::Prime: return evaluate_prime(f, in.prime_budget);
    case Formula::Kind::Mem: {
      auto m = term_value(*f->lhs);
      if (!m) return Truth::Undecided;
      Truth t = in.member(*m);
      return f->positive ? t : flip(t);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      // Kleene: the dominant value wins, otherwise undecided is contagious
      Truth dominant = f->kind == Formula::Kind::And ? Truth::False : Truth::True;
      Truth a = evaluate(f->left, in);
      if (a == dominant) return a;
      Truth b = evaluate(f->right, in);
      if (b == dominant) return b;
      return a == Truth::Undecided || b == Truth::Undecided ? Truth::Undecided : a;
    }
    case Formula::Kind::ExistsN:
    case Formula::Kind::ForallN: {
      Truth dominant = f->kind == Formula::Kind::ExistsN ? Truth::True : Truth::False;
      bool undecided = false;
      Natural y = 0;
      for (std::uint64_t tried = 0;; ++tried, ++y) {
        if (tried == in.search_cap) return Truth::Undecided;
        Truth inside = in.member(y);
        if (inside == Truth::Undecided) return Truth::Undecided;
        if (inside == Truth::False) break;
        Truth b = evaluate(instantiate(f, y), in);
        if (b == dominant) return b;
        undecided = undecided || b == Truth::Undecided;
      }
      return undecided ? Truth::Undecided : flip(dominant);
    }
  }
  return Truth::Undecided;
}

bool truth_in_K(const FormulaPtr& f, const Natural& K) {
  return evaluate(f, interpretation_at(K)) == Truth::True;
}

Truth sequent_truth(const Sequent& s, const Interpretation& in) {
  bool undecided = false;
  for (const auto& f : s.items()) {
    if (is_side_formula(f)) continue;
    Truth t = evaluate(f, in);
    if (t == Truth::True) return t;
    undecided = undecided || t == Truth::Undecided;
  }
  return undecided ? Truth::Undecided : Truth::False;
}

bool sequent_false_in(const Sequent& s, const Natural& K) {
  return sequent_truth(s, interpretation_at(K)) == Truth::False;
}

// ----------------------------------------------------------- hierarchies

std::string to_string(Hierarchy::Kind k) {
  return k == Hierarchy::Kind::FastGrowing ? "fast-growing" : "surrogate";
}

EvalOutcome surrogate_eval(const Ordinal& start, const Natural& n, const EvalBudget& budget) {
  EvalOutcome out;
  // Pending work once the current value x is known: either add one, or feed
  // x to G_p once more (the inner call of a successor clause).
  struct Pending {
    bool apply = false;
    Ordinal p;
  };
  std::vector<Pending> stack;
  Ordinal a = start;
  Natural x = n;
  const std::size_t cap_bits = budget.max_value == 0 ? 1 : msb(budget.max_value) + 1;
  for (;;) {
    if (out.steps_used == budget.max_steps) {
      out.kind = EvalOutcome::Kind::DivergedSteps;
      return out;
    }
    ++out.steps_used;
    if (auto m = a.as_natural()) {
      // G_m(x) = x + 2^(m+1) - 1, by induction on m from the clauses
      if (*m + 1 > cap_bits) {
        out.kind = EvalOutcome::Kind::DivergedValue;
        return out;
      }
      x += (Natural(1) << static_cast<unsigned>(*m + 1)) - 1;
    } else if (a.is_successor()) {
      Ordinal p = predecessor(a);
      stack.push_back({false, {}});
      stack.push_back({true, p});
      a = std::move(p);
      continue;
    } else {
      if (a.is_epsilon_zero() && x + 1 > kDefaultTowerCap) {
        out.kind = EvalOutcome::Kind::DivergedValue;
        return out;
      }
      stack.push_back({false, {}});
      a = fund_seq(a, x);
      continue;
    }
    bool resumed = false;
    while (!stack.empty()) {
      if (x > budget.max_value) break;
      Pending top = std::move(stack.back());
      stack.pop_back();
      if (top.apply) {
        a = std::move(top.p);
        resumed = true;
        break;
      }
      x += 1;
    }
    if (x > budget.max_value) {
      out.kind = EvalOutcome::Kind::DivergedValue;
      return out;
    }
    if (!resumed) break;
  }
  out.kind = EvalOutcome::Kind::Converged;
  out.value = std::move(x);
  return out;
}

EvalOutcome Hierarchy::eval(const Ordinal& a, const Natural& n) const {
  return kind == Kind::FastGrowing ? fgh_eval(a, n, budget) : surrogate_eval(a, n, budget);
}

Truth Hierarchy::exceeds(const Ordinal& a, const Natural& n, const Natural& x) const {
  EvalOutcome r = kind == Kind::FastGrowing ? fgh_eval(a, n, {budget.max_steps, x})
                                            : surrogate_eval(a, n, {budget.max_steps, x});
  if (r.kind == EvalOutcome::Kind::DivergedSteps) return Truth::Undecided;
  return from_bool(r.kind == EvalOutcome::Kind::DivergedValue);
}

Interpretation Hierarchy::interpretation(const Ordinal& a, const Natural& n) const {
  Interpretation in;
  Hierarchy self = *this;
  in.member = [self, a, n](const Natural& m) { return self.exceeds(a, n, 3 * m); };
  in.prime_budget = budget;
  return in;
}

BoundedResult bounded_by(const Sequent& s, const Hierarchy& h, const Ordinal& a) {
  BoundedResult r;
  r.k = k_of(s);
  EvalOutcome v = h.eval(a, r.k);
  if (!v.converged()) return r;
  r.bound = v.value;
  r.verdict = sequent_truth(s, interpretation_at(v.value));
  return r;
}

}  // namespace slowcon::inf
