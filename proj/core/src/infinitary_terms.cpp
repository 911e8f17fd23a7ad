#include <algorithm>

#include "slowcon/infinitary.hpp"

namespace slowcon::inf {

namespace {

const char* const kRuleNames[] = {"ax-true-prime", "ax-zero-n", "ax-n-neg-pair", "ax-feps-star",
                                  "rule-n",        "rule-and",  "rule-or",       "rule-exists",
                                  "rule-omega",    "cut-n",     "cut-prime",     "cut-feps-star",
                                  "accum",         "inv"};

Ordinal plus_one(const Ordinal& a) { return add(a, Ordinal::natural(1)); }

std::shared_ptr<ProofTerm> make(Rule r, Sequent end) {
  auto h = std::make_shared<ProofTerm>();
  h->rule = r;
  h->end = std::move(end);
  return h;
}

unsigned max_rank(const std::vector<ProofPtr>& subs) {
  unsigned r = 0;
  for (const auto& s : subs) r = std::max(r, s->rank);
  return r;
}

std::shared_ptr<ProofTerm> with_premises(Rule r, Sequent end, std::vector<ProofPtr> subs, std::optional<Ordinal> height) {
  auto h = make(r, std::move(end));
  h->height = height ? *height : plus_one(subs.front()->height);
  h->rank = max_rank(subs);
  h->subs = std::move(subs);
  return h;
}

bool is_axiom(Rule r) {
  return r == Rule::AxTruePrime || r == Rule::AxZeroN || r == Rule::AxNNegPair || r == Rule::AxFepsStar;
}

}  // namespace

std::string to_string(Rule r) { return kRuleNames[static_cast<int>(r)]; }

std::optional<Rule> rule_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Rule::Inv); ++i)
    if (s == kRuleNames[i]) return static_cast<Rule>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------- builders

ProofPtr ax_true_prime(Sequent end) { return make(Rule::AxTruePrime, std::move(end)); }
ProofPtr ax_zero_n(Sequent end) { return make(Rule::AxZeroN, std::move(end)); }

ProofPtr ax_n_neg_pair(const Natural& m, Sequent end) {
  auto h = make(Rule::AxNNegPair, std::move(end));
  h->m = m;
  return h;
}

ProofPtr ax_feps_star(const Natural& m, Sequent end) {
  auto h = make(Rule::AxFepsStar, std::move(end));
  h->m = m;
  return h;
}

ProofPtr rule_n(const Natural& m, ProofPtr sub, Sequent end, std::optional<Ordinal> height) {
  auto h = with_premises(Rule::RuleN, std::move(end), {std::move(sub)}, height);
  h->m = m;
  return h;
}

ProofPtr rule_and(FormulaPtr main, ProofPtr left, ProofPtr right, Sequent end, std::optional<Ordinal> height) {
  auto h = with_premises(Rule::RuleAnd, std::move(end), {std::move(left), std::move(right)}, height);
  h->formula = std::move(main);
  return h;
}

ProofPtr rule_or(FormulaPtr main, ProofPtr sub, Sequent end, std::optional<Ordinal> height) {
  auto h = with_premises(Rule::RuleOr, std::move(end), {std::move(sub)}, height);
  h->formula = std::move(main);
  return h;
}

ProofPtr rule_exists(FormulaPtr main, TermPtr witness, ProofPtr sub, Sequent end, std::optional<Ordinal> height) {
  auto h =
      with_premises(Rule::RuleExists, std::move(end), {std::move(sub)}, height);
  h->formula = std::move(main);
  h->witness = std::move(witness);
  return h;
}

ProofPtr rule_omega(FormulaPtr main, ChildSchema child, Sequent end, std::optional<Ordinal> height,
                    std::string schema_text) {
  auto h = make(Rule::RuleOmega, std::move(end));
  ProofPtr first = child(0);
  h->height = height ? *height : plus_one(first->height);
  h->rank = first->rank;
  h->formula = std::move(main);
  h->child = std::move(child);
  h->schema_text = std::move(schema_text);
  return h;
}

ProofPtr cut_n(const Natural& m, ProofPtr with_mem, ProofPtr with_not_mem, Sequent end,
               std::optional<Ordinal> height) {
  auto h = with_premises(Rule::CutN, std::move(end), {std::move(with_mem), std::move(with_not_mem)}, height);
  h->m = m;
  return h;
}

ProofPtr cut_prime(FormulaPtr phi, ProofPtr with_phi, ProofPtr with_neg, Sequent end,
                   std::optional<Ordinal> height) {
  auto h = with_premises(Rule::CutPrime, std::move(end), {std::move(with_phi), std::move(with_neg)}, height);
  h->formula = std::move(phi);
  return h;
}

ProofPtr cut_feps_star(FormulaPtr exists_r, ProofPtr with_exists, ProofPtr with_forall, Sequent end,
                       std::optional<Ordinal> height) {
  auto h = with_premises(Rule::CutFepsStar, std::move(end), {std::move(with_exists), std::move(with_forall)}, height);
  if (exists_r->kind == Formula::Kind::ExistsN && exists_r->left->kind == Formula::Kind::Prime) {
    if (auto v = term_value(*exists_r->left->lhs)) h->m = *v;
  }
  h->formula = std::move(exists_r);
  return h;
}

ProofPtr accum(Ordinal target, ProofPtr sub, std::optional<Sequent> end) {
  auto h = make(Rule::Accum, end ? *end : sub->end);
  h->height = std::move(target);
  h->rank = sub->rank;
  h->subs = {std::move(sub)};
  return h;
}

Sequent inversion_end(const Sequent& premise, const FormulaPtr& inverted, const Natural& l) {
  Sequent rest = premise.without(inverted);
  if (inverted->kind == Formula::Kind::Or) return rest.with(inverted->left).with(inverted->right);
  return rest.with(not_mem(num(l))).with(instantiate(inverted, l));
}

ProofPtr inv(ProofPtr sub, FormulaPtr inverted, const Natural& l) {
  auto h = make(Rule::Inv, inversion_end(sub->end, inverted, l));
  h->height = sub->height;
  h->rank = sub->rank;
  h->m = inverted->kind == Formula::Kind::Or ? Natural(0) : l;
  h->formula = std::move(inverted);
  h->subs = {std::move(sub)};
  return h;
}

// ---------------------------------------------------------------- inversion

ProofPtr unfold_inversion(const ProofTerm& inversion) {
  const FormulaPtr& f = inversion.formula;
  const Natural& l = inversion.m;
  ProofPtr h = inversion.subs.front();
  while (h->rule == Rule::Inv) h = unfold_inversion(*h);
  if (!h->end.contains(f)) return h;  // nothing to invert; the inversion only weakens
  const Sequent& end = inversion.end;
  bool forall = f->kind == Formula::Kind::ForallN;
  // The rule that introduced f: its premise minus f, one height lower.
  if (h->rule == Rule::RuleOmega && forall && same(h->formula, f)) {
    ProofPtr c = h->child(l);
    FormulaPtr d = disj(not_mem(num(l)), instantiate(f, l));
    return accum(h->height, inv(inv(c, f, l), d), end);
  }
  if (h->rule == Rule::RuleOr && !forall && same(h->formula, f))
    return accum(h->height, inv(h->subs.front(), f), end);
  // Otherwise f is a side formula: the same rule over inverted premises.
  auto out = std::make_shared<ProofTerm>(*h);
  out->end = end;
  if (is_axiom(h->rule)) return out;
  for (auto& s : out->subs) s = inv(s, f, l);
  if (h->rule == Rule::RuleOmega) {
    ChildSchema c = h->child;
    out->child = [c, f, l](const Natural& n) { return inv(c(n), f, l); };
    out->schema_text.clear();
  }
  return out;
}

// ------------------------------------------------------ local correctness

std::optional<std::string> check_node(const ProofTerm& h, const CheckOptions& opt) {
  const Sequent& end = h.end;
  for (const auto& f : end.items())
    if (!closed(f)) return "end-sequent formula " + to_string(f) + " is not closed";
  auto need = [&](const FormulaPtr& f) -> std::optional<std::string> {
    if (end.contains(f)) return std::nullopt;
    return "end-sequent lacks " + to_string(f);
  };
  auto arity = [&](std::size_t n) -> std::optional<std::string> {
    if (h.rule != Rule::RuleOmega && h.subs.size() != n)
      return "expected " + std::to_string(n) + " premises, found " + std::to_string(h.subs.size());
    for (const auto& s : h.subs)
      if (!s) return std::string("missing premise");
    return std::nullopt;
  };
  auto premise = [&](std::size_t i, const FormulaPtr& minor) -> std::optional<std::string> {
    const ProofTerm& s = *h.subs[i];
    if (s.end.subset_of(minor ? end.with(minor) : end)) return std::nullopt;
    return "premise " + std::to_string(i) + " end-sequent " + to_string(s.end) + " not contained in conclusion" +
           (minor ? " plus " + to_string(minor) : std::string());
  };
  auto one_up = [&]() -> std::optional<std::string> {
    const Ordinal& below = h.subs.front()->height;
    for (const auto& s : h.subs)
      if (s->height != below) return "premise heights differ";
    if (h.height != plus_one(below))
      return "height " + h.height.to_string() + " is not one above the premise height " + below.to_string();
    return std::nullopt;
  };
  auto rank = [&]() -> std::optional<std::string> {
    if (h.rank != max_rank(h.subs))
      return "rank " + std::to_string(h.rank) + " differs from the premises' " + std::to_string(max_rank(h.subs));
    return std::nullopt;
  };
  auto first = [](std::initializer_list<std::optional<std::string>> rs) -> std::optional<std::string> {
    for (const auto& r : rs)
      if (r) return r;
    return std::nullopt;
  };
  auto kind_is = [&](Formula::Kind k, const char* what) -> std::optional<std::string> {
    if (h.formula && h.formula->kind == k) return std::nullopt;
    return std::string("main formula is not ") + what;
  };

  if (is_axiom(h.rule)) {
    if (!h.subs.empty()) return "axiom with premises";
    if (!h.height.is_zero()) return "axiom height " + h.height.to_string() + " is not 0";
    if (h.rank != 0) return "axiom rank is not 0";
  }
  switch (h.rule) {
    case Rule::AxTruePrime:
      for (const auto& f : end.items())
        if (is_arithmetical_prime(f) && evaluate_prime(f, opt.prime_budget) == Truth::True) return std::nullopt;
      return "no true arithmetical prime formula";
    case Rule::AxZeroN: return need(mem(num(0)));
    case Rule::AxNNegPair: return first({need(mem(num(h.m))), need(not_mem(num(h.m)))});
    case Rule::AxFepsStar: return first({need(not_mem(num(h.m))), need(feps_total_at(h.m))});
    case Rule::RuleN:
      if (auto e = arity(1)) return e;
      return first({need(mem(num(h.m + 1))), premise(0, mem(num(h.m))), one_up(), rank()});
    case Rule::RuleAnd:
      if (auto e = first({arity(2), kind_is(Formula::Kind::And, "a conjunction")})) return e;
      return first({need(h.formula), premise(0, h.formula->left), premise(1, h.formula->right), one_up(), rank()});
    case Rule::RuleOr:
      if (auto e = first({arity(1), kind_is(Formula::Kind::Or, "a disjunction")})) return e;
      if (premise(0, h.formula->left) && premise(0, h.formula->right)) return premise(0, h.formula->right);
      return first({need(h.formula), one_up(), rank()});
    case Rule::RuleExists: {
      if (auto e = first({arity(1), kind_is(Formula::Kind::ExistsN, "a relativized existential")})) return e;
      auto n = h.witness ? term_value(*h.witness) : std::nullopt;
      if (!n) return std::string("witness is not a closed term");
      return first({need(h.formula), premise(0, conj(mem(num(*n)), instantiate(h.formula, *n))), one_up(), rank()});
    }
    case Rule::RuleOmega: {
      if (auto e = first({kind_is(Formula::Kind::ForallN, "a relativized universal"), need(h.formula)})) return e;
      if (!h.child) return std::string("omega rule without a child schema");
      for (std::uint64_t i = 0; i < opt.omega_samples; ++i) {
        Natural n = i;
        ProofPtr c = h.child(n);
        if (!c) return "child " + std::to_string(i) + " missing";
        FormulaPtr minor = disj(not_mem(num(n)), instantiate(h.formula, n));
        if (!c->end.subset_of(end.with(minor)))
          return "child " + std::to_string(i) + " end-sequent " + to_string(c->end) +
                 " not contained in conclusion plus " + to_string(minor);
        if (plus_one(c->height) != h.height)
          return "height " + h.height.to_string() + " is not one above child " + std::to_string(i) + "'s " +
                 c->height.to_string();
        if (c->rank > h.rank) return "child " + std::to_string(i) + " has a larger rank";
      }
      return std::nullopt;
    }
    case Rule::CutN:
      if (auto e = arity(2)) return e;
      return first({premise(0, mem(num(h.m))), premise(1, not_mem(num(h.m))), one_up(), rank()});
    case Rule::CutPrime:
      if (auto e = first({arity(2), kind_is(Formula::Kind::Prime, "an arithmetical prime")})) return e;
      if (!closed(h.formula)) return std::string("cut formula is not closed");
      return first({premise(0, h.formula), premise(1, negate(h.formula)), one_up(), rank()});
    case Rule::CutFepsStar:
      if (auto e = first({arity(2), kind_is(Formula::Kind::ExistsN, "a relativized existential")})) return e;
      if (h.formula->left->kind != Formula::Kind::Prime || !closed(h.formula))
        return std::string("cut formula is not Ey in N R(m, y) with R prime");
      return first({premise(0, h.formula), premise(1, negate(h.formula)), one_up(), rank()});
    case Rule::Accum: {
      if (auto e = first({arity(1), premise(0, nullptr)})) return e;
      const Ordinal& from = h.subs.front()->height;
      if (!(from < h.height)) return "accumulation target " + h.height.to_string() + " is not above " + from.to_string();
      Natural k = k_of(end);
      auto r = step_down(h.height, from, k, opt.step_budget);
      if (std::holds_alternative<BudgetExhausted>(r)) return std::string("step-down budget exhausted");
      if (std::holds_alternative<NotOnPath>(r))
        return from.to_string() + " is not below " + h.height.to_string() + " at k = " + k.str();
      if (h.rank != h.subs.front()->rank) return std::string("rank differs from the premise's");
      return std::nullopt;
    }
    case Rule::Inv: {
      if (auto e = arity(1)) return e;
      if (!h.formula || (h.formula->kind != Formula::Kind::ForallN && h.formula->kind != Formula::Kind::Or))
        return std::string("inverted formula is neither a relativized universal nor a disjunction");
      const ProofTerm& s = *h.subs.front();
      if (!(end == inversion_end(s.end, h.formula, h.m))) return std::string("end-sequent is not the inversion's");
      if (h.height != s.height) return std::string("inversion changes the height");
      return rank();
    }
  }
  return std::nullopt;
}

namespace {

LocalResult walk_local(const ProofPtr& h, const CheckOptions& opt, const std::string& path) {
  if (auto e = check_node(*h, opt)) return {false, path, *e};
  auto join = [&](const std::string& step) { return path.empty() ? step : path + "/" + step; };
  for (std::size_t i = 0; i < h->subs.size(); ++i) {
    LocalResult r = walk_local(h->subs[i], opt, join(std::to_string(i)));
    if (!r.ok) return r;
  }
  if (h->rule == Rule::RuleOmega) {
    for (std::uint64_t i = 0; i < opt.omega_samples; ++i) {
      LocalResult r = walk_local(h->child(Natural(i)), opt, join("w" + std::to_string(i)));
      if (!r.ok) return r;
    }
  }
  return {};
}

}  // namespace

LocalResult locally_correct(const ProofPtr& h, const CheckOptions& opt) { return walk_local(h, opt, ""); }

std::uint64_t term_depth(const ProofPtr& h, std::uint64_t omega_samples) {
  if (h->rule == Rule::Inv) return term_depth(h->subs.front(), omega_samples);
  std::uint64_t d = 0;
  bool any = false;
  for (const auto& s : h->subs) {
    d = std::max(d, term_depth(s, omega_samples));
    any = true;
  }
  if (h->rule == Rule::RuleOmega) {
    for (std::uint64_t i = 0; i < omega_samples; ++i) d = std::max(d, term_depth(h->child(Natural(i)), omega_samples));
    any = true;
  }
  return any ? d + 1 : 0;
}

}  // namespace slowcon::inf
