#include <nlohmann/json.hpp>
#include <ostream>

#include "slowcon/infinitary.hpp"

namespace slowcon::inf {

std::string to_string(DominanceCertificate::Tag t) {
  switch (t) {
    case DominanceCertificate::Tag::SameInputDescent: return "SameInputDescent";
    case DominanceCertificate::Tag::InputBelowBound: return "InputBelowBound";
    case DominanceCertificate::Tag::AccumMesh: return "AccumMesh";
  }
  return "?";
}

std::string to_string(ReductionTrace::Verdict v) {
  switch (v) {
    case ReductionTrace::Verdict::SequentTrue: return "SequentTrue";
    case ReductionTrace::Verdict::LocalError: return "LocalError";
    case ReductionTrace::Verdict::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

namespace {

using Tag = DominanceCertificate::Tag;

Ordinal plus_one(const Ordinal& a) { return add(a, Ordinal::natural(1)); }

bool strictly_below(const Ordinal& to, const Ordinal& from, const Natural& k, std::uint64_t budget) {
  return to < from && std::holds_alternative<Reached>(step_down(from, to, k, budget));
}

// First y in N (under `in`) with body(y) true.
std::optional<Natural> find_witness(const FormulaPtr& ex, const Interpretation& in) {
  Natural y = 0;
  for (std::uint64_t tried = 0; tried < in.search_cap; ++tried, ++y) {
    if (in.member(y) != Truth::True) return std::nullopt;
    if (evaluate(instantiate(ex, y), in) == Truth::True) return y;
  }
  return std::nullopt;
}

struct Move {
  ProofPtr next;
  Sequent gamma;
  DominanceCertificate cert;
  std::string note;
};

}  // namespace

ReductionTrace reduce_trace(const ProofPtr& root, const Ordinal& mu, const WalkOptions& opt) {
  ReductionTrace t;
  t.mu = mu;
  auto stop = [&](ReductionTrace::Verdict v, std::size_t step, std::string why) {
    t.verdict = v;
    t.verdict_step = step;
    t.reason = std::move(why);
    return t;
  };
  using V = ReductionTrace::Verdict;
  if (root->rank != 0) return stop(V::LocalError, 0, "precondition: rank is not 0");
  if (!is_sigma_n_sequent(root->end)) return stop(V::LocalError, 0, "precondition: end-sequent is not Sigma^N");
  if (mu.is_epsilon_zero() || root->height.is_epsilon_zero() || !mesh(mu, root->height))
    return stop(V::LocalError, 0, "precondition: mu does not mesh with the height");

  ProofPtr node = root;
  std::string path;
  Sequent gamma = root->end;
  for (std::size_t i = 0;; ++i) {
    while (node->rule == Rule::Inv) {
      node = unfold_inversion(*node);
      path += path.empty() ? "i" : "/i";
    }
    TraceStep st;
    st.index = i;
    st.path = path;
    st.rule = node->rule;
    st.gamma = gamma;
    st.alpha = node->height;
    st.k = k_of(gamma);
    t.steps.push_back(st);
    TraceStep& cur = t.steps.back();
    if (auto e = check_node(*node, opt.check)) return stop(V::LocalError, i, *e);
    if (!node->end.subset_of(gamma)) return stop(V::LocalError, i, "end-sequent not contained in the walked sequent");
    const Natural& k = cur.k;
    const Ordinal bound_here = add(mu, node->height);

    std::optional<Move> mv;
    auto descend = [&](ProofPtr next, Sequent g, Tag tag, Natural witness, std::string note) {
      DominanceCertificate c;
      c.tag = tag;
      c.mu = mu;
      c.alpha_from = node->height;
      c.alpha_to = next->height;
      c.k_from = k;
      c.k_to = k_of(g);
      c.witness = std::move(witness);
      mv = Move{std::move(next), std::move(g), std::move(c), std::move(note)};
    };
    auto same_input = [&](std::size_t premise, const FormulaPtr& minor, std::string note) {
      descend(node->subs[premise], gamma.with(minor), Tag::SameInputDescent, 0, std::move(note));
    };
    // The cuts decide their branch in the bound of the premises.
    auto premise_bound = [&]() { return opt.hierarchy.interpretation(add(mu, node->subs.front()->height), k); };

    switch (node->rule) {
      case Rule::AxTruePrime:
      case Rule::AxZeroN:
      case Rule::AxNNegPair:
      case Rule::AxFepsStar:
        cur.note = "axiom " + to_string(node->rule);
        return stop(V::SequentTrue, i, "the axiom makes the sequent true in the current bound");
      case Rule::RuleOmega:
        return stop(V::LocalError, i, "omega rule below a Sigma^N sequent");
      case Rule::RuleN:
        same_input(0, mem(num(node->m)), "");
        break;
      case Rule::RuleAnd: {
        Interpretation here = opt.hierarchy.interpretation(bound_here, k);
        std::optional<std::size_t> pick;
        for (std::size_t j = 0; j < 2 && !pick; ++j) {
          const FormulaPtr& part = j == 0 ? node->formula->left : node->formula->right;
          Truth v = evaluate(part, here);
          if (v == Truth::Undecided) return stop(V::BudgetExhausted, i, "conjunct truth undecided");
          if (v == Truth::False) pick = j;
        }
        if (!pick) {
          cur.note = "both conjuncts true";
          return stop(V::SequentTrue, i, "the conjunction is true in the current bound");
        }
        same_input(*pick, *pick == 0 ? node->formula->left : node->formula->right,
                   "conjunct " + std::to_string(*pick) + " false");
        break;
      }
      case Rule::RuleOr: {
        const FormulaPtr& f = node->formula;
        bool left = node->subs[0]->end.subset_of(node->end.with(f->left));
        same_input(0, left ? f->left : f->right, "");
        break;
      }
      case Rule::RuleExists: {
        Natural n = *term_value(*node->witness);
        same_input(0, conj(mem(num(n)), instantiate(node->formula, n)), "witness " + n.str());
        break;
      }
      case Rule::Accum:
        descend(node->subs[0], gamma, Tag::AccumMesh, 0, "");
        break;
      case Rule::CutN: {
        Truth inside = premise_bound().member(node->m);
        if (inside == Truth::Undecided) return stop(V::BudgetExhausted, i, "membership undecided");
        if (inside == Truth::False) {
          same_input(0, mem(num(node->m)), "m in N false");
        } else {
          descend(node->subs[1], gamma.with(not_mem(num(node->m))), Tag::InputBelowBound, node->m, "m in N true");
        }
        break;
      }
      case Rule::CutPrime: {
        Truth v = evaluate_prime(node->formula, opt.check.prime_budget);
        if (v == Truth::Undecided) return stop(V::BudgetExhausted, i, "prime truth undecided");
        if (v == Truth::False) same_input(0, node->formula, "cut formula false");
        else same_input(1, negate(node->formula), "cut formula true");
        break;
      }
      case Rule::CutFepsStar: {
        const FormulaPtr& ex = node->formula;
        Interpretation below = premise_bound();
        Truth v = evaluate(ex, below);
        if (v == Truth::Undecided) return stop(V::BudgetExhausted, i, "cut formula truth undecided");
        if (v == Truth::False) {
          same_input(0, ex, "cut formula false");
          break;
        }
        auto l = find_witness(ex, below);
        if (!l) return stop(V::BudgetExhausted, i, "witness search exhausted");
        FormulaPtr all = negate(ex);
        Sequent g = gamma.with(not_mem(num(*l))).with(instantiate(all, *l));
        descend(inv(node->subs[1], all, *l), std::move(g), Tag::InputBelowBound, *l,
                "inversion at " + l->str());
        break;
      }
      case Rule::Inv:
        return stop(V::LocalError, i, "unexpected inversion");
    }
    if (i == opt.max_steps) return stop(V::BudgetExhausted, i, "step budget exhausted");
    cur.certificate = mv->cert;
    if (!mv->note.empty()) cur.note = mv->note;
    std::size_t premise = 0;
    for (; premise < node->subs.size() && node->subs[premise] != mv->next; ++premise) {
    }
    std::string step = premise < node->subs.size() ? std::to_string(premise) : "1";
    path += (path.empty() ? "" : "/") + step;
    node = mv->next;
    gamma = std::move(mv->gamma);
  }
}

bool certificate_check(const DominanceCertificate& c, const CertificateContext& ctx) {
  try {
    switch (c.tag) {
      case Tag::SameInputDescent:
        return c.k_to == c.k_from && strictly_below(add(c.mu, c.alpha_to), add(c.mu, c.alpha_from), c.k_from,
                                                    ctx.step_budget);
      case Tag::InputBelowBound: {
        // K' = H_b(k') <= H_b(H_b(k)) < H_{b+1}(k) = K, with b = mu + alpha_to
        Ordinal b = add(c.mu, c.alpha_to);
        if (c.k_from < 2 || add(c.mu, c.alpha_from) != plus_one(b)) return false;
        if (c.k_to != std::max(c.k_from, Natural(3 * c.witness))) return false;
        return ctx.hierarchy.exceeds(b, c.k_from, 3 * c.witness) == Truth::True;
      }
      case Tag::AccumMesh:
        return c.k_to == c.k_from && mesh(c.mu, c.alpha_from) &&
               strictly_below(c.alpha_to, c.alpha_from, c.k_from, ctx.step_budget);
    }
  } catch (const OrdinalError&) {
    return false;
  }
  return false;
}

TraceCheck check_trace(const ReductionTrace& t, const CertificateContext& ctx) {
  auto fail = [](std::size_t i, std::string why) { return TraceCheck{false, i, std::move(why)}; };
  for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
    const TraceStep& a = t.steps[i];
    const TraceStep& b = t.steps[i + 1];
    if (!a.certificate) return fail(i, "missing certificate");
    const DominanceCertificate& c = *a.certificate;
    if (c.mu != t.mu || c.alpha_from != a.alpha || c.alpha_to != b.alpha || c.k_from != a.k || c.k_to != b.k)
      return fail(i, "certificate does not match its steps");
    if (a.k != k_of(a.gamma) || b.k != k_of(b.gamma)) return fail(i, "k does not match the sequent");
    if (!certificate_check(c, ctx)) return fail(i, "certificate rejected");
    if (!strictly_below(b.alpha, a.alpha, a.k, ctx.step_budget)) return fail(i, "height does not descend at k");
    if (!a.gamma.subset_of(b.gamma)) return fail(i, "sequent shrank");
    if (c.tag == Tag::AccumMesh && !(a.gamma == b.gamma)) return fail(i, "non-strict step changed the sequent");
  }
  return {};
}

namespace {

// a < b decided from cut-off evaluations; nullopt when both are beyond the cap.
std::optional<bool> less_than(const EvalOutcome& a, const EvalOutcome& b, bool strict) {
  bool ca = a.converged(), cb = b.converged();
  if (ca && cb) return strict ? a.value < b.value : a.value <= b.value;
  if (ca) return true;
  if (cb) return false;
  return std::nullopt;
}

}  // namespace

NumericCheck numeric_check(const ReductionTrace& t, const EvalBudget& budget) {
  NumericCheck out;
  std::vector<EvalOutcome> K;
  for (const auto& s : t.steps) K.push_back(surrogate_eval(add(t.mu, s.alpha), s.k, budget));
  for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
    if (!t.steps[i].certificate) continue;
    bool strict = t.steps[i].certificate->tag != Tag::AccumMesh;
    auto r = less_than(K[i + 1], K[i], strict);
    if (!r) {
      ++out.beyond_cap;
      continue;
    }
    ++out.compared;
    if (!*r && out.ok) {
      out.ok = false;
      out.reason = "step " + std::to_string(i) + ": K does not " + (strict ? "decrease" : "stay below");
    }
  }
  return out;
}

SpotCheck surrogate_spot_check(const EvalBudget& budget) {
  SpotCheck out;
  auto record = [&](std::optional<bool> r, const std::string& what) {
    if (!r) {
      ++out.beyond_cap;
    } else if (*r) {
      ++out.verified;
    } else {
      if (!out.failures) out.first_failure = what;
      ++out.failures;
    }
  };
  std::vector<Ordinal> betas;
  for (unsigned n = 0; n <= 8; ++n) betas.push_back(Ordinal::natural(n));
  for (unsigned n = 0; n <= 8; ++n) betas.push_back(add(Ordinal::omega(), Ordinal::natural(n)));
  const Ordinal w = Ordinal::omega();
  const std::vector<Ordinal> mus = {Ordinal::zero(), Ordinal::natural(1), Ordinal::natural(2), w,
                                    add(w, Ordinal::natural(1)), add(w, w)};
  for (const auto& b : betas) {
    for (unsigned k = 0; k <= 6; ++k) {
      EvalOutcome once = surrogate_eval(b, k, budget);
      EvalOutcome twice = once.converged() ? surrogate_eval(b, once.value, budget) : once;
      EvalOutcome next = surrogate_eval(plus_one(b), k, budget);
      record(less_than(twice, next, true), "G_b(G_b(k)) < G_{b+1}(k) at b = " + b.to_string() + ", k = " +
                                               std::to_string(k));
    }
  }
  for (const auto& mu : mus) {
    for (const auto& a : betas) {
      if (!mesh(mu, a)) continue;
      Ordinal top = add(mu, a);
      for (unsigned k = 0; k <= 6; ++k) {
        auto r = step_down(top, Ordinal::zero(), k, 10'000);
        if (!std::holds_alternative<Reached>(r)) {
          record(false, "no descent path from " + top.to_string());
          continue;
        }
        const auto& steps = std::get<Reached>(r).path.steps;
        EvalOutcome upper = surrogate_eval(steps.front(), k, budget);
        for (std::size_t j = 1; j < steps.size(); ++j) {
          EvalOutcome lower = surrogate_eval(steps[j], k, budget);
          record(less_than(lower, upper, true), "G increasing from " + steps[j].to_string() + " to " +
                                                    steps[j - 1].to_string() + " at k = " + std::to_string(k));
          upper = std::move(lower);
        }
      }
    }
  }
  return out;
}

void write_trace_jsonl(std::ostream& os, const ReductionTrace& t) {
  using nlohmann::json;
  os << json{{"type", "header"}, {"mu", t.mu.to_string()}, {"steps", t.steps.size()}}.dump() << '\n';
  for (const auto& s : t.steps) {
    json gamma = json::array();
    for (const auto& f : s.gamma.items()) gamma.push_back(to_string(f));
    json j{{"type", "step"},          {"index", s.index}, {"path", s.path},      {"rule", to_string(s.rule)},
           {"gamma", std::move(gamma)}, {"alpha", s.alpha.to_string()}, {"k", s.k.str()}};
    if (s.certificate) {
      const auto& c = *s.certificate;
      j["certificate"] = {{"tag", to_string(c.tag)},           {"mu", c.mu.to_string()},
                          {"alpha_from", c.alpha_from.to_string()}, {"alpha_to", c.alpha_to.to_string()},
                          {"k_from", c.k_from.str()},           {"k_to", c.k_to.str()},
                          {"witness", c.witness.str()}};
    }
    if (!s.note.empty()) j["note"] = s.note;
    os << j.dump() << '\n';
  }
  os << json{{"type", "verdict"},
             {"verdict", to_string(t.verdict)},
             {"step", t.verdict_step},
             {"reason", t.reason}}
            .dump()
     << '\n';
}

}  // namespace slowcon::inf
