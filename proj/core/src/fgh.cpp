#include "slowcon/fgh.hpp"

#include <vector>

namespace slowcon {

std::string to_string(EvalOutcome::Kind k) {
  switch (k) {
    case EvalOutcome::Kind::Converged: return "Converged";
    case EvalOutcome::Kind::DivergedSteps: return "DivergedSteps";
    case EvalOutcome::Kind::DivergedValue: return "DivergedValue";
  }
  return "?";
}

namespace {

// F is monotone along n-descent paths: F_b(n) <= F_a(n) whenever b lies on the
// n-path from a. A limit chain at fixed n can be as long as that path, so
// before walking one we look for a small witness b on the path whose value
// already exceeds the ceiling.
bool exceeds_via_witness(const Ordinal& a, const Natural& x, const Natural& max_value) {
  static const Ordinal two_omega = Ordinal::parse("w*2");
  if (!(a > two_omega)) return false;
  const Ordinal witnesses[] = {add(Ordinal::omega(), Ordinal::natural(1)), Ordinal::omega(),
                               Ordinal::natural(x + 1)};
  for (const Ordinal& w : witnesses) {
    if (!on_descent_path(a, w, x)) continue;
    EvalOutcome r = fgh_eval(w, x, cutoff_budget(max_value));
    if (r.kind == EvalOutcome::Kind::DivergedValue) return true;
  }
  return false;
}

}  // namespace

EvalOutcome fgh_eval(const Ordinal& start, const Natural& n, const EvalBudget& budget) {
  EvalOutcome out;
  // F_a(n) > n, so there is nothing to run when n already sits at the ceiling.
  if (n >= budget.max_value) {
    out.kind = EvalOutcome::Kind::DivergedValue;
    return out;
  }
  // A frame (p, r) means F_p still has to be applied r more times to x.
  struct Frame {
    Ordinal p;
    Natural remaining;
  };
  std::vector<Frame> stack;
  Natural x = n;
  Ordinal a = start;
  auto tick = [&]() {
    if (out.steps_used == budget.max_steps) return false;
    ++out.steps_used;
    return true;
  };
  bool fresh = true;  // a new application of F_a to x starts here
  for (;;) {
    if (!tick()) {
      out.kind = EvalOutcome::Kind::DivergedSteps;
      return out;
    }
    if (fresh && a.is_limit() && !a.is_epsilon_zero() &&
        exceeds_via_witness(a, x, budget.max_value)) {
      out.kind = EvalOutcome::Kind::DivergedValue;
      return out;
    }
    fresh = false;
    if (a.is_limit()) {
      if (a.is_epsilon_zero() && x + 1 > kDefaultTowerCap) {
        // w_{x+1} is not representable; F_eps0(x) is far above any ceiling.
        out.kind = EvalOutcome::Kind::DivergedValue;
        return out;
      }
      fresh = a.is_epsilon_zero();
      a = fund_seq(a, x);
      continue;
    }
    if (a.is_successor()) {
      Ordinal p = predecessor(a);
      if (p.is_zero()) {
        x += x + 1;  // F_0^{x+1}(x) in one step
      } else {
        stack.push_back({std::move(p), x});  // x+1 applications, one starts now
        a = stack.back().p;
        fresh = true;
        continue;
      }
    } else {
      x += 1;
    }
    if (x > budget.max_value) {
      out.kind = EvalOutcome::Kind::DivergedValue;
      return out;
    }
    while (!stack.empty() && stack.back().remaining == 0) stack.pop_back();
    if (stack.empty()) break;
    stack.back().remaining -= 1;
    a = stack.back().p;
    fresh = true;
  }
  out.kind = EvalOutcome::Kind::Converged;
  out.value = std::move(x);
  return out;
}

LeqResult fgh_leq(const Ordinal& a, const Natural& n, const Natural& bound) {
  EvalOutcome r = fgh_eval(a, n, cutoff_budget(bound));
  if (r.converged()) return {true, r.value};
  return {};
}

EvalOutcome feps_eval(const Natural& n, const EvalBudget& budget) {
  return fgh_eval(Ordinal::epsilon_zero(), n, budget);
}

Natural feps_inverse(const Natural& x) {
  Natural best = 0;
  for (Natural z = 0; z <= x; ++z) {
    if (!fgh_leq(Ordinal::epsilon_zero(), z, x).holds) break;
    best = z;
  }
  return best;
}

EvalOutcome feps_star(const Natural& x, const EvalBudget& budget) {
  Natural y = feps_inverse(x);
  if (y + 1 > kDefaultTowerCap) {
    EvalOutcome out;
    out.kind = EvalOutcome::Kind::DivergedValue;
    return out;
  }
  return fgh_eval(omega_n(static_cast<std::size_t>(y)), x, budget);
}

}  // namespace slowcon
