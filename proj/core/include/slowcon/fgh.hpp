// Budgeted evaluation of the fast-growing hierarchy below and at eps0.
#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "slowcon/ordinal.hpp"

namespace slowcon {

struct EvalBudget {
  std::uint64_t max_steps = 1'000'000;
  Natural max_value = Natural(1) << 64;
};

// A budget that never runs out of steps and cuts off above `bound`.
inline EvalBudget cutoff_budget(const Natural& bound) {
  return {std::numeric_limits<std::uint64_t>::max(), bound};
}

struct EvalOutcome {
  enum class Kind { Converged, DivergedSteps, DivergedValue };
  Kind kind = Kind::Converged;
  Natural value;  // meaningful for Converged only
  std::uint64_t steps_used = 0;

  bool converged() const { return kind == Kind::Converged; }
};

std::string to_string(EvalOutcome::Kind k);

// F_0(n) = n+1, F_{a+1}(n) = F_a^{n+1}(n), F_l(n) = F_{l[n]}(n), and
// F_eps0(n) = F_{w_{n+1}}(n). One step is one application of one of these
// clauses, except that F_1(x) = F_0^{x+1}(x) is applied as a single step.
// Any intermediate value above max_value aborts with DivergedValue.
EvalOutcome fgh_eval(const Ordinal& a, const Natural& n, const EvalBudget& budget);

struct LeqResult {
  bool holds = false;
  Natural value;  // F_a(n) when holds
};

// Decides F_a(n) <= bound by cutoff evaluation.
LeqResult fgh_leq(const Ordinal& a, const Natural& n, const Natural& bound);

EvalOutcome feps_eval(const Natural& n, const EvalBudget& budget);

// max({z <= x | F_eps0(z) <= x} u {0})
Natural feps_inverse(const Natural& x);

// F_{w_y}(x) with y = feps_inverse(x).
EvalOutcome feps_star(const Natural& x, const EvalBudget& budget);

}  // namespace slowcon
