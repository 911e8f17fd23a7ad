#include "slowcon/gentzen.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "gentzen_internal.hpp"

namespace slowcon::gentzen {

using namespace fol;
using detail::Arithmetic;
using script::Fact;
using script::Script;

namespace {

struct Template {
  HilbertProof proof;
  std::size_t goal = 0;  // line proving the template's statement
};

template <class Build>
Template make_template(hilbert::Theory t, Build build) {
  Script s(std::move(t));
  Fact f = build(s);
  return {s.b.take(), f.line};
}

const Template& jump() {
  static const Template t = make_template(hilbert::pa_o_theory(), detail::jump_template);
  return t;
}
const Template& base() {
  static const Template t = make_template(hilbert::pa_o_theory(), detail::base_template);
  return t;
}
const Template& fdown_lemma() {
  static const Template t = make_template(hilbert::pa_o_f_theory(), detail::fdown_template);
  return t;
}

Fact splice_goal(Script& s, const Template& t) { return s.b.theorem(s.b.splice(t.proof).at(t.goal)); }
Fact splice_goal(Script& s, const Template& t, const PredicateAbstract& psi) {
  auto map = s.b.splice(hilbert::subst_proof(t.proof, psi));
  return s.b.theorem(map.at(t.goal));
}

Expr N(unsigned j) { return numeral(Natural(j)); }

// TI(tower(numeral(n)), R): the base below tower(0) for J'_n, then one jump
// step per level, each instantiated at the next numeral.
Fact ti_chain(Script& s, Arithmetic& ar, unsigned n, std::vector<Segment>* segments) {
  Fact cur = splice_goal(s, base(), jump_iterate(n));
  for (unsigned j = 0; j < n; ++j) {
    unsigned k = n - j - 1;
    std::size_t before = s.b.size();
    auto map = s.b.splice(hilbert::subst_proof(jump().proof, jump_iterate(k)));
    if (segments) {
      Segment seg{k, {}};
      for (std::size_t i = 1; i < map.size(); ++i)
        if (map[i] > before) seg.lines.emplace_back(map[i], i);
      segments->push_back(std::move(seg));
    }
    Fact step = s.inst(s.b.theorem(map.at(jump().goal)), {N(j)});
    Expr target = imp(step.concl->arg(0), build_ti(tower(N(j + 1)), jump_iterate(k)));
    step = s.rw(ar.succ_numeral(Natural(j)), step, target);
    cur = s.mp({}, step, cur);
  }
  return cur;
}

}  // namespace

const HilbertProof& jump_template() { return jump().proof; }
const HilbertProof& base_template() { return base().proof; }
const HilbertProof& fdown_template() { return fdown_lemma().proof; }

Expr jump_template_goal() {
  Expr x = var("x");
  return forall("x", imp(build_ti(tower(x), build_jump_single()),
                         build_ti(tower(succ(x)), PredicateAbstract::identity())));
}

Expr fdown_template_goal() {
  Expr x = var("x");
  Expr top = tower(succ(x));
  return forall("x", imp(build_ti(top, fdown_abstract()), exists("y", fgraph(top, x, var("y")))));
}

HilbertProof numeral_succ_proof(const Natural& m) {
  Script s(hilbert::pa_theory());
  Arithmetic ar(s);
  ar.numeral_succ(m);
  return s.b.take();
}

Expr gen_ti_goal(unsigned n) {
  Expr a = var("al");
  return exists("al", conj(eq(tower(N(n)), a), build_ti(a, PredicateAbstract::identity())));
}

HilbertProof gen_ti(unsigned n, std::vector<Segment>* segments) {
  Script s(hilbert::pa_o_theory());
  Arithmetic ar(s);
  Fact ti = ti_chain(s, ar, n, segments);
  Expr t = tower(N(n));
  Fact both = s.by({}, conj(eq(t, t), ti.concl), {s.refl({}, t), ti});
  s.some(both, gen_ti_goal(n), t);
  return s.b.take();
}

Expr gen_feps_goal(unsigned n) {
  return exists("y", fgraph(tower(succ(N(n))), N(n), var("y")));
}

HilbertProof gen_feps_total(unsigned n) {
  const PredicateAbstract Fd = fdown_abstract();
  Script pre(hilbert::pa_o_theory());
  Arithmetic pre_ar(pre);
  std::size_t ti_line = ti_chain(pre, pre_ar, n + 1, nullptr).line;

  Script s(hilbert::pa_o_f_theory());
  Arithmetic ar(s);
  auto map = s.b.splice(hilbert::subst_proof(pre.b.proof(), Fd));
  Fact ti = s.b.theorem(map.at(ti_line));  // TI(tower(N(n+1)), F-total)
  ti = s.rw(s.symm(ar.succ_numeral(Natural(n))), ti, build_ti(tower(succ(N(n))), Fd));
  Fact lemma = s.inst(splice_goal(s, fdown_lemma()), {N(n)});
  s.mp({}, lemma, ti);
  return s.b.take();
}

std::pair<double, double> fit_power(const std::vector<std::pair<double, double>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (auto [x, y] : pts) {
    if (x < 1 || y <= 0) continue;
    double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  if (k < 2) return {0, 0};
  double d = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return {d, (sy - d * sx) / k};
}

SizeReport size_report(Target target, const std::vector<unsigned>& ns) {
  using clock = std::chrono::steady_clock;
  SizeReport rep;
  rep.target = target;
  const hilbert::Theory theory =
      target == Target::TransfiniteInduction ? hilbert::pa_o_theory() : hilbert::pa_o_f_theory();
  std::vector<std::pair<double, double>> pts;
  for (unsigned n : ns) {
    SizeRow row;
    row.n = n;
    auto t0 = clock::now();
    HilbertProof p = target == Target::TransfiniteInduction ? gen_ti(n) : gen_feps_total(n);
    auto t1 = clock::now();
    row.build_seconds = std::chrono::duration<double>(t1 - t0).count();
    row.lines = p.lines.size();
    row.symbols = hilbert::proof_length(p);
    auto verdict = hilbert::check(p, theory);
    row.check_seconds = std::chrono::duration<double>(clock::now() - t1).count();
    row.accepted = verdict.accepted;
    if (!verdict.accepted)
      throw std::logic_error("size_report: proof for n=" + std::to_string(n) + " rejected at line " +
                             std::to_string(verdict.line) + ": " + verdict.reason);
    PredicateAbstract naive = naive_jump_iterate(n);
    row.naive_r_count = naive.formula->r_count;
    row.naive_length = length(naive.formula);
    pts.emplace_back(n, static_cast<double>(row.symbols));
    rep.rows.push_back(row);
  }
  rep.exponent = fit_power(pts).first;
  for (const auto& r : rep.rows)
    if (r.n >= 1) rep.constant = std::max(rep.constant, r.symbols / std::pow(double(r.n), rep.exponent));
  return rep;
}

}  // namespace slowcon::gentzen
