#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "slowcon/formulas.hpp"
#include "slowcon/hilbert.hpp"
#include "slowcon/tactics.hpp"

using namespace slowcon;
using namespace slowcon::fol;
using namespace slowcon::hilbert;
using slowcon::tactics::Context;
using slowcon::tactics::Fact;
using slowcon::tactics::ProofBuilder;

namespace {

Expr F(const char* s) { return parse_formula(s); }

HilbertProof three_line_mp() {
  return {{{F("0 = 0"), Justification::axiom("e1")},
           {F("(0 = 0 -> (R(0) -> R(0)))"), Justification::axiom("taut")},
           {F("(R(0) -> R(0))"), Justification::mp(1, 2)}}};
}

// Truth-table oracle over the atoms R(0), R(S(0)), R(x).
const Expr kAtoms[] = {parse_formula("R(0)"), parse_formula("R(S(0))"), parse_formula("R(x)")};

bool truth(const Expr& e, unsigned row) {
  switch (e->kind) {
    case Kind::Not: return !truth(e->arg(0), row);
    case Kind::And: return truth(e->arg(0), row) && truth(e->arg(1), row);
    case Kind::Or: return truth(e->arg(0), row) || truth(e->arg(1), row);
    case Kind::Imp: return !truth(e->arg(0), row) || truth(e->arg(1), row);
    case Kind::Iff: return truth(e->arg(0), row) == truth(e->arg(1), row);
    default:
      for (unsigned i = 0; i < 3; ++i)
        if (same(e, kAtoms[i])) return (row >> i) & 1;
      throw std::logic_error("unexpected atom");
  }
}

Expr random_prop(std::mt19937_64& rng, int depth) {
  int k = depth == 0 ? 0 : static_cast<int>(rng() % 6);
  auto sub = [&] { return random_prop(rng, depth - 1); };
  switch (k) {
    case 0: return kAtoms[rng() % 3];
    case 1: return neg(sub());
    case 2: return conj(sub(), sub());
    case 3: return disj(sub(), sub());
    case 4: return imp(sub(), sub());
    default: return iff(sub(), sub());
  }
}

// Random accepted proofs over formulas mentioning R, for the substitution
// fuzz. Lines come from axiom generators, MP and Gen.
HilbertProof random_proof(std::mt19937_64& rng) {
  ProofBuilder b(pa_theory());
  std::vector<Expr> terms = {zero(), var("x"), succ(var("y")), plus(var("x"), one())};
  auto term = [&] { return terms[rng() % terms.size()]; };
  auto atom = [&]() -> Expr {
    switch (rng() % 3) {
      case 0: return rel_r(term());
      case 1: return eq(term(), term());
      default: return forall("x", imp(rel_r(var("x")), rel_r(succ(var("x")))));
    }
  };
  for (int step = 0; step < 12; ++step) {
    switch (rng() % 6) {
      case 0: {
        Expr a = atom(), c = atom();
        b.axiom(imp(a, imp(c, a)), "taut");
        break;
      }
      case 1: {
        Expr body = imp(rel_r(var("x")), eq(var("x"), term()));
        Expr all = forall("x", body);
        b.axiom(imp(all, open(all, term())), "q1");
        break;
      }
      case 2: {
        Expr t = term(), s = term();
        Expr a = rel_r(plus(t, t));
        Expr a2 = rel_r(plus(s, t));
        b.axiom(imp(eq(t, s), imp(a, a2)), "e2");
        break;
      }
      case 3: {
        Expr goal = forall("x", rel_r(var("x")));
        Expr base = open(goal, zero());
        Expr st = forall("x", imp(rel_r(var("x")), rel_r(succ(var("x")))));
        b.axiom(imp(base, imp(st, goal)), "ind");
        break;
      }
      case 4: {
        std::size_t i = 1 + rng() % b.size(), j = 1 + rng() % b.size();
        if (b.size() && b.formula(j)->kind == Kind::Imp && same(b.formula(j)->arg(0), b.formula(i)))
          b.mp(i, j);
        else if (b.size())
          b.gen(1 + rng() % b.size(), "x");
        break;
      }
      default: {
        Expr a = atom();
        b.axiom(imp(neg(neg(a)), a), "taut");
      }
    }
    if (b.size() == 0) b.axiom(eq(zero(), zero()), "e1");
  }
  return b.take();
}

}  // namespace

TEST(Check, ModusPonens) {
  HilbertProof p = three_line_mp();
  EXPECT_TRUE(check(p, logic_theory()).accepted);
  std::swap(p.lines[2].just.minor, p.lines[2].just.major);
  auto r = check(p, logic_theory());
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.line, 3u);
  EXPECT_EQ(r.reason, "major premise mismatch");
}

TEST(Check, Rejections) {
  HilbertProof p{{{F("0 = S(0)"), Justification::axiom("e1")}}};
  EXPECT_EQ(check(p, logic_theory()).reason, "not an instance of e1");
  p.lines[0].just = Justification::axiom("nope");
  EXPECT_EQ(check(p, logic_theory()).reason, "unknown schema nope");
  HilbertProof forward{{{F("(R(0) -> R(0))"), Justification::mp(1, 2)}}};
  EXPECT_EQ(check(forward, logic_theory()).line, 1u);
  HilbertProof g{{{F("x = x"), Justification::axiom("e1")},
                  {F("Ay y = y"), Justification::gen(1, "x")}}};
  EXPECT_TRUE(check(g, logic_theory()).accepted);  // alpha-equal to Ax x = x
  g.lines[1].formula = F("Ay x = x");
  EXPECT_EQ(check(g, logic_theory()).reason, "generalization mismatch");
  g.lines[1].formula = F("Az z = z");
  EXPECT_TRUE(check(g, logic_theory()).accepted);
  // deterministic reasons
  EXPECT_EQ(check(p, logic_theory()).reason, check(p, logic_theory()).reason);
}

TEST(Check, ProofLength) {
  EXPECT_EQ(proof_length(HilbertProof{}), 0u);
  HilbertProof one{{{F("0 = 0"), Justification::axiom("e1")}}};
  EXPECT_EQ(proof_length(one), 3u + 2u);
  HilbertProof p = three_line_mp();
  EXPECT_EQ(proof_length(p), 3u + 2u + (3 + 3 + 4 + 3 + 4) + 2u + (3 + 4 + 4) + 3u);
  HilbertProof q = p;
  q.lines.insert(q.lines.end(), one.lines.begin(), one.lines.end());
  EXPECT_EQ(proof_length(q), proof_length(p) + proof_length(one));
  EXPECT_EQ(justification_length(Justification::mp(12, 3)), 4u);
  EXPECT_EQ(justification_length(Justification::gen(100, "x")), 5u);
}

TEST(Tautology, MatchesTruthTables) {
  std::mt19937_64 rng(7);
  int taut = 0;
  for (int i = 0; i < 3000; ++i) {
    Expr f = random_prop(rng, 4);
    bool oracle = true;
    for (unsigned row = 0; row < 8; ++row) oracle = oracle && truth(f, row);
    taut += oracle;
    ASSERT_EQ(is_tautology(f), oracle) << to_string(f);
  }
  EXPECT_GT(taut, 50);
  EXPECT_TRUE(is_tautology(F("(Ax R(x) -> Ax R(x))")));
  EXPECT_TRUE(is_tautology(F("(Ax R(x) -> Ay R(y))")));  // alpha-equal atoms
  EXPECT_FALSE(is_tautology(F("(Ax R(x) -> R(0))")));
}

TEST(Schemas, Quantifiers) {
  Theory t = logic_theory();
  auto is = [&](const char* id, const char* f) { return t.find(id)->matches(F(f)); };
  EXPECT_TRUE(is("q1", "(Ax Ey x < y -> Ey (0 + z) < y)"));
  EXPECT_FALSE(is("q1", "(Ax Ey x < y -> Ey y < y)"));  // capture
  EXPECT_TRUE(is("q1", "(Ax R(0) -> R(0))"));
  EXPECT_FALSE(is("q1", "(Ax (R(x) & R(x)) -> (R(0) & R(S(0))))"));
  EXPECT_TRUE(is("q3", "(R(S(x)) -> Ey R(y))"));
  EXPECT_TRUE(is("q2", "(Ax (R(0) -> R(x)) -> (R(0) -> Ax R(x)))"));
  EXPECT_FALSE(is("q2", "(Ax (R(x) -> R(x)) -> (R(x) -> Ax R(x)))"));
  EXPECT_TRUE(is("q4", "(Ax (R(x) -> R(0)) -> (Ex R(x) -> R(0)))"));
  EXPECT_FALSE(is("q4", "(Ax (R(x) -> R(x)) -> (Ex R(x) -> R(x)))"));
  EXPECT_TRUE(is("e1", "(x + 0) = (x + 0)"));
  EXPECT_TRUE(is("e2", "(x = 0 -> (Ay (x + y) = x -> Ay (0 + y) = x))"));
  EXPECT_FALSE(is("e2", "(x = 0 -> (R(x) -> R(S(0))))"));
}

TEST(Schemas, ArithmeticOrdinalGraph) {
  Theory t = pa_o_f_theory();
  auto cls = [&](const char* f) { return t.classify(F(f)).value_or("none"); };
  EXPECT_EQ(cls("~S((x + 0)) = 0"), "p1");
  EXPECT_EQ(cls("(x * S(S(0))) = ((x * S(0)) + x)"), "p6");
  EXPECT_EQ(cls("(R(0) -> (Ax (R(x) -> R(S(x))) -> Ax R(x)))"), "ind");
  EXPECT_EQ(cls("(Ay 0 < y -> (Az (Ay z < y -> Ay S(z) < y) -> Az Ay z < y))"), "ind");
  EXPECT_EQ(cls("(R(0) -> (Ax (R(x) -> R(S(S(x)))) -> Ax R(x)))"), "none");
  EXPECT_EQ(cls("(d < oplus(b,tower(x)) -> ((d < b | d = b) | Eg (g < tower(x) & Em d < omul(b,g,m))))"),
            "o2");
  EXPECT_EQ(cls("(d < oplus(b,g) -> ((d < b | d = b) | Eg (g < g & Em d < omul(b,g,m))))"), "none");
  EXPECT_EQ(cls("tower(S(S(0))) = oplus(0,tower(S(0)))"), "o6");
  EXPECT_EQ(cls("[w^(2) + 1] = oplus([w^(2)],[0])"), "o9");
  EXPECT_EQ(cls("[w^(2)] = oplus([w],[2])"), "o9");  // w + w^2 = w^2
  EXPECT_EQ(cls("[w^(2)] = oplus([1],[1])"), "none");
  EXPECT_EQ(cls("[0] = 0"), "o9");
  EXPECT_EQ(cls("(I(a,i,x,y) -> (F(a,y,z) -> I(a,S(i),x,z)))"), "f3");
  EXPECT_EQ(cls("(~a = 0 -> (~Eb a = oplus(b,0) -> (F(fs(a,x),x,y) -> F(a,x,y))))"), "f5");
  EXPECT_EQ(cls("F(0,x,S(x))"), "f1");
  // the graph pack is absent from pa-o
  EXPECT_FALSE(pa_o_theory().classify(F("F(0,x,S(x))")).has_value());
}

TEST(Substitution, Identity) {
  HilbertProof p = three_line_mp();
  HilbertProof q = subst_proof(p, PredicateAbstract::identity());
  ASSERT_EQ(q.lines.size(), p.lines.size());
  for (std::size_t i = 0; i < p.lines.size(); ++i) EXPECT_TRUE(same(p.lines[i].formula, q.lines[i].formula));
}

TEST(Substitution, PreservesValidityFuzz) {
  std::mt19937_64 rng(11);
  const Theory t = pa_theory();
  std::vector<PredicateAbstract> psis = {
      {"g", exists("x", conj(rel_r(plus(var("x"), var("g"))), eq(var("x"), var("g"))))},
      {"g", forall("y", imp(eq(var("y"), var("g")), rel_r(var("w"))))},
      {"g", eq(var("g"), var("g"))},
      jump_iterate(2),
  };
  for (int i = 0; i < 100; ++i) {
    HilbertProof p = random_proof(rng);
    ASSERT_TRUE(check(p, t).accepted) << i;
    const auto& psi = psis[i % psis.size()];
    HilbertProof q = subst_proof(p, psi);
    auto r = check(q, t);
    ASSERT_TRUE(r.accepted) << i << " line " << r.line << ": " << r.reason;
    EXPECT_LE(proof_length(q), proof_length(p) * length(psi.formula));
  }
  HilbertProof g{{{F("(R(x) -> R(x))"), Justification::axiom("taut")},
                  {F("Ax (R(x) -> R(x))"), Justification::gen(1, "x")}}};
  ASSERT_TRUE(check(g, t).accepted);
  EXPECT_THROW(subst_proof(g, {"g", rel_r(var("x"))}), std::invalid_argument);
}

TEST(Substitution, LengthLinearInPsi) {
  // one R occurrence per line; the increase is exactly the per-line growth
  HilbertProof p = three_line_mp();
  p.lines.erase(p.lines.begin());  // keep lines with R only
  p.lines[0] = {F("(R(0) -> R(0))"), Justification::axiom("taut")};
  p.lines.resize(1);
  p.lines.push_back({F("(0 = 0 -> R(S(0)))"), Justification::axiom("taut")});  // not a taut, length only
  for (unsigned k = 0; k <= 6; ++k) {
    auto psi = jump_iterate(k);
    std::uint64_t expect = 0;
    for (const auto& l : p.lines) expect += length(subst_r(l.formula, psi)) + justification_length(l.just);
    EXPECT_EQ(proof_length(subst_proof(p, psi)), expect);
  }
  std::vector<std::uint64_t> lens;
  for (unsigned k = 1; k <= 8; ++k) lens.push_back(proof_length(subst_proof(p, jump_iterate(k))));
  for (std::size_t i = 2; i < lens.size(); ++i) EXPECT_EQ(lens[i] - lens[i - 1], lens[1] - lens[0]);
}

TEST(Format, RoundTrip) {
  HilbertProof p = three_line_mp();
  p.lines.push_back({F("(R(0) | ~R(0))"), Justification::axiom("taut")});
  p.lines.push_back({F("Ax (R(0) | ~R(0))"), Justification::gen(4, "x")});
  std::stringstream ss;
  write_proof(ss, p);
  HilbertProof q = read_proof(ss);
  ASSERT_EQ(q.lines.size(), p.lines.size());
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    EXPECT_TRUE(same(p.lines[i].formula, q.lines[i].formula));
    EXPECT_EQ(to_string(p.lines[i].just), to_string(q.lines[i].just));
  }
  EXPECT_TRUE(check(q, logic_theory()).accepted);
  std::istringstream bad("1 | 0 = 0 | frob 2\n");
  EXPECT_THROW(read_proof(bad), ProofFormatError);
  std::istringstream gap("2 | 0 = 0 | ax e1\n");
  EXPECT_THROW(read_proof(gap), ProofFormatError);
}

TEST(Tactics, QuantifierRules) {
  ProofBuilder b(pa_theory());
  Expr hyp = F("Ax R(x)");
  Fact h = b.assume({hyp}, hyp);
  Fact inst = b.forall_instantiate(h, var("y"));
  Fact all = b.forall_intro(inst, "y");
  EXPECT_TRUE(same(all.concl, F("Az R(z)")));
  Fact ex = b.exists_intro(inst, F("Ez R(z)"), var("y"));
  EXPECT_TRUE(ex.concl->kind == Kind::Exists);
  // Ex (R(x) & x = 0) -> R(0)
  Expr e = F("Ex (R(x) & x = 0)");
  Fact he = b.assume({e}, e);
  Expr open_w = open(e, var("w"));
  Context c2 = {e, open_w};
  Fact rw = b.rewrite(b.implication_chain({b.assume(c2, open_w)}, c2, F("w = 0")),
                      b.implication_chain({b.assume(c2, open_w)}, c2, F("R(w)")), F("R(0)"));
  Fact done = b.exists_elim(he, "w", rw);
  EXPECT_TRUE(same(b.formula(done.line), F("(Ex (R(x) & x = 0) -> R(0))")));
  Fact ded = ProofBuilder::deduction_transform(done);
  EXPECT_TRUE(ded.ctx.empty());
  auto r = check(b.proof(), pa_theory());
  EXPECT_TRUE(r.accepted) << r.line << " " << r.reason;
  EXPECT_THROW(b.forall_intro(b.assume({F("R(y)")}, F("R(y)")), "y"), tactics::TacticError);
}

TEST(Tactics, Induction) {
  // Ax (x + 0) = x by induction is trivial; prove Ax (0 + x) = x.
  ProofBuilder b(pa_theory());
  Expr goal = F("Ax (0 + x) = x");
  Fact base = b.axiom_fact({}, F("(0 + 0) = 0"), "p3");
  Expr ih = F("(0 + x) = x");
  Fact suc = b.axiom_fact({ih}, F("(0 + S(x)) = S((0 + x))"), "p4");
  Fact step = b.rewrite(b.assume({ih}, ih), suc, F("(0 + S(x)) = S(x)"));
  Fact st = b.forall_intro(b.discharge(step, ih), "x");
  Fact all = b.induction(base, st, goal);
  EXPECT_TRUE(same(b.formula(all.line), goal));
  auto r = check(b.proof(), pa_theory());
  EXPECT_TRUE(r.accepted) << r.line << " " << r.reason;
}

TEST(Consistency, MicroOracle) {
  auto bad = *theory_by_id("logic+contradiction");
  auto at8 = enumerate_consistency(bad, 8, 12);
  ASSERT_TRUE(at8.refutation.has_value());
  EXPECT_EQ(proof_length(*at8.refutation), 8u);
  EXPECT_TRUE(same(at8.refutation->lines.back().formula, contradiction()));
  EXPECT_TRUE(check(*at8.refutation, bad).accepted);
  EXPECT_FALSE(enumerate_consistency(bad, 7, 12).refutation.has_value());
  EXPECT_FALSE(enumerate_consistency(logic_theory(), 8, 12).refutation.has_value());
  EXPECT_THROW(enumerate_consistency(logic_theory(), 13, 12), std::invalid_argument);
}

TEST(Consistency, SoundnessHarness) {
  for (const char* id : {"logic", "pa", "pa-o-f"}) {
    auto v = enumerate_consistency(*theory_by_id(id), 12, 12);
    EXPECT_FALSE(v.refutation.has_value()) << id;
    EXPECT_GT(v.proofs_explored, 1u);
  }
}
