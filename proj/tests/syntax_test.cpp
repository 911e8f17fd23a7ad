#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "slowcon/formulas.hpp"
#include "slowcon/syntax.hpp"

using namespace slowcon;
using namespace slowcon::fol;

namespace {

// Truth in a finite structure with domain {0..D-1}: S is successor capped at
// D-1, R is a subset given by a bitmask. Only the symbols the encodings use.
struct FiniteModel {
  int domain;
  unsigned r_mask;
  std::map<std::string, int> free;

  int term(const Expr& e, std::vector<int>& env) const {
    switch (e->kind) {
      case Kind::Var: return free.at(e->name);
      case Kind::BVar: return env[env.size() - 1 - e->index];
      case Kind::Zero: return 0;
      case Kind::Succ: return std::min(term(e->arg(0), env) + 1, domain - 1);
      case Kind::Oplus: return (3 * term(e->arg(0), env) + term(e->arg(1), env) + 1) % domain;
      default: throw std::logic_error("unsupported term");
    }
  }
  bool holds(const Expr& e, std::vector<int>& env) const {
    switch (e->kind) {
      case Kind::Eq: return term(e->arg(0), env) == term(e->arg(1), env);
      case Kind::Lt: return term(e->arg(0), env) < term(e->arg(1), env);
      case Kind::R: return (r_mask >> term(e->arg(0), env)) & 1;
      case Kind::Not: return !holds(e->arg(0), env);
      case Kind::And: return holds(e->arg(0), env) && holds(e->arg(1), env);
      case Kind::Or: return holds(e->arg(0), env) || holds(e->arg(1), env);
      case Kind::Imp: return !holds(e->arg(0), env) || holds(e->arg(1), env);
      case Kind::Iff: return holds(e->arg(0), env) == holds(e->arg(1), env);
      case Kind::Forall:
      case Kind::Exists: {
        bool all = e->kind == Kind::Forall;
        for (int v = 0; v < domain; ++v) {
          env.push_back(v);
          bool h = holds(e->body(), env);
          env.pop_back();
          if (all && !h) return false;
          if (!all && h) return true;
        }
        return all;
      }
      default: throw std::logic_error("unsupported formula");
    }
  }
  bool holds(const Expr& e) const {
    std::vector<int> env;
    return holds(e, env);
  }
};

// Length of numeral(n) from the counting table: S(0) is 4 symbols, (1 + 1)
// is 11, a product adds 3 + 11, the trailing + 1 adds 3 + 4.
std::uint64_t numeral_length_oracle(std::uint64_t n) {
  if (n == 0) return 1;
  if (n % 2 == 0) return numeral_length_oracle(n / 2) + 14;
  return numeral_length_oracle((n - 1) / 2) + 14 + 7;
}

Expr random_term(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 9);
  switch (pick(rng)) {
    case 0: return zero();
    case 1:
    case 2: return var(vars[rng() % vars.size()]);
    case 3: return succ(random_term(rng, depth - 1, vars));
    case 4: return plus(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 5: return times(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 6: return tower(random_term(rng, depth - 1, vars));
    case 7: return oplus(random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars));
    case 8: return ord_lit(Ordinal::parse("w^(2) + 3"));
    default:
      return omul(random_term(rng, depth - 1, vars), zero(), random_term(rng, depth - 1, vars));
  }
}

Expr random_formula(std::mt19937_64& rng, int depth, std::vector<std::string> vars) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 3 : 12);
  int k = pick(rng);
  auto sub = [&](std::vector<std::string> v) { return random_formula(rng, depth - 1, std::move(v)); };
  switch (k) {
    case 0: return eq(random_term(rng, 2, vars), random_term(rng, 2, vars));
    case 1: return lt(random_term(rng, 2, vars), random_term(rng, 1, vars));
    case 2: return rel_r(random_term(rng, 2, vars));
    case 3: return fgraph(random_term(rng, 1, vars), random_term(rng, 1, vars), random_term(rng, 1, vars));
    case 4: return neg(sub(vars));
    case 5: return conj(sub(vars), sub(vars));
    case 6: return disj(sub(vars), sub(vars));
    case 7: return imp(sub(vars), sub(vars));
    case 8: return iff(sub(vars), sub(vars));
    case 9:
    case 10:
    case 11: {
      std::string x = vars[rng() % vars.size()];  // reuse names to force shadowing
      if (rng() % 3 == 0) x = "q" + std::to_string(rng() % 3);
      auto inner = vars;
      inner.push_back(x);
      Expr body = sub(inner);
      return k == 11 ? exists(x, body) : forall(x, body);
    }
    default: return fiter(zero(), random_term(rng, 1, vars), zero(), random_term(rng, 1, vars));
  }
}

}  // namespace

TEST(Numeral, Examples) {
  EXPECT_TRUE(same(numeral(0), zero()));
  Expr two_ = plus(one(), one());
  Expr expect2 = times(plus(times(zero(), two_), one()), two_);
  EXPECT_TRUE(same(numeral(2), expect2));
  EXPECT_EQ(to_string(numeral(2)), "(((0 * (S(0) + S(0))) + S(0)) * (S(0) + S(0)))");
}

TEST(Numeral, LengthMatchesCountingTable) {
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    auto len = length(numeral(n));
    ASSERT_EQ(len, numeral_length_oracle(n)) << n;
    double lg = n == 0 ? 0 : std::floor(std::log2(static_cast<double>(n)));
    EXPECT_LE(len, 21 * (lg + 1) + 1);
  }
  for (std::uint64_t n = 20000; n <= 1000000; n += 997) {
    double lg = std::floor(std::log2(static_cast<double>(n)));
    EXPECT_LE(length(numeral(n)), 21 * (lg + 1) + 1);
  }
  EXPECT_LE(length(numeral(1024)), length(numeral(1025)) + 21);
}

TEST(Length, Convention) {
  EXPECT_EQ(length(rel_r(var("v0"))), 4u);
  EXPECT_EQ(length(rel_r(var("v0")), CountMode::Raw), 5u);
  Expr a = parse_formula("R(x)"), b = parse_formula("x = S(0)");
  EXPECT_EQ(length(conj(a, b)), length(a) + length(b) + 3);
  EXPECT_EQ(length(numeral(0)), 1u);
  EXPECT_EQ(length(parse_formula("Ax R(x)")), 6u);
  EXPECT_EQ(length(parse_formula("F(x,y,z)")), 8u);
}

TEST(Substitution, Examples) {
  Expr rv = rel_r(var("v"));
  EXPECT_TRUE(same(subst_r(rv, PredicateAbstract::identity()), rv));
  // R(g) under a binder named g: the abstract's own binder must not capture.
  Expr f = forall("g", rel_r(var("g")));
  PredicateAbstract psi{"g", exists("g", rel_r(var("g")))};
  Expr out = subst_r(f, psi);
  EXPECT_TRUE(same(out, forall("g", exists("g", rel_r(var("g"))))));
  Expr f2 = forall("y", rel_r(plus(var("y"), var("z"))));
  PredicateAbstract psi2{"g", exists("y", eq(var("g"), var("y")))};
  Expr out2 = subst_r(f2, psi2);
  // Ay Ey' (y + z) = y'
  EXPECT_EQ(to_string(out2), "Ay Ey' (y + z) = y'");
  EXPECT_TRUE(same(out2, parse_formula("Ay Ew (y + z) = w")));
}

TEST(Substitution, Compositional) {
  std::mt19937_64 rng(41);
  PredicateAbstract chi{"g", exists("x", conj(rel_r(var("x")), lt(var("x"), var("g"))))};
  for (int i = 0; i < 200; ++i) {
    Expr phi = random_formula(rng, 4, {"x", "y"});
    PredicateAbstract psi{"g", random_formula(rng, 3, {"g", "x"})};
    Expr lhs = subst_r(subst_r(phi, psi), chi);
    Expr rhs = subst_r(phi, PredicateAbstract{"g", subst_r(psi.formula, chi)});
    EXPECT_TRUE(same(lhs, rhs)) << to_string(phi);
  }
}

TEST(Substitution, FreeAndBound) {
  Expr f = parse_formula("Ax (x = y -> Ey x < y)");
  Expr g = subst_free(f, "y", var("x"));
  EXPECT_EQ(to_string(g), "Ax' (x' = x -> Ey x' < y)");
  EXPECT_TRUE(same(open(parse_formula("Ax Ey x < y"), var("y")), parse_formula("Ey' y < y'")));
  EXPECT_TRUE(same(parse_formula("Ax x = x"), parse_formula("Ay y = y")));
  EXPECT_FALSE(same(parse_formula("Ax Ey x = y"), parse_formula("Ax Ey y = x")));
}

TEST(Text, RoundTripRandom) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    Expr f = random_formula(rng, 5, {"x", "y", "z"});
    std::string s = to_string(f);
    Expr g = parse_formula(s);
    ASSERT_TRUE(same(f, g)) << s << "\n" << to_string(g);
    EXPECT_EQ(to_string(g), s);
    EXPECT_EQ(length(g), length(f));
  }
}

TEST(Text, RoundTripFixtures) {
  const char* fixtures[] = {
      "Ax (R(x) -> ~x = S(0))",
      "((0 + S(0)) = S(0) & [w^(w) + 1] < tower(S(0)))",
      "Ab (Ad (d < b -> R(d)) -> Ad (d < oplus(b,g) -> R(d)))",
      "I(b,0,x,x)",
      "(F(fs(a,x),x,y) -> F(a,x,y))",
      "(?t < oplus(?s,?r) -> ((?t < ?s | ?t = ?s) | Eg (g < ?r & Em ?t < omul(?s,g,m))))",
  };
  for (const char* s : fixtures) {
    Expr f = parse_formula(s);
    EXPECT_EQ(to_string(f), s);
  }
  EXPECT_THROW(parse_formula("(R(x) & )"), SyntaxError);
  EXPECT_THROW(parse_formula("x + y = z"), SyntaxError);
  EXPECT_THROW(parse_formula("[w + w] = 0"), SyntaxError);
  EXPECT_THROW(parse_formula("R(x"), SyntaxError);
}

TEST(GentzenFormulas, ProgAndTi) {
  Expr prog = build_prog(PredicateAbstract::identity());
  EXPECT_EQ(to_string(prog), "Aa (Ab (b < a -> R(b)) -> R(a))");
  Expr ti = build_ti(ord_lit(Ordinal::natural(1)), PredicateAbstract::identity());
  EXPECT_EQ(to_string(ti), "(Aa (Ab (b < a -> R(b)) -> R(a)) -> Ab (b < [1] -> R(b)))");
  Expr with_b = build_ti(var("b"), PredicateAbstract::identity());
  EXPECT_TRUE(same(with_b, parse_formula("(Aa (Ac (c < a -> R(c)) -> R(a)) -> Ac (c < b -> R(c)))")));
}

TEST(GentzenFormulas, ThetaSingleOccurrenceAndSemantics) {
  for (const auto& [d0, d1] : {std::pair{var("p"), var("q")}, std::pair{zero(), one()},
                               std::pair{var("v0"), var("z")}}) {
    Expr th = build_theta(d0, d1);
    EXPECT_EQ(occurrences_of_r(th), 1u);
    for (int dom = 1; dom <= 4; ++dom) {
      for (unsigned mask = 0; mask < (1u << dom); ++mask) {
        for (int a = 0; a < dom; ++a) {
          for (int b = 0; b < dom; ++b) {
            FiniteModel m{dom, mask, {{"p", a}, {"q", b}, {"v0", a}, {"z", b}}};
            if (dom < 2) continue;  // encodes truth values by 1 != 0
            Expr sem = imp(rel_r(d0), rel_r(d1));
            EXPECT_EQ(m.holds(th), m.holds(sem)) << "dom=" << dom << " mask=" << mask;
          }
        }
      }
    }
  }
  // Each argument occurs twice, everything else is fixed overhead.
  auto overhead = [](const Expr& a, const Expr& b) {
    return length(build_theta(a, b)) - 2 * length(a) - 2 * length(b);
  };
  EXPECT_EQ(overhead(var("p"), var("q")), overhead(numeral(5), numeral(9)));
}

TEST(GentzenFormulas, JumpSingleMatchesJump) {
  // Logical equivalence checked in every small structure: < is the usual
  // order, oplus an arbitrary table, and S(0) differs from 0.
  Expr j = build_jump().formula, js = build_jump_single().formula;
  for (int dom = 2; dom <= 4; ++dom)
    for (unsigned mask = 0; mask < (1u << dom); ++mask)
      for (int g = 0; g < dom; ++g) {
        FiniteModel m{dom, mask, {{"g", g}}};
        EXPECT_EQ(m.holds(j), m.holds(js)) << "dom=" << dom << " mask=" << mask << " g=" << g;
      }
  EXPECT_EQ(occurrences_of_r(js), 1u);
  EXPECT_EQ(occurrences_of_r(j), 2u);
}

TEST(GentzenFormulas, JumpIterates) {
  EXPECT_TRUE(same(jump_iterate(0).formula, rel_r(var("g"))));
  EXPECT_TRUE(same(jump_iterate(1).formula, build_jump_single().formula));
  EXPECT_EQ(occurrences_of_r(jump_iterate(5).formula), 1u);
  auto d = length(jump_iterate(2).formula) - length(jump_iterate(1).formula);
  for (unsigned n = 2; n <= 200; ++n) {
    auto ln = length(jump_iterate(n).formula);
    EXPECT_EQ(ln - length(jump_iterate(n - 1).formula), d);
    EXPECT_LE(ln, length(jump_iterate(1).formula) * n + length(jump_iterate(1).formula));
  }
  for (unsigned n = 0; n <= 6; ++n) {
    auto next = subst_r(build_jump_single().formula, jump_iterate(n));
    EXPECT_TRUE(same(next, jump_iterate(n + 1).formula));
  }
  for (unsigned n = 0; n <= 16; ++n) {
    auto naive = naive_jump_iterate(n).formula;
    EXPECT_EQ(occurrences_of_r(naive), 1ull << n);
    EXPECT_GE(length(naive), (1ull << n) * length(rel_r(var("g"))));
  }
}

TEST(GentzenFormulas, Fdown) {
  EXPECT_EQ(to_string(fdown(var("g"))), "Ax Ey F(g,x,y)");
  EXPECT_EQ(to_string(fdown(var("x"))), "Ax0 Ey F(x,x0,y)");
}
