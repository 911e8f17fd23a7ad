#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "slowcon/formulas.hpp"
#include "slowcon/gentzen.hpp"

using namespace slowcon;
using namespace slowcon::fol;
using namespace slowcon::gentzen;
using hilbert::check;

namespace {

bool contains(const Expr& e, const Expr& sub) {
  if (e->hash == sub->hash && same(e, sub)) return true;
  for (const auto& a : e->args)
    if (contains(a, sub)) return true;
  return false;
}

bool has_line(const HilbertProof& p, const Expr& f) {
  for (const auto& l : p.lines)
    if (same(l.formula, f)) return true;
  return false;
}

void expect_accepted(const HilbertProof& p, const hilbert::Theory& t) {
  auto r = check(p, t);
  EXPECT_TRUE(r.accepted) << "line " << r.line << ": " << r.reason << "\n"
                          << (r.line ? to_string(p.lines[r.line - 1].formula) : "");
}

std::string text_of(const HilbertProof& p) {
  std::ostringstream os;
  hilbert::write_proof(os, p);
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(SLOWCON_FIXTURE_DIR) + "/proofs/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Templates, JumpStepAccepted) {
  const auto& p = jump_template();
  expect_accepted(p, hilbert::pa_o_theory());
  EXPECT_TRUE(has_line(p, jump_template_goal()));
}

TEST(Templates, JumpStepHasProgressivenessAndZeroBase) {
  const auto& p = jump_template();
  Expr progR = build_prog(PredicateAbstract::identity());
  EXPECT_TRUE(has_line(p, imp(progR, build_prog(build_jump()))));
  // J(tower(x)) read at b = 0
  Expr at_zero = imp(bounded_forall("d", zero(), rel_r(var("d"))),
                     bounded_forall("d", oplus(zero(), tower(var("x"))), rel_r(var("d"))));
  bool found = false;
  for (const auto& l : p.lines) found = found || contains(l.formula, at_zero);
  EXPECT_TRUE(found);
}

TEST(Templates, BaseAndTotalityAccepted) {
  expect_accepted(base_template(), hilbert::pa_o_theory());
  EXPECT_TRUE(has_line(base_template(), build_ti(tower(zero()), PredicateAbstract::identity())));
  expect_accepted(fdown_template(), hilbert::pa_o_f_theory());
  EXPECT_TRUE(has_line(fdown_template(), fdown_template_goal()));
}

// The committed fixtures are the generated templates, byte for byte.
TEST(Templates, GoldenFixtures) {
  struct Case {
    const char* file;
    const HilbertProof& proof;
    std::uint64_t hash;
    hilbert::Theory theory;
  } cases[] = {{"jump_template.proof", jump_template(), 0x843a2b0727ffff7ull, hilbert::pa_o_theory()},
               {"base_template.proof", base_template(), 0x8b7de183f23d5443ull, hilbert::pa_o_theory()},
               {"fdown_template.proof", fdown_template(), 0x7f844e48459b0a99ull, hilbert::pa_o_f_theory()}};
  for (const auto& c : cases) {
    std::string fixture = read_fixture(c.file);
    ASSERT_FALSE(fixture.empty()) << c.file;
    EXPECT_EQ(fnv1a(fixture), c.hash) << c.file;
    EXPECT_EQ(text_of(c.proof), fixture) << c.file;
    std::istringstream in(fixture);
    expect_accepted(hilbert::read_proof(in), c.theory);
  }
}

TEST(Templates, SubstitutionKeepsROccurrences) {
  const auto& p = jump_template();
  for (unsigned k : {0u, 1u, 3u, 6u}) {
    PredicateAbstract psi = jump_iterate(k);
    ASSERT_EQ(psi.formula->r_count, 1u);
    auto q = hilbert::subst_proof(p, psi);
    for (std::size_t i = 0; i < p.lines.size(); ++i)
      ASSERT_EQ(q.lines[i].formula->r_count, p.lines[i].formula->r_count) << "k=" << k << " line " << i + 1;
  }
}

TEST(Numerals, SuccessorProofs) {
  for (unsigned m = 0; m <= 64; ++m) {
    auto p = numeral_succ_proof(Natural(m));
    auto r = check(p, hilbert::pa_theory());
    ASSERT_TRUE(r.accepted) << "m=" << m << " line " << r.line << ": " << r.reason;
    EXPECT_TRUE(same(p.lines.back().formula, eq(plus(numeral(Natural(m)), one()), numeral(Natural(m + 1))))) << m;
  }
}

// Length against lg m, with the constant taken at m = 1.
TEST(Numerals, LogarithmicGrowth) {
  auto len = [](unsigned m) { return double(hilbert::proof_length(numeral_succ_proof(Natural(m)))); };
  const double c = len(1) / (std::log2(2.0) + 1);
  for (unsigned m = 1; m <= 512; ++m) ASSERT_LE(len(m), c * (std::log2(m + 1.0) + 1)) << m;
  Expr two_stmt = eq(plus(numeral(Natural(2)), one()), numeral(Natural(3)));
  EXPECT_LE(hilbert::proof_length(numeral_succ_proof(Natural(2))), 2 * length(two_stmt) + 2);
}

TEST(GenTi, SmallLevels) {
  for (unsigned n = 0; n <= 4; ++n) {
    auto p = gen_ti(n);
    expect_accepted(p, hilbert::pa_o_theory());
    EXPECT_TRUE(same(p.lines.back().formula, gen_ti_goal(n))) << n;
  }
}

TEST(GenTi, SegmentsKeepTemplateROccurrences) {
  std::vector<Segment> segs;
  auto p = gen_ti(6, &segs);
  const auto& t = jump_template();
  ASSERT_EQ(segs.size(), 6u);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    EXPECT_EQ(segs[i].level, 5 - i);
    EXPECT_FALSE(segs[i].lines.empty());
    for (auto [line, from] : segs[i].lines)
      ASSERT_EQ(p.lines[line - 1].formula->r_count, t.lines[from - 1].formula->r_count);
  }
}

TEST(GenTi, LengthsMonotoneAndQuadratic) {
  std::vector<unsigned> ns;
  for (unsigned n = 1; n <= 12; ++n) ns.push_back(n);
  auto rep = size_report(Target::TransfiniteInduction, ns);
  for (std::size_t i = 1; i < rep.rows.size(); ++i) EXPECT_GT(rep.rows[i].symbols, rep.rows[i - 1].symbols);
  for (const auto& r : rep.rows) EXPECT_TRUE(r.accepted);
  EXPECT_LE(rep.exponent, 3.0);
  EXPECT_GT(rep.exponent, 1.0);
}

// Without the single-R encoding each level doubles the R occurrences.
TEST(GenTi, NaiveIterateIsExponential) {
  const auto r_len = length(rel_r(var("g")));
  for (unsigned n = 0; n <= 16; ++n) {
    auto naive = naive_jump_iterate(n);
    EXPECT_EQ(naive.formula->r_count, 1ull << n);
    EXPECT_GE(length(naive.formula), (1ull << n) * r_len);
    EXPECT_EQ(jump_iterate(n).formula->r_count, 1u);
  }
}

TEST(GenFeps, SmallLevels) {
  for (unsigned n = 0; n <= 2; ++n) {
    auto p = gen_feps_total(n);
    expect_accepted(p, hilbert::pa_o_f_theory());
    EXPECT_TRUE(same(p.lines.back().formula, gen_feps_goal(n))) << n;
  }
}

// The substituted induction proof sits inside the totality proof.
TEST(GenFeps, ContainsSubstitutedInduction) {
  Expr ti = build_ti(tower(numeral(Natural(3))), fdown_abstract());
  EXPECT_TRUE(has_line(gen_feps_total(2), ti));
}

TEST(Fit, PowerLaw) {
  std::vector<std::pair<double, double>> pts;
  for (int x = 1; x <= 20; ++x) pts.emplace_back(x, 7.0 * x * x * x);
  auto [d, c] = fit_power(pts);
  EXPECT_NEAR(d, 3.0, 1e-9);
  EXPECT_NEAR(std::exp(c), 7.0, 1e-6);
}
