// Infinitary Sigma^N proofs with a membership predicate N, their semantics in
// a finite interpretation N = {m | 3m < K}, and the walker that follows a
// rank-0 term down to an axiom while certifying that the bound K never grows.
#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slowcon/fgh.hpp"
#include "slowcon/ordinal.hpp"

namespace slowcon::inf {

// ---------------------------------------------------------------- terms

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Num, Var, Succ, Add, Mul };
  Kind kind = Kind::Num;
  Natural value;      // Num
  std::string name;   // Var
  TermPtr a, b;       // Succ uses a only
};

TermPtr num(const Natural& n);
TermPtr tvar(std::string name);
TermPtr tsucc(TermPtr a);
TermPtr tadd(TermPtr a, TermPtr b);
TermPtr tmul(TermPtr a, TermPtr b);
// Value of a closed term; nullopt if a variable occurs.
std::optional<Natural> term_value(const Term& t);

// ------------------------------------------------------------- formulas

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// a = b, a < b, a <= b, and feps*(a) = b.
enum class Rel { Eq, Lt, Le, FepsStar };

struct Formula {
  enum class Kind { Prime, Mem, And, Or, ExistsN, ForallN };
  Kind kind = Kind::Prime;
  bool positive = true;  // Prime and Mem; a negative Mem is t notin N
  Rel rel = Rel::Eq;
  TermPtr lhs, rhs;      // Prime uses both, Mem uses lhs
  FormulaPtr left, right;  // And, Or
  std::string var;       // ExistsN, ForallN: bound variable of `left`
  std::string key;       // canonical text, bound variables renamed by depth
};

FormulaPtr prime(Rel rel, TermPtr a, TermPtr b, bool positive = true);
FormulaPtr mem(TermPtr t);
FormulaPtr not_mem(TermPtr t);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
// Ey in N . body   and   Ay in N . body  =  Ay (y notin N  or  body)
FormulaPtr exists_n(std::string var, FormulaPtr body);
FormulaPtr forall_n(std::string var, FormulaPtr body);

// Ey in N . feps*(m) = y
FormulaPtr feps_total_at(const Natural& m);

FormulaPtr negate(const FormulaPtr& f);
// body[var := n] for a quantifier f.
FormulaPtr instantiate(const FormulaPtr& quantifier, const Natural& n);

bool same(const FormulaPtr& a, const FormulaPtr& b);
bool closed(const FormulaPtr& f);
bool is_arithmetical_prime(const FormulaPtr& f);
// Primes, memberships m in N, and, or, and relativized existentials; no
// notin N and no universal quantifier anywhere inside.
bool is_sigma_n(const FormulaPtr& f);
std::string to_string(const FormulaPtr& f);

// -------------------------------------------------------------- sequents

// A finite set of closed formulas, kept sorted by Formula::key.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::initializer_list<FormulaPtr> fs);
  explicit Sequent(const std::vector<FormulaPtr>& fs);

  const std::vector<FormulaPtr>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(const FormulaPtr& f) const;
  bool subset_of(const Sequent& other) const;

  Sequent with(const FormulaPtr& f) const;
  Sequent with(const Sequent& other) const;
  Sequent without(const FormulaPtr& f) const;

  friend bool operator==(const Sequent& a, const Sequent& b);

 private:
  void insert(const FormulaPtr& f);
  std::vector<FormulaPtr> items_;
};

std::string to_string(const Sequent& s);

// Sigma^N formulas plus top-level side formulas m notin N.
bool is_sigma_n_sequent(const Sequent& s);
// max({2} u {3n | n notin N occurs in s})
Natural k_of(const Sequent& s);

// ------------------------------------------------------------- semantics

enum class Truth { False, True, Undecided };
std::string to_string(Truth t);

// Decides "3m < K" for the interpretation at hand. Search over N stops at the
// first non-member, since N is downward closed.
struct Interpretation {
  std::function<Truth(const Natural& m)> member;
  std::uint64_t search_cap = 100'000;  // witnesses tried per quantifier
  EvalBudget prime_budget{10'000'000, Natural(1) << 4096};
};

Interpretation interpretation_at(const Natural& K);

Truth evaluate(const FormulaPtr& f, const Interpretation& in);
// Closed arithmetical primes do not depend on K.
Truth evaluate_prime(const FormulaPtr& f, const EvalBudget& budget = {});

bool truth_in_K(const FormulaPtr& f, const Natural& K);
// True iff no Sigma^N member is true in K; notin N side formulas never count.
bool sequent_false_in(const Sequent& s, const Natural& K);
Truth sequent_truth(const Sequent& s, const Interpretation& in);

// ----------------------------------------------------------- hierarchies

// The bounding functions: the fast-growing hierarchy, or the surrogate
// G_0(n) = n+1, G_{b+1}(n) = G_b(G_b(n)) + 1, G_l(n) = G_{l[n]}(n) + 1, which
// keeps micro instances numerically tractable.
struct Hierarchy {
  enum class Kind { FastGrowing, Surrogate };
  Kind kind = Kind::Surrogate;
  EvalBudget budget{10'000'000, Natural(1) << 4096};

  EvalOutcome eval(const Ordinal& a, const Natural& n) const;
  // H_a(n) > x, decided by evaluation cut off just above x.
  Truth exceeds(const Ordinal& a, const Natural& n, const Natural& x) const;
  // N = {m | 3m < H_a(n)}
  Interpretation interpretation(const Ordinal& a, const Natural& n) const;
};

std::string to_string(Hierarchy::Kind k);

EvalOutcome surrogate_eval(const Ordinal& a, const Natural& n, const EvalBudget& budget);

struct BoundedResult {
  Truth verdict = Truth::Undecided;  // Undecided when H_a(k) diverged
  Natural k;
  std::optional<Natural> bound;      // H_a(k) when it converged
};

// Whether s is true in H_a(k_of(s)).
BoundedResult bounded_by(const Sequent& s, const Hierarchy& h, const Ordinal& a);

// ----------------------------------------------------------- proof terms

struct ProofTerm;
using ProofPtr = std::shared_ptr<const ProofTerm>;

enum class Rule {
  AxTruePrime,
  AxZeroN,
  AxNNegPair,
  AxFepsStar,
  RuleN,
  RuleAnd,
  RuleOr,
  RuleExists,
  RuleOmega,
  CutN,
  CutPrime,
  CutFepsStar,
  Accum,
  Inv
};

std::string to_string(Rule r);
std::optional<Rule> rule_from_string(const std::string& s);

// Child n of an omega-rule, generated on demand.
using ChildSchema = std::function<ProofPtr(const Natural& n)>;

struct ProofTerm {
  Rule rule = Rule::AxTruePrime;
  Sequent end;
  Ordinal height;
  unsigned rank = 0;

  Natural m;            // AxNNegPair, AxFepsStar, RuleN (premise m in N), CutN, Inv (l)
  FormulaPtr formula;   // main formula of a logical rule, cut formula, or inverted formula
  TermPtr witness;      // RuleExists
  std::vector<ProofPtr> subs;
  ChildSchema child;    // RuleOmega
  std::string schema_text;  // RuleOmega, for printing
};

// Builders. Heights default to the convention: axioms 0, every rule one above
// its premises, omega one above its children, inversion as its premise.
ProofPtr ax_true_prime(Sequent end);
ProofPtr ax_zero_n(Sequent end);
ProofPtr ax_n_neg_pair(const Natural& m, Sequent end);
ProofPtr ax_feps_star(const Natural& m, Sequent end);
ProofPtr rule_n(const Natural& m, ProofPtr sub, Sequent end, std::optional<Ordinal> height = {});
ProofPtr rule_and(FormulaPtr main, ProofPtr left, ProofPtr right, Sequent end,
                  std::optional<Ordinal> height = {});
ProofPtr rule_or(FormulaPtr main, ProofPtr sub, Sequent end, std::optional<Ordinal> height = {});
ProofPtr rule_exists(FormulaPtr main, TermPtr witness, ProofPtr sub, Sequent end,
                     std::optional<Ordinal> height = {});
// The height defaults to one above child(0).
ProofPtr rule_omega(FormulaPtr main, ChildSchema child, Sequent end, std::optional<Ordinal> height = {},
                    std::string schema_text = {});
ProofPtr cut_n(const Natural& m, ProofPtr with_mem, ProofPtr with_not_mem, Sequent end,
               std::optional<Ordinal> height = {});
ProofPtr cut_prime(FormulaPtr phi, ProofPtr with_phi, ProofPtr with_neg, Sequent end,
                   std::optional<Ordinal> height = {});
// cut formula Ey in N . R(m, y) with R a prime in y
ProofPtr cut_feps_star(FormulaPtr exists_r, ProofPtr with_exists, ProofPtr with_forall, Sequent end,
                       std::optional<Ordinal> height = {});
ProofPtr accum(Ordinal target, ProofPtr sub, std::optional<Sequent> end = {});
// Trusted inversion. For the quantifier Ay in N . phi the end-sequent is the
// premise's with that formula replaced by l notin N, phi(l); for a
// disjunction it is replaced by both disjuncts and l is ignored.
ProofPtr inv(ProofPtr sub, FormulaPtr inverted, const Natural& l = 0);
// Sequent of inv(sub, inverted, l)
Sequent inversion_end(const Sequent& premise, const FormulaPtr& inverted, const Natural& l);

// One rule application further: the term inv(sub, f, l) stands for, with its
// own inversions pushed into the premises. The result's end-sequent is
// contained in the inversion's and its height is the same.
ProofPtr unfold_inversion(const ProofTerm& inversion);

// --------------------------------------------------- local correctness

struct CheckOptions {
  std::uint64_t omega_samples = 3;
  std::uint64_t step_budget = 1'000'000;  // per step_down call
  EvalBudget prime_budget{10'000'000, Natural(1) << 4096};
};

struct LocalResult {
  bool ok = true;
  std::string path;    // "" is the root, "0/1" the second premise of the first premise, "w2" omega child 2
  std::string reason;
};

// Checks only the last rule of h against its premises' annotations.
std::optional<std::string> check_node(const ProofTerm& h, const CheckOptions& opt = {});
LocalResult locally_correct(const ProofPtr& h, const CheckOptions& opt = {});

// Longest chain of premises, taking omega children 0 .. samples-1.
std::uint64_t term_depth(const ProofPtr& h, std::uint64_t omega_samples = 3);

// ---------------------------------------------------------- the walker

struct DominanceCertificate {
  enum class Tag { SameInputDescent, InputBelowBound, AccumMesh };
  Tag tag = Tag::SameInputDescent;
  Ordinal mu;
  Ordinal alpha_from, alpha_to;
  Natural k_from, k_to;
  // InputBelowBound: the new side formula w notin N, with 3w < H_{mu+alpha_to}(k_from)
  Natural witness;
};

std::string to_string(DominanceCertificate::Tag t);

struct TraceStep {
  std::size_t index = 0;
  std::string path;   // as in LocalResult, with "i" marking an unfolded inversion
  Rule rule = Rule::AxTruePrime;
  Sequent gamma;
  Ordinal alpha;
  Natural k;
  std::optional<DominanceCertificate> certificate;  // for the move to the next step
  std::string note;
};

struct ReductionTrace {
  enum class Verdict { SequentTrue, LocalError, BudgetExhausted };
  Verdict verdict = Verdict::BudgetExhausted;
  std::size_t verdict_step = 0;
  std::string reason;
  Ordinal mu;
  std::vector<TraceStep> steps;
};

std::string to_string(ReductionTrace::Verdict v);

struct WalkOptions {
  Hierarchy hierarchy;
  std::uint64_t max_steps = 10'000;
  CheckOptions check;
};

// Follows h from its end-sequent: each step either detects that the current
// sequent is true (an axiom, or a conjunction with both parts true), or moves
// to the premise whose new formula is false in the current bound. Stops with
// LocalError on a malformed node or a violated precondition (rank 0,
// Sigma^N end-sequent, mu meshing with the height).
ReductionTrace reduce_trace(const ProofPtr& h, const Ordinal& mu, const WalkOptions& opt = {});

struct CertificateContext {
  Hierarchy hierarchy;
  std::uint64_t step_budget = 1'000'000;
};

bool certificate_check(const DominanceCertificate& c, const CertificateContext& ctx = {});

struct TraceCheck {
  bool ok = true;
  std::size_t step = 0;
  std::string reason;
};

// Every certificate validates and matches its steps, heights descend at the
// step's k, and a non-strict certificate keeps the sequent unchanged.
TraceCheck check_trace(const ReductionTrace& t, const CertificateContext& ctx = {});

struct NumericCheck {
  std::uint64_t compared = 0;
  std::uint64_t beyond_cap = 0;
  bool ok = true;
  std::string reason;
};

// Recomputes K_i = G_{mu+alpha_i}(k_i) with the surrogate hierarchy and checks
// K_{i+1} <= K_i, strictly for the strict certificates. Pairs whose values
// both exceed the cap are counted, not compared.
NumericCheck numeric_check(const ReductionTrace& t, const EvalBudget& budget);

struct SpotCheck {
  std::uint64_t verified = 0;
  std::uint64_t beyond_cap = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

// Brute force over b in {n, w+n : n <= 8}, mu in {0, 1, 2, w, w+1, w*2} and
// k <= 6: G_b(G_b(k)) < G_{b+1}(k), and G strictly increasing along every
// k-descent path from mu + b.
SpotCheck surrogate_spot_check(const EvalBudget& budget);

// ------------------------------------------------------ text formats

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FormulaPtr parse_formula(const std::string& text);
// A proof term in s-expression form; see tests/fixtures/infinitary.
ProofPtr parse_proof(const std::string& text);
std::string print_proof(const ProofPtr& h);

// One JSON object per line: a header, each step, then the verdict.
void write_trace_jsonl(std::ostream& os, const ReductionTrace& t);

}  // namespace slowcon::inf
