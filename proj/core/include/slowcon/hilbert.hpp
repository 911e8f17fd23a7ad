// Hilbert-style proofs in sequence form: axiom schemas, checking, symbol
// counting, substitution for R through a proof, and a micro-scale exhaustive
// search for short refutations.
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slowcon/syntax.hpp"

namespace slowcon::hilbert {

using fol::Expr;

enum class Rule { Axiom, ModusPonens, Generalization };

// Line references are 1-based, as in the file format. For MP, `minor` is the
// line proving A and `major` the line proving A -> B.
struct Justification {
  Rule rule = Rule::Axiom;
  std::string schema;     // Axiom
  std::size_t minor = 0;  // MP; Gen uses it for the premise
  std::size_t major = 0;  // MP
  std::string variable;   // Gen

  static Justification axiom(std::string id) { return {Rule::Axiom, std::move(id), 0, 0, {}}; }
  static Justification mp(std::size_t minor, std::size_t major) {
    return {Rule::ModusPonens, {}, minor, major, {}};
  }
  static Justification gen(std::size_t premise, std::string x) {
    return {Rule::Generalization, {}, premise, 0, std::move(x)};
  }
};

struct Line {
  Expr formula;
  Justification just;
};

struct HilbertProof {
  std::vector<Line> lines;
};

// A schema decides membership of a single formula. Instantiations are never
// stored: the checker recovers them by matching.
struct Schema {
  std::string id;
  std::string display;  // published form, for documentation and the CLI
  std::function<bool(const Expr&)> matches;
};

struct Theory {
  std::string id;
  std::vector<Schema> schemas;

  const Schema* find(const std::string& schema_id) const;
  // First schema the formula is an instance of.
  std::optional<std::string> classify(const Expr& f) const;
};

// Pure logic: tautologies, quantifier axioms, equality.
Theory logic_theory();
// Logic plus the closed extra axioms (ids extra1, extra2, ...).
Theory with_extra_axioms(Theory base, const std::vector<Expr>& extra, std::string id);
// Logic, the successor/addition/multiplication axioms and full induction.
Theory pa_theory();
// pa plus the ordinal pack.
Theory pa_o_theory();
// pa_o plus the graph recursion pack for F and I.
Theory pa_o_f_theory();
// "logic", "pa", "pa-o", "pa-o-f", "logic+contradiction".
std::optional<Theory> theory_by_id(const std::string& id);
std::vector<std::string> theory_ids();

// The contradiction searched for and used by the fixture theory: 0 = S(0).
Expr contradiction();

// Propositional tautology, reading prime and quantified subformulas as atoms.
bool is_tautology(const Expr& f);

struct CheckResult {
  bool accepted = true;
  std::size_t line = 0;  // 1-based, first rejected line
  std::string reason;
};
CheckResult check(const HilbertProof& p, const Theory& t);

// Symbols of the rendered justification: "ax" counts 2; "mp i j" counts 1
// plus the digits of i and j; "gen i x" counts 1 plus the digits of i plus 1.
std::uint64_t justification_length(const Justification& j);
std::uint64_t proof_length(const HilbertProof& p, fol::CountMode mode = fol::CountMode::Normative);

// Replaces R(t) by psi(t) in every line, sharing work across lines. Validity
// is preserved as long as no generalized variable is free in psi apart from
// its parameter; otherwise throws std::invalid_argument.
HilbertProof subst_proof(const HilbertProof& p, const fol::PredicateAbstract& psi);

// `<index> | <formula> | <justification>` per line, with justifications
// `ax <schema>`, `mp <minor> <major>`, `gen <premise> <variable>`.
void write_proof(std::ostream& os, const HilbertProof& p);
HilbertProof read_proof(std::istream& is);
std::string to_string(const Justification& j);

class ProofFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConsistencyVerdict {
  std::uint64_t bound = 0;
  std::optional<HilbertProof> refutation;  // empty means no refutation up to bound
  std::uint64_t proofs_explored = 0;
};

// Exhaustive search over proofs of total length <= n whose lines are built
// from a small alphabet slice: the variable x, 0, S, =, ~, ->, A. Throws
// std::invalid_argument if n > hard_cap.
ConsistencyVerdict enumerate_consistency(const Theory& t, std::uint64_t n, std::uint64_t hard_cap);

}  // namespace slowcon::hilbert
