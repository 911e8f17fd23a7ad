// Explicit proofs of transfinite induction up to tower(n) and of totality of
// F at tower(n+1), assembled from fixed templates by substitution for R.
#pragma once

#include <vector>

#include "slowcon/hilbert.hpp"

namespace slowcon::gentzen {

using fol::Expr;
using hilbert::HilbertProof;

// Ax (TI(tower(x), J') -> TI(tower(S(x)), R)), accepted in pa-o.
const HilbertProof& jump_template();
Expr jump_template_goal();
// TI(tower(0), R), accepted in pa-o.
const HilbertProof& base_template();
// Ax (TI(tower(S(x)), F-total) -> Ey F(tower(S(x)), x, y)), accepted in pa-o-f.
const HilbertProof& fdown_template();
Expr fdown_template_goal();

// numeral(m) + 1 = numeral(m+1) in pa.
HilbertProof numeral_succ_proof(const Natural& m);


// Ey F(tower(S(numeral(n))), numeral(n), y), accepted in pa-o-f.
HilbertProof gen_feps_total(unsigned n);
Expr gen_feps_goal(unsigned n);

// Lines of gen_ti(n) that came from the copy of the jump template with R
// replaced by J'_level; lines already present from an earlier level are not
// listed again.
struct Segment {
  unsigned level = 0;
  std::vector<std::pair<std::size_t, std::size_t>> lines;  // (proof line, template line), 1-based
};

// Ea (tower(numeral(n)) = a & TI(a, R)), accepted in pa-o.
HilbertProof gen_ti(unsigned n, std::vector<Segment>* segments = nullptr);
Expr gen_ti_goal(unsigned n);

enum class Target { TransfiniteInduction, FepsTotal };

struct SizeRow {
  unsigned n = 0;
  std::uint64_t lines = 0;
  std::uint64_t symbols = 0;
  bool accepted = false;
  // the same level count of plain J substitutions, without the single-R encoding
  std::uint64_t naive_r_count = 0;
  std::uint64_t naive_length = 0;
  double build_seconds = 0;
  double check_seconds = 0;
};

struct SizeReport {
  Target target = Target::TransfiniteInduction;
  std::vector<SizeRow> rows;
  double exponent = 0;  // least-squares slope of log symbols against log n
  double constant = 0;  // smallest C with symbols <= C * n^exponent on the rows
};

// Generates, measures and re-checks each proof; throws std::logic_error if the
// checker rejects one.
SizeReport size_report(Target target, const std::vector<unsigned>& ns);

// Least-squares fit of log y = d log x + c over points with x >= 1.
std::pair<double, double> fit_power(const std::vector<std::pair<double, double>>& pts);

}  // namespace slowcon::gentzen
