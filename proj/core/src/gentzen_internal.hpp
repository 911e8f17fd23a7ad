// Proof scripts shared by the generators.
#pragma once

#include "proof_script.hpp"
#include "slowcon/formulas.hpp"

namespace slowcon::gentzen::detail {

using fol::Expr;
using script::Context;
using script::Fact;
using script::Script;

// Equational lemmas about numerals, proved once per builder.
class Arithmetic {
 public:
  explicit Arithmetic(Script& s) : s_(s) {}

  // numeral(m) + 1 = numeral(m+1)
  Fact numeral_succ(const Natural& m);
  // S(numeral(m)) = numeral(m+1)
  Fact succ_numeral(const Natural& m);

 private:
  Fact two_is_ss();          // (1 + 1) = S(S(0))
  Fact zero_add();           // Ay 0 + y = y
  Fact succ_add();           // Aa Ay S(a) + y = S(a + y)
  Fact times_two(const Expr& a);  // a * (1 + 1) = a + a
  Fact double_step();        // Aa (a*(1+1) + 1) + 1 = (a + 1)*(1+1)
  Fact add_one(const Expr& a);    // a + 1 = S(a)

  Script& s_;
  std::optional<Fact> two_ss_, zero_add_, succ_add_, double_step_;
};

// Ax (TI(tower(x), J') -> TI(tower(S(x)), R)) in pa-o.
Fact jump_template(Script& s);
// TI(tower(0), R) in pa-o.
Fact base_template(Script& s);
// Ax (TI(tower(S(x)), F-total) -> Ey F(tower(S(x)), x, y)) in pa-o-f.
Fact fdown_template(Script& s);

}  // namespace slowcon::gentzen::detail
