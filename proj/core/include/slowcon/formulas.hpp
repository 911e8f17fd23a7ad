// Formula builders for transfinite induction and the jump formulas.
#pragma once

#include "slowcon/syntax.hpp"

namespace slowcon::fol {

// Forall x (x < t -> body) and Exists x (x < t & body), x is prepicked.
Expr bounded_forall(const std::string& x, const Expr& t, const Expr& body);
Expr bounded_exists(const std::string& x, const Expr& t, const Expr& body);

// All a (All b (b < a -> psi(b)) -> psi(a))
Expr build_prog(const PredicateAbstract& psi);
// Prog(psi) -> All b (b < t -> psi(b))
Expr build_ti(const Expr& t, const PredicateAbstract& psi);

// The single-R encoding of R(d0) -> R(d1):
// Ev0 Ev1 (Az ((z = d0 | z = d1) -> (R(z) <-> ((z = d0 -> v0 = 1) & (z = d1 -> v1 = 1))))
//          & (v0 = 1 -> v1 = 1))
Expr build_theta(const Expr& d0, const Expr& d1);

// J(g) = Ab (Ad (d < b -> R(d)) -> Ad (d < oplus(b,g) -> R(d)))
PredicateAbstract build_jump();
// Naive iterate: J_0 = R(g), J_{n+1} = J[J_n]. Two R per level.
PredicateAbstract naive_jump_iterate(unsigned n);

// Single-occurrence variant of J:
// Ab Ed0 Ad1 Ev0 Ev1 (Az Au (((z = d0 & u = v0) | (z = d1 & u = v1)) -> (R(z) <-> u = 1))
//                     & ((d0 < b -> v0 = 1) -> (d1 < oplus(b,g) -> v1 = 1)))
PredicateAbstract build_jump_single();
// J'_0 = R(g), J'_{n+1} = J'[J'_n].
PredicateAbstract jump_iterate(unsigned n);

// F_t total: Ax Ey F(t,x,y)
Expr fdown(const Expr& t);
PredicateAbstract fdown_abstract();

}  // namespace slowcon::fol
