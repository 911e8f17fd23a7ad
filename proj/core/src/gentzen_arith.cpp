#include "gentzen_internal.hpp"

namespace slowcon::gentzen::detail {

using namespace fol;

namespace {

Expr N(const Natural& m) { return numeral(m); }

}  // namespace

Fact Arithmetic::two_is_ss() {
  if (two_ss_) return *two_ss_;
  // 1 + S(0) = S(1 + 0), then 1 + 0 = 1.
  Fact p4 = s_.ax({}, eq(plus(one(), succ(zero())), succ(plus(one(), zero()))), "p4");
  Fact p3 = s_.ax({}, eq(plus(one(), zero()), one()), "p3");
  two_ss_ = s_.step(p4, p3, succ(one()));
  return *two_ss_;
}

Fact Arithmetic::add_one(const Expr& a) {
  Fact p4 = s_.ax({}, eq(plus(a, succ(zero())), succ(plus(a, zero()))), "p4");
  Fact p3 = s_.ax({}, eq(plus(a, zero()), a), "p3");
  return s_.step(p4, p3, succ(a));
}

Fact Arithmetic::zero_add() {
  if (zero_add_) return *zero_add_;
  Expr y = var("y");
  Expr goal = forall("y", eq(plus(zero(), y), y));
  Fact base = s_.ax({}, eq(plus(zero(), zero()), zero()), "p3");
  Expr ih = eq(plus(zero(), y), y);
  Context c{ih};
  Fact p4 = s_.ax(c, eq(plus(zero(), succ(y)), succ(plus(zero(), y))), "p4");
  Fact next = s_.step(p4, s_.hyp(c, ih), succ(y));
  zero_add_ = s_.b.induction(base, s_.all(next, ih, "y"), goal);
  return *zero_add_;
}

Fact Arithmetic::succ_add() {
  if (succ_add_) return *succ_add_;
  Expr a = var("a"), y = var("y");
  auto claim = [&](const Expr& t) { return eq(plus(succ(a), t), succ(plus(a, t))); };
  Expr goal = forall("y", claim(y));
  // S(a) + 0 = S(a), then rewrite the inner a to a + 0.
  Fact sa0 = s_.ax({}, eq(plus(succ(a), zero()), succ(a)), "p3");
  Fact a0 = s_.symm(s_.ax({}, eq(plus(a, zero()), a), "p3"));
  Fact base = s_.step(sa0, a0, succ(plus(a, zero())));
  Expr ih = claim(y);
  Context c{ih};
  Fact p4 = s_.ax(c, eq(plus(succ(a), succ(y)), succ(plus(succ(a), y))), "p4");
  Fact cur = s_.step(p4, s_.hyp(c, ih), succ(succ(plus(a, y))));
  Fact inner = s_.symm(s_.ax(c, eq(plus(a, succ(y)), succ(plus(a, y))), "p4"));
  cur = s_.step(cur, inner, succ(plus(a, succ(y))));
  Fact all_y = s_.b.induction(base, s_.all(cur, ih, "y"), goal);
  succ_add_ = s_.all(all_y, "a");
  return *succ_add_;
}

Fact Arithmetic::times_two(const Expr& a) {
  // a*(1+1) = a*S(1) = a*1 + a = (a*0 + a) + a = (0 + a) + a = a + a
  Fact cur = s_.step(s_.refl({}, times(a, two())), two_is_ss(), times(a, succ(one())));
  cur = s_.trans(cur, s_.ax({}, eq(times(a, succ(one())), plus(times(a, one()), a)), "p6"));
  Fact a1 = s_.ax({}, eq(times(a, one()), plus(times(a, zero()), a)), "p6");
  cur = s_.step(cur, a1, plus(plus(times(a, zero()), a), a));
  cur = s_.step(cur, s_.ax({}, eq(times(a, zero()), zero()), "p5"), plus(plus(zero(), a), a));
  cur = s_.step(cur, s_.inst(zero_add(), {a}), plus(a, a));
  return cur;
}

Fact Arithmetic::double_step() {
  if (double_step_) return *double_step_;
  Expr a = var("a");
  Expr a2 = times(a, two());
  // Left: (a*2 + 1) + 1 = S(a*2 + 1) = S(S(a*2)) = S(S(a + a))
  Fact left = add_one(plus(a2, one()));
  left = s_.step(left, add_one(a2), succ(succ(a2)));
  left = s_.step(left, times_two(a), succ(succ(plus(a, a))));
  // Right: (a+1)*2 = (a+1) + (a+1) = S(a) + S(a) = S(S(a) + a) = S(S(a + a))
  Expr a1 = plus(a, one());
  Fact right = times_two(a1);
  right = s_.step(right, add_one(a), plus(succ(a), succ(a)));
  right = s_.trans(right, s_.ax({}, eq(plus(succ(a), succ(a)), succ(plus(succ(a), a))), "p4"));
  right = s_.step(right, s_.inst(succ_add(), {a, a}), succ(succ(plus(a, a))));
  double_step_ = s_.all(s_.trans(left, s_.symm(right)), "a");
  return *double_step_;
}

Fact Arithmetic::numeral_succ(const Natural& m) {
  Expr goal = eq(plus(N(m), one()), N(m + 1));
  if (m == 0) {
    // 0*(1+1) = 0 + 0 = 0, then 0 + 1 = 0*(1+1) + 1.
    Fact z = s_.trans(times_two(zero()), s_.ax({}, eq(plus(zero(), zero()), zero()), "p3"));
    return s_.rw(z, s_.refl({}, plus(times(zero(), two()), one())), goal);
  }
  if (m % 2 == 0) return s_.refl({}, goal->arg(0));  // identical by the numeral recursion
  // m = 2k+1: (N(k)*2 + 1) + 1 = (N(k) + 1)*2 = N(k+1)*2
  Natural k = m / 2;
  Fact d = s_.inst(double_step(), {N(k)});
  if (k != 0 && k % 2 == 0) return d;  // N(k) + 1 is already N(k+1)
  return s_.step(d, numeral_succ(k), times(N(k + 1), two()));
}

Fact Arithmetic::succ_numeral(const Natural& m) {
  return s_.trans(s_.symm(add_one(N(m))), numeral_succ(m));
}

}  // namespace slowcon::gentzen::detail
