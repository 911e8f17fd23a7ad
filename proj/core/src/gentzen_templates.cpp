// The fixed template proofs: one jump step of transfinite induction, the
// base case below tower(0), and totality of F from induction along F-total.
#include <array>

#include "gentzen_internal.hpp"

namespace slowcon::gentzen::detail {

using namespace fol;
using script::with;

namespace {

Expr R(const Expr& t) { return rel_r(t); }

// (t < oplus(s,r) -> ((t < s | t = s) | Eg (g < r & Em t < omul(s,g,m))))
Expr o2_instance(const Expr& t, const Expr& s, const Expr& r) {
  Expr g = var("g"), m = var("m");
  Expr past = exists("g", conj(lt(g, r), exists("m", lt(t, omul(s, g, m)))));
  return imp(lt(t, oplus(s, r)), disj(disj(lt(t, s), eq(t, s)), past));
}

// Ad (d < 0 -> R(d))
Fact below_zero(Script& s) {
  Expr d = var("dz");
  Fact f = s.by({}, imp(lt(d, zero()), R(d)), {s.ax({}, neg(lt(d, zero())), "o1")});
  return s.all(f, "dz");
}

// ~0 = S(0), from S(0) != 0 and symmetry.
Fact zero_not_one(Script& s) {
  Expr e = eq(zero(), one());
  Fact e2 = s.ax({}, imp(e, imp(eq(zero(), zero()), eq(one(), zero()))), "e2");
  return s.by({}, neg(e), {e2, s.refl({}, zero()), s.ax({}, neg(eq(one(), zero())), "p1")});
}

// At Ev (R(t) <-> v = 1)
Fact truth_value(Script& s) {
  Expr t = var("tz");
  Expr ex = exists("v", iff(R(t), eq(var("v"), one())));
  Context yes{R(t)}, no{neg(R(t))};
  Fact fy = s.by(yes, iff(R(t), eq(one(), one())), {s.hyp(yes, R(t)), s.refl(yes, one())});
  Fact fn = s.by(no, iff(R(t), eq(zero(), one())), {s.hyp(no, neg(R(t))), zero_not_one(s)});
  Fact both = s.by({}, ex, {s.some(fy, ex, one()), s.some(fn, ex, zero())});
  return s.all(both, "tz");
}

// The progressiveness step for the two-occurrence jump: Prog(R) |- Prog(J).
class ProgJump {
 public:
  explicit ProgJump(Script& s) : s_(s) {}

  Fact run() {
    const PredicateAbstract J = build_jump();
    const Expr progR = build_prog(PredicateAbstract::identity());
    const Expr progJ = build_prog(J);
    Expr ga = var("ga"), be = var("be"), de = var("de");
    Expr opened = open(progJ, ga);
    Expr H1 = opened->arg(0);  // Ah (h < ga -> J(h))
    Expr Jb = open(opened->arg(1), be);
    Expr H2 = Jb->arg(0);  // Ad (d < be -> R(d))
    Expr H3 = open(Jb->arg(1), de)->arg(0);  // de < oplus(be, ga)
    Context c3{progR, H1, H2, H3};

    Fact cases = s_.mp(c3, s_.ax(c3, o2_instance(de, be, ga), "o2"), s_.hyp(c3, H3));

    Expr below = lt(de, be);
    Context k1 = with(c3, below);
    Fact r1 = s_.mp(k1, s_.inst(s_.hyp(k1, H2), {de}), s_.hyp(k1, below));

    Expr equal = eq(de, be);
    Context k2 = with(c3, equal);
    Fact at_be = s_.mp(k2, s_.inst(s_.hyp(k2, progR), {be}), s_.hyp(k2, H2));
    Fact r2 = s_.rw(s_.symm(s_.hyp(k2, equal)), at_be, R(de));

    Expr past = cases.concl->arg(1);
    Context k3 = with(c3, past);
    Fact r3 = s_.elim(s_.hyp(k3, past), "ha", [&](const Context& c, const Expr& a) {
      Expr ha = var("ha");
      Fact below_ga = s_.by(c, lt(ha, ga), {s_.hyp(c, a)});
      Fact some_m = s_.by(c, a->arg(1), {s_.hyp(c, a)});
      Fact jha = s_.mp(c, s_.inst(s_.hyp(c, H1), {ha}), below_ga);
      Fact every_m = multiples(c, be, ha, H2, jha);
      return s_.elim(some_m, "mm", [&](const Context& c2, const Expr& am) {
        return s_.mp(c2, s_.inst(every_m, {var("mm"), de}), s_.hyp(c2, am));
      });
    });

    Fact r = s_.by(c3, R(de), {cases, r1, r2, r3});
    return s_.all(s_.all(s_.all(r, H3, "de"), H2, "be"), H1, "ga");
  }

 private:
  // Am Ad (d < omul(be,ha,m) -> R(d)) by induction on m, from
  // Ad (d < be -> R(d)) and J(ha).
  Fact multiples(const Context& c, const Expr& be, const Expr& ha, const Expr& H2, const Fact& jha) {
    auto claim = [&](const Expr& m) { return bounded_forall("d", omul(be, ha, m), R(var("d"))); };
    Expr mu = var("mu");
    Expr goal = forall("mu", claim(mu));
    Fact o3 = s_.symm(s_.ax(c, eq(omul(be, ha, zero()), be), "o3"));
    Fact base = s_.rw(o3, s_.hyp(c, H2), claim(zero()));

    Context k = with(c, claim(mu));
    Expr prev = omul(be, ha, mu);
    Fact jump = s_.mp(k, s_.inst(jha, {prev}), s_.hyp(k, claim(mu)));
    Fact o4 = s_.symm(s_.ax(k, eq(omul(be, ha, succ(mu)), oplus(prev, ha)), "o4"));
    Fact next = s_.rw(o4, jump, claim(succ(mu)));
    return s_.b.induction(base, s_.all(next, claim(mu), "mu"), goal);
  }

  Script& s_;
};

// J'(ga) <-> J(ga) for a free ga, proved through the truth-value encoding.
class JumpEquivalence {
 public:
  explicit JumpEquivalence(Script& s) : s_(s) {}

  // Ag (J'(g) -> J(g)) and Ag (J(g) -> J'(g)).
  std::pair<Fact, Fact> run() {
    Jp_ = build_jump_single().apply(ga_);
    J_ = build_jump().apply(ga_);
    single_b_ = open(Jp_, be_);
    double_b_ = open(J_, be_);
    AP_ = double_b_->arg(0);
    AQ_ = double_b_->arg(1);
    values_ = truth_value(s_);
    matrix_lemmas();
    auto [fwd_b, bwd_b] = prenex();

    Context cf{Jp_};
    Fact f = s_.mp(cf, fwd_b, s_.inst(s_.hyp(cf, Jp_), {be_}));
    Fact fwd = s_.all(s_.discharge(s_.all(f, "be"), Jp_), "ga");
    Context cb{J_};
    Fact g = s_.mp(cb, bwd_b, s_.inst(s_.hyp(cb, J_), {be_}));
    Fact bwd = s_.all(s_.discharge(s_.all(g, "be"), J_), "ga");
    return {fwd, bwd};
  }

 private:
  Expr theta(const Expr& d0, const Expr& d1) const { return open(open(single_b_, d0), d1); }
  Expr P(const Expr& d) const { return open(AP_, d); }
  Expr Q(const Expr& d) const { return open(AQ_, d); }

  // theta(e0,e1) <-> (P(e0) -> Q(e1)) as two theorems with e0, e1 free.
  void matrix_lemmas() {
    Expr th = theta(e0_, e1_);
    Expr pq = imp(P(e0_), Q(e1_));
    Expr w0 = var("w0"), w1 = var("w1");

    Context cf{th};
    Fact f = s_.elim(s_.hyp(cf, th), "w0", [&](const Context& c1, const Expr& a1) {
      return s_.elim(s_.hyp(c1, a1), "w1", [&](const Context& c2, const Expr& vm) {
        Fact v = s_.by(c2, vm->arg(0), {s_.hyp(c2, vm)});
        Fact i0 = s_.inst(v, {e0_, w0});
        Fact iff0 = s_.by(c2, i0.concl->arg(1), {i0, s_.refl(c2, e0_), s_.refl(c2, w0)});
        Fact i1 = s_.inst(v, {e1_, w1});
        Fact iff1 = s_.by(c2, i1.concl->arg(1), {i1, s_.refl(c2, e1_), s_.refl(c2, w1)});
        return s_.by(c2, pq, {iff0, iff1, s_.hyp(c2, vm)});
      });
    });
    fwd_ = s_.discharge(f, th);

    Context cb{pq};
    Fact b = s_.elim(s_.inst(s_.weaken(values_, cb), {e0_}), "w0", [&](const Context& c1, const Expr&) {
      return s_.elim(s_.inst(s_.weaken(values_, c1), {e1_}), "w1", [&](const Context& c2, const Expr&) {
        Expr vm = open(open(th, w0), w1);
        Fact v = value_clause(c2, vm->arg(0), {{{e0_, w0}, {e1_, w1}}}, c2[1], c2[2]);
        Fact m = s_.by(c2, vm->arg(1), {s_.hyp(c2, pq), s_.hyp(c2, c2[1]), s_.hyp(c2, c2[2])});
        Fact both = s_.by(c2, vm, {v, m});
        return s_.some(s_.some(both, open(th, w0), w1), th, w0);
      });
    });
    bwd_ = s_.discharge(b, pq);
    bwd_all_ = s_.all(s_.all(bwd_, "e1"), "e0");
  }

  // Az Au (((z = d0 & u = w0) | (z = d1 & u = w1)) -> (R(z) <-> u = 1)) from
  // the two value facts R(di) <-> wi = 1.
  Fact value_clause(const Context& c, const Expr& clause, std::array<std::pair<Expr, Expr>, 2> dw,
                    const Expr& iff0, const Expr& iff1) {
    Expr zz = var("zz"), uu = var("uu");
    Expr opened = open(open(clause, zz), uu);
    Expr which = opened->arg(0);
    Expr want = opened->arg(1);
    Context cw = with(c, which);
    std::vector<Fact> parts{s_.hyp(cw, which)};
    const Expr iffs[2] = {iff0, iff1};
    for (int i = 0; i < 2; ++i) {
      Expr pick = which->arg(i);
      Context k = with(cw, pick);
      Fact ez = s_.symm(s_.by(k, eq(zz, dw[i].first), {s_.hyp(k, pick)}));
      Fact eu = s_.symm(s_.by(k, eq(uu, dw[i].second), {s_.hyp(k, pick)}));
      Fact f = s_.rw(ez, s_.hyp(k, iffs[i]), iff(R(zz), eq(dw[i].second, one())));
      parts.push_back(s_.rw(eu, f, want));
    }
    Fact r = s_.by(cw, want, parts);
    return s_.all(s_.all(r, which, "uu"), "zz");
  }

  // Ed0 Ad1 theta <-> (AP -> AQ) at the free base be, as two theorems.
  std::pair<Fact, Fact> prenex() {
    Context cf{single_b_};
    Fact f = s_.elim(s_.hyp(cf, single_b_), "e0", [&](const Context& c1, const Expr& a) {
      Context c2 = with(c1, AP_);
      Fact th = s_.inst(s_.hyp(c2, a), {e1_});
      Fact pq = s_.mp(c2, fwd_, th);
      Fact q = s_.mp(c2, pq, s_.inst(s_.hyp(c2, AP_), {e0_}));
      return s_.discharge(s_.all(q, "e1"), AP_);
    });
    Fact fwd = s_.discharge(f, single_b_);

    Context cb{double_b_};
    Context yes = with(cb, AP_);
    Fact aq = s_.mp(yes, s_.hyp(yes, double_b_), s_.hyp(yes, AP_));
    Fact pq0 = s_.by(yes, imp(P(zero()), Q(e1_)), {s_.inst(aq, {e1_})});
    Fact th0 = s_.mp(yes, s_.inst(bwd_all_, {zero(), e1_}), pq0);
    Fact case_yes = s_.some(s_.all(th0, "e1"), single_b_, zero());

    Context no = with(cb, neg(AP_));
    Fact witness = s_.mp(no, counterexample(), s_.hyp(no, neg(AP_)));
    Fact case_no = s_.elim(witness, "e0", [&](const Context& c, const Expr& np) {
      Fact pq = s_.by(c, imp(P(e0_), Q(e1_)), {s_.hyp(c, np)});
      Fact th = s_.mp(c, bwd_, pq);
      return s_.some(s_.all(th, "e1"), single_b_, e0_);
    });
    Fact b = s_.by(cb, single_b_, {case_yes, case_no});
    return {fwd, s_.discharge(b, double_b_)};
  }

  // ~AP -> Ed ~P(d)
  Fact counterexample() {
    Expr dd = var("dd");
    Expr ex = exists("dd", neg(P(dd)));
    Context c{neg(ex)};
    Context k = with(c, neg(P(dd)));
    Fact found = s_.some(s_.hyp(k, neg(P(dd))), ex, dd);
    Fact p = s_.by(c, P(dd), {found, s_.hyp(c, neg(ex))});
    Fact ap = s_.all(p, "dd");
    return s_.by({}, imp(neg(AP_), ex), {ap});
  }

  Script& s_;
  Expr ga_ = var("ga"), be_ = var("be"), e0_ = var("e0"), e1_ = var("e1");
  Expr Jp_, J_, single_b_, double_b_, AP_, AQ_;
  Fact values_, fwd_, bwd_, bwd_all_;
};

}  // namespace

Fact jump_template(Script& s) {
  const PredicateAbstract Rid = PredicateAbstract::identity();
  const PredicateAbstract J = build_jump();
  const PredicateAbstract Jp = build_jump_single();
  const Expr progR = build_prog(Rid), progJ = build_prog(J), progJp = build_prog(Jp);

  Fact prog_j = ProgJump(s).run();  // [Prog R] |- Prog J
  auto [to_double, to_single] = JumpEquivalence(s).run();

  // Prog J |- Prog J'
  Expr al = var("al"), ee = var("ee");
  Expr opened = open(progJp, al);
  Expr Hp = opened->arg(0);
  Context c1{progJ, Hp};
  Fact step = s.by(c1, imp(lt(ee, al), J.apply(ee)),
                   {s.inst(s.hyp(c1, Hp), {ee}), s.inst(to_double, {ee})});
  Fact H = s.all(step, "ee");
  Fact j_al = s.mp(c1, s.inst(s.hyp(c1, progJ), {al}), H);
  Fact jp_al = s.mp(c1, s.inst(to_single, {al}), j_al);
  Fact prog_jp = s.all(jp_al, Hp, "al");  // [Prog J] |- Prog J'

  // TI(tower x, J'), Prog R |- Ab (b < tower(S x) -> R(b))
  Expr x = var("x");
  Expr tx = tower(x);
  Expr ti_single = build_ti(tx, Jp);
  Expr ti_r = build_ti(tower(succ(x)), Rid);
  Context c{ti_single, progR};
  Fact pj = s.mp(c, s.discharge(prog_jp, progJ), prog_j);
  Fact below = s.mp(c, s.hyp(c, ti_single), pj);
  Fact at_top = s.mp(c, s.inst(pj, {tx}), below);
  Fact jump = s.mp(c, s.inst(to_double, {tx}), at_top);
  Fact from_zero = s.mp(c, s.inst(jump, {zero()}), below_zero(s));
  Fact o6 = s.symm(s.ax(c, eq(tower(succ(x)), oplus(zero(), tx)), "o6"));
  Fact done = s.rw(o6, from_zero, ti_r->arg(1));
  return s.all(s.discharge(s.discharge(done, progR), ti_single), "x");
}

Fact base_template(Script& s) {
  const PredicateAbstract Rid = PredicateAbstract::identity();
  const Expr progR = build_prog(Rid);
  Expr ti = build_ti(tower(zero()), Rid);
  Expr be = var("be");
  Expr in_tower = open(ti->arg(1), be)->arg(0);  // be < tower(0)
  Context c{progR, in_tower};
  Fact o5 = s.ax(c, eq(tower(zero()), oplus(zero(), zero())), "o5");
  Fact in_sum = s.rw(o5, s.hyp(c, in_tower), lt(be, oplus(zero(), zero())));
  Fact cases = s.mp(c, s.ax(c, o2_instance(be, zero(), zero()), "o2"), in_sum);

  Fact o1 = s.ax(c, neg(lt(be, zero())), "o1");
  Context k1 = with(c, lt(be, zero()));
  Fact r1 = s.by(k1, R(be), {s.hyp(k1, lt(be, zero())), o1});

  Context k2 = with(c, eq(be, zero()));
  Fact at_zero = s.mp(k2, s.inst(s.hyp(k2, progR), {zero()}), below_zero(s));
  Fact r2 = s.rw(s.symm(s.hyp(k2, eq(be, zero()))), at_zero, R(be));

  Expr past = cases.concl->arg(1);
  Context k3 = with(c, past);
  Fact r3 = s.elim(s.hyp(k3, past), "ha", [&](const Context& k, const Expr& a) {
    Expr ha = var("ha");
    return s.by(k, R(be), {s.hyp(k, a), s.ax(k, neg(lt(ha, zero())), "o1")});
  });
  Fact r = s.by(c, R(be), {cases, r1, r2, r3});
  return s.discharge(s.all(r, in_tower, "be"), progR);
}

Fact fdown_template(Script& s) {
  const PredicateAbstract Fd = fdown_abstract();
  const Expr progF = build_prog(Fd);
  Expr al = var("al"), xx = var("xx"), bb = var("bb"), yy = var("yy");
  Expr opened = open(progF, al);
  Expr H = opened->arg(0);  // Ab (b < al -> Ax Ey F(b,x,y))
  Expr goal = open(opened->arg(1), xx);  // Ey F(al,xx,y)
  Context c{H};

  Expr is_zero = eq(al, zero());
  Context k0 = with(c, is_zero);
  Fact f1 = s.ax(k0, fgraph(zero(), xx, succ(xx)), "f1");
  Fact z = s.some(f1, exists("y", fgraph(zero(), xx, var("y"))), succ(xx));
  Fact r0 = s.rw(s.symm(s.hyp(k0, is_zero)), z, goal);

  Expr is_succ = exists("b", eq(al, oplus(var("b"), zero())));
  Context k1{H, neg(is_zero), is_succ};
  Fact r1 = s.elim(s.hyp(k1, is_succ), "bb", [&](const Context& k, const Expr& e) {
    Fact back = s.symm(s.hyp(k, e));  // oplus(bb,0) = al
    Fact below = s.rw(back, s.ax(k, lt(bb, oplus(bb, zero())), "o7"), lt(bb, al));
    Fact total_b = s.mp(k, s.inst(s.hyp(k, H), {bb}), below);
    // Ai Ey I(bb,i,xx,y)
    Expr ii = var("ii");
    auto iterate = [&](const Expr& i) { return exists("y", fiter(bb, i, xx, var("y"))); };
    Expr all_i = forall("ii", iterate(ii));
    Fact base = s.some(s.ax(k, fiter(bb, zero(), xx, xx), "f2"), iterate(zero()), xx);
    Context ki = with(k, iterate(ii));
    Fact next = s.elim(s.hyp(ki, iterate(ii)), "yy", [&](const Context& k2, const Expr& at) {
      return s.elim(s.inst(s.weaken(total_b, k2), {yy}), "zz", [&](const Context& k3, const Expr& f) {
        Expr zz = var("zz");
        Expr to = fiter(bb, succ(ii), xx, zz);
        Fact f3 = s.ax(k3, imp(at, imp(f, to)), "f3");
        return s.some(s.by(k3, to, {f3, s.hyp(k3, at), s.hyp(k3, f)}), iterate(succ(ii)), zz);
      });
    });
    Fact every = s.b.induction(base, s.all(next, iterate(ii), "ii"), all_i);
    return s.elim(s.inst(every, {succ(xx)}), "yy", [&](const Context& k2, const Expr& at) {
      Expr to = fgraph(oplus(bb, zero()), xx, yy);
      Fact f4 = s.mp(k2, s.ax(k2, imp(at, to), "f4"), s.hyp(k2, at));
      Fact some = s.some(f4, exists("y", fgraph(oplus(bb, zero()), xx, var("y"))), yy);
      return s.rw(s.weaken(back, k2), some, goal);
    });
  });

  Context k2{H, neg(is_zero), neg(is_succ)};
  Expr a_fs = fs(al, xx);
  Fact o8 = s.ax(k2, imp(neg(is_zero), imp(neg(is_succ), lt(a_fs, al))), "o8");
  Fact below = s.by(k2, lt(a_fs, al), {o8, s.hyp(k2, neg(is_zero)), s.hyp(k2, neg(is_succ))});
  Fact at_fs = s.inst(s.mp(k2, s.inst(s.hyp(k2, H), {a_fs}), below), {xx});
  Fact r2 = s.elim(at_fs, "yy", [&](const Context& k, const Expr& f) {
    Expr to = fgraph(al, xx, yy);
    Fact f5 = s.ax(k, imp(neg(is_zero), imp(neg(is_succ), imp(f, to))), "f5");
    Fact r = s.by(k, to, {f5, s.hyp(k, neg(is_zero)), s.hyp(k, neg(is_succ)), s.hyp(k, f)});
    return s.some(r, goal, yy);
  });

  Fact g = s.by(c, goal, {r0, r1, r2});
  Fact prog = s.all(s.all(g, "xx"), H, "al");  // Prog(F-total)

  Expr top = tower(succ(xx));
  Expr ti = build_ti(top, Fd);
  Context ct{ti};
  Fact below_top = s.mp(ct, s.hyp(ct, ti), prog);
  Fact total_top = s.mp(ct, s.inst(prog, {top}), below_top);
  return s.all(s.inst(total_top, {xx}), ti, "xx");
}

}  // namespace slowcon::gentzen::detail
