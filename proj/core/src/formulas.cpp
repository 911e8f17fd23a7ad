#include "slowcon/formulas.hpp"

#include <map>
#include <mutex>

namespace slowcon::fol {

namespace {

// `want` unless it is free in one of es.
std::string pick(const std::string& want, const std::vector<Expr>& es) {
  for (const auto& e : es)
    if (has_free(e, want)) return fresh_name(want, es);
  return want;
}

}  // namespace

Expr bounded_forall(const std::string& x, const Expr& t, const Expr& body) {
  return forall(x, imp(lt(var(x), t), body));
}

Expr bounded_exists(const std::string& x, const Expr& t, const Expr& body) {
  return exists(x, conj(lt(var(x), t), body));
}

Expr build_prog(const PredicateAbstract& psi) {
  std::string a = pick("a", {psi.formula});
  std::string b = pick("b", {psi.formula, var(a)});
  return forall(a, imp(bounded_forall(b, var(a), psi.apply(var(b))), psi.apply(var(a))));
}

Expr build_ti(const Expr& t, const PredicateAbstract& psi) {
  std::string b = pick("b", {psi.formula, t});
  return imp(build_prog(psi), bounded_forall(b, t, psi.apply(var(b))));
}

Expr build_theta(const Expr& d0, const Expr& d1) {
  std::string v0 = pick("v0", {d0, d1});
  std::string v1 = pick("v1", {d0, d1, var(v0)});
  std::string z = pick("z", {d0, d1, var(v0), var(v1)});
  Expr Z = var(z), V0 = var(v0), V1 = var(v1);
  Expr values = conj(imp(eq(Z, d0), eq(V0, one())), imp(eq(Z, d1), eq(V1, one())));
  Expr clause = forall(z, imp(disj(eq(Z, d0), eq(Z, d1)), iff(rel_r(Z), values)));
  return exists(v0, exists(v1, conj(clause, imp(eq(V0, one()), eq(V1, one())))));
}

PredicateAbstract build_jump() {
  Expr g = var("g"), b = var("b"), d = var("d");
  Expr below_b = bounded_forall("d", b, rel_r(d));
  Expr below_sum = bounded_forall("d", oplus(b, g), rel_r(d));
  return {"g", forall("b", imp(below_b, below_sum))};
}

PredicateAbstract naive_jump_iterate(unsigned n) {
  PredicateAbstract cur = PredicateAbstract::identity();
  const PredicateAbstract j = build_jump();
  for (unsigned i = 0; i < n; ++i) cur = {"g", subst_r(j.formula, cur)};
  return cur;
}

PredicateAbstract build_jump_single() {
  Expr g = var("g"), b = var("b"), d0 = var("d0"), d1 = var("d1"), v0 = var("v0"),
       v1 = var("v1"), z = var("z"), u = var("u");
  Expr which = disj(conj(eq(z, d0), eq(u, v0)), conj(eq(z, d1), eq(u, v1)));
  Expr values = forall("z", forall("u", imp(which, iff(rel_r(z), eq(u, one())))));
  Expr matrix = imp(imp(lt(d0, b), eq(v0, one())), imp(lt(d1, oplus(b, g)), eq(v1, one())));
  Expr body = exists("v0", exists("v1", conj(values, matrix)));
  return {"g", forall("b", exists("d0", forall("d1", body)))};
}

PredicateAbstract jump_iterate(unsigned n) {
  static std::mutex mu;
  static std::vector<PredicateAbstract> cache{PredicateAbstract::identity()};
  std::lock_guard<std::mutex> lock(mu);
  static const PredicateAbstract j = build_jump_single();
  while (cache.size() <= n) cache.push_back({"g", subst_r(j.formula, cache.back())});
  return cache[n];
}

Expr fdown(const Expr& t) {
  std::string x = pick("x", {t});
  std::string y = pick("y", {t, var(x)});
  return forall(x, exists(y, fgraph(t, var(x), var(y))));
}

PredicateAbstract fdown_abstract() { return {"g", fdown(var("g"))}; }

}  // namespace slowcon::fol
