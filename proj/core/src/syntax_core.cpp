#include <algorithm>
#include <functional>
#include <unordered_map>

#include "slowcon/syntax.hpp"

namespace slowcon::fol {

bool is_term(Kind k) { return k <= Kind::Fs; }
bool is_prime(Kind k) { return k >= Kind::Eq && k <= Kind::Fiter; }
bool is_connective(Kind k) { return k >= Kind::Not && k <= Kind::Iff; }
bool is_binder(Kind k) { return k == Kind::Forall || k == Kind::Exists; }

namespace {

// Symbols contributed by a node itself: function or relation symbol,
// parentheses and commas, connective, quantifier plus its variable.
std::uint64_t own_symbols(Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::BVar:
    case Kind::Zero:
    case Kind::OrdLit:
    case Kind::Eq:
    case Kind::Lt:
    case Kind::Not:
      return 1;
    case Kind::Forall:
    case Kind::Exists:
      return 2;
    case Kind::Succ:
    case Kind::Add:
    case Kind::Mul:
    case Kind::Tower:
    case Kind::R:
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
    case Kind::Iff:
      return 3;
    case Kind::Oplus:
    case Kind::Fs:
      return 4;
    case Kind::Omul:
    case Kind::Fgraph:
      return 5;
    case Kind::Fiter:
      return 6;
  }
  return 0;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto e = std::make_shared<const std::vector<std::string>>();
  return e;
}

std::shared_ptr<const std::vector<std::string>> merge_names(const std::vector<Expr>& args) {
  const std::shared_ptr<const std::vector<std::string>>* only = nullptr;
  bool multiple = false;
  for (const auto& a : args) {
    if (a->free_names->empty()) continue;
    if (only == nullptr) {
      only = &a->free_names;
    } else if (*only != a->free_names && **only != *a->free_names) {
      multiple = true;
    }
  }
  if (only == nullptr) return empty_names();
  if (!multiple) return *only;
  std::vector<std::string> out;
  for (const auto& a : args) out.insert(out.end(), a->free_names->begin(), a->free_names->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return std::make_shared<const std::vector<std::string>>(std::move(out));
}

Expr finish(Node&& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
  std::uint64_t len = own_symbols(n.kind);
  std::uint64_t raw = len;
  std::uint64_t r = n.kind == Kind::R ? 1 : 0;
  std::uint32_t loose = 0;
  std::uint64_t mask = 0;
  switch (n.kind) {
    case Kind::Var:
      h = mix(h, std::hash<std::string>{}(n.name));
      raw = n.name.size();
      n.free_names = std::make_shared<const std::vector<std::string>>(1, n.name);
      break;
    case Kind::BVar:
      h = mix(h, n.index);
      raw = n.name.size();
      loose = n.index + 1;
      mask = n.index < 64 ? (std::uint64_t{1} << n.index) : ~std::uint64_t{0};
      break;
    case Kind::OrdLit:
      h = mix(h, std::hash<std::string>{}(n.ordinal->to_string()));
      break;
    case Kind::Forall:
    case Kind::Exists:
      raw = 1 + n.name.size();
      break;
    default:
      break;
  }
  for (const auto& a : n.args) {
    h = mix(h, a->hash);
    len += a->length;
    raw += a->raw_length;
    r += a->r_count;
  }
  if (is_binder(n.kind)) {
    const Expr& b = n.args[0];
    loose = b->loose > 0 ? b->loose - 1 : 0;
    mask = b->loose_mask == ~std::uint64_t{0} ? ~std::uint64_t{0} : (b->loose_mask >> 1);
  } else if (n.kind != Kind::BVar) {
    for (const auto& a : n.args) {
      loose = std::max(loose, a->loose);
      mask |= a->loose_mask;
    }
  }
  if (n.kind != Kind::Var) n.free_names = merge_names(n.args);
  n.hash = h;
  n.length = len;
  n.raw_length = raw;
  n.r_count = r;
  n.loose = loose;
  n.loose_mask = mask;
  return std::make_shared<const Node>(std::move(n));
}

Expr node(Kind k, std::vector<Expr> args) {
  Node n;
  n.kind = k;
  n.args = std::move(args);
  return finish(std::move(n));
}

void require_term(const Expr& e, const char* where) {
  if (!is_term(e->kind)) throw SyntaxError(std::string(where) + ": expected a term");
}
void require_formula(const Expr& e, const char* where) {
  if (is_term(e->kind)) throw SyntaxError(std::string(where) + ": expected a formula");
}

Expr term_node(Kind k, std::vector<Expr> args, const char* where) {
  for (const auto& a : args) require_term(a, where);
  return node(k, std::move(args));
}

Expr formula_node(Kind k, std::vector<Expr> args, const char* where) {
  for (const auto& a : args) require_formula(a, where);
  return node(k, std::move(args));
}

}  // namespace

Expr var(std::string name) {
  Node n;
  n.kind = Kind::Var;
  n.name = std::move(name);
  return finish(std::move(n));
}

Expr bvar(std::uint32_t index, std::string hint) {
  Node n;
  n.kind = Kind::BVar;
  n.index = index;
  n.name = std::move(hint);
  return finish(std::move(n));
}

Expr zero() {
  static const Expr z = node(Kind::Zero, {});
  return z;
}
Expr one() {
  static const Expr o = succ(zero());
  return o;
}
Expr two() {
  static const Expr t = plus(one(), one());
  return t;
}

Expr succ(Expr t) { return term_node(Kind::Succ, {std::move(t)}, "S"); }
Expr plus(Expr a, Expr b) { return term_node(Kind::Add, {std::move(a), std::move(b)}, "+"); }
Expr times(Expr a, Expr b) { return term_node(Kind::Mul, {std::move(a), std::move(b)}, "*"); }
Expr ord_lit(const Ordinal& a) {
  Node n;
  n.kind = Kind::OrdLit;
  n.ordinal = std::make_shared<const Ordinal>(a);
  return finish(std::move(n));
}
Expr tower(Expr t) { return term_node(Kind::Tower, {std::move(t)}, "tower"); }
Expr oplus(Expr b, Expr g) { return term_node(Kind::Oplus, {std::move(b), std::move(g)}, "oplus"); }
Expr omul(Expr b, Expr g, Expr m) {
  return term_node(Kind::Omul, {std::move(b), std::move(g), std::move(m)}, "omul");
}
Expr fs(Expr a, Expr x) { return term_node(Kind::Fs, {std::move(a), std::move(x)}, "fs"); }

Expr eq(Expr a, Expr b) { return term_node(Kind::Eq, {std::move(a), std::move(b)}, "="); }
Expr lt(Expr a, Expr b) { return term_node(Kind::Lt, {std::move(a), std::move(b)}, "<"); }
Expr rel_r(Expr t) { return term_node(Kind::R, {std::move(t)}, "R"); }
Expr fgraph(Expr a, Expr x, Expr y) {
  return term_node(Kind::Fgraph, {std::move(a), std::move(x), std::move(y)}, "F");
}
Expr fiter(Expr b, Expr i, Expr x, Expr y) {
  return term_node(Kind::Fiter, {std::move(b), std::move(i), std::move(x), std::move(y)}, "I");
}

Expr neg(Expr a) { return formula_node(Kind::Not, {std::move(a)}, "~"); }
Expr conj(Expr a, Expr b) { return formula_node(Kind::And, {std::move(a), std::move(b)}, "&"); }
Expr disj(Expr a, Expr b) { return formula_node(Kind::Or, {std::move(a), std::move(b)}, "|"); }
Expr imp(Expr a, Expr b) { return formula_node(Kind::Imp, {std::move(a), std::move(b)}, "->"); }
Expr iff(Expr a, Expr b) { return formula_node(Kind::Iff, {std::move(a), std::move(b)}, "<->"); }

Expr make_binder(Kind k, std::string hint, Expr body) {
  if (!is_binder(k)) throw SyntaxError("make_binder: not a quantifier");
  require_formula(body, "quantifier");
  Node n;
  n.kind = k;
  n.name = std::move(hint);
  n.args = {std::move(body)};
  return finish(std::move(n));
}

Expr forall(const std::string& name, const Expr& body) {
  return make_binder(Kind::Forall, name, abstract(body, name));
}
Expr exists(const std::string& name, const Expr& body) {
  return make_binder(Kind::Exists, name, abstract(body, name));
}

Expr rebuild(const Expr& e, std::vector<Expr> args) {
  Node n;
  n.kind = e->kind;
  n.index = e->index;
  n.name = e->name;
  n.ordinal = e->ordinal;
  n.args = std::move(args);
  return finish(std::move(n));
}

Expr imp_chain(const std::vector<Expr>& premises, Expr conclusion) {
  Expr out = std::move(conclusion);
  for (auto it = premises.rbegin(); it != premises.rend(); ++it) out = imp(*it, out);
  return out;
}

bool same(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->length != b->length ||
      a->args.size() != b->args.size())
    return false;
  switch (a->kind) {
    case Kind::Var:
      if (a->name != b->name) return false;
      break;
    case Kind::BVar:
      if (a->index != b->index) return false;
      break;
    case Kind::OrdLit:
      if (*a->ordinal != *b->ordinal) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!same(a->args[i], b->args[i])) return false;
  return true;
}

std::uint64_t length(const Expr& e, CountMode mode) {
  return mode == CountMode::Normative ? e->length : e->raw_length;
}
std::uint64_t occurrences_of_r(const Expr& e) { return e->r_count; }
bool is_closed(const Expr& e) { return e->loose == 0; }

bool has_free(const Expr& e, const std::string& name) {
  const auto& v = *e->free_names;
  return std::binary_search(v.begin(), v.end(), name);
}

const std::vector<std::string>& free_vars(const Expr& e) { return *e->free_names; }

std::string fresh_name(const std::string& prefix, const std::vector<Expr>& es) {
  for (std::size_t i = 0;; ++i) {
    std::string cand = prefix + std::to_string(i);
    bool used = false;
    for (const auto& e : es) used = used || has_free(e, cand);
    if (!used) return cand;
  }
}

Expr numeral(const Natural& n) {
  if (n < 0) throw SyntaxError("numeral of a negative number");
  if (n == 0) return zero();
  if (n % 2 == 0) return times(numeral(n / 2), two());
  return plus(times(numeral((n - 1) / 2), two()), one());
}

}  // namespace slowcon::fol
