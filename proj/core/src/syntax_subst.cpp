#include <unordered_map>

#include "slowcon/syntax.hpp"

namespace slowcon::fol {

namespace {

struct Key {
  const Node* n;
  std::uint32_t depth;
  bool operator==(const Key& o) const { return n == o.n && depth == o.depth; }
};
struct KeyHash {
  std::size_t operator()(const Key& k) const {
    return std::hash<const void*>{}(k.n) ^ (std::size_t{k.depth} * 0x9e3779b97f4a7c15ULL);
  }
};
using Memo = std::unordered_map<Key, Expr, KeyHash>;

template <class F>
Expr map_children(const Expr& e, std::uint32_t depth, F&& f) {
  std::uint32_t d = is_binder(e->kind) ? depth + 1 : depth;
  std::vector<Expr> args;
  args.reserve(e->args.size());
  bool changed = false;
  for (const auto& a : e->args) {
    args.push_back(f(a, d));
    changed = changed || args.back().get() != a.get();
  }
  if (!changed) return e;
  return rebuild(e, std::move(args));
}

class Lifter {
 public:
  explicit Lifter(std::uint32_t delta) : delta_(delta) {}
  Expr run(const Expr& e, std::uint32_t cutoff) {
    if (e->loose <= cutoff || delta_ == 0) return e;
    if (e->kind == Kind::BVar) return bvar(e->index + delta_, e->name);
    Key k{e.get(), cutoff};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Expr out = map_children(e, cutoff, [this](const Expr& a, std::uint32_t d) { return run(a, d); });
    memo_.emplace(k, out);
    return out;
  }

 private:
  std::uint32_t delta_;
  Memo memo_;
};

class Instantiator {
 public:
  explicit Instantiator(const Expr& t) : t_(t) {}
  Expr run(const Expr& e, std::uint32_t depth) {
    if (e->loose <= depth) return e;
    if (e->kind == Kind::BVar) {
      if (e->index == depth) return lifted(depth);
      return bvar(e->index - 1, e->name);
    }
    Key k{e.get(), depth};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Expr out = map_children(e, depth, [this](const Expr& a, std::uint32_t d) { return run(a, d); });
    memo_.emplace(k, out);
    return out;
  }

 private:
  const Expr& lifted(std::uint32_t depth) {
    auto it = lifted_.find(depth);
    if (it != lifted_.end()) return it->second;
    return lifted_.emplace(depth, lift(t_, depth)).first->second;
  }
  Expr t_;
  Memo memo_;
  std::unordered_map<std::uint32_t, Expr> lifted_;
};

class Abstracter {
 public:
  explicit Abstracter(const std::string& name) : name_(name) {}
  Expr run(const Expr& e, std::uint32_t depth) {
    if (!has_free(e, name_)) return e;
    if (e->kind == Kind::Var) return bvar(depth, name_);
    Key k{e.get(), depth};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Expr out = map_children(e, depth, [this](const Expr& a, std::uint32_t d) { return run(a, d); });
    memo_.emplace(k, out);
    return out;
  }

 private:
  const std::string& name_;
  Memo memo_;
};

class FreeSubst {
 public:
  FreeSubst(const std::string& name, const Expr& t) : name_(name), t_(t) {}
  Expr run(const Expr& e, std::uint32_t depth) {
    if (!has_free(e, name_)) return e;
    if (e->kind == Kind::Var) return depth == 0 ? t_ : lift(t_, depth);
    Key k{e.get(), depth};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Expr out = map_children(e, depth, [this](const Expr& a, std::uint32_t d) { return run(a, d); });
    memo_.emplace(k, out);
    return out;
  }

 private:
  const std::string& name_;
  Expr t_;
  Memo memo_;
};

class RSubst {
 public:
  explicit RSubst(const Expr& body) : body_(body) {}
  Expr run(const Expr& e) {
    if (e->r_count == 0) return e;
    if (e->kind == Kind::R) return instantiate(body_, e->arg(0));
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    Expr out = map_children(e, 0, [this](const Expr& a, std::uint32_t) { return run(a); });
    memo_.emplace(e.get(), out);
    return out;
  }

 private:
  Expr body_;
  std::unordered_map<const Node*, Expr> memo_;
};

}  // namespace

Expr lift(const Expr& e, std::uint32_t delta, std::uint32_t cutoff) {
  return Lifter(delta).run(e, cutoff);
}

Expr instantiate(const Expr& body, const Expr& t) { return Instantiator(t).run(body, 0); }

Expr abstract(const Expr& e, const std::string& name) { return Abstracter(name).run(e, 0); }

Expr subst_free(const Expr& e, const std::string& name, const Expr& t) {
  return FreeSubst(name, t).run(e, 0);
}

PredicateAbstract PredicateAbstract::identity() { return {"g", rel_r(var("g"))}; }

Expr PredicateAbstract::apply(const Expr& t) const { return subst_free(formula, param, t); }

Expr subst_r(const Expr& e, const PredicateAbstract& psi) {
  return RSubst(abstract(psi.formula, psi.param)).run(e);
}

struct RSubstituter::Impl {
  RSubst subst;
};

RSubstituter::RSubstituter(const PredicateAbstract& psi)
    : impl_(std::make_unique<Impl>(Impl{RSubst(abstract(psi.formula, psi.param))})) {}
RSubstituter::~RSubstituter() = default;
Expr RSubstituter::operator()(const Expr& e) { return impl_->subst.run(e); }

}  // namespace slowcon::fol
