#include <stdexcept>

#include "slowcon/hilbert.hpp"

namespace slowcon::hilbert {

using fol::Kind;

namespace {

// All terms and formulas of the slice, indexed by exact normative length.
struct Slice {
  std::vector<std::vector<Expr>> terms, formulas;

  explicit Slice(std::uint64_t max_len) : terms(max_len + 1), formulas(max_len + 1) {
    for (std::uint64_t L = 1; L <= max_len; ++L) {
      if (L == 1) {
        terms[1] = {fol::var("x"), fol::zero()};
      } else if (L >= 4) {
        for (const auto& t : terms[L - 3]) terms[L].push_back(fol::succ(t));
      }
      auto& out = formulas[L];
      for (std::uint64_t a = 1; a + 2 <= L; ++a)
        for (const auto& s : terms[a])
          for (const auto& t : terms[L - 1 - a]) out.push_back(fol::eq(s, t));
      if (L >= 2) {
        for (const auto& f : formulas[L - 1]) out.push_back(fol::neg(f));
      }
      if (L >= 3) {
        for (const auto& f : formulas[L - 2]) out.push_back(fol::forall("x", f));
      }
      for (std::uint64_t a = 1; a + 4 <= L; ++a)
        for (const auto& f : formulas[a])
          for (const auto& g : formulas[L - 3 - a]) out.push_back(fol::imp(f, g));
    }
  }
};

class Search {
 public:
  Search(const Theory& t, std::uint64_t n) : theory_(t), n_(n), goal_(contradiction()) {
    const std::uint64_t ax_cost = justification_length(Justification::axiom(""));
    if (n_ > ax_cost) {
      Slice slice(n_ - ax_cost);
      for (const auto& bucket : slice.formulas)
        for (const auto& f : bucket)
          if (auto id = theory_.classify(f)) axioms_.push_back({f, Justification::axiom(*id)});
    }
  }

  bool run() { return dfs(0); }
  HilbertProof proof() const { return {lines_}; }
  std::uint64_t explored() const { return explored_; }

 private:
  bool present(const Expr& f) const {
    for (const auto& l : lines_)
      if (fol::same(l.formula, f)) return true;
    return false;
  }

  bool extend(Line line, std::uint64_t used) {
    std::uint64_t cost = fol::length(line.formula) + justification_length(line.just);
    if (used + cost > n_ || present(line.formula)) return false;
    bool hit = fol::same(line.formula, goal_);
    lines_.push_back(std::move(line));
    if (hit || dfs(used + cost)) return true;
    lines_.pop_back();
    return false;
  }

  bool dfs(std::uint64_t used) {
    ++explored_;
    for (const auto& ax : axioms_)
      if (extend(ax, used)) return true;
    const std::size_t count = lines_.size();
    for (std::size_t j = 0; j < count; ++j) {
      const Expr major = lines_[j].formula;
      if (major->kind != Kind::Imp) continue;
      for (std::size_t i = 0; i < count; ++i)
        if (fol::same(lines_[i].formula, major->arg(0)) &&
            extend({major->arg(1), Justification::mp(i + 1, j + 1)}, used))
          return true;
    }
    for (std::size_t i = 0; i < count; ++i) {
      const Expr premise = lines_[i].formula;
      if (extend({fol::forall("x", premise), Justification::gen(i + 1, "x")}, used)) return true;
    }
    return false;
  }

  const Theory& theory_;
  std::uint64_t n_;
  Expr goal_;
  std::vector<Line> axioms_;
  std::vector<Line> lines_;
  std::uint64_t explored_ = 0;
};

}  // namespace

ConsistencyVerdict enumerate_consistency(const Theory& t, std::uint64_t n, std::uint64_t hard_cap) {
  if (n > hard_cap)
    throw std::invalid_argument("consistency search bound " + std::to_string(n) + " exceeds cap " +
                                std::to_string(hard_cap));
  Search s(t, n);
  ConsistencyVerdict v;
  v.bound = n;
  if (s.run()) v.refutation = s.proof();
  v.proofs_explored = s.explored();
  return v;
}

}  // namespace slowcon::hilbert
