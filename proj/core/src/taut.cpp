#include <array>
#include <unordered_map>

#include "slowcon/hilbert.hpp"

namespace slowcon::hilbert {

using fol::Kind;

namespace {

// Signed tableau. Non-branching rules are applied eagerly; a branching
// formula is only split when neither side is already decided by the atoms
// assigned so far.
class Tableau {
 public:
  using Signed = std::pair<Expr, bool>;

  bool satisfiable(std::vector<Signed> work, std::vector<Signed> betas) {
    std::size_t mark = trail_.size();
    bool r = run(work, betas);
    while (trail_.size() > mark) {
      atoms_.erase(trail_.back());
      trail_.pop_back();
    }
    return r;
  }

 private:
  // -1 unknown, 0 false, 1 true
  int eval(const Expr& e) const {
    switch (e->kind) {
      case Kind::Not: {
        int a = eval(e->arg(0));
        return a < 0 ? -1 : 1 - a;
      }
      case Kind::And: {
        int a = eval(e->arg(0));
        if (a == 0) return 0;
        int b = eval(e->arg(1));
        if (b == 0) return 0;
        return a == 1 && b == 1 ? 1 : -1;
      }
      case Kind::Or: {
        int a = eval(e->arg(0));
        if (a == 1) return 1;
        int b = eval(e->arg(1));
        if (b == 1) return 1;
        return a == 0 && b == 0 ? 0 : -1;
      }
      case Kind::Imp: {
        int a = eval(e->arg(0));
        if (a == 0) return 1;
        int b = eval(e->arg(1));
        if (b == 1) return 1;
        return a == 1 && b == 0 ? 0 : -1;
      }
      case Kind::Iff: {
        int a = eval(e->arg(0));
        if (a < 0) return -1;
        int b = eval(e->arg(1));
        if (b < 0) return -1;
        return a == b ? 1 : 0;
      }
      default: {
        auto it = atoms_.find(e);
        return it == atoms_.end() ? -1 : (it->second ? 1 : 0);
      }
    }
  }

  static std::array<std::vector<Signed>, 2> branches(const Signed& s) {
    const Expr& e = s.first;
    const Expr& a = e->arg(0);
    const Expr& b = e->arg(1);
    switch (e->kind) {
      case Kind::And: return {{{{a, false}}, {{b, false}}}};  // signed false
      case Kind::Or: return {{{{a, true}}, {{b, true}}}};
      case Kind::Imp: return {{{{a, false}}, {{b, true}}}};
      default:  // Iff
        if (s.second) return {{{{a, true}, {b, true}}, {{a, false}, {b, false}}}};
        return {{{{a, true}, {b, false}}, {{a, false}, {b, true}}}};
    }
  }

  // 1 if every item already holds, 0 if some item is refuted, -1 otherwise
  int branch_status(const std::vector<Signed>& br) const {
    bool all = true;
    for (const auto& [e, sign] : br) {
      int v = eval(e);
      if (v < 0) {
        all = false;
      } else if ((v == 1) != sign) {
        return 0;
      }
    }
    return all ? 1 : -1;
  }

  bool assign(const Expr& atom, bool v) {
    auto [it, inserted] = atoms_.emplace(atom, v);
    if (!inserted) return it->second == v;
    trail_.push_back(atom);
    return true;
  }

  bool run(std::vector<Signed>& work, std::vector<Signed>& betas) {
    for (;;) {
      while (!work.empty()) {
        auto [e, s] = std::move(work.back());
        work.pop_back();
        switch (e->kind) {
          case Kind::Not: work.emplace_back(e->arg(0), !s); break;
          case Kind::And:
            if (s) {
              work.emplace_back(e->arg(0), true);
              work.emplace_back(e->arg(1), true);
            } else {
              betas.emplace_back(e, s);
            }
            break;
          case Kind::Or:
            if (!s) {
              work.emplace_back(e->arg(0), false);
              work.emplace_back(e->arg(1), false);
            } else {
              betas.emplace_back(e, s);
            }
            break;
          case Kind::Imp:
            if (!s) {
              work.emplace_back(e->arg(0), true);
              work.emplace_back(e->arg(1), false);
            } else {
              betas.emplace_back(e, s);
            }
            break;
          case Kind::Iff: betas.emplace_back(e, s); break;
          default:
            if (!assign(e, s)) return false;
        }
      }
      bool forced = false;
      for (std::size_t i = 0; i < betas.size() && !forced; ++i) {
        auto br = branches(betas[i]);
        int s0 = branch_status(br[0]), s1 = branch_status(br[1]);
        if (s0 == 1 || s1 == 1) {
          betas[i] = betas.back();
          betas.pop_back();
          --i;
          continue;
        }
        if (s0 == 0 && s1 == 0) return false;
        if (s0 == 0 || s1 == 0) {
          work = s0 == 0 ? br[1] : br[0];
          betas[i] = betas.back();
          betas.pop_back();
          forced = true;
        }
      }
      if (forced) continue;
      if (betas.empty()) return true;
      Signed pick = betas.back();
      betas.pop_back();
      auto br = branches(pick);
      for (auto& side : br)
        if (satisfiable(side, betas)) return true;
      return false;
    }
  }

  std::unordered_map<Expr, bool, fol::ExprHash, fol::ExprEq> atoms_;
  std::vector<Expr> trail_;
};

}  // namespace

bool is_tautology(const Expr& f) {
  if (fol::is_term(f->kind)) return false;
  Tableau t;
  return !t.satisfiable({{f, false}}, {});
}

}  // namespace slowcon::hilbert
