#include "slowcon/ordinal.hpp"

#include <cctype>
#include <sstream>

namespace slowcon {

Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal Ordinal::natural(const Natural& n) {
  if (n < 0) throw OrdinalError("negative natural");
  Ordinal r;
  if (n > 0) r.terms_.push_back(Term{Ordinal{}, n});
  return r;
}

Ordinal Ordinal::omega() {
  Ordinal r;
  r.terms_.push_back(Term{natural(1), 1});
  return r;
}

Ordinal Ordinal::epsilon_zero() {
  Ordinal r;
  r.eps0_ = true;
  return r;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw OrdinalError("coefficient must be positive");
    if (terms[i].exponent.is_epsilon_zero()) throw OrdinalError("eps0 cannot be an exponent");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw OrdinalError("exponents must be strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_successor() const {
  return !eps0_ && !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return eps0_ || (!terms_.empty() && !is_successor()); }

bool Ordinal::is_natural() const {
  return !eps0_ && (terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()));
}

std::optional<Natural> Ordinal::as_natural() const {
  if (!is_natural()) return std::nullopt;
  return terms_.empty() ? Natural(0) : terms_[0].coefficient;
}

const Ordinal& Ordinal::last_exponent() const {
  if (eps0_ || terms_.empty()) throw OrdinalError("last_exponent of 0 or eps0");
  return terms_.back().exponent;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (eps0_ || terms_.empty()) throw OrdinalError("leading_exponent of 0 or eps0");
  return terms_.front().exponent;
}

std::size_t Ordinal::height() const {
  if (eps0_) return SIZE_MAX;
  std::size_t h = 0;
  for (const auto& t : terms_) {
    if (!t.exponent.is_zero()) h = std::max(h, t.exponent.height() + 1);
  }
  return h;
}

Order compare(const Ordinal& a, const Ordinal& b) {
  if (a.is_epsilon_zero() || b.is_epsilon_zero()) {
    if (a.is_epsilon_zero() && b.is_epsilon_zero()) return Order::Equal;
    return a.is_epsilon_zero() ? Order::Greater : Order::Less;
  }
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    Order e = compare(ta[i].exponent, tb[i].exponent);
    if (e != Order::Equal) return e;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient < tb[i].coefficient ? Order::Less : Order::Greater;
  }
  if (ta.size() == tb.size()) return Order::Equal;
  return ta.size() < tb.size() ? Order::Less : Order::Greater;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (a.is_epsilon_zero() || b.is_epsilon_zero()) throw OrdinalError("add: eps0 operand");
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      if (t.exponent == lead) out.push_back(t);  // merged below
      break;
    }
  }
  auto it = b.terms().begin();
  if (!out.empty() && out.back().exponent == lead) {
    out.back().coefficient += it->coefficient;
    ++it;
  }
  out.insert(out.end(), it, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal omega_power(const Ordinal& a) {
  if (a.is_epsilon_zero()) throw OrdinalError("omega_power: eps0 operand");
  return Ordinal::from_terms({Ordinal::Term{a, 1}});
}

Ordinal add_power(const Ordinal& a, const Ordinal& g, const Natural& c) {
  if (g.is_epsilon_zero()) throw OrdinalError("add_power: eps0 exponent");
  return add(a, Ordinal::from_terms({Ordinal::Term{g, c}}));
}

Ordinal omega_tower(const Ordinal& a, std::size_t n, std::size_t depth_cap) {
  if (a.is_epsilon_zero()) throw OrdinalError("omega_tower: eps0 base");
  if (n > depth_cap) throw OrdinalError("omega_tower: depth cap exceeded");
  Ordinal r = a;
  for (std::size_t i = 0; i < n; ++i) r = omega_power(r);
  return r;
}

Ordinal predecessor(const Ordinal& a) {
  if (!a.is_successor()) throw OrdinalError("predecessor of a non-successor");
  auto terms = a.terms();
  if (terms.back().coefficient == 1) {
    terms.pop_back();
  } else {
    terms.back().coefficient -= 1;
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal fund_seq(const Ordinal& a, const Natural& n) {
  if (a.is_zero()) return Ordinal::natural(n);
  if (a.is_epsilon_zero()) {
    if (n + 1 > kDefaultTowerCap) throw OrdinalError("fund_seq(eps0): tower depth cap exceeded");
    return omega_n(static_cast<std::size_t>(n + 1));
  }
  if (a.is_successor()) return predecessor(a);
  // a = beta + w^gamma with gamma > 0
  auto terms = a.terms();
  Ordinal gamma = terms.back().exponent;
  if (terms.back().coefficient == 1) {
    terms.pop_back();
  } else {
    terms.back().coefficient -= 1;
  }
  Ordinal beta = Ordinal::from_terms(std::move(terms));
  if (gamma.is_limit()) return add(beta, omega_power(fund_seq(gamma, n)));
  return add_power(beta, predecessor(gamma), n + 1);
}

StepDownResult step_down(const Ordinal& b, const Ordinal& a, const Natural& k,
                         std::uint64_t step_budget) {
  DescentPath path{k, {b}};
  Ordinal cur = b;
  std::uint64_t steps = 0;
  while (true) {
    Order c = compare(cur, a);
    if (c == Order::Equal) return Reached{std::move(path)};
    if (c == Order::Less || cur.is_zero()) return NotOnPath{};
    if (steps == step_budget) return BudgetExhausted{steps};
    cur = fund_seq(cur, k);
    path.steps.push_back(cur);
    ++steps;
  }
}

bool below_k(const Ordinal& a, const Ordinal& b, const Natural& k, std::uint64_t step_budget) {
  if (!(a < b)) return false;
  return std::holds_alternative<Reached>(step_down(b, a, k, step_budget));
}

bool below_or_equal_k(const Ordinal& a, const Ordinal& b, const Natural& k,
                      std::uint64_t step_budget) {
  return a == b || below_k(a, b, k, step_budget);
}

namespace {

// Splits x = prefix + w^g (one copy of the last term).
std::pair<Ordinal, Ordinal> split_last(const Ordinal& x) {
  auto terms = x.terms();
  Ordinal g = terms.back().exponent;
  if (terms.back().coefficient == 1) {
    terms.pop_back();
  } else {
    terms.back().coefficient -= 1;
  }
  return {Ordinal::from_terms(std::move(terms)), g};
}

// x = prefix + rest with prefix's terms copied verbatim at the front of x.
Ordinal strip_prefix(const Ordinal& x, const Ordinal& prefix) {
  const auto& tx = x.terms();
  const auto& tp = prefix.terms();
  std::vector<Ordinal::Term> rest(tx.begin() + static_cast<std::ptrdiff_t>(tp.size()), tx.end());
  return Ordinal::from_terms(std::move(rest));
}

bool reach(const Ordinal& b, const Ordinal& a, const Natural& k);

// a on the path from w^g, with 0 < a < w^g.
bool reach_power(const Ordinal& g, const Ordinal& a, const Natural& k) {
  const auto& lead = a.terms().front();
  const Ordinal& e = lead.exponent;
  const Natural& c = lead.coefficient;
  bool pure = a.terms().size() == 1;
  if (pure && c == 1) return reach(g, e, k);
  // The segment below w^(e+1) visits w^e*(k+1) and w^e*j + x for j <= k and
  // x on the path from w^e.
  if (!reach(g, add(e, Ordinal::natural(1)), k)) return false;
  if (pure) return c <= k + 1;
  if (c > k) return false;
  return reach_power(e, strip_prefix(a, Ordinal::from_terms({lead})), k);
}

bool reach(const Ordinal& b, const Ordinal& a, const Natural& k) {
  Order o = compare(a, b);
  if (o == Order::Equal) return true;
  if (o == Order::Greater || b.is_zero()) return false;
  if (b.is_epsilon_zero()) {
    return reach(fund_seq(b, k), a, k);
  }
  auto [prefix, g] = split_last(b);
  if (g.is_zero()) return reach(prefix, a, k);
  Order p = compare(a, prefix);
  if (p == Order::Less) return reach(prefix, a, k);
  if (p == Order::Equal) return true;
  return reach_power(g, strip_prefix(a, prefix), k);
}

}  // namespace

bool on_descent_path(const Ordinal& b, const Ordinal& a, const Natural& k) { return reach(b, a, k); }

bool mesh(const Ordinal& b, const Ordinal& a) {
  if (b.is_epsilon_zero() || a.is_epsilon_zero()) throw OrdinalError("mesh: eps0 operand");
  if (b.is_zero() || a.is_zero()) return true;
  return b.last_exponent() >= a.leading_exponent();
}

// ---- text ----------------------------------------------------------------

std::string Ordinal::to_string() const {
  if (eps0_) return "eps0";
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    const auto& t = terms_[i];
    if (t.exponent.is_zero()) {
      os << t.coefficient;
      continue;
    }
    os << 'w';
    if (t.exponent != natural(1)) os << "^(" << t.exponent.to_string() << ')';
    if (t.coefficient != 1) os << '*' << t.coefficient;
  }
  return os.str();
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  Ordinal parse_all() {
    Ordinal r = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw OrdinalError("ordinal parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Natural number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return Natural(std::string(s_.substr(start, pos_ - start)));
  }

  Ordinal parse_sum() {
    skip_ws();
    if (s_.substr(pos_, 4) == "eps0") {
      pos_ += 4;
      return Ordinal::epsilon_zero();
    }
    std::vector<Ordinal::Term> terms;
    do {
      terms.push_back(parse_term());
    } while (eat('+'));
    if (terms.size() == 1 && terms[0].coefficient == 0 && terms[0].exponent.is_zero()) return {};
    for (const auto& t : terms)
      if (t.coefficient == 0) fail("zero summand in a sum");
    return Ordinal::from_terms(std::move(terms));
  }

  Ordinal::Term parse_term() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'w') {
      ++pos_;
      Ordinal e = Ordinal::natural(1);
      if (eat('^')) {
        if (!eat('(')) fail("expected '('");
        e = parse_sum();
        if (e.is_epsilon_zero()) fail("eps0 as exponent");
        if (!eat(')')) fail("expected ')'");
      }
      Natural c = 1;
      if (eat('*')) c = number();
      if (c == 0) fail("zero coefficient");
      return {std::move(e), c};
    }
    return {Ordinal{}, number()};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).parse_all(); }

}  // namespace slowcon
