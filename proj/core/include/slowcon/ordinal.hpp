// Ordinal notations below and including epsilon_0 in Cantor normal form.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slowcon {

using Natural = boost::multiprecision::cpp_int;

class OrdinalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Either the symbol eps0 or a finite sum  w^(e_1)*c_1 + ... + w^(e_m)*c_m
// with e_1 > ... > e_m and every c_i >= 1. The empty sum is 0. eps0 only
// ever appears at top level.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // zero
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal zero() { return {}; }
  static Ordinal natural(const Natural& n);
  static Ordinal omega();
  static Ordinal epsilon_zero();
  // Validates the CNF invariants; throws OrdinalError otherwise.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const { return !eps0_ && terms_.empty(); }
  bool is_epsilon_zero() const { return eps0_; }
  bool is_successor() const;
  bool is_limit() const;  // eps0 counts as a limit
  bool is_natural() const;
  std::optional<Natural> as_natural() const;

  const std::vector<Term>& terms() const { return terms_; }
  // Smallest/largest exponent; requires a nonzero, non-eps0 value.
  const Ordinal& last_exponent() const;
  const Ordinal& leading_exponent() const;

  // Nesting depth of exponents (0 for naturals, 1 for omega-polynomials, ...).
  std::size_t height() const;

  std::string to_string() const;
  static Ordinal parse(std::string_view text);

 private:
  bool eps0_ = false;
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Natural coefficient;
};

enum class Order { Less, Equal, Greater };

Order compare(const Ordinal& a, const Ordinal& b);
inline bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Order::Equal; }
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }
inline bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Order::Less; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return b < a; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return !(b < a); }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return !(a < b); }

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal omega_power(const Ordinal& a);
// a + w^g * c, the building block of CNF; c >= 1.
Ordinal add_power(const Ordinal& a, const Ordinal& g, const Natural& c = 1);

inline constexpr std::size_t kDefaultTowerCap = 64;

// w^a_n: w^a_0 = a, w^a_{n+1} = w^(w^a_n). Throws OrdinalError when n
// exceeds depth_cap.
Ordinal omega_tower(const Ordinal& a, std::size_t n, std::size_t depth_cap = kDefaultTowerCap);
// w_n = w^1_n
inline Ordinal omega_n(std::size_t n) { return omega_tower(Ordinal::natural(1), n); }

// {a}(n) including the clauses {0}(n) = n, {a+1}(n) = a, {eps0}(n) = w_{n+1}.
Ordinal fund_seq(const Ordinal& a, const Natural& n);

// For a successor a+1 returns a.
Ordinal predecessor(const Ordinal& a);

struct DescentPath {
  Natural k;
  std::vector<Ordinal> steps;  // steps.front() = b, steps.back() = a
};

struct Reached { DescentPath path; };
struct NotOnPath {};
struct BudgetExhausted { std::uint64_t steps_taken = 0; };
using StepDownResult = std::variant<Reached, NotOnPath, BudgetExhausted>;

// Walks b, {b}(k), {{b}(k)}(k), ... until it meets a. a == b yields the
// trivial one-element path. Requires a <= b.
StepDownResult step_down(const Ordinal& b, const Ordinal& a, const Natural& k,
                         std::uint64_t step_budget);

// a <_k b, strict: a is met after at least one step.
bool below_k(const Ordinal& a, const Ordinal& b, const Natural& k, std::uint64_t step_budget);
// a <_k b or a == b.
bool below_or_equal_k(const Ordinal& a, const Ordinal& b, const Natural& k,
                      std::uint64_t step_budget);

// Decides whether a lies on the k-descent path from b (reflexively) by
// recursion on the notations instead of walking the path. Agrees with
// step_down wherever the latter terminates, and also answers instances whose
// explicit path is far too long to enumerate.
bool on_descent_path(const Ordinal& b, const Ordinal& a, const Natural& k);

// Every exponent of b is >= every exponent of a. Rejects eps0.
bool mesh(const Ordinal& b, const Ordinal& a);

}  // namespace slowcon
