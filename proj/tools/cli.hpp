// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slowcon/fgh.hpp"

namespace slowcon::cli {

inline constexpr std::uint64_t kEnumerationCeiling = 14;
inline constexpr const char* kProfileVariable = "SLOWCON_BUDGET_PROFILE";

struct Budgets {
  std::uint64_t steps = 1'000'000;
  Natural value = Natural(1) << 64;
  std::uint64_t step_down = 1'000'000;
  std::uint64_t enumeration_cap = 12;
};

// "small", "default" or "large"; nullopt for anything else.
std::optional<Budgets> budget_profile(const std::string& name);

// Reads the profile variable; unset means "default". Throws
// std::invalid_argument for an unknown profile name.
Budgets default_budgets();

// Accepts a decimal numeral or a power "b^e".
Natural parse_natural(const std::string& text);

enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slowcon::cli
