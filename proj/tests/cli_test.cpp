#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "slowcon/hilbert.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kGolden = SLOWCON_GOLDEN_DIR;
const fs::path kFixtures = SLOWCON_FIXTURE_DIR;

struct Case {
  std::string name;
  int exit = 0;
  std::vector<std::string> args;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(' '), e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

fs::path scratch() {
  fs::path p = fs::temp_directory_path() / "slowcon_cli_test";
  fs::create_directories(p);
  return p;
}

std::vector<Case> cases() {
  std::ifstream in(kGolden / "cases.txt");
  std::vector<Case> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto p1 = line.find('|'), p2 = line.find('|', p1 + 1);
    Case c{trim(line.substr(0, p1)), std::stoi(trim(line.substr(p1 + 1, p2 - p1 - 1))), {}};
    std::istringstream words(line.substr(p2 + 1));
    for (std::string w; words >> w;) {
      for (auto [tok, dir] : {std::pair{"@FIX@", kFixtures.string()}, std::pair{"@TMP@", scratch().string()}})
        if (auto at = w.find(tok); at != std::string::npos) w.replace(at, std::string(tok).size(), dir);
      c.args.push_back(w);
    }
    out.push_back(c);
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Golden) {
  ::unsetenv(slowcon::cli::kProfileVariable);
  const bool update = std::getenv("SLOWCON_UPDATE_GOLDEN") != nullptr;
  auto all = cases();
  ASSERT_GE(all.size(), 20u);
  for (const auto& c : all) {
    std::ostringstream out, err;
    int code = slowcon::cli::run(c.args, out, err);
    EXPECT_EQ(code, c.exit) << c.name << ": " << err.str();
    fs::path expect = kGolden / (c.name + ".out");
    if (update) {
      std::ofstream(expect, std::ios::binary) << out.str();
      continue;
    }
    ASSERT_TRUE(fs::exists(expect)) << c.name;
    EXPECT_EQ(out.str(), slurp(expect)) << c.name;
  }
}

TEST(Cli, Deterministic) {
  for (const auto& c : cases()) {
    if (c.name.rfind("measure", 0) == 0) continue;  // slow; covered by Golden
    std::ostringstream a, b, ea, eb;
    slowcon::cli::run(c.args, a, ea);
    slowcon::cli::run(c.args, b, eb);
    EXPECT_EQ(a.str(), b.str()) << c.name;
  }
}

// gen-ti n --out p && check-proof p
TEST(Cli, GenerateThenCheck) {
  std::string file = (scratch() / "ti2.hpf").string();
  std::ostringstream out, err;
  ASSERT_EQ(slowcon::cli::run({"gen-ti", "2", "--out", file}, out, err), 0) << err.str();
  std::ostringstream out2;
  EXPECT_EQ(slowcon::cli::run({"check-proof", file}, out2, err), 0) << err.str();
  std::ifstream in(file);
  auto p = slowcon::hilbert::read_proof(in);
  EXPECT_NE(out2.str().find("\"lines\":" + std::to_string(p.lines.size())), std::string::npos);
}

TEST(Cli, BudgetProfile) {
  ::setenv(slowcon::cli::kProfileVariable, "small", 1);
  std::ostringstream out, err;
  EXPECT_EQ(slowcon::cli::run({"fgh", "eval", "2", "2"}, out, err), 0);
  EXPECT_NE(out.str().find("\"steps\":10000"), std::string::npos) << out.str();
  ::setenv(slowcon::cli::kProfileVariable, "nonsense", 1);
  EXPECT_EQ(slowcon::cli::run({"fgh", "eval", "2", "2"}, out, err), 2);
  ::unsetenv(slowcon::cli::kProfileVariable);
}

TEST(Cli, Numbers) {
  EXPECT_EQ(slowcon::cli::parse_natural("2^10"), 1024);
  EXPECT_EQ(slowcon::cli::parse_natural("17"), 17);
  EXPECT_THROW(slowcon::cli::parse_natural("-1"), std::invalid_argument);
  EXPECT_THROW(slowcon::cli::parse_natural("2^"), std::invalid_argument);
}
