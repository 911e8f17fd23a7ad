#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "slowcon/gentzen.hpp"
#include "slowcon/hilbert.hpp"
#include "slowcon/infinitary.hpp"
#include "slowcon/ordinal.hpp"

namespace slowcon::cli {

using json = nlohmann::ordered_json;

std::optional<Budgets> budget_profile(const std::string& name) {
  if (name == "small") return Budgets{10'000, Natural(1) << 32, 10'000, 8};
  if (name == "default") return Budgets{};
  if (name == "large") return Budgets{100'000'000, Natural(1) << 4096, 100'000'000, kEnumerationCeiling};
  return std::nullopt;
}

Budgets default_budgets() {
  const char* v = std::getenv(kProfileVariable);
  std::string name = v && *v ? v : "default";
  auto b = budget_profile(name);
  if (!b) throw std::invalid_argument("unknown budget profile '" + name + "' in " + kProfileVariable);
  return *b;
}

Natural parse_natural(const std::string& text) {
  auto digits = [](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("not a natural number: '" + s + "'");
    return Natural(s);
  };
  auto caret = text.find('^');
  if (caret == std::string::npos) return digits(text);
  Natural base = digits(text.substr(0, caret));
  Natural exp = digits(text.substr(caret + 1));
  if (exp > 1'000'000) throw std::invalid_argument("exponent too large: " + text);
  return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
}

namespace {

std::string str(const Natural& n) { return n.str(); }

std::string power_text(const Natural& n) {
  if (n > 0 && (n & (n - 1)) == 0) return "2^" + std::to_string(boost::multiprecision::msb(n));
  return n.str();
}

json budget_json(const Budgets& b) {
  return {{"steps", b.steps}, {"value", power_text(b.value)}, {"step_down", b.step_down},
          {"enumeration_cap", b.enumeration_cap}};
}

fol::CountMode count_mode(const std::string& s) {
  return s == "raw" ? fol::CountMode::Raw : fol::CountMode::Normative;
}

std::string path_text(const DescentPath& p) {
  std::string s;
  for (std::size_t i = 0; i < p.steps.size(); ++i) s += (i ? " > " : "") + p.steps[i].to_string();
  return s;
}

json outcome_json(const EvalOutcome& r) {
  json j{{"outcome", to_string(r.kind)}};
  if (r.converged()) j["value"] = str(r.value);
  j["steps_used"] = r.steps_used;
  return j;
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << body;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Thrown by handlers for failures that are not usage errors.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct State {
  Budgets budgets;
  std::string count = "normative";
  std::string format;
  std::string out_path;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  int status = kOk;
  // positional and option storage
  std::string a, b, n, value_text, file, theory = "pa-o-f", target = "ti", mu = "w", hierarchy = "surrogate";
  unsigned gen_n = 0, from = 0, to = 0;
  bool timings = false;
  std::uint64_t max_symbols = 0, walk_steps = 10'000;
};

void add_budget_options(CLI::App* c, State& s) {
  c->add_option("--max-steps", s.budgets.steps, "evaluation step budget")->check(CLI::PositiveNumber);
  c->add_option("--step-budget", s.budgets.step_down, "step-down walk budget")->check(CLI::PositiveNumber);
}

void add_value_option(CLI::App* c, std::string& value_text) {
  c->add_option("--max-value", value_text, "magnitude ceiling, decimal or b^e");
}

void apply_value(State& s, const std::string& value_text) {
  if (value_text.empty()) return;
  s.budgets.value = parse_natural(value_text);
  if (s.budgets.value == 0) throw std::invalid_argument("--max-value must be positive");
}

void ordinal_commands(CLI::App& app, State& s) {
  auto* ord = app.add_subcommand("ordinal", "ordinal notation calculator")->require_subcommand(1);

  auto* parse = ord->add_subcommand("parse", "print the canonical form");
  parse->add_option("a", s.a)->required();
  parse->callback([&s] { *s.out << Ordinal::parse(s.a).to_string() << "\n"; });

  auto* cmp = ord->add_subcommand("compare", "print <, = or >");
  cmp->add_option("a", s.a)->required();
  cmp->add_option("b", s.b)->required();
  cmp->callback([&s] {
    Order o = compare(Ordinal::parse(s.a), Ordinal::parse(s.b));
    *s.out << (o == Order::Less ? "<" : o == Order::Equal ? "=" : ">") << "\n";
  });

  auto* fs = ord->add_subcommand("fundseq", "fundamental sequence {a}(n)");
  fs->add_option("a", s.a)->required();
  fs->add_option("n", s.n)->required();
  fs->callback([&s] { *s.out << fund_seq(Ordinal::parse(s.a), parse_natural(s.n)).to_string() << "\n"; });

  auto* sd = ord->add_subcommand("stepdown", "k-descent path from b to a");
  sd->add_option("b", s.b)->required();
  sd->add_option("a", s.a)->required();
  sd->add_option("k", s.n)->required();
  add_budget_options(sd, s);
  sd->callback([&s] {
    Ordinal hi = Ordinal::parse(s.b), lo = Ordinal::parse(s.a);
    if (hi < lo) throw std::invalid_argument("stepdown needs a <= b");
    auto r = step_down(hi, lo, parse_natural(s.n), s.budgets.step_down);
    if (auto* p = std::get_if<Reached>(&r)) {
      *s.out << path_text(p->path) << "\n";
    } else if (std::holds_alternative<NotOnPath>(r)) {
      *s.out << "not on path\n";
      s.status = kVerificationFailed;
    } else {
      *s.out << "budget exhausted after " << std::get<BudgetExhausted>(r).steps_taken << " steps\n";
      s.status = kVerificationFailed;
    }
  });

  auto* me = ord->add_subcommand("mesh", "every exponent of b >= every exponent of a");
  me->add_option("b", s.b)->required();
  me->add_option("a", s.a)->required();
  me->callback([&s] { *s.out << (mesh(Ordinal::parse(s.b), Ordinal::parse(s.a)) ? "true" : "false") << "\n"; });
}

void fgh_commands(CLI::App& app, State& s) {
  auto* fgh = app.add_subcommand("fgh", "fast-growing hierarchy")->require_subcommand(1);

  auto emit = [&s](json j, const std::string& text) {
    if (s.format == "text") {
      *s.out << text << "\n";
      return;
    }
    j["budget"] = budget_json(s.budgets);
    *s.out << j.dump() << "\n";
  };
  auto text_of = [](const EvalOutcome& r) {
    return to_string(r.kind) + (r.converged() ? " " + r.value.str() : "");
  };

  auto* ev = fgh->add_subcommand("eval", "F_a(n) under a budget");
  ev->add_option("a", s.a)->required();
  ev->add_option("n", s.n)->required();
  add_budget_options(ev, s);
  add_value_option(ev, s.value_text);
  ev->add_option("--format", s.format)->check(CLI::IsMember({"json", "text"}));
  ev->callback([&s, emit, text_of] {
    apply_value(s, s.value_text);
    EvalOutcome r = fgh_eval(Ordinal::parse(s.a), parse_natural(s.n), {s.budgets.steps, s.budgets.value});
    json j{{"ordinal", Ordinal::parse(s.a).to_string()}, {"n", s.n}};
    j.update(outcome_json(r));
    emit(j, text_of(r));
  });

  auto* fs = fgh->add_subcommand("feps-star", "F_{w_y}(x) with y the slow inverse of x");
  fs->add_option("x", s.n)->required();
  add_budget_options(fs, s);
  add_value_option(fs, s.value_text);
  fs->add_option("--format", s.format)->check(CLI::IsMember({"json", "text"}));
  fs->callback([&s, emit, text_of] {
    apply_value(s, s.value_text);
    EvalOutcome r = feps_star(parse_natural(s.n), {s.budgets.steps, s.budgets.value});
    json j{{"x", s.n}};
    j.update(outcome_json(r));
    emit(j, text_of(r));
  });

  auto* inv = fgh->add_subcommand("inverse", "largest z <= x with F_eps0(z) <= x");
  inv->add_option("x", s.n)->required();
  inv->add_option("--format", s.format)->check(CLI::IsMember({"json", "text"}));
  inv->callback([&s, emit] {
    Natural v = feps_inverse(parse_natural(s.n));
    emit(json{{"x", s.n}, {"value", str(v)}}, v.str());
  });
}

json proof_summary(const hilbert::HilbertProof& p, const State& s) {
  return {{"lines", p.lines.size()}, {"symbols", hilbert::proof_length(p, count_mode(s.count))},
          {"counting", s.count}};
}

void generation_commands(CLI::App& app, State& s) {
  for (const char* name : {"gen-ti", "gen-feps"}) {
    bool ti = std::string(name) == "gen-ti";
    auto* g = app.add_subcommand(name, ti ? "proof of transfinite induction up to tower(n)"
                                          : "proof that F_eps0(n) is defined");
    g->add_option("n", s.gen_n)->required();
    g->add_option("--out", s.out_path, "proof file; without it the proof goes to stdout");
    g->add_option("--count", s.count)->check(CLI::IsMember({"normative", "raw"}));
    g->callback([&s, ti] {
      hilbert::HilbertProof p = ti ? gentzen::gen_ti(s.gen_n) : gentzen::gen_feps_total(s.gen_n);
      std::string theory = ti ? "pa-o" : "pa-o-f";
      auto verdict = hilbert::check(p, *hilbert::theory_by_id(theory));
      std::ostringstream body;
      hilbert::write_proof(body, p);
      if (s.out_path.empty()) {
        *s.out << body.str();
      } else {
        write_text_file(s.out_path, body.str());
        json j{{"target", ti ? "transfinite-induction" : "feps-total"}, {"n", s.gen_n}, {"theory", theory}};
        j.update(proof_summary(p, s));
        j["accepted"] = verdict.accepted;
        *s.out << j.dump() << "\n";
      }
      if (!verdict.accepted)
        throw VerificationFailure("generated proof rejected at line " + std::to_string(verdict.line) + ": " +
                                  verdict.reason);
    });
  }
}

void check_command(CLI::App& app, State& s) {
  auto* c = app.add_subcommand("check-proof", "check a proof file against a theory");
  c->add_option("file", s.file)->required();
  c->add_option("--theory", s.theory)->check(CLI::IsMember(hilbert::theory_ids()));
  c->add_option("--count", s.count)->check(CLI::IsMember({"normative", "raw"}));
  c->callback([&s] {
    std::istringstream in(read_text_file(s.file));
    hilbert::HilbertProof p = hilbert::read_proof(in);
    auto r = hilbert::check(p, *hilbert::theory_by_id(s.theory));
    json j{{"theory", s.theory}, {"accepted", r.accepted}};
    if (!r.accepted) {
      j["line"] = r.line;
      j["reason"] = r.reason;
    }
    j.update(proof_summary(p, s));
    *s.out << j.dump() << "\n";
    if (!r.accepted) s.status = kVerificationFailed;
  });
}

void measure_command(CLI::App& app, State& s) {
  auto* m = app.add_subcommand("measure", "size table of generated proofs");
  m->add_option("--from", s.from)->required();
  m->add_option("--to", s.to)->required();
  m->add_option("--target", s.target)->check(CLI::IsMember({"ti", "feps"}));
  m->add_option("--format", s.format)->check(CLI::IsMember({"json", "csv"}));
  m->add_flag("--timings", s.timings, "include wall-clock columns (not reproducible)");
  m->callback([&s] {
    if (s.to < s.from) throw std::invalid_argument("--to must be >= --from");
    std::vector<unsigned> ns;
    for (unsigned i = s.from; i <= s.to; ++i) ns.push_back(i);
    auto t = s.target == "ti" ? gentzen::Target::TransfiniteInduction : gentzen::Target::FepsTotal;
    gentzen::SizeReport rep;
    try {
      rep = gentzen::size_report(t, ns);
    } catch (const std::logic_error& e) {
      throw VerificationFailure(e.what());
    }
    auto fixed = [](double d) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(6) << d;
      return os.str();
    };
    if (s.format == "csv") {
      *s.out << "# target=" << s.target << " counting=normative exponent=" << fixed(rep.exponent)
             << " constant=" << fixed(rep.constant) << "\n";
      *s.out << "n,lines,symbols,accepted,naive_r_count,naive_length" << (s.timings ? ",build_s,check_s" : "")
             << "\n";
      for (const auto& r : rep.rows) {
        *s.out << r.n << ',' << r.lines << ',' << r.symbols << ',' << (r.accepted ? 1 : 0) << ','
               << r.naive_r_count << ',' << r.naive_length;
        if (s.timings) *s.out << ',' << fixed(r.build_seconds) << ',' << fixed(r.check_seconds);
        *s.out << "\n";
      }
      return;
    }
    json rows = json::array();
    for (const auto& r : rep.rows) {
      json row{{"n", r.n},           {"lines", r.lines},
               {"symbols", r.symbols}, {"accepted", r.accepted},
               {"naive_r_count", r.naive_r_count}, {"naive_length", r.naive_length}};
      if (s.timings) {
        row["build_seconds"] = r.build_seconds;
        row["check_seconds"] = r.check_seconds;
      }
      rows.push_back(row);
    }
    json j{{"target", s.target}, {"counting", "normative"}, {"exponent", fixed(rep.exponent)},
           {"constant", fixed(rep.constant)}, {"rows", rows}};
    *s.out << j.dump() << "\n";
  });
}

void consistency_command(CLI::App& app, State& s) {
  auto* c = app.add_subcommand("consistency-search", "exhaustive search for a short refutation");
  c->add_option("--theory", s.theory)->required()->check(CLI::IsMember(hilbert::theory_ids()));
  c->add_option("--max-symbols", s.max_symbols)->required();
  c->add_option("--hard-cap", s.budgets.enumeration_cap)
      ->check(CLI::Range(std::uint64_t{1}, kEnumerationCeiling));
  c->callback([&s] {
    auto v = hilbert::enumerate_consistency(*hilbert::theory_by_id(s.theory), s.max_symbols, s.budgets.enumeration_cap);
    json j{{"theory", s.theory},
           {"verdict", v.refutation ? "Refutation" : "NoRefutationUpTo"},
           {"bound", v.bound},
           {"proofs_explored", v.proofs_explored},
           {"counting", "normative"},
           {"hard_cap", s.budgets.enumeration_cap}};
    if (v.refutation) {
      std::ostringstream os;
      hilbert::write_proof(os, *v.refutation);
      j["length"] = hilbert::proof_length(*v.refutation);
      j["proof"] = os.str();
    }
    *s.out << j.dump() << "\n";
  });
}

void reduce_command(CLI::App& app, State& s) {
  auto* r = app.add_subcommand("reduce", "follow a false sequent through an infinitary proof term");
  r->add_option("file", s.file)->required();
  r->add_option("--mu", s.mu, "offset ordinal of the bounding hierarchy");
  r->add_option("--walk-steps", s.walk_steps, "maximum reduction steps")->check(CLI::PositiveNumber);
  r->add_option("--hierarchy", s.hierarchy)->check(CLI::IsMember({"surrogate", "fast-growing"}));
  r->add_option("--out", s.out_path, "trace file; without it the trace goes to stdout");
  add_budget_options(r, s);
  r->callback([&s] {
    inf::ProofPtr p = inf::parse_proof(read_text_file(s.file));
    inf::WalkOptions o;
    o.max_steps = s.walk_steps;
    o.hierarchy.kind = s.hierarchy == "surrogate" ? inf::Hierarchy::Kind::Surrogate : inf::Hierarchy::Kind::FastGrowing;
    o.hierarchy.budget = {s.budgets.steps, s.budgets.value};
    o.check.step_budget = s.budgets.step_down;
    o.check.prime_budget = o.hierarchy.budget;
    inf::ReductionTrace t = inf::reduce_trace(p, Ordinal::parse(s.mu), o);
    inf::TraceCheck tc = inf::check_trace(t, {o.hierarchy, s.budgets.step_down});
    std::ostringstream trace;
    inf::write_trace_jsonl(trace, t);
    if (s.out_path.empty()) {
      *s.out << trace.str();
    } else {
      write_text_file(s.out_path, trace.str());
      json j{{"verdict", inf::to_string(t.verdict)}, {"verdict_step", t.verdict_step}, {"steps", t.steps.size()},
             {"trace_check", tc.ok}, {"hierarchy", s.hierarchy}, {"budget", budget_json(s.budgets)}};
      if (!t.reason.empty()) j["reason"] = t.reason;
      if (!tc.ok) j["trace_check_reason"] = tc.reason;
      *s.out << j.dump() << "\n";
    }
    if (!tc.ok) throw VerificationFailure("trace check failed at step " + std::to_string(tc.step) + ": " + tc.reason);
    if (t.verdict == inf::ReductionTrace::Verdict::LocalError) throw VerificationFailure(t.reason);
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  State s;
  try {
    s.budgets = default_budgets();
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  s.out = &out;
  s.err = &err;

  CLI::App app{"slow consistency toolkit"};
  app.name("slowcon");
  app.require_subcommand(1);
  ordinal_commands(app, s);
  fgh_commands(app, s);
  generation_commands(app, s);
  check_command(app, s);
  measure_command(app, s);
  consistency_command(app, s);
  reduce_command(app, s);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  } catch (const VerificationFailure& e) {
    err << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    // malformed ordinals, numbers and files are usage errors
    err << e.what() << "\n";
    return kUsage;
  }
  return s.status;
}

}  // namespace slowcon::cli
