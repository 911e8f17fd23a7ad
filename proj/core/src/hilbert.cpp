#include "slowcon/hilbert.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace slowcon::hilbert {

using fol::Kind;
using fol::same;

namespace {

std::uint64_t digits(std::size_t n) {
  std::uint64_t d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

CheckResult reject(std::size_t line, std::string reason) { return {false, line, std::move(reason)}; }

}  // namespace

CheckResult check(const HilbertProof& p, const Theory& t) {
  for (std::size_t k = 0; k < p.lines.size(); ++k) {
    const std::size_t no = k + 1;
    const Line& line = p.lines[k];
    const Expr& f = line.formula;
    if (!f || fol::is_term(f->kind) || !fol::is_closed(f)) return reject(no, "not a formula");
    const Justification& j = line.just;
    auto earlier = [&](std::size_t ref) { return ref >= 1 && ref < no; };
    switch (j.rule) {
      case Rule::Axiom: {
        const Schema* s = t.find(j.schema);
        if (!s) return reject(no, "unknown schema " + j.schema);
        if (!s->matches(f)) return reject(no, "not an instance of " + j.schema);
        break;
      }
      case Rule::ModusPonens: {
        if (!earlier(j.minor) || !earlier(j.major)) return reject(no, "reference to a non-earlier line");
        const Expr& major = p.lines[j.major - 1].formula;
        const Expr& minor = p.lines[j.minor - 1].formula;
        if (major->kind != Kind::Imp || !same(major->arg(0), minor)) return reject(no, "major premise mismatch");
        if (!same(major->arg(1), f)) return reject(no, "conclusion mismatch");
        break;
      }
      case Rule::Generalization: {
        if (!earlier(j.minor)) return reject(no, "reference to a non-earlier line");
        if (j.variable.empty()) return reject(no, "missing variable");
        const Expr& premise = p.lines[j.minor - 1].formula;
        if (f->kind != Kind::Forall || !same(f->body(), fol::abstract(premise, j.variable)))
          return reject(no, "generalization mismatch");
        break;
      }
    }
  }
  return {};
}

std::uint64_t justification_length(const Justification& j) {
  switch (j.rule) {
    case Rule::Axiom: return 2;
    case Rule::ModusPonens: return 1 + digits(j.minor) + digits(j.major);
    case Rule::Generalization: return 1 + digits(j.minor) + 1;
  }
  return 0;
}

std::uint64_t proof_length(const HilbertProof& p, fol::CountMode mode) {
  std::uint64_t total = 0;
  for (const auto& l : p.lines) total += fol::length(l.formula, mode) + justification_length(l.just);
  return total;
}

HilbertProof subst_proof(const HilbertProof& p, const fol::PredicateAbstract& psi) {
  for (const auto& l : p.lines)
    if (l.just.rule == Rule::Generalization && l.just.variable != psi.param &&
        fol::has_free(psi.formula, l.just.variable))
      throw std::invalid_argument("subst_proof: " + l.just.variable +
                                  " is generalized in the proof and free in the substituted formula");
  fol::RSubstituter sub(psi);
  HilbertProof out;
  out.lines.reserve(p.lines.size());
  for (const auto& l : p.lines) out.lines.push_back({sub(l.formula), l.just});
  return out;
}

std::string to_string(const Justification& j) {
  switch (j.rule) {
    case Rule::Axiom: return "ax " + j.schema;
    case Rule::ModusPonens: return "mp " + std::to_string(j.minor) + " " + std::to_string(j.major);
    case Rule::Generalization: return "gen " + std::to_string(j.minor) + " " + j.variable;
  }
  return {};
}

void write_proof(std::ostream& os, const HilbertProof& p) {
  for (std::size_t k = 0; k < p.lines.size(); ++k)
    os << (k + 1) << " | " << fol::to_string(p.lines[k].formula) << " | " << to_string(p.lines[k].just)
       << '\n';
}

HilbertProof read_proof(std::istream& is) {
  HilbertProof p;
  std::string raw;
  std::size_t row = 0;
  while (std::getline(is, raw)) {
    ++row;
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    auto fail = [&](const std::string& why) -> ProofFormatError {
      return ProofFormatError("line " + std::to_string(row) + ": " + why);
    };
    // The formula may itself contain '|', so split at the first and last.
    auto a = raw.find('|'), b = raw.rfind('|');
    if (a == std::string::npos || a == b) throw fail("expected <index> | <formula> | <justification>");
    std::size_t index = 0;
    try {
      index = std::stoul(raw.substr(0, a));
    } catch (const std::exception&) {
      throw fail("bad index");
    }
    if (index != p.lines.size() + 1) throw fail("indices must be consecutive from 1");
    Line line;
    try {
      line.formula = fol::parse_formula(raw.substr(a + 1, b - a - 1));
    } catch (const fol::SyntaxError& e) {
      throw fail(e.what());
    }
    std::istringstream js(raw.substr(b + 1));
    std::string tag;
    js >> tag;
    if (tag == "ax") {
      std::string id;
      if (!(js >> id)) throw fail("ax needs a schema id");
      line.just = Justification::axiom(id);
    } else if (tag == "mp") {
      std::size_t i = 0, j = 0;
      if (!(js >> i >> j)) throw fail("mp needs two line numbers");
      line.just = Justification::mp(i, j);
    } else if (tag == "gen") {
      std::size_t i = 0;
      std::string x;
      if (!(js >> i >> x)) throw fail("gen needs a line number and a variable");
      line.just = Justification::gen(i, x);
    } else {
      throw fail("unknown justification '" + tag + "'");
    }
    std::string extra;
    if (js >> extra) throw fail("trailing text after justification");
    p.lines.push_back(std::move(line));
  }
  return p;
}

}  // namespace slowcon::hilbert
