// S-expression reader and printer for formulas and proof terms.
//
//   formula  := (= t t) | (< t t) | (<= t t) | (feps* t t) | (not prime)
//             | (in t) | (notin t) | (and f f) | (or f f) | (exN y f) | (allN y f)
//   term     := numeral | symbol | (S t) | (+ t t) | (* t t)
//   proof    := (rule-name :key value ...)
//
// Keys: :end (formula ...), :height ordinal, :rank n, :m t, :main f, :cut f,
// :witness t, :target ordinal, :formula f, :l t, :sub/:left/:right proof, and
// for omega :var symbol with :child, a proof template in which the symbol
// stands for the child's index. Ordinals containing parentheses are quoted.
#include <cctype>
#include <map>

#include "slowcon/infinitary.hpp"

namespace slowcon::inf {

namespace {

struct SExpr {
  bool list = false;
  bool quoted = false;
  std::string atom;
  std::vector<SExpr> items;
};

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  SExpr read() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input");
    char c = s_[pos_];
    if (c == ')') throw ParseError("unexpected ')' at offset " + std::to_string(pos_));
    if (c == '(') {
      ++pos_;
      SExpr e;
      e.list = true;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unclosed '('");
        if (s_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    SExpr e;
    if (c == '"') {
      std::size_t close = s_.find('"', pos_ + 1);
      if (close == std::string::npos) throw ParseError("unclosed string");
      e.atom = s_.substr(pos_ + 1, close - pos_ - 1);
      e.quoted = true;
      pos_ = close + 1;
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')' && s_[pos_] != ';')
      ++pos_;
    e.atom = s_.substr(start, pos_ - start);
    return e;
  }

  void expect_end() {
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == ';') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

SExpr read_one(const std::string& text) {
  Reader r(text);
  SExpr e = r.read();
  r.expect_end();
  return e;
}

std::string print(const SExpr& e) {
  if (!e.list) return e.quoted ? "\"" + e.atom + "\"" : e.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) out += (i ? " " : "") + print(e.items[i]);
  return out + ")";
}

SExpr replace_atom(const SExpr& e, const std::string& name, const std::string& value) {
  if (!e.list) {
    SExpr r = e;
    if (!e.quoted && e.atom == name) r.atom = value;
    return r;
  }
  SExpr r = e;
  for (auto& it : r.items) it = replace_atom(it, name, value);
  return r;
}

bool is_number(const std::string& a) {
  return !a.empty() && std::all_of(a.begin(), a.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

const std::string& head(const SExpr& e) {
  if (!e.list || e.items.empty() || e.items[0].list) throw ParseError("expected a tagged list, got " + print(e));
  return e.items[0].atom;
}

void arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n + 1)
    throw ParseError("'" + head(e) + "' takes " + std::to_string(n) + " arguments: " + print(e));
}

TermPtr term(const SExpr& e) {
  if (!e.list) {
    if (is_number(e.atom)) return num(Natural(e.atom));
    if (e.atom.empty()) throw ParseError("empty term");
    return tvar(e.atom);
  }
  const std::string& h = head(e);
  if (h == "S") {
    arity(e, 1);
    return tsucc(term(e.items[1]));
  }
  if (h == "+" || h == "*") {
    arity(e, 2);
    return h == "+" ? tadd(term(e.items[1]), term(e.items[2])) : tmul(term(e.items[1]), term(e.items[2]));
  }
  throw ParseError("unknown term constructor '" + h + "'");
}

Natural closed_value(const SExpr& e) {
  auto v = term_value(*term(e));
  if (!v) throw ParseError("expected a closed term, got " + print(e));
  return *v;
}

FormulaPtr formula(const SExpr& e) {
  const std::string& h = head(e);
  static const std::map<std::string, Rel> rels = {
      {"=", Rel::Eq}, {"<", Rel::Lt}, {"<=", Rel::Le}, {"feps*", Rel::FepsStar}};
  if (auto it = rels.find(h); it != rels.end()) {
    arity(e, 2);
    return prime(it->second, term(e.items[1]), term(e.items[2]));
  }
  if (h == "not") {
    arity(e, 1);
    FormulaPtr p = formula(e.items[1]);
    if (p->kind != Formula::Kind::Prime) throw ParseError("'not' applies to arithmetical primes only");
    return negate(p);
  }
  if (h == "in" || h == "notin") {
    arity(e, 1);
    return h == "in" ? mem(term(e.items[1])) : not_mem(term(e.items[1]));
  }
  if (h == "and" || h == "or") {
    arity(e, 2);
    return h == "and" ? conj(formula(e.items[1]), formula(e.items[2])) : disj(formula(e.items[1]), formula(e.items[2]));
  }
  if (h == "exN" || h == "allN") {
    arity(e, 2);
    if (e.items[1].list) throw ParseError("quantifier variable must be a symbol");
    return h == "exN" ? exists_n(e.items[1].atom, formula(e.items[2])) : forall_n(e.items[1].atom, formula(e.items[2]));
  }
  throw ParseError("unknown formula constructor '" + h + "'");
}

Ordinal ordinal(const SExpr& e) {
  if (e.list) throw ParseError("expected an ordinal, got " + print(e));
  try {
    return Ordinal::parse(e.atom);
  } catch (const OrdinalError& err) {
    throw ParseError(std::string("bad ordinal: ") + err.what());
  }
}

ProofPtr proof(const SExpr& e) {
  const std::string& h = head(e);
  auto rule = rule_from_string(h);
  if (!rule) throw ParseError("unknown rule '" + h + "'");
  std::map<std::string, const SExpr*> keys;
  for (std::size_t i = 1; i < e.items.size(); i += 2) {
    const SExpr& k = e.items[i];
    if (k.list || k.atom.size() < 2 || k.atom[0] != ':') throw ParseError("expected a :key in " + h);
    if (i + 1 >= e.items.size()) throw ParseError("key " + k.atom + " without a value");
    keys[k.atom.substr(1)] = &e.items[i + 1];
  }
  auto get = [&](const std::string& k) -> const SExpr& {
    auto it = keys.find(k);
    if (it == keys.end()) throw ParseError(h + " needs :" + k);
    return *it->second;
  };
  auto opt = [&](const std::string& k) -> const SExpr* {
    auto it = keys.find(k);
    return it == keys.end() ? nullptr : it->second;
  };
  auto end = [&]() {
    const SExpr& s = get("end");
    if (!s.list) throw ParseError(":end takes a list of formulas");
    std::vector<FormulaPtr> fs;
    for (const auto& f : s.items) fs.push_back(formula(f));
    return Sequent(fs);
  };
  std::optional<Ordinal> height;
  if (const SExpr* x = opt("height")) height = ordinal(*x);

  ProofPtr out;
  switch (*rule) {
    case Rule::AxTruePrime: out = ax_true_prime(end()); break;
    case Rule::AxZeroN: out = ax_zero_n(end()); break;
    case Rule::AxNNegPair: out = ax_n_neg_pair(closed_value(get("m")), end()); break;
    case Rule::AxFepsStar: out = ax_feps_star(closed_value(get("m")), end()); break;
    case Rule::RuleN: out = rule_n(closed_value(get("m")), proof(get("sub")), end(), height); break;
    case Rule::RuleAnd:
      out = rule_and(formula(get("main")), proof(get("left")), proof(get("right")), end(), height);
      break;
    case Rule::RuleOr: out = rule_or(formula(get("main")), proof(get("sub")), end(), height); break;
    case Rule::RuleExists:
      out = rule_exists(formula(get("main")), term(get("witness")), proof(get("sub")), end(), height);
      break;
    case Rule::RuleOmega: {
      const SExpr& v = get("var");
      if (v.list) throw ParseError(":var must be a symbol");
      SExpr tmpl = get("child");
      std::string var = v.atom;
      ChildSchema child = [tmpl, var](const Natural& n) { return proof(replace_atom(tmpl, var, n.str())); };
      out = rule_omega(formula(get("main")), child, end(), height, var + " " + print(tmpl));
      break;
    }
    case Rule::CutN: out = cut_n(closed_value(get("m")), proof(get("left")), proof(get("right")), end(), height); break;
    case Rule::CutPrime:
      out = cut_prime(formula(get("cut")), proof(get("left")), proof(get("right")), end(), height);
      break;
    case Rule::CutFepsStar:
      out = cut_feps_star(formula(get("cut")), proof(get("left")), proof(get("right")), end(), height);
      break;
    case Rule::Accum: {
      std::optional<Sequent> seq;
      if (opt("end")) seq = end();
      out = accum(ordinal(get("target")), proof(get("sub")), seq);
      break;
    }
    case Rule::Inv: {
      Natural l = opt("l") ? closed_value(get("l")) : Natural(0);
      out = inv(proof(get("sub")), formula(get("formula")), l);
      if (opt("end")) {
        auto p = std::make_shared<ProofTerm>(*out);
        p->end = end();
        out = p;
      }
      break;
    }
  }
  bool axiom_height = height && (*rule == Rule::AxTruePrime || *rule == Rule::AxZeroN ||
                                 *rule == Rule::AxNNegPair || *rule == Rule::AxFepsStar || *rule == Rule::Inv);
  if (opt("rank") || axiom_height) {
    auto p = std::make_shared<ProofTerm>(*out);
    if (opt("rank")) p->rank = static_cast<unsigned>(closed_value(get("rank")));
    if (axiom_height) p->height = *height;
    out = p;
  }
  return out;
}

std::string print_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Num: return t.value.str();
    case Term::Kind::Var: return t.name;
    case Term::Kind::Succ: return "(S " + print_term(*t.a) + ")";
    case Term::Kind::Add: return "(+ " + print_term(*t.a) + " " + print_term(*t.b) + ")";
    case Term::Kind::Mul: return "(* " + print_term(*t.a) + " " + print_term(*t.b) + ")";
  }
  return "?";
}

std::string quote(const Ordinal& a) { return "\"" + a.to_string() + "\""; }

void print_proof(const ProofTerm& h, std::string& out, int indent) {
  std::string pad(indent, ' ');
  out += "(" + to_string(h.rule);
  auto key = [&](const std::string& k, const std::string& v) { out += " :" + k + " " + v; };
  auto sub = [&](const std::string& k, const ProofTerm& p) {
    out += "\n" + pad + "  :" + k + " ";
    print_proof(p, out, indent + 2);
  };
  switch (h.rule) {
    case Rule::AxNNegPair:
    case Rule::AxFepsStar:
    case Rule::RuleN:
    case Rule::CutN: key("m", h.m.str()); break;
    case Rule::Inv:
      key("formula", to_string(h.formula));
      if (h.formula->kind == Formula::Kind::ForallN) key("l", h.m.str());
      break;
    case Rule::RuleAnd:
    case Rule::RuleOr:
    case Rule::RuleOmega: key("main", to_string(h.formula)); break;
    case Rule::RuleExists:
      key("main", to_string(h.formula));
      key("witness", print_term(*h.witness));
      break;
    case Rule::CutPrime:
    case Rule::CutFepsStar: key("cut", to_string(h.formula)); break;
    case Rule::Accum: key("target", quote(h.height)); break;
    default: break;
  }
  key("end", to_string(h.end));
  if (h.rule != Rule::Accum) key("height", quote(h.height));
  key("rank", std::to_string(h.rank));
  switch (h.rule) {
    case Rule::RuleN:
    case Rule::RuleOr:
    case Rule::RuleExists:
    case Rule::Accum:
    case Rule::Inv: sub("sub", *h.subs[0]); break;
    case Rule::RuleAnd:
    case Rule::CutN:
    case Rule::CutPrime:
    case Rule::CutFepsStar:
      sub("left", *h.subs[0]);
      sub("right", *h.subs[1]);
      break;
    case Rule::RuleOmega:
      if (!h.schema_text.empty()) {
        std::size_t sp = h.schema_text.find(' ');
        key("var", h.schema_text.substr(0, sp));
        out += "\n" + pad + "  :child " + h.schema_text.substr(sp + 1);
      } else {
        key("child", "opaque");
      }
      break;
    default: break;
  }
  out += ")";
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return formula(read_one(text)); }
ProofPtr parse_proof(const std::string& text) { return proof(read_one(text)); }

std::string print_proof(const ProofPtr& h) {
  std::string out;
  print_proof(*h, out, 0);
  return out;
}

}  // namespace slowcon::inf
