#include <cctype>
#include <sstream>

#include "slowcon/syntax.hpp"

namespace slowcon::fol {

// ---- printing ------------------------------------------------------------

namespace {

class Printer {
 public:
  explicit Printer(std::ostream& os) : os_(os) {}

  void print(const Expr& e) {
    switch (e->kind) {
      case Kind::Var: os_ << e->name; return;
      case Kind::BVar:
        if (e->index >= env_.size()) {
          os_ << "#" << e->index;  // loose index, only in debugging output
        } else {
          os_ << env_[env_.size() - 1 - e->index];
        }
        return;
      case Kind::Zero: os_ << '0'; return;
      case Kind::Succ: call("S", e); return;
      case Kind::Add: infix(e, " + "); return;
      case Kind::Mul: infix(e, " * "); return;
      case Kind::OrdLit: os_ << '[' << e->ordinal->to_string() << ']'; return;
      case Kind::Tower: call("tower", e); return;
      case Kind::Oplus: call("oplus", e); return;
      case Kind::Omul: call("omul", e); return;
      case Kind::Fs: call("fs", e); return;
      case Kind::Eq:
        print(e->arg(0));
        os_ << " = ";
        print(e->arg(1));
        return;
      case Kind::Lt:
        print(e->arg(0));
        os_ << " < ";
        print(e->arg(1));
        return;
      case Kind::R: call("R", e); return;
      case Kind::Fgraph: call("F", e); return;
      case Kind::Fiter: call("I", e); return;
      case Kind::Not:
        os_ << '~';
        print(e->arg(0));
        return;
      case Kind::And: infix(e, " & "); return;
      case Kind::Or: infix(e, " | "); return;
      case Kind::Imp: infix(e, " -> "); return;
      case Kind::Iff: infix(e, " <-> "); return;
      case Kind::Forall:
      case Kind::Exists: {
        std::string name = pick_name(e);
        os_ << (e->kind == Kind::Forall ? 'A' : 'E') << name << ' ';
        env_.push_back(std::move(name));
        print(e->body());
        env_.pop_back();
        return;
      }
    }
  }

 private:
  void call(const char* f, const Expr& e) {
    os_ << f << '(';
    for (std::size_t i = 0; i < e->args.size(); ++i) {
      if (i) os_ << ',';
      print(e->args[i]);
    }
    os_ << ')';
  }
  void infix(const Expr& e, const char* op) {
    os_ << '(';
    print(e->arg(0));
    os_ << op;
    print(e->arg(1));
    os_ << ')';
  }

  // The hint, primed until it neither names a free variable of the body nor
  // shadows an enclosing binder the body refers to.
  std::string pick_name(const Expr& binder) {
    const Expr& body = binder->body();
    std::string name = binder->name.empty() ? "x" : binder->name;
    for (;;) {
      bool clash = has_free(body, name);
      for (std::size_t i = 1; !clash && i <= env_.size(); ++i) {
        bool referenced = i >= 64 ? body->loose > i : ((body->loose_mask >> i) & 1) != 0;
        if (referenced && env_[env_.size() - i] == name) clash = true;
      }
      if (!clash) return name;
      name += '\'';
    }
  }

  std::ostream& os_;
  std::vector<std::string> env_;
};

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  Printer(os).print(e);
  return os.str();
}

// ---- parsing ---------------------------------------------------------------

namespace {

enum class Tok { Ident, Letter, Zero, Ordinal, LParen, RParen, Comma, Plus, Star, Eq, Lt, Not, And,
                 Or, Imp, Iff, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::islower(static_cast<unsigned char>(c)) || c == '_' || c == '?'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view s) : src_(s) {
    tokenize();
    match_parens();
  }

  Expr formula_all() {
    Expr e = formula();
    expect(Tok::End, "end of input");
    return e;
  }
  Expr term_all() {
    Expr e = term();
    expect(Tok::End, "end of input");
    return e;
  }
  Expr any_all() {
    bool as_formula = looks_like_formula();
    return as_formula ? formula_all() : term_all();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t pos = i_ < toks_.size() ? toks_[i_].pos : src_.size();
    throw SyntaxError("parse error at column " + std::to_string(pos) + ": " + what);
  }

  void tokenize() {
    std::size_t p = 0;
    while (p < src_.size()) {
      char c = src_[p];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++p;
        continue;
      }
      std::size_t start = p;
      auto push = [&](Tok k, std::size_t len) {
        toks_.push_back({k, std::string(src_.substr(start, len)), start});
        p += len;
      };
      if (ident_start(c)) {
        std::size_t q = p + 1;
        while (q < src_.size() && ident_char(src_[q])) ++q;
        push(Tok::Ident, q - p);
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        push(Tok::Letter, 1);
      } else if (c == '0') {
        push(Tok::Zero, 1);
      } else if (c == '[') {
        std::size_t q = src_.find(']', p);
        if (q == std::string_view::npos) fail("unterminated ordinal literal");
        toks_.push_back({Tok::Ordinal, std::string(src_.substr(p + 1, q - p - 1)), start});
        p = q + 1;
      } else if (src_.substr(p, 3) == "<->") {
        push(Tok::Iff, 3);
      } else if (src_.substr(p, 2) == "->") {
        push(Tok::Imp, 2);
      } else {
        switch (c) {
          case '(': push(Tok::LParen, 1); break;
          case ')': push(Tok::RParen, 1); break;
          case ',': push(Tok::Comma, 1); break;
          case '+': push(Tok::Plus, 1); break;
          case '*': push(Tok::Star, 1); break;
          case '=': push(Tok::Eq, 1); break;
          case '<': push(Tok::Lt, 1); break;
          case '~': push(Tok::Not, 1); break;
          case '&': push(Tok::And, 1); break;
          case '|': push(Tok::Or, 1); break;
          default:
            i_ = toks_.size();
            toks_.push_back({Tok::End, "", p});
            fail(std::string("unexpected character '") + c + "'");
        }
      }
    }
    toks_.push_back({Tok::End, "", src_.size()});
  }

  // A parenthesis opens a compound formula iff a binary connective sits
  // directly inside it.
  void match_parens() {
    formula_paren_.assign(toks_.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t t = 0; t < toks_.size(); ++t) {
      switch (toks_[t].kind) {
        case Tok::LParen: stack.push_back(t); break;
        case Tok::RParen:
          if (!stack.empty()) stack.pop_back();
          break;
        case Tok::And:
        case Tok::Or:
        case Tok::Imp:
        case Tok::Iff:
          if (!stack.empty()) formula_paren_[stack.back()] = true;
          break;
        default: break;
      }
    }
  }

  bool looks_like_formula() const {
    for (const auto& t : toks_) {
      switch (t.kind) {
        case Tok::Eq: case Tok::Lt: case Tok::Not: case Tok::And: case Tok::Or: case Tok::Imp:
        case Tok::Iff:
          return true;
        case Tok::Letter:
          if (t.text != "S") return true;
          break;
        default: break;
      }
    }
    return false;
  }

  const Token& peek() const { return toks_[i_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_letter(char c) const { return at(Tok::Letter) && peek().text[0] == c; }
  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    ++i_;
  }
  std::string ident() {
    if (!at(Tok::Ident)) fail("expected a variable");
    return toks_[i_++].text;
  }

  Expr formula() {
    if (at(Tok::LParen) && formula_paren_[i_]) {
      ++i_;
      Expr a = formula();
      Tok op = peek().kind;
      if (op != Tok::And && op != Tok::Or && op != Tok::Imp && op != Tok::Iff)
        fail("expected a binary connective");
      ++i_;
      Expr b = formula();
      expect(Tok::RParen, "')'");
      switch (op) {
        case Tok::And: return conj(a, b);
        case Tok::Or: return disj(a, b);
        case Tok::Imp: return imp(a, b);
        default: return iff(a, b);
      }
    }
    if (at(Tok::Not)) {
      ++i_;
      return neg(formula());
    }
    if (at_letter('A') || at_letter('E')) {
      bool all = at_letter('A');
      ++i_;
      std::string x = ident();
      Expr body = formula();
      return all ? forall(x, body) : exists(x, body);
    }
    return prime();
  }

  std::vector<Expr> call_args(std::size_t n) {
    expect(Tok::LParen, "'('");
    std::vector<Expr> args;
    for (std::size_t k = 0; k < n; ++k) {
      if (k) expect(Tok::Comma, "','");
      args.push_back(term());
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  Expr prime() {
    if (at_letter('R')) {
      ++i_;
      return rel_r(call_args(1)[0]);
    }
    if (at_letter('F')) {
      ++i_;
      auto a = call_args(3);
      return fgraph(a[0], a[1], a[2]);
    }
    if (at_letter('I')) {
      ++i_;
      auto a = call_args(4);
      return fiter(a[0], a[1], a[2], a[3]);
    }
    Expr l = term();
    if (at(Tok::Eq)) {
      ++i_;
      return eq(l, term());
    }
    if (at(Tok::Lt)) {
      ++i_;
      return lt(l, term());
    }
    fail("expected '=' or '<'");
  }

  Expr term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero: ++i_; return zero();
      case Tok::Ordinal: {
        ++i_;
        try {
          return ord_lit(Ordinal::parse(t.text));
        } catch (const OrdinalError& err) {
          fail(err.what());
        }
      }
      case Tok::LParen: {
        ++i_;
        Expr a = term();
        Tok op = peek().kind;
        if (op != Tok::Plus && op != Tok::Star) fail("expected '+' or '*'");
        ++i_;
        Expr b = term();
        expect(Tok::RParen, "')'");
        return op == Tok::Plus ? plus(a, b) : times(a, b);
      }
      case Tok::Letter:
        if (t.text == "S") {
          ++i_;
          return succ(call_args(1)[0]);
        }
        fail("expected a term");
      case Tok::Ident: {
        std::string name = t.text;
        ++i_;
        if (name == "tower") return tower(call_args(1)[0]);
        if (name == "oplus") {
          auto a = call_args(2);
          return oplus(a[0], a[1]);
        }
        if (name == "omul") {
          auto a = call_args(3);
          return omul(a[0], a[1], a[2]);
        }
        if (name == "fs") {
          auto a = call_args(2);
          return fs(a[0], a[1]);
        }
        return var(std::move(name));
      }
      default: fail("expected a term");
    }
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::vector<bool> formula_paren_;
  std::size_t i_ = 0;
};

}  // namespace

Expr parse_formula(std::string_view text) { return Parser(text).formula_all(); }
Expr parse_term(std::string_view text) { return Parser(text).term_all(); }
Expr parse_expr(std::string_view text) { return Parser(text).any_all(); }

}  // namespace slowcon::fol
