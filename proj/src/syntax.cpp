// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "tacsearch/errors.hpp"

namespace tacsearch {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line ? message + " at " + std::to_string(line) + ":" +
                                    std::to_string(column)
                              : message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

struct InfixOp {
  std::string_view name;
  int prec;
  enum Assoc { Left, Right, None } assoc;
};

constexpr InfixOp kInfix[] = {
    {"<=>", 1, InfixOp::Right}, {"==>", 2, InfixOp::Right}, {"\\/", 3, InfixOp::Right},
    {"/\\", 4, InfixOp::Right}, {"=", 6, InfixOp::None},    {"::", 7, InfixOp::Right},
    {"+", 8, InfixOp::Left},
};

constexpr int kNotPrec = 5;
constexpr int kAppPrec = 9;

const InfixOp* find_infix(std::string_view name) {
  for (const InfixOp& op : kInfix) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

bool is_symbolic_const(std::string_view name) {
  return find_infix(name) != nullptr || name == logic::kNot || name == logic::kForall ||
         name == logic::kExists;
}

// ---------------------------------------------------------------------------
// Printer

class Printer {
 public:
  // With `annotated` set, free variables print as `(x:ty)` the first time
  // they appear; the set carries across the terms of one goal.
  explicit Printer(PrintMode mode, std::vector<Term>* annotated = nullptr)
      : mode_(mode), annotated_(annotated) {}

  void print(const Term& t, int ctx) {
    if (logic::is_binder(t) || t.is_abs()) {
      binder(t, ctx);
      return;
    }
    if (auto neg = logic::dest_not(t)) {
      open(ctx > kNotPrec);
      out_ += '~';
      print(*neg, kAppPrec);
      close(ctx > kNotPrec);
      return;
    }
    if (t.is_app() && t.fun().is_app() && t.fun().fun().is_const()) {
      if (const InfixOp* op = find_infix(t.fun().fun().name())) {
        const int lp = op->assoc == InfixOp::Left ? op->prec : op->prec + 1;
        const int rp = op->assoc == InfixOp::Right ? op->prec : op->prec + 1;
        open(ctx > op->prec);
        print(t.fun().arg(), lp);
        out_ += ' ';
        out_ += op->name;
        out_ += ' ';
        print(t.arg(), rp);
        close(ctx > op->prec);
        return;
      }
    }
    switch (t.kind()) {
      case Term::Kind::Var:
        if (mode_ == PrintMode::Placeholder) {
          out_ += 'V';
        } else if (annotated_ != nullptr && !is_bound(t) && !is_annotated(t)) {
          annotated_->push_back(t);
          out_ += '(' + t.name() + ':' + type_to_string(t.type()) + ')';
        } else {
          out_ += t.name();
        }
        return;
      case Term::Kind::Const:
        if (is_symbolic_const(t.name())) {
          out_ += '(';
          out_ += t.name();
          out_ += ')';
        } else {
          out_ += t.name();
        }
        return;
      case Term::Kind::App:
        open(ctx > kAppPrec);
        print(t.fun(), kAppPrec);
        out_ += ' ';
        print(t.arg(), kAppPrec + 1);
        close(ctx > kAppPrec);
        return;
      case Term::Kind::Abs:
        return;
    }
  }

  std::string take() { return std::move(out_); }

 private:
  // `!x:num y:num. body`; consecutive binders of one kind share a prefix.
  void binder(const Term& t, int ctx) {
    open(ctx > 0);
    const bool lambda = t.is_abs();
    const std::string q = lambda ? std::string("\\") : t.fun().name();
    out_ += q;
    Term cur = t;
    bool first = true;
    const std::size_t depth = bound_.size();
    while (true) {
      const Term& abs = lambda ? cur : cur.arg();
      if (!first) out_ += ' ';
      first = false;
      bound_.push_back(abs.bound());
      if (mode_ == PrintMode::Placeholder) {
        out_ += 'V';
      } else {
        out_ += abs.bound().name();
        out_ += ':';
        out_ += type_to_string(abs.bound().type());
      }
      cur = abs.body();
      if (mode_ == PrintMode::Placeholder) break;
      const bool same = lambda ? cur.is_abs() : (logic::is_binder(cur) && cur.fun().name() == q);
      if (!same) break;
    }
    out_ += ". ";
    print(cur, 0);
    bound_.resize(depth);
    close(ctx > 0);
  }

  static bool same_var(const Term& a, const Term& b) {
    return a.name() == b.name() && a.type() == b.type();
  }
  bool is_bound(const Term& v) const {
    return std::any_of(bound_.begin(), bound_.end(), [&](const Term& b) { return same_var(b, v); });
  }
  bool is_annotated(const Term& v) const {
    return std::any_of(annotated_->begin(), annotated_->end(),
                       [&](const Term& b) { return same_var(b, v); });
  }

  void open(bool b) {
    if (b) out_ += '(';
  }
  void close(bool b) {
    if (b) out_ += ')';
  }

  PrintMode mode_;
  std::vector<Term>* annotated_;
  std::vector<Term> bound_;
  std::string out_;
};

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

constexpr std::string_view kSymbols[] = {"==>", "<=>", "/\\", "\\/", "::", "->", "=", "+", "~",
                                         "!",   "?",   "\\",  "(",   ")",  ":",  ".", ","};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      toks.push_back({Tok::Ident, std::string(text.substr(i, j - i)), i + 1});
      i = j;
      continue;
    }
    bool matched = false;
    for (std::string_view s : kSymbols) {
      if (text.substr(i, s.size()) == s) {
        toks.push_back({Tok::Symbol, std::string(s), i + 1});
        i += s.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", 1, i + 1);
  }
  toks.push_back({Tok::End, "", text.size() + 1});
  return toks;
}

bool is_type_keyword(std::string_view s) { return s == "num" || s == "bool" || s == "list"; }

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig, std::vector<Term>* ctx)
      : toks_(lex(text)), sig_(sig), ctx_(ctx) {}

  Term parse_whole_term() {
    Term t = expr(0);
    expect_end();
    return t;
  }

  Type parse_whole_type() {
    Type t = type();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool at_symbol(std::string_view s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, peek().column);
  }

  void expect(std::string_view s) {
    if (!at_symbol(s)) {
      fail("expected '" + std::string(s) + "' but found '" +
           (peek().kind == Tok::End ? std::string("end of input") : peek().text) + "'");
    }
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

  Type type_atom() {
    if (at_symbol("(")) {
      ++pos_;
      Type t = type();
      expect(")");
      return t;
    }
    if (peek().kind != Tok::Ident) fail("expected a type");
    const std::string name = next().text;
    if (name == "num") return Type::num();
    if (name == "bool") return Type::boolean();
    if (name == "list") {
      expect("(");
      Type e = type();
      expect(")");
      return Type::list(e);
    }
    --pos_;
    fail("unknown type '" + name + "'");
  }

  Type type() {
    Type t = type_atom();
    if (at_symbol("->")) {
      ++pos_;
      return Type::fun(t, type());
    }
    return t;
  }

  std::optional<Term> lookup_var(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->name() == name) return *it;
    }
    for (auto it = ctx_->rbegin(); it != ctx_->rend(); ++it) {
      if (it->name() == name) return *it;
    }
    return std::nullopt;
  }

  Term identifier(const Token& tok) {
    if (auto v = lookup_var(tok.text)) return *v;
    if (auto ty = sig_->type_of(tok.text)) return Term::constant(tok.text, *ty);
    if (Signature::is_polymorphic(tok.text)) {
      throw ParseError("cannot infer the type of '" + tok.text + "'", 1, tok.column);
    }
    throw ParseError("unknown identifier '" + tok.text + "' (annotate free variables)", 1,
                     tok.column);
  }

  bool starts_atom() const {
    return peek().kind == Tok::Ident || at_symbol("(");
  }

  Term atom() {
    const Token tok = peek();
    if (tok.kind == Tok::Ident) {
      ++pos_;
      return identifier(tok);
    }
    if (!at_symbol("(")) fail("expected a term");
    ++pos_;
    // (op)
    if (peek().kind == Tok::Symbol && toks_[pos_ + 1].kind == Tok::Symbol &&
        toks_[pos_ + 1].text == ")" && is_symbolic_const(peek().text)) {
      const Token op = next();
      ++pos_;
      return identifier(op);
    }
    // (x:ty)
    if (peek().kind == Tok::Ident && toks_[pos_ + 1].kind == Tok::Symbol &&
        toks_[pos_ + 1].text == ":") {
      const Token name = next();
      ++pos_;
      Type ty = type();
      expect(")");
      if (auto v = lookup_var(name.text)) {
        if (v->type() != ty) {
          throw ParseError("variable '" + name.text + "' used at two types", 1, name.column);
        }
        return *v;
      }
      if (sig_->contains(name.text)) {
        throw ParseError("'" + name.text + "' is a constant", 1, name.column);
      }
      Term v = Term::var(name.text, ty);
      ctx_->push_back(v);
      return v;
    }
    Term t = expr(0);
    expect(")");
    return t;
  }

  Term application() {
    Term t = atom();
    while (starts_atom()) {
      const std::size_t column = peek().column;
      Term a = atom();
      try {
        t = Term::app(t, a);
      } catch (const TypeError& e) {
        throw ParseError(e.what(), 1, column);
      }
    }
    return t;
  }

  Term binder() {
    const Token q = next();
    std::vector<Term> vars;
    std::vector<std::string> pending;
    while (peek().kind == Tok::Ident) {
      const Token name = next();
      if (sig_->contains(name.text) || is_type_keyword(name.text)) {
        throw ParseError("cannot bind '" + name.text + "'", 1, name.column);
      }
      pending.push_back(name.text);
      if (at_symbol(":")) {
        ++pos_;
        Type ty = type();
        for (const std::string& n : pending) vars.push_back(Term::var(n, ty));
        pending.clear();
      }
    }
    if (!pending.empty()) fail("binder variable '" + pending.back() + "' needs a type");
    if (vars.empty()) fail("binder without variables");
    expect(".");
    for (const Term& v : vars) bound_.push_back(v);
    Term body = expr(0);
    bound_.resize(bound_.size() - vars.size());
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      try {
        if (q.text == "\\") {
          body = Term::abs(*it, body);
        } else if (q.text == "!") {
          body = logic::mk_forall(*it, body);
        } else {
          body = logic::mk_exists(*it, body);
        }
      } catch (const TypeError& e) {
        throw ParseError(e.what(), 1, q.column);
      }
    }
    if (q.text != "\\" && !body.type().is_bool()) {
      throw ParseError("quantifier body is not boolean", 1, q.column);
    }
    return body;
  }

  Term expr(int min_prec) {
    Term lhs = [&] {
      if (at_symbol("!") || at_symbol("?") || at_symbol("\\")) return binder();
      if (at_symbol("~")) {
        const std::size_t column = next().column;
        Term operand = expr(kNotPrec);
        if (!operand.type().is_bool()) throw ParseError("negation of a non-boolean", 1, column);
        return logic::mk_not(operand);
      }
      return application();
    }();
    while (peek().kind == Tok::Symbol) {
      const InfixOp* op = find_infix(peek().text);
      if (op == nullptr || op->prec < min_prec) break;
      const std::size_t column = next().column;
      // A binder on the right swallows the rest of the input.
      Term rhs = expr(op->assoc == InfixOp::Right ? op->prec : op->prec + 1);
      try {
        if (op->name == logic::kEq) {
          lhs = logic::mk_eq(lhs, rhs);
        } else {
          Term c = identifier(Token{Tok::Symbol, std::string(op->name), column});
          lhs = Term::app(Term::app(c, lhs), rhs);
        }
      } catch (const TypeError& e) {
        throw ParseError(e.what(), 1, column);
      }
      if (op->assoc == InfixOp::None && peek().kind == Tok::Symbol &&
          find_infix(peek().text) == op) {
        fail("'" + std::string(op->name) + "' is not associative");
      }
    }
    return lhs;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature* sig_;
  std::vector<Term>* ctx_;
  std::vector<Term> bound_;
};

}  // namespace

std::string print_term(const Term& t, PrintMode mode) {
  Printer p(mode);
  p.print(t, 0);
  return p.take();
}

std::string print_goal(const Goal& g) {
  std::vector<Term> annotated;
  auto term = [&](const Term& t) {
    Printer p(PrintMode::Normal, &annotated);
    p.print(t, 0);
    return p.take();
  };
  std::string out;
  for (std::size_t i = 0; i < g.assumptions.size(); ++i) {
    if (i) out += "; ";
    out += term(g.assumptions[i]);
  }
  if (!g.assumptions.empty()) out += " |- ";
  out += term(g.conclusion);
  return out;
}

Type parse_type(std::string_view text) {
  Parser p(text, nullptr, nullptr);
  return p.parse_whole_type();
}

Term parse_term(std::string_view text, const Signature& sig, std::vector<Term>& context) {
  Parser p(text, &sig, &context);
  return p.parse_whole_term();
}

Term parse_term(std::string_view text, const Signature& sig) {
  std::vector<Term> context;
  return parse_term(text, sig, context);
}

Goal parse_goal(std::string_view text, const Signature& sig, std::vector<Term>& context) {
  std::vector<std::string_view> asms;
  std::string_view concl = text;
  if (auto bar = text.find("|-"); bar != std::string_view::npos) {
    std::string_view head = text.substr(0, bar);
    concl = text.substr(bar + 2);
    while (!head.empty()) {
      const std::size_t semi = head.find(';');
      std::string_view part = head.substr(0, semi);
      if (part.find_first_not_of(" \t") != std::string_view::npos) asms.push_back(part);
      if (semi == std::string_view::npos) break;
      head = head.substr(semi + 1);
    }
  }
  std::vector<Term> assumptions;
  for (std::string_view a : asms) assumptions.push_back(parse_term(a, sig, context));
  Term c = parse_term(concl, sig, context);
  for (const Term& a : assumptions) {
    if (!a.type().is_bool()) throw ParseError("assumption is not boolean");
  }
  if (!c.type().is_bool()) throw ParseError("conclusion is not boolean");
  return Goal(std::move(assumptions), std::move(c));
}

Goal parse_goal(std::string_view text, const Signature& sig) {
  std::vector<Term> context;
  return parse_goal(text, sig, context);
}

}  // namespace tacsearch
