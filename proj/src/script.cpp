// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tacsearch/errors.hpp"

namespace tacsearch {

namespace {

const std::set<std::string>& unsupported_tacticals() {
  static const std::set<std::string> s = {"ORELSE", "THEN1", "REVERSE", "VALID",
                                          "by",     "suffices_by", "REPEAT"};
  return s;
}

struct Token {
  enum class Kind { Ident, Text, LBrack, RBrack, LParen, RParen, Comma, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::string squeeze(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    const std::size_t l = line;
    const std::size_t k = col;
    if (c == '"') {
      const std::size_t close = src.find('"', i + 1);
      if (close == std::string_view::npos) throw ParseError("unterminated quotation", l, k);
      std::string body(src.substr(i + 1, close - i - 1));
      advance(close - i + 1);
      out.push_back({Token::Kind::Text, squeeze(body), l, k});
      continue;
    }
    Token::Kind kind = Token::Kind::End;
    switch (c) {
      case '[': kind = Token::Kind::LBrack; break;
      case ']': kind = Token::Kind::RBrack; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      case ',': kind = Token::Kind::Comma; break;
      default: break;
    }
    if (kind != Token::Kind::End) {
      out.push_back({kind, std::string(1, c), l, k});
      advance(1);
      continue;
    }
    if (!ident_char(c)) throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    std::size_t j = i;
    while (j < src.size() && ident_char(src[j])) ++j;
    out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), l, k});
    advance(j - i);
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  ScriptAst script() {
    ScriptAst left = atom();
    while (true) {
      const Token& t = peek();
      if (t.kind != Token::Kind::Ident) break;
      if (t.text == "THEN") {
        next();
        left = ScriptAst::then(std::move(left), atom());
      } else if (t.text == "THENL") {
        next();
        expect(Token::Kind::LBrack, "'['");
        std::vector<ScriptAst> branches;
        branches.push_back(script());
        while (peek().kind == Token::Kind::Comma) {
          next();
          branches.push_back(script());
        }
        expect(Token::Kind::RBrack, "']'");
        left = ScriptAst::thenl(std::move(left), std::move(branches));
      } else {
        reject_tactical(t);
        throw ParseError("expected THEN or THENL, found '" + t.text + "'", t.line, t.column);
      }
    }
    return left;
  }

  TacticCall call() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident) error("expected a tactic name");
    reject_tactical(t);
    if (t.text == "THEN" || t.text == "THENL") error("tactical where a tactic was expected");
    TacticCall c;
    c.name = next().text;
    if (peek().kind == Token::Kind::LBrack) {
      next();
      c.arg = TacticCall::Arg::Names;
      if (peek().kind != Token::Kind::RBrack) {
        c.names.push_back(ident("a theorem name"));
        while (peek().kind == Token::Kind::Comma) {
          next();
          c.names.push_back(ident("a theorem name"));
        }
      }
      expect(Token::Kind::RBrack, "']'");
    } else if (peek().kind == Token::Kind::Text) {
      c.arg = TacticCall::Arg::Text;
      c.text = next().text;
    }
    return c;
  }

  void finish() {
    if (peek().kind != Token::Kind::End) {
      if (peek().kind == Token::Kind::RBrack || peek().kind == Token::Kind::RParen) {
        error("unbalanced '" + peek().text + "'");
      }
      reject_tactical(peek());
      error("unexpected '" + peek().text + "'");
    }
  }

 private:
  ScriptAst atom() {
    if (peek().kind == Token::Kind::LParen) {
      next();
      ScriptAst inner = script();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    return ScriptAst::atomic(call().canonical());
  }

  std::string ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) error(std::string("expected ") + what);
    return next().text;
  }

  void reject_tactical(const Token& t) {
    if (t.kind == Token::Kind::Ident && unsupported_tacticals().count(t.text)) {
      throw ParseError("unsupported tactical '" + t.text + "'", t.line, t.column);
    }
  }

  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) {
      if (peek().kind == Token::Kind::End) error(std::string("unbalanced brackets: expected ") + what);
      error(std::string("expected ") + what + ", found '" + peek().text + "'");
    }
    next();
  }

  [[noreturn]] void error(const std::string& msg) {
    throw ParseError(msg, peek().line, peek().column);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_into(const ScriptAst& a, std::string& out) {
  switch (a.kind) {
    case ScriptAst::Kind::Atomic:
      out += a.tactic;
      return;
    case ScriptAst::Kind::Then: {
      print_into(a.children[0], out);
      out += " THEN ";
      const ScriptAst& r = a.children[1];
      if (r.kind == ScriptAst::Kind::Atomic) {
        print_into(r, out);
      } else {
        out += '(';
        print_into(r, out);
        out += ')';
      }
      return;
    }
    case ScriptAst::Kind::Thenl:
      print_into(a.children[0], out);
      out += " THENL [";
      for (std::size_t i = 1; i < a.children.size(); ++i) {
        if (i > 1) out += ", ";
        print_into(a.children[i], out);
      }
      out += ']';
      return;
  }
}

void collect(const ScriptAst& a, std::vector<std::string>& out) {
  if (a.kind == ScriptAst::Kind::Atomic) {
    out.push_back(a.tactic);
    return;
  }
  for (const ScriptAst& c : a.children) collect(c, out);
}

struct Runner {
  const TacticLibrary& library;
  const Recorder& recorder;
  const RunOptions& opts;

  // A Failure or Timeout anywhere aborts the whole run.
  TacticOutcome run(const ScriptAst& a, const Goal& g) {
    switch (a.kind) {
      case ScriptAst::Kind::Atomic: {
        Tactic t = library.parse(a.tactic);
        if (recorder) recorder(g, t.canonical_string());
        TacticOutcome o = apply_with_budget(t, g, opts.tactic_budget, opts.clock);
        if (opts.check_same_effect) {
          Tactic again = library.parse(t.canonical_string());
          TacticOutcome o2 = apply_with_budget(again, g, opts.tactic_budget, opts.clock);
          if (o.index() != o2.index() ||
              (o.index() == 0 &&
               !goal_sets_equal(std::get<Subgoals>(o).goals, std::get<Subgoals>(o2).goals))) {
            throw InvariantViolation("tactic '" + t.canonical_string() +
                                     "' changes effect when re-parsed");
          }
        }
        if (auto* s = std::get_if<Subgoals>(&o)) s->label.clear();
        return o;
      }
      case ScriptAst::Kind::Then: {
        TacticOutcome first = run(a.children[0], g);
        auto* s = std::get_if<Subgoals>(&first);
        if (s == nullptr) return first;
        Subgoals out;
        for (const Goal& sub : s->goals) {
          TacticOutcome o = run(a.children[1], sub);
          auto* r = std::get_if<Subgoals>(&o);
          if (r == nullptr) return o;
          out.goals.insert(out.goals.end(), r->goals.begin(), r->goals.end());
        }
        return out;
      }
      case ScriptAst::Kind::Thenl: {
        TacticOutcome first = run(a.children[0], g);
        auto* s = std::get_if<Subgoals>(&first);
        if (s == nullptr) return first;
        const std::size_t branches = a.children.size() - 1;
        if (s->goals.size() != branches) {
          throw ScriptError("THENL after '" + print_script(a.children[0]) + "' has " +
                            std::to_string(branches) + " branches for " +
                            std::to_string(s->goals.size()) + " goals");
        }
        Subgoals out;
        for (std::size_t i = 0; i < branches; ++i) {
          TacticOutcome o = run(a.children[i + 1], s->goals[i]);
          auto* r = std::get_if<Subgoals>(&o);
          if (r == nullptr) return o;
          out.goals.insert(out.goals.end(), r->goals.begin(), r->goals.end());
        }
        return out;
      }
    }
    return Failure{"bad script node"};
  }
};

}  // namespace

TacticCall parse_tactic_call(std::string_view text) {
  Parser p(text);
  TacticCall c = p.call();
  p.finish();
  return c;
}

ScriptAst ScriptAst::atomic(std::string tactic) {
  ScriptAst a;
  a.kind = Kind::Atomic;
  a.tactic = std::move(tactic);
  return a;
}

ScriptAst ScriptAst::then(ScriptAst a, ScriptAst b) {
  ScriptAst s;
  s.kind = Kind::Then;
  s.children.push_back(std::move(a));
  s.children.push_back(std::move(b));
  return s;
}

ScriptAst ScriptAst::thenl(ScriptAst head, std::vector<ScriptAst> branches) {
  ScriptAst s;
  s.kind = Kind::Thenl;
  s.children.push_back(std::move(head));
  for (ScriptAst& b : branches) s.children.push_back(std::move(b));
  return s;
}

ScriptAst parse_script(std::string_view text) {
  Parser p(text);
  ScriptAst a = p.script();
  p.finish();
  return a;
}

std::string print_script(const ScriptAst& ast) {
  std::string out;
  print_into(ast, out);
  return out;
}

std::vector<std::string> atomic_tactics(const ScriptAst& ast) {
  std::vector<std::string> out;
  collect(ast, out);
  return out;
}

TacticOutcome run_script(const ScriptAst& ast, const Goal& goal, const TacticLibrary& library,
                         const Recorder& recorder, const RunOptions& opts) {
  Runner r{library, recorder, opts};
  return r.run(ast, goal);
}

bool replay(const Goal& conjecture, std::string_view script, const TacticLibrary& library,
            const RunOptions& opts) {
  const ScriptAst ast = parse_script(script);
  try {
    return closed(run_script(ast, conjecture, library, nullptr, opts));
  } catch (const ScriptError&) {
    return false;
  }
}

}  // namespace tacsearch
