// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <variant>

#include "tacsearch/errors.hpp"
#include "tacsearch/script.hpp"
#include "tacsearch/syntax.hpp"

namespace tacsearch {

namespace {

struct RawEntry {
  std::string name;
  std::string statement;
  std::size_t statement_column = 0;
  std::string proof;
  bool axiom = false;
  std::size_t line = 0;
  std::size_t proof_line = 0;
};

struct RawConst {
  std::string name;
  std::string type;
  std::size_t line;
};

struct RawTheory {
  std::string name;
  std::size_t line = 0;
  std::vector<std::string> required;
  // Constants and entries interleaved in file order.
  std::vector<std::variant<RawConst, RawEntry>> items;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool name_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_' && c != '\'') return false;
  }
  return true;
}

std::string keyword_of(const std::string& line) {
  if (line.empty() || std::isspace(static_cast<unsigned char>(line[0])) != 0) return "";
  std::size_t e = 0;
  while (e < line.size() && (std::isalnum(static_cast<unsigned char>(line[e])) != 0 || line[e] == '_')) ++e;
  const std::string w = line.substr(0, e);
  static const std::set<std::string> kws = {"theory", "requires", "const", "axiom", "thm", "proof"};
  return kws.count(w) ? w : "";
}

std::vector<RawTheory> scan(std::string_view text) {
  std::vector<RawTheory> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  RawEntry* open_proof = nullptr;
  RawEntry* pending = nullptr;  // thm waiting for its proof
  auto need_theory = [&](std::size_t col) -> RawTheory& {
    if (out.empty()) throw ParseError("stanza outside a theory", lineno, col);
    return out.back();
  };
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    const std::string kw = keyword_of(line);
    if (kw.empty()) {
      if (trim(line).empty()) continue;
      if (open_proof == nullptr) throw ParseError("unexpected text '" + trim(line) + "'", lineno, 1);
      if (!open_proof->proof.empty()) open_proof->proof += '\n';
      open_proof->proof += trim(line);
      continue;
    }
    open_proof = nullptr;
    const std::string rest = trim(std::string_view(line).substr(kw.size()));
    if (kw != "proof" && pending != nullptr) {
      throw ParseError("theorem '" + pending->name + "' has no proof", pending->line, 1);
    }
    if (kw == "theory") {
      if (!name_ok(rest)) throw ParseError("bad theory name", lineno, kw.size() + 2);
      RawTheory t;
      t.name = rest;
      t.line = lineno;
      out.push_back(std::move(t));
    } else if (kw == "requires") {
      RawTheory& t = need_theory(1);
      std::istringstream names(rest);
      std::string n;
      while (names >> n) {
        if (!name_ok(n)) throw ParseError("bad theory name '" + n + "'", lineno, 1);
        t.required.push_back(n);
      }
    } else if (kw == "const") {
      RawTheory& t = need_theory(1);
      const std::size_t colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError("expected 'const NAME : type'", lineno, 1);
      RawConst c{trim(rest.substr(0, colon)), trim(rest.substr(colon + 1)), lineno};
      if (!name_ok(c.name)) throw ParseError("bad constant name", lineno, 7);
      t.items.emplace_back(std::move(c));
    } else if (kw == "axiom" || kw == "thm") {
      RawTheory& t = need_theory(1);
      const std::size_t colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError("expected '" + kw + " NAME: \"statement\"'", lineno, 1);
      RawEntry e;
      e.name = trim(rest.substr(0, colon));
      e.axiom = kw == "axiom";
      e.line = lineno;
      if (!name_ok(e.name)) throw ParseError("bad theorem name", lineno, kw.size() + 2);
      const std::string stmt = trim(rest.substr(colon + 1));
      if (stmt.size() < 2 || stmt.front() != '"' || stmt.back() != '"') {
        throw ParseError("statement must be quoted", lineno, line.find(':') + 2);
      }
      e.statement = stmt.substr(1, stmt.size() - 2);
      e.statement_column = line.find('"') + 2;
      t.items.emplace_back(std::move(e));
      if (kw == "thm") pending = &std::get<RawEntry>(t.items.back());
    } else {  // proof
      if (pending == nullptr) throw ParseError("proof without a theorem", lineno, 1);
      if (rest.empty() || rest[0] != ':') throw ParseError("expected 'proof:'", lineno, 6);
      pending->proof = trim(std::string_view(rest).substr(1));
      pending->proof_line = lineno;
      open_proof = pending;
      pending = nullptr;
    }
  }
  if (pending != nullptr) {
    throw ParseError("theorem '" + pending->name + "' has no proof", pending->line, 1);
  }
  for (RawTheory& t : out) {
    for (auto& item : t.items) {
      if (auto* e = std::get_if<RawEntry>(&item); e && !e->axiom && e->proof.empty()) {
        throw ParseError("theorem '" + e->name + "' has an empty proof", e->proof_line, 1);
      }
    }
  }
  return out;
}

std::vector<std::size_t> order_theories(const std::vector<RawTheory>& ts) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!index.emplace(ts[i].name, i).second) {
      throw CorpusError("line " + std::to_string(ts[i].line) + ": theory '" + ts[i].name +
                        "' defined twice");
    }
  }
  for (const RawTheory& t : ts) {
    for (const std::string& r : t.required) {
      if (!index.count(r)) {
        throw CorpusError("theory '" + t.name + "' requires unknown theory '" + r + "'");
      }
    }
  }
  // Depth-first; file order among independent theories.
  std::vector<int> state(ts.size(), 0);
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (state[i] == 2) return;
    if (state[i] == 1) {
      std::string cycle;
      auto it = std::find(stack.begin(), stack.end(), i);
      for (; it != stack.end(); ++it) cycle += ts[*it].name + " -> ";
      cycle += ts[i].name;
      throw CorpusError("cyclic requires: " + cycle);
    }
    state[i] = 1;
    stack.push_back(i);
    for (const std::string& r : ts[i].required) visit(index.at(r));
    stack.pop_back();
    state[i] = 2;
    order.push_back(i);
  };
  for (std::size_t i = 0; i < ts.size(); ++i) visit(i);
  return order;
}

void collect_names(const ScriptAst& a, std::vector<std::string>& out) {
  for (const std::string& s : atomic_tactics(a)) {
    TacticCall c = parse_tactic_call(s);
    for (const std::string& n : c.names) out.push_back(n);
  }
}

}  // namespace

std::size_t Corpus::theorem_count() const {
  std::size_t n = 0;
  for (const CorpusTheory& t : theories) {
    for (const CorpusEntry& e : t.entries) n += e.axiom ? 0 : 1;
  }
  return n;
}

std::vector<const CorpusEntry*> Corpus::chronological() const {
  std::vector<const CorpusEntry*> out;
  for (const CorpusTheory& t : theories) {
    for (const CorpusEntry& e : t.entries) out.push_back(&e);
  }
  return out;
}

const std::string& Corpus::theory_of(std::size_t sequence_index) const {
  for (const CorpusTheory& t : theories) {
    if (!t.entries.empty() && sequence_index >= t.entries.front().theorem.sequence_index &&
        sequence_index <= t.entries.back().theorem.sequence_index) {
      return t.name;
    }
  }
  throw CorpusError("no entry with sequence index " + std::to_string(sequence_index));
}

Corpus parse_corpus_text(std::string_view text) {
  const std::vector<RawTheory> raw = scan(text);
  const std::vector<std::size_t> order = order_theories(raw);
  Corpus corpus;
  std::map<std::string, std::string> owner;  // theorem -> theory
  std::map<std::string, std::set<std::string>> visible_theories;
  std::size_t seq = 0;
  for (std::size_t ti : order) {
    const RawTheory& rt = raw[ti];
    std::set<std::string> vis{rt.name};
    for (const std::string& r : rt.required) {
      vis.insert(r);
      const auto& sub = visible_theories.at(r);
      vis.insert(sub.begin(), sub.end());
    }
    visible_theories[rt.name] = vis;
    CorpusTheory th;
    th.name = rt.name;
    th.required = rt.required;
    for (const auto& item : rt.items) {
      if (const auto* c = std::get_if<RawConst>(&item)) {
        Type ty;
        try {
          ty = parse_type(c->type);
        } catch (const ParseError& e) {
          throw ParseError(e.message(), c->line, 1);
        }
        if (corpus.signature.contains(c->name)) {
          throw CorpusError("line " + std::to_string(c->line) + ": constant '" + c->name +
                            "' declared twice");
        }
        corpus.signature.declare(c->name, ty);
        th.constants.emplace_back(c->name, ty);
        continue;
      }
      const RawEntry& re = std::get<RawEntry>(item);
      CorpusEntry e;
      e.axiom = re.axiom;
      e.line = re.line;
      e.proof = re.proof;
      e.theorem.name = re.name;
      e.theorem.sequence_index = seq++;
      try {
        e.theorem.statement = parse_goal(re.statement, corpus.signature);
      } catch (const ParseError& err) {
        throw ParseError(err.message(), re.line, re.statement_column + (err.column() ? err.column() - 1 : 0));
      } catch (const TypeError& err) {
        throw ParseError(err.what(), re.line, re.statement_column);
      }
      if (!free_vars(e.theorem.statement.conclusion).empty()) {
        throw CorpusError("line " + std::to_string(re.line) + ": statement of '" + re.name +
                          "' has free variables");
      }
      if (!re.axiom) {
        ScriptAst ast;
        try {
          ast = parse_script(re.proof);
        } catch (const ParseError& err) {
          throw ParseError(err.message(), re.proof_line + (err.line() ? err.line() - 1 : 0),
                           err.column());
        }
        std::vector<std::string> deps;
        collect_names(ast, deps);
        std::sort(deps.begin(), deps.end());
        deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
        for (const std::string& d : deps) {
          auto it = owner.find(d);
          if (it == owner.end() || !vis.count(it->second)) {
            throw CorpusError("line " + std::to_string(re.proof_line) + ": proof of '" + re.name +
                              "' refers to unknown theorem '" + d + "'");
          }
        }
        e.theorem.dependencies = std::move(deps);
      }
      if (!owner.emplace(re.name, rt.name).second) {
        throw CorpusError("line " + std::to_string(re.line) + ": theorem '" + re.name +
                          "' defined twice");
      }
      th.entries.push_back(std::move(e));
    }
    corpus.theories.push_back(std::move(th));
  }
  return corpus;
}

Corpus parse_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read corpus '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus_text(ss.str());
}

}  // namespace tacsearch
