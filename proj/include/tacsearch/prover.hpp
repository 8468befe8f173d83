// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tacsearch/budget.hpp"
#include "tacsearch/term.hpp"

namespace tacsearch {

// First-order terms over interned symbols. sym >= 0 is a function symbol,
// sym < 0 is the variable -1 - sym.
struct FoTerm {
  int sym = 0;
  std::vector<FoTerm> args;

  bool is_var() const { return sym < 0; }
  static FoTerm variable(int index) { return FoTerm{-1 - index, {}}; }
  int var_index() const { return -1 - sym; }

  friend bool operator==(const FoTerm& a, const FoTerm& b) {
    return a.sym == b.sym && a.args == b.args;
  }
  friend bool operator<(const FoTerm& a, const FoTerm& b) {
    if (a.sym != b.sym) return a.sym < b.sym;
    return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(),
                                        b.args.end());
  }
};

struct Literal {
  bool positive = true;
  FoTerm atom;  // atom.sym is a predicate symbol

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive == b.positive && a.atom == b.atom;
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.atom.sym != b.atom.sym) return a.atom.sym < b.atom.sym;
    if (a.positive != b.positive) return a.positive < b.positive;
    return a.atom < b.atom;
  }
};

struct Clause {
  std::vector<Literal> literals;
  // Indices into ClauseSet::premise_names this clause descends from.
  std::vector<int> premises;
  std::vector<std::size_t> parents;
};

class SymbolTable {
 public:
  int intern(const std::string& name, std::size_t arity);
  const std::string& name(int sym) const { return names_.at(static_cast<std::size_t>(sym)); }
  std::size_t arity(int sym) const { return arities_.at(static_cast<std::size_t>(sym)); }
  std::size_t size() const { return names_.size(); }

 private:
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::vector<std::size_t> arities_;
};

struct ClauseSet {
  SymbolTable symbols;
  std::vector<Clause> clauses;
  std::vector<std::string> premise_names;
};

// CNF of premises, assumptions and the negated conclusion. Boolean
// quantifiers are expanded over T/F, free goal variables become constants,
// existentials are Skolemized (sk0, sk1, ...). Typed equality axioms are
// appended when `=` occurs. Goals outside the fragment throw
// UnsupportedFragment; premises outside it are skipped.
ClauseSet clausify(const Goal& goal, const std::vector<Theorem>& premises);

struct ResolveLimits {
  std::size_t max_literals = 8;
  std::size_t max_depth = 6;
  std::size_t max_clauses = 20000;
};

struct ProofResult {
  enum class Status { Proof, GaveUp, Timeout };
  Status status = Status::GaveUp;
  // Named premises behind the empty clause, sorted.
  std::vector<std::string> premises;
  std::size_t given = 0;
  std::size_t generated = 0;
};

// Given-clause binary resolution with factoring. Passive clauses are picked
// by (literal count + symbol count, age); tautologies, duplicates and
// forward-subsumed clauses are discarded.
ProofResult resolve(const ClauseSet& clauses, Budget& budget, const ResolveLimits& limits = {});

// clausify + resolve. Unsupported goals give GaveUp.
ProofResult prove_goal(const Goal& goal, const std::vector<Theorem>& premises, Budget& budget);

}  // namespace tacsearch
