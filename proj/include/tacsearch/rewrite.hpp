// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tacsearch/budget.hpp"
#include "tacsearch/term.hpp"

namespace tacsearch {

// lhs -> rhs with pattern variables implicitly universally quantified.
struct RewriteRule {
  Term lhs;
  Term rhs;
  std::vector<Term> pattern_vars;
  // lhs and rhs agree up to renaming pattern variables (e.g. commutativity).
  // Such rules only fire when the result is smaller in term_less.
  bool permutative = false;
};

// Total order on terms: size, then kind, then names/types, then children.
bool term_less(const Term& a, const Term& b);

// Splits conjunctions and strips leading universals into pattern variables.
// `l = r` and `l <=> r` give l -> r, `~p` gives p -> F, any other p gives
// p -> T. Rules with a bare pattern variable on the left or with pattern
// variables only on the right are dropped. Free variables stay fixed.
std::vector<RewriteRule> rules_of(const Term& statement);

class RewriteLimit : public std::runtime_error {
 public:
  RewriteLimit() : std::runtime_error("rewrite step limit reached") {}
};

// First-order matching of `pattern` against `t`; on success returns the
// binding for the pattern variables.
std::optional<Substitution> match_term(const Term& pattern, const Term& t,
                                       const std::vector<Term>& pattern_vars);

// Innermost normalization with the rules plus builtin simplifications of
// T/F connectives, x = x, trivial quantifiers and constructor equations.
class Rewriter {
 public:
  explicit Rewriter(std::vector<RewriteRule> rules, std::size_t max_steps = 1000);

  // Throws RewriteLimit after max_steps rewrites, BudgetExceeded on budget.
  Term normalize(const Term& t, Budget& budget);
  std::size_t steps() const { return steps_; }

 private:
  Term norm(const Term& t, Budget& budget, std::size_t depth);
  std::optional<Term> step_at_root(const Term& t, Budget& budget);
  void count_step();

  std::vector<RewriteRule> rules_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
};

// One-step constructor/connective simplification, exposed for tests.
std::optional<Term> builtin_simplify(const Term& t);

}  // namespace tacsearch
