#pragma once

// Brute-force recomputations shared by the unit tests and the acceptance
// binary. Nothing here calls the scoring or proving code it checks.

#include <cstddef>
#include <string>

namespace oracle {

struct Report {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;  // inputs the code under test declined (documented limits)
  std::string first;  // first mismatch, for diagnostics

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (mismatches == 0) first = what;
      ++mismatches;
    }
  }
};

// tactic_score_1/2, self scores, score_tactics, preselect_tactics,
// preselect_theorems and select_premises on random databases of at most 50
// goal vectors.
Report scoring(std::size_t databases, unsigned seed);

// Random clause sets: propositional ones over at most 4 atoms, and
// function-free first-order ones over two constants and two unary
// predicates (4 ground atoms). At most 8 clauses. Proof must coincide with
// unsatisfiability by enumeration of all ground interpretations.
Report prover(std::size_t instances, unsigned seed);

// Random propositional formulas with boolean quantifiers: the clause set of
// ~F must agree with ~F under every assignment of F's variables. Formulas
// past the clausifier's size cap are counted as skipped.
Report clausify(std::size_t formulas, unsigned seed);

}  // namespace oracle
