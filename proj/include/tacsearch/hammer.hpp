// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tacsearch/knn_db.hpp"
#include "tacsearch/tactic.hpp"
#include "tacsearch/term.hpp"

namespace tacsearch {

struct HammerConfig {
  std::size_t preselect_n = 500;
  std::size_t final_n = 16;
  double budget = 0.1;
};

// Theorems chosen once per search, with their feature ids in the db.
struct Preselection {
  std::vector<Theorem> theorems;
  std::vector<IdVector> features;
  std::vector<double> scores;
};

// k-NN ranking of the db's theorem statements against the conjecture. Each
// theorem ranked within the first n passes score / |deps| to every one of
// its dependencies, then the list is re-ranked and cut to n. Ties go to the
// earlier theorem.
Preselection preselect_theorems(const FeatureDb& db, const Goal& conjecture, std::size_t n,
                                double tau = 6.0);

// Top n of the preselection by tactic_score_1 against the goal, ties broken
// by preselection rank. Returns indices into pre.theorems.
std::vector<std::size_t> select_premises(const FeatureDb& db, const Preselection& pre,
                                         const Goal& goal, std::size_t n, double tau = 6.0);

// The search-time hammer: select, clausify, resolve. A proof is checked by
// replaying `hammer_tac [used premises]` through the library before it is
// reported; the outcome's label is that replay string.
Tactic hammer_tactic(const FeatureDb& db, const TacticLibrary& library, const Preselection& pre,
                     const HammerConfig& config, ClockMode clock = ClockMode::Virtual,
                     double tau = 6.0);

}  // namespace tacsearch
