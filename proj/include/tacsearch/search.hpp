// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tacsearch/budget.hpp"
#include "tacsearch/hammer.hpp"
#include "tacsearch/knn_db.hpp"
#include "tacsearch/tactic.hpp"
#include "tacsearch/term.hpp"

namespace tacsearch {

struct CoDistance {
  int variant = 5;
  double k1 = 0.8;
  double k2 = 0.8;
  int score_variant = 1;
};

// 1, 2: s. 3: k1^d s. 4: k1^d k2^w s. 5: k1^d k2^w.
double codist_value(const CoDistance& cfg, std::size_t d, std::size_t w, double s);

struct StrategyConfig {
  std::string name = "custom";
  CoDistance codist;
  double search_budget = 5.0;
  double tactic_budget = 0.02;
  std::size_t preselect_n = 500;
  std::optional<HammerConfig> hammer;
  bool ortho = false;
  bool self_learn = false;
  double tau = 6.0;
  ClockMode clock = ClockMode::Virtual;
  bool use_cache = true;
  // Apply only the best applicable prediction per goal, never backtrack.
  bool greedy = false;
  bool parallel_scoring = false;
  // Feature classes of the db the strategy learns from; the search itself
  // uses whatever db it is given.
  FeatureOptions features;
};

// Throws std::invalid_argument on out-of-range parameters.
void validate(const StrategyConfig& cfg);

struct ProofTree {
  Goal goal;
  std::string tactic;
  bool solved = false;
  // One child per goal the tactic produced, in production order.
  std::vector<ProofTree> children;
};

enum class TimeBucket : std::uint8_t {
  Prediction,
  TacticApplication,
  NodeCreation,
  NodeSelection,
  NodeDeletion
};
inline constexpr std::size_t kTimeBuckets = 5;

struct SearchStats {
  std::size_t node_count = 0;
  std::size_t proof_size = 0;
  std::size_t expansions = 0;
  double elapsed = 0.0;  // budget clock seconds
  double wall_seconds = 0.0;
  std::array<std::uint64_t, kTimeBuckets> ticks{};
  std::size_t cache_hits = 0;
};

// What the audits need about every node ever created.
struct TraceNode {
  int id = 0;
  int parent = -1;
  // Index into the parent's goals of the goal this node was created for.
  int parent_goal = -1;
  std::vector<Goal> goals;
  bool deleted = false;
};

struct Expansion {
  int node = 0;
  std::size_t d = 0;
  std::size_t w = 0;  // effective width, see search.cpp
  double value = 0.0;
  std::string tactic;
};

struct SearchTrace {
  std::vector<TraceNode> nodes;
  std::vector<Expansion> expansions;
};

struct SearchResult {
  enum class Status { Proved, Saturated, TimedOut };
  Status status = Status::Saturated;
  std::optional<ProofTree> tree;
  std::string script;
  SearchStats stats;
  SearchTrace trace;
};

std::string_view status_name(SearchResult::Status s);

// `library` must contain exactly the theorems visible to the conjecture.
// A Proved result's script has been replayed on the conjecture; a failed
// replay throws InvariantViolation.
SearchResult search(const Goal& conjecture, const FeatureDb& db, const TacticLibrary& library,
                    const StrategyConfig& cfg);

// P(tree): leaf `tac`, one child `tac THEN P(c)`, else `tac THENL [...]`.
// Throws InvariantViolation on an unsolved node.
std::string reconstruct(const ProofTree& tree);

// Audits over a trace; each returns the number of offending nodes.
std::size_t count_ancestor_violations(const SearchTrace& trace);
std::size_t count_duplicate_siblings(const SearchTrace& trace);
// Expansions whose d + w is below the previous one.
std::size_t count_cost_order_violations(const SearchTrace& trace);

}  // namespace tacsearch
