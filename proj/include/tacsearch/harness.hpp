// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tacsearch/corpus.hpp"
#include "tacsearch/knn_db.hpp"
#include "tacsearch/search.hpp"

namespace tacsearch {

// Named strategies: nh (= D9), sh (= D19), greedy, D0..D9, D16..D19, E2, E3.
std::vector<std::string> preset_names();
// Throws std::invalid_argument for unknown names.
StrategyConfig preset(const std::string& name);

struct EvalRecord {
  std::string theorem;
  std::string theory;
  std::string strategy;
  SearchResult::Status outcome = SearchResult::Status::Saturated;
  double elapsed = 0.0;
  double wall_seconds = 0.0;
  std::size_t node_count = 0;
  std::size_t proof_size = 0;
  std::string script;
};

struct StrategyRow {
  std::string strategy;
  std::size_t attempted = 0;
  std::size_t solved = 0;
  double percent = 0.0;
  // Solved by this strategy and not by the reference.
  std::size_t unique_vs_reference = 0;
};

struct StrategyTable {
  std::string reference;
  std::vector<StrategyRow> rows;
  // overlap[a][b]: theorems solved by both a and b.
  std::map<std::string, std::map<std::string, std::size_t>> overlap;
};

// U(reference) per strategy; reference defaults to the first strategy seen.
StrategyTable strategy_table(const std::vector<EvalRecord>& records,
                             const std::string& reference = "");

struct EvalOptions {
  std::size_t stride = 1;
  // Collect audit counts over every search trace.
  bool audit = true;
  double record_tactic_budget = 1.0;
  // Called after each attempt, for progress output.
  std::function<void(const EvalRecord&)> on_record;
};

struct AuditSummary {
  std::size_t searches = 0;
  std::size_t ancestor_violations = 0;
  std::size_t duplicate_siblings = 0;
  std::size_t cost_order_checked = 0;  // traces eligible for the check
  std::size_t cost_order_violations = 0;
  std::size_t fairness_violations = 0;
  std::size_t replay_failures = 0;
  std::size_t recorded_invocations = 0;  // recorder sink calls
  std::size_t recorded_vectors = 0;      // goal vectors added by them
  std::size_t recorded_proofs = 0;
};

struct Evaluation {
  std::vector<EvalRecord> records;
  StrategyTable table;
  AuditSummary audit;
  // Final db per strategy.
  std::map<std::string, FeatureDb> dbs;
};

// Chronological re-proving: for each theorem (every stride-th), every
// strategy searches against the db of strictly earlier proofs, then the
// human proof (and with self_learn the found proof) is recorded. A human
// proof that does not replay throws CorpusError naming the theorem.
Evaluation evaluate(const Corpus& corpus, const std::vector<StrategyConfig>& strategies,
                    const EvalOptions& opts = {});

// Replays every human proof into one db; the `tacsearch record` path.
FeatureDb record_corpus(const Corpus& corpus, bool ortho, const FeatureOptions& features = {},
                        AuditSummary* audit = nullptr, double tactic_budget = 1.0);

// Writes results.csv, strategy_table.csv, size_histogram.csv,
// time_curve.csv and per_theory.csv into dir.
void report(const std::vector<EvalRecord>& records, const StrategyTable& table,
            const std::string& dir);

// CSV text of each report file, keyed by file name. Timing columns are
// dropped when include_timing is false.
std::map<std::string, std::string> report_files(const std::vector<EvalRecord>& records,
                                                const StrategyTable& table,
                                                bool include_timing = true);

}  // namespace tacsearch
