// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tacsearch/budget.hpp"
#include "tacsearch/features.hpp"
#include "tacsearch/kernels.hpp"
#include "tacsearch/tactic.hpp"
#include "tacsearch/term.hpp"

namespace tacsearch {

enum class Origin : std::uint8_t { Human, Generated };

std::string_view origin_name(Origin o);

using kernels::IdVector;

struct GoalVector {
  std::string tactic;
  IdVector features;
  Origin origin = Origin::Human;
  std::size_t sequence_index = 0;
};

struct TheoremVector {
  std::string name;
  IdVector features;
  std::vector<std::string> tactics;
  std::size_t sequence_index = 0;
};

struct ScoredTactic {
  std::string tactic;
  double norm_score = 0.0;
};

// A goal's features resolved against a db. Features the db has never seen
// are counted but not interned, so queries never mutate the db.
struct Query {
  IdVector known;
  std::size_t unknown = 0;
  std::size_t size() const { return known.size() + unknown; }
};

// Goal vectors, theorem vectors and theorem statements in chronological
// order, with document frequencies maintained over the goal vectors.
class FeatureDb {
 public:
  FeatureDb();
  explicit FeatureDb(const FeatureOptions& options);
  FeatureDb(const FeatureDb& other);
  FeatureDb& operator=(const FeatureDb& other);

  const FeatureOptions& options() const { return options_; }

  // --- recording
  void declare_constant(const std::string& name, const Type& type);
  void add_statement(const Theorem& thm);
  void add_goal_vector(const std::string& tactic, const FeatureSet& features, Origin origin,
                       std::size_t sequence_index);
  // Merges tactics into an existing vector of the same name.
  void add_theorem_vector(const std::string& name, const FeatureSet& features,
                          const std::vector<std::string>& tactics, std::size_t sequence_index);

  // --- features
  int find_feature(std::string_view f) const;
  const std::string& feature_name(int id) const { return feature_names_.at(static_cast<std::size_t>(id)); }
  std::size_t feature_count() const { return feature_names_.size(); }
  Query query(const FeatureSet& features) const;
  Query query(const Goal& goal) const;
  FeatureSet names_of(const IdVector& ids) const;

  // --- access
  std::size_t size() const { return goals_.size(); }
  const std::vector<GoalVector>& goal_vectors() const { return goals_; }
  const std::vector<IdVector>& goal_features() const { return goal_features_; }
  const std::vector<TheoremVector>& theorem_vectors() const { return theorem_vectors_; }
  const std::vector<IdVector>& theorem_features() const { return theorem_features_; }
  const std::vector<Theorem>& statements() const { return statements_; }
  const std::vector<IdVector>& statement_features() const { return statement_features_; }
  const Theorem* statement(const std::string& name) const;
  const Signature& signature() const { return sig_; }

  // Distinct tactic strings in first-recorded order.
  const std::vector<std::string>& tactics() const { return tactic_order_; }
  const std::vector<std::size_t>& rows_of(const std::string& tactic) const;
  std::size_t coverage(const std::string& tactic) const { return rows_of(tactic).size(); }

  // --- weighting
  std::size_t total_docs() const { return goals_.size(); }
  std::size_t doc_frequency(int id) const;
  const std::vector<std::size_t>& doc_frequencies() const { return df_; }
  // max(0, ln(N / (1 + df))); features absent from the db have df = 0.
  static double tfidf(std::size_t total_docs, std::size_t df);
  double tfidf(int id) const { return tfidf(total_docs(), doc_frequency(id)); }
  // tfidf(f)^tau for every interned feature; cached per tau.
  const std::vector<double>& powered_weights(double tau) const;

  // Largest sequence index of any stored entry, or -1 when empty.
  long max_sequence_index() const;

  friend bool operator==(const FeatureDb& a, const FeatureDb& b);

  // --- persistence
  void save(std::ostream& out) const;
  void save(const std::string& path) const;
  static FeatureDb load(std::istream& in);
  static FeatureDb load(const std::string& path);

 private:
  IdVector intern_all(const FeatureSet& features);
  void invalidate();

  FeatureOptions options_;
  Signature sig_;
  std::vector<std::string> feature_names_;
  std::unordered_map<std::string, int> feature_ids_;
  std::vector<std::size_t> df_;
  std::vector<GoalVector> goals_;
  std::vector<IdVector> goal_features_;
  std::vector<TheoremVector> theorem_vectors_;
  std::vector<IdVector> theorem_features_;
  std::map<std::string, std::size_t> theorem_vector_index_;
  std::vector<Theorem> statements_;
  std::vector<IdVector> statement_features_;
  std::map<std::string, std::size_t> statement_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> tactic_rows_;
  std::vector<std::string> tactic_order_;

  mutable std::mutex weight_mutex_;
  mutable std::map<double, std::vector<double>> weight_cache_;
};

// ---------------------------------------------------------------------------
// Scoring

// Sum over f in fo ∩ fp of tfidf(f)^tau.
double tactic_score_1(const FeatureDb& db, const Query& fo, const IdVector& fp, double tau);
// tactic_score_1 / (1 + ln(1 + |fo|)).
double tactic_score_2(const FeatureDb& db, const Query& fo, const IdVector& fp, double tau);
// The same two scores over raw feature strings.
double tactic_score_1(const FeatureDb& db, const FeatureSet& fo, const FeatureSet& fp, double tau);
double tactic_score_2(const FeatureDb& db, const FeatureSet& fo, const FeatureSet& fp, double tau);

// Score of fo against itself, unknown features included.
double self_score(const FeatureDb& db, const Query& fo, int variant, double tau);

struct ScoreOptions {
  int variant = 1;
  double tau = 6.0;
  bool parallel = false;
};

// Best normalized score over each candidate's goal vectors, sorted by score
// descending, then first-recorded row, then string. When the open goal's
// self-similarity is zero, normalized scores fall back to |fo ∩ fp| / |fo|.
// `work` receives the number of feature comparisons made.
std::vector<ScoredTactic> score_tactics(const FeatureDb& db, const Query& open_goal,
                                        const std::vector<std::string>& candidates,
                                        const ScoreOptions& opts = {},
                                        std::uint64_t* work = nullptr);

// Walks theorem vectors by tactic_score_1 rank collecting their tactics until
// n distinct ones are found.
std::vector<std::string> preselect_tactics(const FeatureDb& db, const Query& conjecture,
                                           std::size_t n, double tau = 6.0);

// Indices of the goal vectors ordered by tactic_score_1 against fo
// (ties: earlier row first).
std::vector<std::size_t> nearest_goal_vectors(const FeatureDb& db, const Query& fo,
                                              std::size_t k, double tau = 6.0);

struct OrthoOptions {
  std::size_t neighborhood = 20;
  double tactic_budget = 0.02;
  ClockMode clock = ClockMode::Virtual;
  double tau = 6.0;
};

// The tactic among the neighborhood's labels with the largest db-wide
// coverage whose effect on `goal` is set-equal to `produced`; `tactic`
// itself when nothing qualifies.
std::string orthogonalize(const FeatureDb& db, const TacticLibrary& library,
                          const std::string& tactic, const Goal& goal,
                          const std::vector<Goal>& produced, const OrthoOptions& opts = {});

// Appends a goal vector, orthogonalized first when `ortho` is set. The
// tactic string must parse in `library`. Returns the stored label.
std::string record_invocation(FeatureDb& db, const TacticLibrary& library, const Goal& goal,
                              const std::string& tactic, Origin origin, bool ortho,
                              std::size_t sequence_index, const OrthoOptions& opts = {});

}  // namespace tacsearch
