#include <doctest.h>

#include "mini_corpus.hpp"
#include "tacsearch/corpus.hpp"
#include "tacsearch/errors.hpp"
#include "tacsearch/harness.hpp"

using namespace tacsearch;

TEST_CASE("presets") {
  for (const std::string& n : preset_names()) {
    const StrategyConfig c = preset(n);
    CHECK(c.name == n);
    CHECK_NOTHROW(validate(c));
  }
  CHECK(preset("sh").hammer.has_value());
  CHECK_FALSE(preset("nh").hammer.has_value());
  CHECK(preset("greedy").greedy);
  CHECK(preset("E3").ortho);
  CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
}

TEST_CASE("recording emits one goal vector per tactic call") {
  const Corpus c = parse_corpus_text(kMiniCorpus);
  AuditSummary a;
  const FeatureDb db = record_corpus(c, false, {}, &a);
  CHECK(a.recorded_proofs == 9);
  CHECK(a.recorded_invocations == a.recorded_vectors);
  CHECK(db.size() == a.recorded_vectors);
  CHECK(db.statements().size() == 11);
}

TEST_CASE("human proofs that fail are reported by name") {
  CHECK_THROWS_WITH_AS(
      record_corpus(parse_corpus_text("theory a\nthm X: \"!p:bool. p\"\nproof: strip_tac\n"), false),
      doctest::Contains("'X'"), CorpusError);
}

TEST_CASE("chronological evaluation is fair and deterministic") {
  const Corpus c = parse_corpus_text(kMiniCorpus);
  std::vector<StrategyConfig> s = {preset("nh"), preset("greedy"), preset("E3")};
  for (StrategyConfig& x : s) x.search_budget = 1.0;
  const Evaluation a = evaluate(c, s);
  const Evaluation b = evaluate(c, s);
  CHECK(a.records.size() == 27);
  CHECK(a.audit.fairness_violations == 0);
  CHECK(a.audit.replay_failures == 0);
  CHECK(a.audit.ancestor_violations == 0);
  CHECK(a.audit.duplicate_siblings == 0);
  CHECK(report_files(a.records, a.table, false) == report_files(b.records, b.table, false));
  // the first theorem has nothing to learn from
  CHECK(a.records.front().outcome != SearchResult::Status::Proved);
  const auto files = report_files(a.records, a.table, true);
  CHECK(files.size() == 5);
  CHECK(files.at("results.csv").rfind("theorem,theory,strategy,outcome", 0) == 0);
  CHECK(report_files(a.records, a.table, false).count("time_curve.csv") == 0);
}

TEST_CASE("stride skips theorems but still records them") {
  const Corpus c = parse_corpus_text(kMiniCorpus);
  EvalOptions o;
  o.stride = 3;
  StrategyConfig nh = preset("nh");
  nh.search_budget = 1.0;
  const Evaluation e = evaluate(c, {nh}, o);
  CHECK(e.records.size() == 3);
  CHECK(e.dbs.at("nh").theorem_vectors().size() == 9);
  o.stride = 0;
  CHECK_THROWS_AS(evaluate(c, {nh}, o), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(c, {nh, nh}), std::invalid_argument);
}

TEST_CASE("strategy table") {
  std::vector<EvalRecord> recs;
  auto add = [&](const char* t, const char* s, bool ok) {
    EvalRecord r;
    r.theorem = t;
    r.strategy = s;
    r.outcome = ok ? SearchResult::Status::Proved : SearchResult::Status::Saturated;
    recs.push_back(r);
  };
  add("A", "x", true);
  add("A", "y", true);
  add("B", "x", false);
  add("B", "y", true);
  const StrategyTable t = strategy_table(recs);
  CHECK(t.reference == "x");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[1].solved == 2);
  CHECK(t.rows[1].unique_vs_reference == 1);
  CHECK(t.rows[1].percent == doctest::Approx(100.0));
  CHECK(t.overlap.at("x").at("y") == 1);
}
