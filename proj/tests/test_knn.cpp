#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "tacsearch/errors.hpp"
#include "tacsearch/knn_db.hpp"
#include "tacsearch/syntax.hpp"
#include "test_util.hpp"

using namespace tacsearch;

TEST_CASE("scoring matches the brute-force oracle on random databases") {
  const oracle::Report r = oracle::scoring(120, 2026);
  INFO(r.first);
  CHECK(r.cases == 120);
  CHECK(r.checks > 10000);
  CHECK(r.mismatches == 0);
}

TEST_CASE("tfidf") {
  CHECK(FeatureDb::tfidf(10, 0) == doctest::Approx(std::log(10.0)));
  CHECK(FeatureDb::tfidf(10, 9) == 0.0);
  CHECK(FeatureDb::tfidf(10, 4) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("document frequencies and tactic rows") {
  FeatureDb db;
  db.add_goal_vector("a_tac", {"const:x", "const:y"}, Origin::Human, 0);
  db.add_goal_vector("b_tac", {"const:y"}, Origin::Human, 1);
  db.add_goal_vector("a_tac", {"const:z"}, Origin::Generated, 2);
  CHECK(db.size() == 3);
  CHECK(db.doc_frequency(db.find_feature("const:y")) == 2);
  CHECK(db.find_feature("const:w") < 0);
  CHECK(db.tactics() == std::vector<std::string>{"a_tac", "b_tac"});
  CHECK(db.coverage("a_tac") == 2);
  CHECK(db.max_sequence_index() == 2);

  const Query q = db.query(FeatureSet{"const:w", "const:y"});
  CHECK(q.known.size() == 1);
  CHECK(q.unknown == 1);
  CHECK(db.feature_count() == 3);  // queries never intern
}

TEST_CASE("normalized scores lie in [0, 1] and a goal scores 1 against itself") {
  FeatureDb db;
  db.add_goal_vector("a_tac", {"const:x", "const:y"}, Origin::Human, 0);
  db.add_goal_vector("b_tac", {"const:y", "const:z", "var:v"}, Origin::Human, 1);
  db.add_goal_vector("c_tac", {"const:q"}, Origin::Human, 2);
  for (const FeatureSet& fs : {FeatureSet{"const:x", "const:y"}, FeatureSet{"const:y", "const:z", "var:v"}}) {
    const auto scored = score_tactics(db, db.query(fs), db.tactics());
    REQUIRE_FALSE(scored.empty());
    for (const ScoredTactic& s : scored) {
      CHECK(s.norm_score >= 0.0);
      CHECK(s.norm_score <= 1.0);
    }
    CHECK(scored.front().norm_score == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("zero self score falls back to containment") {
  FeatureDb db;
  // every feature present in every vector: all tfidf weights are zero
  db.add_goal_vector("a_tac", {"const:x"}, Origin::Human, 0);
  db.add_goal_vector("b_tac", {"const:x"}, Origin::Human, 1);
  const auto s = score_tactics(db, db.query(FeatureSet{"const:x"}), {"b_tac", "a_tac"});
  REQUIRE(s.size() == 2);
  CHECK(s[0].tactic == "a_tac");  // equal scores: earlier row first
  CHECK(s[0].norm_score == 1.0);
}

TEST_CASE("theorem vectors merge tactics") {
  FeatureDb db;
  db.add_theorem_vector("T", {"const:x"}, {"a_tac"}, 0);
  db.add_theorem_vector("T", {"const:x"}, {"b_tac", "a_tac"}, 0);
  REQUIRE(db.theorem_vectors().size() == 1);
  CHECK(db.theorem_vectors()[0].tactics == std::vector<std::string>{"a_tac", "b_tac"});
}

TEST_CASE("save and load round trip") {
  const Signature sig = testutil::sig_with({{"f", "num -> num"}});
  FeatureDb db;
  db.declare_constant("f", parse_type("num -> num"));
  db.add_goal_vector("rewrite_tac [F_ID]", {"const:f", "var:n"}, Origin::Human, 0);
  db.add_goal_vector("strip_tac", {"const:!"}, Origin::Generated, 0);
  db.add_theorem_vector("F_ID", {"const:f"}, {"rewrite_tac [F_ID]", "strip_tac"}, 0);
  Theorem t = testutil::thm("F_ID", "!n:num. f n = n", sig, 0);
  db.add_statement(t);
  Theorem ax = testutil::thm("AX", "f 0 = 0", sig, 1);
  db.add_statement(ax);
  std::stringstream ss;
  db.save(ss);
  const FeatureDb back = FeatureDb::load(ss);
  CHECK(back == db);
  CHECK(back.statement("F_ID") != nullptr);
  CHECK(back.signature().contains("f"));

  std::stringstream bad("C\tf\tnum -> num\nX\tjunk\n");
  try {
    FeatureDb::load(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("copies are independent") {
  FeatureDb a;
  a.add_goal_vector("a_tac", {"const:x"}, Origin::Human, 0);
  (void)a.powered_weights(6.0);
  FeatureDb b = a;
  b.add_goal_vector("b_tac", {"const:y"}, Origin::Human, 1);
  CHECK(a.size() == 1);
  CHECK(b.size() == 2);
  CHECK(b.powered_weights(6.0).size() == 2);
}

TEST_CASE("orthogonalization prefers the most covered same-effect tactic") {
  const Signature sig = Signature::standard();
  TheoremEnv env;
  TacticLibrary lib(sig, env);
  FeatureDb db;
  const Goal g1 = parse_goal("!n:num. n = n", sig);
  // gen_strip_tac is recorded often; strip_tac once
  for (int i = 0; i < 3; ++i) {
    record_invocation(db, lib, g1, "gen_strip_tac", Origin::Human, false, static_cast<std::size_t>(i));
  }
  const std::string label =
      record_invocation(db, lib, g1, "strip_tac", Origin::Human, true, 3);
  CHECK(label == "gen_strip_tac");
  // a different effect keeps its own label
  const Goal g2 = parse_goal("!n:num. !m:num. n = m", sig);
  CHECK(record_invocation(db, lib, g2, "strip_tac", Origin::Human, true, 4) == "strip_tac");
}
