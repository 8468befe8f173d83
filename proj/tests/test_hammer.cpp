#include <doctest.h>

#include "tacsearch/hammer.hpp"
#include "tacsearch/script.hpp"
#include "tacsearch/syntax.hpp"
#include "test_util.hpp"

using namespace tacsearch;

namespace {

struct World {
  Signature sig = testutil::sig_with({{"P", "num -> bool"}, {"Q", "num -> bool"}, {"R", "num -> bool"}, {"c", "num"}});
  TheoremEnv env;
  FeatureDb db;
  TacticLibrary lib{sig, env};

  World() {
    for (const auto& [n, t] : sig.declarations()) db.declare_constant(n, t);
    add("PQ", "!x:num. P x ==> Q x", {});
    add("QR", "!x:num. Q x ==> R x", {"PQ"});
    add("PC", "P c", {});
    add("OTHER", "!x:num. R x ==> R x", {"QR", "PC"});
  }
  void add(const std::string& n, const std::string& s, std::vector<std::string> deps) {
    Theorem t = testutil::thm(n, s, sig, env.size());
    t.dependencies = std::move(deps);
    env.add(t);
    db.add_statement(t);
  }
};

}  // namespace

TEST_CASE("premise preselection keeps chronological tie order") {
  World w;
  const Preselection pre = preselect_theorems(w.db, parse_goal("R c", w.sig), 10);
  CHECK(pre.theorems.size() == 4);
  for (std::size_t i = 1; i < pre.scores.size(); ++i) CHECK(pre.scores[i - 1] >= pre.scores[i]);
  const Preselection two = preselect_theorems(w.db, parse_goal("R c", w.sig), 2);
  CHECK(two.theorems.size() == 2);
  const auto sel = select_premises(w.db, pre, parse_goal("R c", w.sig), 3);
  CHECK(sel.size() == 3);
}

TEST_CASE("search-time hammer returns a replayable label") {
  World w;
  const Preselection pre = preselect_theorems(w.db, parse_goal("R c", w.sig), 10);
  HammerConfig cfg;
  cfg.final_n = 4;
  cfg.budget = 1.0;
  const Tactic h = hammer_tactic(w.db, w.lib, pre, cfg);
  CHECK(h.is_hammer());
  const Goal g = parse_goal("R c", w.sig);
  Budget b(1.0);
  const TacticOutcome o = h.apply(g, b);
  REQUIRE(closed(o));
  const std::string label = std::get<Subgoals>(o).label;
  CHECK(label == "hammer_tac [PC, PQ, QR]");
  CHECK(replay(g, label, w.lib));

  // only what the label lists is needed
  TheoremEnv just;
  for (const char* n : {"PC", "PQ", "QR"}) just.add(*w.env.find(n));
  TacticLibrary small(w.sig, just);
  CHECK(replay(g, label, small));
}

TEST_CASE("hammer fails cleanly without enough premises") {
  World w;
  const Preselection pre = preselect_theorems(w.db, parse_goal("R c", w.sig), 10);
  HammerConfig cfg;
  cfg.final_n = 1;
  const Tactic h = hammer_tactic(w.db, w.lib, pre, cfg);
  Budget b(1.0);
  CHECK_FALSE(closed(h.apply(parse_goal("R c", w.sig), b)));
}
