#include <doctest.h>

#include <functional>
#include <map>

#include "mini_corpus.hpp"
#include "tacsearch/corpus.hpp"
#include "tacsearch/errors.hpp"
#include "tacsearch/harness.hpp"
#include "tacsearch/script.hpp"
#include "tacsearch/search.hpp"
#include "tacsearch/syntax.hpp"

using namespace tacsearch;

namespace {

struct Env {
  Corpus corpus = parse_corpus_text(kMiniCorpus);
  FeatureDb db = record_corpus(corpus, false);
  TheoremEnv env;
  TacticLibrary lib{corpus.signature, env};
  Env() {
    for (const CorpusEntry* e : corpus.chronological()) env.add(e->theorem);
  }
  Goal goal(const std::string& s) const { return parse_goal(s, corpus.signature); }
};

// AND-OR breadth-first oracle over every recorded tactic: is there a proof
// tree of depth <= d?
bool bfs_provable(const Env& e, const Goal& g, int d, std::map<std::string, int>& memo) {
  const std::string key = goal_key(g);
  if (auto it = memo.find(key); it != memo.end() && it->second >= d) return false;
  if (d == 0) return false;
  for (const std::string& t : e.db.tactics()) {
    TacticOutcome o = apply_with_budget(e.lib.parse(t), g, 0.02);
    const auto* s = std::get_if<Subgoals>(&o);
    if (s == nullptr) continue;
    bool all = true;
    for (const Goal& c : s->goals) {
      if (!bfs_provable(e, c, d - 1, memo)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  memo[key] = std::max(memo[key], d);
  return false;
}

StrategyConfig variant(int v) {
  StrategyConfig c;
  c.codist.variant = v;
  c.codist.k1 = 0.8;
  c.codist.k2 = 0.8;
  c.search_budget = 5.0;
  return c;
}

}  // namespace

TEST_CASE("co-distance variants") {
  CoDistance c;
  c.variant = 5;
  c.k1 = 0.5;
  c.k2 = 0.25;
  CHECK(codist_value(c, 2, 1, 0.9) == doctest::Approx(0.25 * 0.25));
  c.variant = 4;
  CHECK(codist_value(c, 2, 1, 0.9) == doctest::Approx(0.25 * 0.25 * 0.9));
  c.variant = 3;
  CHECK(codist_value(c, 2, 1, 0.9) == doctest::Approx(0.25 * 0.9));
  c.variant = 1;
  CHECK(codist_value(c, 2, 1, 0.9) == doctest::Approx(0.9));
}

TEST_CASE("invalid strategies are rejected") {
  StrategyConfig c;
  c.codist.variant = 9;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = StrategyConfig{};
  c.codist.k1 = 1.5;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = StrategyConfig{};
  c.search_budget = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("search agrees with the breadth-first oracle") {
  Env e;
  const char* goals[] = {
      "!a b:bool. a /\\ b ==> b /\\ a",
      "!a:bool. a ==> a",
      "!a b:bool. a ==> a \\/ b",
      "!q:bool. q \\/ ~q",
      "!m:num. m + 0 = m",
      "!m:num. SUC 0 + m = SUC m",
      "!a b:bool. a /\\ b ==> a /\\ a",
      "!a b c:bool. a /\\ b ==> c",
  };
  for (const char* s : goals) {
    const Goal g = e.goal(s);
    std::map<std::string, int> memo;
    const bool oracle = bfs_provable(e, g, 3, memo);
    for (int v : {3, 4, 5}) {
      const SearchResult r = search(g, e.db, e.lib, variant(v));
      INFO(s, " variant ", v);
      if (oracle) CHECK(r.status == SearchResult::Status::Proved);
      if (r.status == SearchResult::Status::Proved) {
        CHECK(replay(g, r.script, e.lib));
        CHECK(r.tree.has_value());
      }
      CHECK(count_ancestor_violations(r.trace) == 0);
      CHECK(count_duplicate_siblings(r.trace) == 0);
      if (v == 5) CHECK(count_cost_order_violations(r.trace) == 0);
    }
  }
}

TEST_CASE("an unprovable goal saturates") {
  Env e;
  const SearchResult r = search(e.goal("!a b c:bool. a /\\ b ==> c"), e.db, e.lib, variant(5));
  CHECK(r.status != SearchResult::Status::Proved);
  CHECK(r.script.empty());
}

TEST_CASE("search is deterministic and the cache only saves work") {
  Env e;
  const Goal g = e.goal("!m:num. m + SUC 0 = SUC m");
  StrategyConfig c = variant(5);
  const SearchResult a = search(g, e.db, e.lib, c);
  const SearchResult b = search(g, e.db, e.lib, c);
  CHECK(a.script == b.script);
  CHECK(a.stats.node_count == b.stats.node_count);
  CHECK(a.stats.elapsed == b.stats.elapsed);
  c.use_cache = false;
  const SearchResult n = search(g, e.db, e.lib, c);
  CHECK(n.status == a.status);
  CHECK(n.script == a.script);
  CHECK(n.stats.elapsed >= a.stats.elapsed);
}

TEST_CASE("parallel scoring does not change the search") {
  Env e;
  const Goal g = e.goal("!a b:bool. a /\\ b ==> b /\\ a");
  StrategyConfig c = variant(5);
  const SearchResult a = search(g, e.db, e.lib, c);
  c.parallel_scoring = true;
  const SearchResult b = search(g, e.db, e.lib, c);
  CHECK(a.script == b.script);
  CHECK(a.stats.node_count == b.stats.node_count);
}

TEST_CASE("greedy never explores more than one child per goal") {
  Env e;
  StrategyConfig c = variant(5);
  c.greedy = true;
  const SearchResult r = search(e.goal("!a:bool. a ==> a"), e.db, e.lib, c);
  std::map<std::pair<int, int>, int> per_goal;
  for (const TraceNode& n : r.trace.nodes) {
    if (n.parent >= 0) ++per_goal[{n.parent, n.parent_goal}];
  }
  for (const auto& [_, k] : per_goal) CHECK(k == 1);
}

TEST_CASE("the hammer closes goals nh cannot") {
  Env e;
  // no recorded tactic mentions ADD_ONE, the hammer can use it
  const Goal g = e.goal("SUC (SUC 0) + SUC 0 = SUC (SUC (SUC 0)) ==> SUC (SUC 0) + SUC 0 = SUC (SUC (SUC 0))");
  StrategyConfig sh = preset("sh");
  const SearchResult r = search(g, e.db, e.lib, sh);
  CHECK(r.status == SearchResult::Status::Proved);
}

TEST_CASE("reconstruction") {
  ProofTree leaf{Goal{}, "accept_tac", true, {}};
  ProofTree one{Goal{}, "strip_tac", true, {leaf}};
  ProofTree two{Goal{}, "conj_tac", true, {leaf, one}};
  CHECK(reconstruct(leaf) == "accept_tac");
  CHECK(reconstruct(one) == "strip_tac THEN accept_tac");
  CHECK(reconstruct(two) == "conj_tac THENL [accept_tac, strip_tac THEN accept_tac]");
  ProofTree open{Goal{}, "conj_tac", false, {}};
  CHECK_THROWS_AS(reconstruct(open), InvariantViolation);
}

TEST_CASE("trace audits detect planted violations") {
  const Signature sig = Signature::standard();
  const Goal a = parse_goal("(p:bool) ==> p", sig);
  const Goal b = parse_goal("(q:bool) ==> q", sig);
  SearchTrace t;
  t.nodes.push_back(TraceNode{0, -1, -1, {a}, false});
  t.nodes.push_back(TraceNode{1, 0, 0, {a}, false});  // contains its ancestor goal
  t.nodes.push_back(TraceNode{2, 0, 0, {b}, false});
  t.nodes.push_back(TraceNode{3, 0, 0, {b}, false});  // same goals as sibling 2
  CHECK(count_ancestor_violations(t) == 1);
  CHECK(count_duplicate_siblings(t) == 1);
  t.expansions.push_back(Expansion{0, 2, 1, 0.5, "x"});
  t.expansions.push_back(Expansion{1, 1, 1, 0.5, "y"});
  CHECK(count_cost_order_violations(t) == 1);
}
