// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
//
// Acceptance run over the bundled corpus: one PASS/FAIL line per criterion.
// Exit status is nonzero when a criterion fails that was not named with
// --expect-fail.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tacsearch/corpus.hpp"
#include "tacsearch/harness.hpp"
#include "tacsearch/hammer.hpp"
#include "tacsearch/knn_db.hpp"
#include "tacsearch/script.hpp"
#include "tacsearch/search.hpp"
#include "tacsearch/syntax.hpp"

using namespace tacsearch;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Outcome> results;

void verdict(int id, bool pass, const std::string& detail) {
  results.push_back({id, pass, detail});
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::size_t solved(const Evaluation& ev, const std::string& strategy) {
  for (const StrategyRow& r : ev.table.rows) {
    if (r.strategy == strategy) return r.solved;
  }
  return 0;
}

// Longest chain of tactic applications in a script.
std::size_t script_depth(const ScriptAst& a) {
  switch (a.kind) {
    case ScriptAst::Kind::Atomic:
      return 1;
    case ScriptAst::Kind::Then:
      return script_depth(a.children[0]) + script_depth(a.children[1]);
    case ScriptAst::Kind::Thenl: {
      std::size_t deepest = 0;
      for (std::size_t i = 1; i < a.children.size(); ++i) {
        deepest = std::max(deepest, script_depth(a.children[i]));
      }
      return script_depth(a.children[0]) + deepest;
    }
  }
  return 0;
}

// Every hammer_tac call in the script, replayed on the goal it met with a
// library holding only the premises it lists.
struct HammerCheck {
  std::size_t calls = 0;
  std::size_t failures = 0;
  std::string first;
};

void check_hammer_calls(const std::string& name, const Goal& conjecture, const std::string& script,
                        const Signature& sig, const TacticLibrary& full, HammerCheck& hc) {
  std::vector<std::pair<Goal, std::string>> calls;
  Recorder rec = [&](const Goal& g, const std::string& t) {
    if (t.rfind("hammer_tac", 0) == 0) calls.emplace_back(g, t);
  };
  run_script(parse_script(script), conjecture, full, rec);
  for (const auto& [g, t] : calls) {
    ++hc.calls;
    TheoremEnv just;
    bool ok = true;
    for (const std::string& n : parse_tactic_call(t).names) {
      const Theorem* th = full.env().find(n);
      if (th == nullptr) {
        ok = false;
        break;
      }
      just.add(*th);
    }
    if (ok) {
      TacticLibrary small(sig, just);
      ok = closed(apply_with_budget(small.parse(t), g, 1.0));
    }
    if (!ok) {
      if (hc.failures == 0) hc.first = name + ": " + t;
      ++hc.failures;
    }
  }
}

struct Crafted {
  const char* goal;
  const char* proof;
};

// Not corpus statements; each has a proof of depth <= 3 built from labels
// the recorded db holds.
const Crafted kCrafted[] = {
    {"!a b:bool. b /\\ a ==> a", "gen_strip_tac THEN res_tac"},
    {"!a b:bool. a ==> b ==> b /\\ a", "gen_strip_tac THEN conj_tac THEN accept_tac"},
    {"!a b:bool. b ==> a \\/ b", "gen_strip_tac THEN disj2_tac THEN accept_tac"},
    {"!a b c:bool. (a ==> b) /\\ (b ==> c) ==> a ==> c",
     "gen_strip_tac THEN res_tac THEN res_tac"},
    {"!k:num. 0 + (k + 0) = k", "rewrite_tac [ADD_0_L, ADD_0_R]"},
    {"!x y:num. SUC x + y = SUC (x + y) \\/ F", "rewrite_tac [ADD_SUC_L]"},
    {"!k:list(num). APPEND NIL (APPEND NIL k) = k", "rewrite_tac [APPEND_NIL]"},
    {"!x y:num. SUM (x :: y :: NIL) = x + y", "rewrite_tac [SUM_CONS, SUM_NIL, ADD_0_R]"},
    {"!k:num. MULT 0 k + k = k", "rewrite_tac [MULT_0_L, ADD_0_L]"},
    {"!k:list(num). REV (REV k) = k /\\ T", "rewrite_tac [REV_REV]"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks over a corpus"};
  std::string corpus_path;
  std::vector<int> expect_fail;
  std::size_t scoring_dbs = 120;
  std::size_t prover_instances = 600;
  app.add_option("corpus", corpus_path, "corpus file")->required();
  app.add_option("--expect-fail", expect_fail, "criteria known to be unattainable");
  app.add_option("--scoring-dbs", scoring_dbs, "random databases for the scoring oracle");
  app.add_option("--prover-instances", prover_instances, "random clause sets for the prover oracle");
  CLI11_PARSE(app, argc, argv);

  const auto t_all = Clock::now();
  const Corpus corpus = parse_corpus(corpus_path);
  TheoremEnv full_env;
  for (const CorpusEntry* e : corpus.chronological()) full_env.add(e->theorem);
  const TacticLibrary full(corpus.signature, full_env);
  std::map<std::string, const CorpusEntry*> by_name;
  for (const CorpusEntry* e : corpus.chronological()) by_name[e->theorem.name] = e;

  std::printf("corpus: %zu theorems in %zu theories\n", corpus.theorem_count(),
              corpus.theories.size());

  // Main evaluation, shared by several criteria.
  const std::vector<StrategyConfig> main_cfgs = {preset("nh"), preset("sh"), preset("greedy")};
  auto t0 = Clock::now();
  const Evaluation ev = evaluate(corpus, main_cfgs);
  const double eval_wall = seconds_since(t0);
  std::printf("eval nh,sh,greedy: %.1f s wall\n", eval_wall);

  // 1. Replay gate.
  {
    std::size_t proved = 0;
    std::size_t failed = 0;
    for (const EvalRecord& r : ev.records) {
      if (r.outcome != SearchResult::Status::Proved) continue;
      ++proved;
      const Goal& g = by_name.at(r.theorem)->theorem.statement;
      bool ok = false;
      try {
        ok = !r.script.empty() && replay(g, r.script, full);
      } catch (const std::exception&) {
        ok = false;
      }
      failed += ok ? 0 : 1;
    }
    failed += ev.audit.replay_failures;
    verdict(1, failed == 0 && eval_wall <= 1800.0,
            fmt("%zu proved results replayed, %zu failures; eval of 3 strategies took %.0f s",
                proved, failed, eval_wall));
  }

  // 2. Recording gate.
  AuditSummary rec_audit;
  FeatureDb recorded;
  {
    bool ok = true;
    std::string why;
    try {
      recorded = record_corpus(corpus, false, {}, &rec_audit);
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    ok = ok && rec_audit.recorded_proofs == corpus.theorem_count() &&
         rec_audit.recorded_invocations == rec_audit.recorded_vectors &&
         ev.audit.recorded_invocations == ev.audit.recorded_vectors;
    verdict(2, ok,
            why.empty() ? fmt("%zu/%zu human proofs replayed, %zu tactic calls, %zu goal vectors",
                              rec_audit.recorded_proofs, corpus.theorem_count(),
                              rec_audit.recorded_invocations, rec_audit.recorded_vectors)
                        : why);
  }

  // 3. Scoring oracle.
  {
    const oracle::Report r = oracle::scoring(scoring_dbs, 20260101u);
    verdict(3, r.cases >= 100 && r.mismatches == 0,
            fmt("%zu databases, %zu checks, %zu mismatches, %zu near-tie rankings skipped%s%s",
                r.cases, r.checks, r.mismatches, r.skipped, r.first.empty() ? "" : "; first: ",
                r.first.c_str()));
  }

  // 4. Normalization bounds and self-similarity over every recorded goal.
  {
    std::size_t goals = 0;
    std::size_t out_of_range = 0;
    std::size_t self_bad = 0;
    double worst = 0.0;
    for (const CorpusEntry* e : corpus.chronological()) {
      if (e->axiom) continue;
      std::vector<std::pair<Goal, std::string>> seen;
      Recorder rec = [&](const Goal& g, const std::string& t) { seen.emplace_back(g, t); };
      run_script(parse_script(e->proof), e->theorem.statement, full, rec);
      for (const auto& [g, t] : seen) {
        ++goals;
        const Query q = recorded.query(g);
        for (int v : {1, 2}) {
          ScoreOptions so;
          so.variant = v;
          for (const ScoredTactic& s : score_tactics(recorded, q, recorded.tactics(), so)) {
            if (!(s.norm_score >= 0.0 && s.norm_score <= 1.0)) ++out_of_range;
          }
          const std::string label = full.parse(t).canonical_string();
          const auto own = score_tactics(recorded, q, {label}, so);
          const double d = own.empty() ? 1.0 : std::abs(own.front().norm_score - 1.0);
          worst = std::max(worst, d);
          if (d > 1e-9) ++self_bad;
        }
      }
    }
    verdict(4, goals > 0 && out_of_range == 0 && self_bad == 0,
            fmt("%zu goals, %zu scores outside [0,1], %zu self-similarities off 1 (worst %.2e)",
                goals, out_of_range, self_bad, worst));
  }

  // 5. Cost order.
  verdict(5, ev.audit.cost_order_checked >= 20 && ev.audit.cost_order_violations == 0,
          fmt("%zu variant-5 k1=k2 traces, %zu violations", ev.audit.cost_order_checked,
              ev.audit.cost_order_violations));

  // 6. Weak completeness on crafted conjectures.
  {
    std::size_t ok = 0;
    std::string first;
    double longest = 0.0;
    for (const Crafted& c : kCrafted) {
      const Goal g = parse_goal(c.goal, corpus.signature);
      const ScriptAst known = parse_script(c.proof);
      const auto pre = preselect_tactics(recorded, recorded.query(g), 500);
      bool good = script_depth(known) <= 3 && replay(g, c.proof, full);
      for (const std::string& t : atomic_tactics(known)) {
        const std::string label = full.parse(t).canonical_string();
        if (std::find(pre.begin(), pre.end(), label) == pre.end()) good = false;
      }
      if (!good) {
        first += std::string(first.empty() ? "" : ", ") + "bad premise: " + c.goal;
        continue;
      }
      bool all = true;
      for (int v : {3, 4, 5}) {
        StrategyConfig cfg = preset("nh");
        cfg.codist.variant = v;
        cfg.search_budget = 60.0;
        const SearchResult r = search(g, recorded, full, cfg);
        longest = std::max(longest, r.stats.elapsed);
        if (r.status != SearchResult::Status::Proved) {
          all = false;
          if (first.empty()) first = fmt("variant %d: %s", v, c.goal);
        }
      }
      ok += all ? 1 : 0;
    }
    const std::size_t n = sizeof kCrafted / sizeof kCrafted[0];
    verdict(6, ok == n,
            fmt("%zu/%zu conjectures proved by variants 3, 4 and 5; slowest %.2f s%s%s", ok, n,
                longest, first.empty() ? "" : "; first: ", first.c_str()));
  }

  // 7. Strategy ordering.
  {
    const std::size_t sh = solved(ev, "sh");
    const std::size_t nh = solved(ev, "nh");
    const std::size_t gr = solved(ev, "greedy");
    verdict(7, corpus.theorem_count() >= 150 && sh > nh && nh > gr,
            fmt("sh %zu, nh %zu, greedy %zu of %zu", sh, nh, gr, corpus.theorem_count()));
  }

  // 8. Audits, and a cache-disabled re-run.
  {
    std::vector<StrategyConfig> off = main_cfgs;
    for (StrategyConfig& c : off) c.use_cache = false;
    t0 = Clock::now();
    const Evaluation nc = evaluate(corpus, off);
    std::printf("eval without caches: %.1f s wall\n", seconds_since(t0));
    std::map<std::pair<std::string, std::string>, SearchResult::Status> with;
    for (const EvalRecord& r : ev.records) with[{r.theorem, r.strategy}] = r.outcome;
    std::size_t compared = 0;
    std::size_t unsettled = 0;
    std::size_t disagree = 0;
    std::string first;
    for (const EvalRecord& r : nc.records) {
      const SearchResult::Status a = with.at({r.theorem, r.strategy});
      if (a == SearchResult::Status::TimedOut || r.outcome == SearchResult::Status::TimedOut) {
        ++unsettled;
        continue;
      }
      ++compared;
      if (a != r.outcome) {
        if (first.empty()) first = r.strategy + " " + r.theorem;
        ++disagree;
      }
    }
    const std::size_t anc = ev.audit.ancestor_violations + nc.audit.ancestor_violations;
    const std::size_t dup = ev.audit.duplicate_siblings + nc.audit.duplicate_siblings;
    verdict(8, anc == 0 && dup == 0 && disagree == 0,
            fmt("%zu traces: %zu ancestor, %zu duplicate-sibling nodes; cache off agrees on "
                "%zu/%zu settled outcomes (%zu timed out in one run)%s%s",
                ev.audit.searches + nc.audit.searches, anc, dup, compared - disagree, compared,
                unsettled, first.empty() ? "" : "; first: ", first.c_str()));
  }

  // 9. Prover oracle and hammer replays.
  {
    const oracle::Report p = oracle::prover(prover_instances, 20260202u);
    const oracle::Report c = oracle::clausify(200, 20260303u);
    HammerCheck hc;
    for (const EvalRecord& r : ev.records) {
      if (r.outcome == SearchResult::Status::Proved) {
        const CorpusEntry* e = by_name.at(r.theorem);
        check_hammer_calls(r.strategy + " " + r.theorem, e->theorem.statement, r.script,
                           corpus.signature, full, hc);
      }
    }
    for (const CorpusEntry* e : corpus.chronological()) {
      if (!e->axiom) {
        check_hammer_calls("human " + e->theorem.name, e->theorem.statement, e->proof,
                           corpus.signature, full, hc);
      }
    }
    verdict(9, p.cases >= 500 && p.mismatches == 0 && c.mismatches == 0 && hc.calls > 0 &&
                   hc.failures == 0,
            fmt("%zu clause sets vs enumeration: %zu disagreements; clausifier %zu/%zu formulas "
                "checked, %zu disagreements; %zu hammer_tac calls from listed premises, %zu "
                "failures%s%s%s%s",
                p.cases, p.mismatches, c.cases - c.skipped, c.cases, c.mismatches, hc.calls,
                hc.failures, p.first.empty() ? "" : "; ", p.first.c_str(),
                hc.first.empty() ? "" : "; ", hc.first.c_str()));
  }

  // 10. Orthogonalization.
  {
    const FeatureDb ortho_db = record_corpus(corpus, true);
    const std::size_t plain_labels = recorded.tactics().size();
    const std::size_t ortho_labels = ortho_db.tactics().size();
    StrategyConfig ortho = preset("nh");
    ortho.name = "nh-ortho";
    ortho.ortho = true;
    t0 = Clock::now();
    const Evaluation oe = evaluate(corpus, {ortho, preset("E3")});
    std::printf("eval nh-ortho,E3: %.1f s wall\n", seconds_since(t0));
    const std::size_t nh = solved(ev, "nh");
    const std::size_t on = solved(oe, "nh-ortho");
    const std::size_t e3 = solved(oe, "E3");
    std::string lost;
    std::set<std::string> got;
    for (const EvalRecord& r : oe.records) {
      if (r.strategy == "nh-ortho" && r.outcome == SearchResult::Status::Proved) {
        got.insert(r.theorem);
      }
    }
    for (const EvalRecord& r : ev.records) {
      if (r.strategy == "nh" && r.outcome == SearchResult::Status::Proved && !got.count(r.theorem)) {
        lost += (lost.empty() ? "" : " ") + r.theorem;
      }
    }
    verdict(10, ortho_labels < plain_labels && on >= nh && e3 >= nh,
            fmt("labels %zu -> %zu; re-proved nh %zu, nh-ortho %zu, E3 %zu%s%s", plain_labels,
                ortho_labels, nh, on, e3, lost.empty() ? "" : "; lost by nh-ortho: ",
                lost.c_str()));
  }

  // 11. Determinism.
  {
    t0 = Clock::now();
    const Evaluation again = evaluate(corpus, main_cfgs);
    std::printf("second eval: %.1f s wall\n", seconds_since(t0));
    const auto a = report_files(ev.records, ev.table, false);
    const auto b = report_files(again.records, again.table, false);
    std::size_t bytes = 0;
    std::string differs;
    for (const auto& [name, text] : a) {
      bytes += text.size();
      auto it = b.find(name);
      if (it == b.end() || it->second != text) differs += " " + name;
    }
    if (a.size() != b.size()) differs += " (file sets differ)";
    verdict(11, differs.empty(),
            fmt("%zu non-timing CSV files, %zu bytes%s%s", a.size(), bytes,
                differs.empty() ? ", identical" : ", differing:", differs.c_str()));
  }

  std::size_t passed = 0;
  std::vector<int> unexpected;
  for (const Outcome& o : results) {
    if (o.pass) {
      ++passed;
      continue;
    }
    if (std::find(expect_fail.begin(), expect_fail.end(), o.id) == expect_fail.end()) {
      unexpected.push_back(o.id);
    }
  }
  std::printf("%zu/%zu criteria pass (%.0f s total)", passed, results.size(),
              seconds_since(t_all));
  for (int id : expect_fail) {
    const auto it = std::find_if(results.begin(), results.end(),
                                 [id](const Outcome& o) { return o.id == id; });
    if (it != results.end()) {
      std::printf("; criterion %d expected to fail%s", id, it->pass ? " but passed" : "");
    }
  }
  std::printf("\n");
  return unexpected.empty() ? 0 : 1;
}
