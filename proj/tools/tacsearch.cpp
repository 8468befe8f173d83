// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "tacsearch/corpus.hpp"
#include "tacsearch/errors.hpp"
#include "tacsearch/harness.hpp"
#include "tacsearch/syntax.hpp"

using namespace tacsearch;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCorpus = 2, kInternal = 3 };

struct Overrides {
  int codist = 0;
  double k1 = 0;
  double k2 = 0;
  double tau1 = 0;
  std::size_t preselect_n = 0;
  double tactic_timeout = 0;
  double search_timeout = 0;
  int hammer_premises = -1;
  double hammer_timeout = 0;
  bool ortho = false;
  bool self_learn = false;
  bool no_cache = false;
  std::string clock = "virtual";
  unsigned seed = 0;
};

void add_flags(CLI::App* app, Overrides& o) {
  app->add_option("--codist", o.codist, "co-distance variant")->check(CLI::Range(1, 5));
  app->add_option("--k1", o.k1, "depth coefficient");
  app->add_option("--k2", o.k2, "width coefficient");
  app->add_option("--tau1", o.tau1, "tf-idf exponent");
  app->add_option("--preselect-n", o.preselect_n, "tactics preselected per search");
  app->add_option("--tactic-timeout", o.tactic_timeout, "seconds per tactic call");
  app->add_option("--search-timeout", o.search_timeout, "seconds per search");
  app->add_option("--hammer-premises", o.hammer_premises, "0 disables the hammer")
      ->check(CLI::IsMember({0, 8, 16}));
  app->add_option("--hammer-timeout", o.hammer_timeout, "seconds per hammer call");
  app->add_flag("--ortho", o.ortho, "orthogonalize recorded tactics");
  app->add_flag("--self-learn", o.self_learn, "record found proofs");
  app->add_flag("--no-cache", o.no_cache, "disable prediction and outcome caches");
  app->add_option("--clock", o.clock, "virtual or wall")->check(CLI::IsMember({"virtual", "wall"}));
  app->add_option("--seed", o.seed, "unused by the engine; accepted for tooling");
}

void apply(const CLI::App* app, const Overrides& o, StrategyConfig& c) {
  if (app->count("--codist")) c.codist.variant = o.codist;
  if (app->count("--k1")) c.codist.k1 = o.k1;
  if (app->count("--k2")) c.codist.k2 = o.k2;
  if (app->count("--tau1")) c.tau = o.tau1;
  if (app->count("--preselect-n")) c.preselect_n = o.preselect_n;
  if (app->count("--tactic-timeout")) c.tactic_budget = o.tactic_timeout;
  if (app->count("--search-timeout")) c.search_budget = o.search_timeout;
  if (app->count("--hammer-premises")) {
    if (o.hammer_premises == 0) {
      c.hammer.reset();
    } else {
      if (!c.hammer) c.hammer = HammerConfig{};
      c.hammer->final_n = static_cast<std::size_t>(o.hammer_premises);
    }
  }
  if (app->count("--hammer-timeout")) {
    if (!c.hammer) c.hammer = HammerConfig{};
    c.hammer->budget = o.hammer_timeout;
  }
  if (o.ortho) c.ortho = true;
  if (o.self_learn) c.self_learn = true;
  if (o.no_cache) c.use_cache = false;
  c.clock = o.clock == "wall" ? ClockMode::Wall : ClockMode::Virtual;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learned tactic-level proof search"};
  app.require_subcommand(1);

  std::string corpus_path;
  std::string db_path;
  bool record_ortho = false;
  CLI::App* record = app.add_subcommand("record", "replay a corpus and write its feature db");
  record->add_option("corpus", corpus_path, "corpus file")->required();
  record->add_option("--db", db_path, "output db")->required();
  record->add_flag("--ortho", record_ortho, "orthogonalize recorded tactics");

  std::string goal_text;
  std::string strategy_name = "nh";
  Overrides prove_o;
  CLI::App* prove = app.add_subcommand("prove", "search for a proof of one goal");
  prove->add_option("goal", goal_text, "goal, e.g. \"!n:num. n + 0 = n\"")->required();
  prove->add_option("--db", db_path, "feature db")->required();
  prove->add_option("--strategy", strategy_name, "preset name");
  add_flags(prove, prove_o);

  std::string strategies = "nh,sh";
  std::size_t stride = 1;
  std::string out_dir = "results";
  Overrides eval_o;
  CLI::App* eval = app.add_subcommand("eval", "chronological re-proving of a corpus");
  eval->add_option("corpus", corpus_path, "corpus file")->required();
  eval->add_option("--strategies", strategies, "comma-separated preset names");
  eval->add_option("--stride", stride, "attempt every n-th theorem")->check(CLI::PositiveNumber);
  eval->add_option("--out", out_dir, "output directory");
  add_flags(eval, eval_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (record->parsed()) {
      AuditSummary audit;
      Corpus corpus = parse_corpus(corpus_path);
      FeatureDb db = record_corpus(corpus, record_ortho, {}, &audit);
      db.save(db_path);
      std::printf("recorded %zu proofs, %zu goal vectors, %zu tactics\n", audit.recorded_proofs,
                  db.size(), db.tactics().size());
      return kOk;
    }
    if (prove->parsed()) {
      StrategyConfig cfg;
      try {
        cfg = preset(strategy_name);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
      }
      apply(prove, prove_o, cfg);
      FeatureDb db = FeatureDb::load(db_path);
      TheoremEnv env;
      for (const Theorem& t : db.statements()) env.add(t);
      TacticLibrary library(db.signature(), env);
      Goal goal;
      try {
        goal = parse_goal(goal_text, db.signature());
      } catch (const ParseError& e) {
        std::cerr << "goal: " << e.what() << "\n";
        return kUsage;
      }
      SearchResult r = search(goal, db, library, cfg);
      std::printf("%s nodes=%zu elapsed=%.3f\n", std::string(status_name(r.status)).c_str(),
                  r.stats.node_count, r.stats.elapsed);
      if (r.status == SearchResult::Status::Proved) std::printf("%s\n", r.script.c_str());
      return kOk;
    }
    if (eval->parsed()) {
      std::vector<StrategyConfig> cfgs;
      for (const std::string& name : split_commas(strategies)) {
        try {
          cfgs.push_back(preset(name));
        } catch (const std::invalid_argument& e) {
          std::cerr << e.what() << "\n";
          return kUsage;
        }
        apply(eval, eval_o, cfgs.back());
      }
      Corpus corpus = parse_corpus(corpus_path);
      EvalOptions eo;
      eo.stride = stride;
      Evaluation ev = evaluate(corpus, cfgs, eo);
      report(ev.records, ev.table, out_dir);
      for (const StrategyRow& row : ev.table.rows) {
        std::printf("%-8s %4zu/%-4zu %6.2f%%  U(%s)=%zu\n", row.strategy.c_str(), row.solved,
                    row.attempted, row.percent, ev.table.reference.c_str(),
                    row.unique_vs_reference);
      }
      if (ev.audit.fairness_violations || ev.audit.replay_failures) {
        std::cerr << "audit failures: fairness=" << ev.audit.fairness_violations
                  << " replay=" << ev.audit.replay_failures << "\n";
        return kInternal;
      }
      return kOk;
    }
  } catch (const CorpusError& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return kCorpus;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kCorpus;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
