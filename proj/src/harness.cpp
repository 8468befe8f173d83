// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/harness.hpp"

#include <algorithm>
#include <set>

#include "tacsearch/errors.hpp"
#include "tacsearch/features.hpp"
#include "tacsearch/script.hpp"

namespace tacsearch {

namespace {

// Runs a proof with the recorder attached and stores the theorem vector.
// Returns the labels recorded.
std::vector<std::string> record_proof(FeatureDb& db, const TacticLibrary& library,
                                      const Theorem& thm, const ScriptAst& ast, Origin origin,
                                      bool ortho, double tactic_budget, AuditSummary* audit) {
  std::vector<std::string> labels;
  const std::size_t before = db.size();
  std::size_t calls = 0;
  OrthoOptions oo;
  Recorder sink = [&](const Goal& g, const std::string& tactic) {
    ++calls;
    labels.push_back(
        record_invocation(db, library, g, tactic, origin, ortho, thm.sequence_index, oo));
  };
  RunOptions ro;
  ro.tactic_budget = tactic_budget;
  TacticOutcome o = run_script(ast, thm.statement, library, sink, ro);
  if (!closed(o)) {
    const std::string why = std::holds_alternative<Failure>(o)   ? std::get<Failure>(o).reason
                            : std::holds_alternative<Timeout>(o) ? std::string("timeout")
                                                                 : std::string("open goals remain");
    if (origin == Origin::Human) {
      throw CorpusError("proof of '" + thm.name + "' does not replay: " + why);
    }
    throw InvariantViolation("generated proof of '" + thm.name + "' does not replay: " + why);
  }
  if (audit != nullptr) {
    audit->recorded_invocations += calls;
    audit->recorded_vectors += db.size() - before;
    ++audit->recorded_proofs;
  }
  std::vector<std::string> unique;
  for (const std::string& l : labels) {
    if (std::find(unique.begin(), unique.end(), l) == unique.end()) unique.push_back(l);
  }
  db.add_theorem_vector(thm.name, features_of_statement(thm, db.options()), unique,
                        thm.sequence_index);
  return unique;
}

// Strategies that learn identically share a db.
std::string db_key(const StrategyConfig& s) {
  std::string k = std::to_string(s.features.classes) + (s.features.pool_assumptions ? "p" : "c") +
                  (s.ortho ? "o" : "-");
  if (s.self_learn) k += "|" + s.name;
  return k;
}

}  // namespace

FeatureDb record_corpus(const Corpus& corpus, bool ortho, const FeatureOptions& features,
                        AuditSummary* audit, double tactic_budget) {
  FeatureDb db(features);
  for (const auto& [name, type] : corpus.signature.declarations()) {
    if (!Signature::standard().contains(name)) db.declare_constant(name, type);
  }
  TheoremEnv env;
  TacticLibrary library(corpus.signature, env);
  for (const CorpusEntry* e : corpus.chronological()) {
    if (!e->axiom) {
      record_proof(db, library, e->theorem, parse_script(e->proof), Origin::Human, ortho,
                   tactic_budget, audit);
    }
    db.add_statement(e->theorem);
    env.add(e->theorem);
  }
  return db;
}

Evaluation evaluate(const Corpus& corpus, const std::vector<StrategyConfig>& strategies,
                    const EvalOptions& opts) {
  if (opts.stride == 0) throw std::invalid_argument("stride must be positive");
  std::set<std::string> names;
  for (const StrategyConfig& s : strategies) {
    validate(s);
    if (!names.insert(s.name).second) {
      throw std::invalid_argument("strategy '" + s.name + "' listed twice");
    }
  }
  Evaluation ev;
  std::map<std::string, FeatureDb> dbs;
  std::map<std::string, bool> db_ortho;
  std::vector<std::string> keys;
  for (const StrategyConfig& s : strategies) {
    const std::string k = db_key(s);
    keys.push_back(k);
    if (!dbs.count(k)) {
      FeatureDb db(s.features);
      for (const auto& [name, type] : corpus.signature.declarations()) {
        if (!Signature::standard().contains(name)) db.declare_constant(name, type);
      }
      dbs.emplace(k, std::move(db));
      db_ortho[k] = s.ortho;
    }
  }
  TheoremEnv env;
  TacticLibrary library(corpus.signature, env);
  std::size_t thm_index = 0;
  for (const CorpusEntry* e : corpus.chronological()) {
    const Theorem& thm = e->theorem;
    if (e->axiom) {
      for (auto& [_, db] : dbs) db.add_statement(thm);
      env.add(thm);
      continue;
    }
    const bool attempt = thm_index++ % opts.stride == 0;
    std::vector<std::string> generated(strategies.size());
    if (attempt) {
      const std::string& theory = corpus.theory_of(thm.sequence_index);
      for (std::size_t i = 0; i < strategies.size(); ++i) {
        const StrategyConfig& s = strategies[i];
        const FeatureDb& db = dbs.at(keys[i]);
        if (db.max_sequence_index() >= static_cast<long>(thm.sequence_index)) {
          ++ev.audit.fairness_violations;
        }
        EvalRecord rec;
        rec.theorem = thm.name;
        rec.theory = theory;
        rec.strategy = s.name;
        try {
          SearchResult r = search(thm.statement, db, library, s);
          rec.outcome = r.status;
          rec.elapsed = r.stats.elapsed;
          rec.wall_seconds = r.stats.wall_seconds;
          rec.node_count = r.stats.node_count;
          rec.proof_size = r.stats.proof_size;
          rec.script = r.script;
          if (opts.audit) {
            ++ev.audit.searches;
            ev.audit.ancestor_violations += count_ancestor_violations(r.trace);
            ev.audit.duplicate_siblings += count_duplicate_siblings(r.trace);
            if (s.codist.variant == 5 && s.codist.k1 == s.codist.k2) {
              ++ev.audit.cost_order_checked;
              ev.audit.cost_order_violations += count_cost_order_violations(r.trace);
            }
          }
          if (r.status == SearchResult::Status::Proved) generated[i] = r.script;
        } catch (const InvariantViolation&) {
          ++ev.audit.replay_failures;
          rec.outcome = SearchResult::Status::Saturated;
        }
        if (opts.on_record) opts.on_record(rec);
        ev.records.push_back(std::move(rec));
      }
    }
    const ScriptAst human = parse_script(e->proof);
    std::set<std::string> recorded;
    for (std::size_t i = 0; i < strategies.size(); ++i) {
      FeatureDb& db = dbs.at(keys[i]);
      if (recorded.insert(keys[i]).second) {
        record_proof(db, library, thm, human, Origin::Human, db_ortho[keys[i]],
                     opts.record_tactic_budget, &ev.audit);
      }
      if (strategies[i].self_learn && !generated[i].empty()) {
        record_proof(db, library, thm, parse_script(generated[i]), Origin::Generated,
                     strategies[i].ortho, opts.record_tactic_budget, nullptr);
      }
    }
    for (auto& [_, db] : dbs) db.add_statement(thm);
    env.add(thm);
  }
  ev.table = strategy_table(ev.records, strategies.empty() ? "" : strategies.front().name);
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    ev.dbs.emplace(strategies[i].name, dbs.at(keys[i]));
  }
  return ev;
}

StrategyTable strategy_table(const std::vector<EvalRecord>& records, const std::string& reference) {
  StrategyTable t;
  std::vector<std::string> order;
  std::map<std::string, std::set<std::string>> solved;
  std::map<std::string, std::size_t> attempted;
  for (const EvalRecord& r : records) {
    if (!attempted.count(r.strategy)) order.push_back(r.strategy);
    ++attempted[r.strategy];
    if (r.outcome == SearchResult::Status::Proved) solved[r.strategy].insert(r.theorem);
  }
  t.reference = reference.empty() && !order.empty() ? order.front() : reference;
  const std::set<std::string>& ref = solved[t.reference];
  for (const std::string& s : order) {
    StrategyRow row;
    row.strategy = s;
    row.attempted = attempted[s];
    row.solved = solved[s].size();
    row.percent = row.attempted ? 100.0 * static_cast<double>(row.solved) /
                                      static_cast<double>(row.attempted)
                                : 0.0;
    for (const std::string& thm : solved[s]) row.unique_vs_reference += ref.count(thm) ? 0 : 1;
    t.rows.push_back(row);
    for (const std::string& o : order) {
      std::size_t both = 0;
      for (const std::string& thm : solved[s]) both += solved[o].count(thm);
      t.overlap[s][o] = both;
    }
  }
  return t;
}

}  // namespace tacsearch
