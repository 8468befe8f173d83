// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/hammer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tacsearch/prover.hpp"

namespace tacsearch {

Preselection preselect_theorems(const FeatureDb& db, const Goal& conjecture, std::size_t n,
                                double tau) {
  const Query q = db.query(conjecture);
  const auto& stmts = db.statements();
  const auto& feats = db.statement_features();
  std::vector<double> base(stmts.size());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    base[i] = tactic_score_1(db, q, feats[i], tau);
    index.emplace(stmts[i].name, i);
  }
  auto rank = [&](const std::vector<double>& s) {
    std::vector<std::size_t> order(stmts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
    return order;
  };
  std::vector<double> total = base;
  const std::vector<std::size_t> first = rank(base);
  for (std::size_t r = 0; r < first.size() && r < n; ++r) {
    const Theorem& t = stmts[first[r]];
    if (t.dependencies.empty()) continue;
    const double bonus = base[first[r]] / static_cast<double>(t.dependencies.size());
    for (const std::string& d : t.dependencies) {
      auto it = index.find(d);
      if (it != index.end()) total[it->second] += bonus;
    }
  }
  Preselection out;
  for (std::size_t i : rank(total)) {
    if (out.theorems.size() >= n) break;
    out.theorems.push_back(stmts[i]);
    out.features.push_back(feats[i]);
    out.scores.push_back(total[i]);
  }
  return out;
}

std::vector<std::size_t> select_premises(const FeatureDb& db, const Preselection& pre,
                                         const Goal& goal, std::size_t n, double tau) {
  const Query q = db.query(goal);
  std::vector<double> s(pre.theorems.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = tactic_score_1(db, q, pre.features[i], tau);
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
  if (order.size() > n) order.resize(n);
  return order;
}

Tactic hammer_tactic(const FeatureDb& db, const TacticLibrary& library, const Preselection& pre,
                     const HammerConfig& config, ClockMode clock, double tau) {
  const FeatureDb* dbp = &db;
  const TacticLibrary* lib = &library;
  const Preselection* prep = &pre;
  Tactic::Fn fn = [dbp, lib, prep, config, clock, tau](const Goal& g,
                                                       Budget& budget) -> TacticOutcome {
    std::vector<Theorem> premises;
    for (std::size_t i : select_premises(*dbp, *prep, g, config.final_n, tau)) {
      premises.push_back(prep->theorems[i]);
    }
    ProofResult r = prove_goal(g, premises, budget);
    if (r.status == ProofResult::Status::Timeout) return Timeout{};
    if (r.status != ProofResult::Status::Proof) return Failure{"prover gave up"};
    TacticCall call;
    call.name = "hammer_tac";
    call.arg = TacticCall::Arg::Names;
    call.names = r.premises;
    const std::string label = call.canonical();
    // The replay must close the goal on its own premises and budget.
    Tactic replay = [&]() {
      try {
        return lib->make(call);
      } catch (const std::exception&) {
        return Tactic(label, [](const Goal&, Budget&) -> TacticOutcome {
          return Failure{"premise not in scope"};
        });
      }
    }();
    if (!closed(apply_with_budget(replay, g, config.budget, clock))) {
      return Failure{"hammer proof did not replay"};
    }
    return Subgoals{{}, label};
  };
  return Tactic("hammer", std::move(fn), true);
}

}  // namespace tacsearch
