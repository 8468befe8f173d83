// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <map>

#include "tacsearch/errors.hpp"
#include "tacsearch/script.hpp"
#include "tacsearch/search.hpp"

namespace tacsearch {

namespace {

ScriptAst to_ast(const ProofTree& t) {
  if (!t.solved) throw InvariantViolation("cannot reconstruct an unsolved proof tree");
  ScriptAst head = ScriptAst::atomic(t.tactic);
  if (t.children.empty()) return head;
  if (t.children.size() == 1) return ScriptAst::then(std::move(head), to_ast(t.children[0]));
  std::vector<ScriptAst> branches;
  for (const ProofTree& c : t.children) branches.push_back(to_ast(c));
  return ScriptAst::thenl(std::move(head), std::move(branches));
}

}  // namespace

std::string reconstruct(const ProofTree& tree) { return print_script(to_ast(tree)); }

std::size_t count_ancestor_violations(const SearchTrace& trace) {
  std::map<int, const TraceNode*> by_id;
  for (const TraceNode& n : trace.nodes) by_id[n.id] = &n;
  std::size_t bad = 0;
  for (const TraceNode& n : trace.nodes) {
    std::vector<const Goal*> path;
    for (const TraceNode* m = &n; m->parent >= 0;) {
      const TraceNode* p = by_id.at(m->parent);
      path.push_back(&p->goals.at(static_cast<std::size_t>(m->parent_goal)));
      m = p;
    }
    bool hit = false;
    for (const Goal& g : n.goals) {
      for (const Goal* a : path) hit = hit || goal_equal(g, *a);
    }
    bad += hit ? 1 : 0;
  }
  return bad;
}

std::size_t count_duplicate_siblings(const SearchTrace& trace) {
  std::map<std::pair<int, int>, std::vector<const TraceNode*>> groups;
  for (const TraceNode& n : trace.nodes) {
    if (n.parent >= 0) groups[{n.parent, n.parent_goal}].push_back(&n);
  }
  std::size_t bad = 0;
  for (const auto& [_, g] : groups) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (goal_sets_equal(g[i]->goals, g[j]->goals)) {
          ++bad;
          break;
        }
      }
    }
  }
  return bad;
}

std::size_t count_cost_order_violations(const SearchTrace& trace) {
  std::size_t bad = 0;
  for (std::size_t i = 1; i < trace.expansions.size(); ++i) {
    const Expansion& a = trace.expansions[i - 1];
    const Expansion& b = trace.expansions[i];
    if (b.d + b.w < a.d + a.w) ++bad;
  }
  return bad;
}

}  // namespace tacsearch
