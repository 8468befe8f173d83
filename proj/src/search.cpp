// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "tacsearch/errors.hpp"
#include "tacsearch/script.hpp"

namespace tacsearch {

double codist_value(const CoDistance& cfg, std::size_t d, std::size_t w, double s) {
  const double dd = static_cast<double>(d);
  const double ww = static_cast<double>(w);
  switch (cfg.variant) {
    case 1:
    case 2:
      return s;
    case 3:
      return std::pow(cfg.k1, dd) * s;
    case 4:
      return std::pow(cfg.k1, dd) * std::pow(cfg.k2, ww) * s;
    case 5:
      return std::pow(cfg.k1, dd) * std::pow(cfg.k2, ww);
    default:
      throw std::invalid_argument("co-distance variant must be 1..5");
  }
}

void validate(const StrategyConfig& cfg) {
  if (cfg.codist.variant < 1 || cfg.codist.variant > 5) {
    throw std::invalid_argument("co-distance variant must be 1..5");
  }
  if (!(cfg.codist.k1 > 0.0 && cfg.codist.k1 < 1.0) ||
      !(cfg.codist.k2 > 0.0 && cfg.codist.k2 < 1.0)) {
    throw std::invalid_argument("k1 and k2 must lie strictly between 0 and 1");
  }
  if (cfg.codist.score_variant != 1 && cfg.codist.score_variant != 2) {
    throw std::invalid_argument("score variant must be 1 or 2");
  }
  if (!(cfg.search_budget > 0.0) || !(cfg.tactic_budget > 0.0)) {
    throw std::invalid_argument("budgets must be positive");
  }
  if (cfg.hammer) {
    if (!(cfg.hammer->budget > 0.0)) throw std::invalid_argument("budgets must be positive");
    if (cfg.hammer->final_n > cfg.hammer->preselect_n) {
      throw std::invalid_argument("hammer premises exceed the preselection");
    }
  }
}

std::string_view status_name(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::Proved: return "proved";
    case SearchResult::Status::Saturated: return "saturated";
    case SearchResult::Status::TimedOut: return "timeout";
  }
  return "?";
}

namespace {

constexpr const char* kHammer = "<hammer>";

struct Candidate {
  std::string tactic;
  double score = 0.0;
};

struct Node {
  int id = 0;
  int parent = -1;
  int parent_goal = -1;
  std::string label;  // replay string of the tactic that produced this node
  std::vector<Goal> goals;
  std::vector<std::size_t> order;  // processing order over goals
  std::size_t pos = 0;
  std::size_t d = 0;
  std::size_t w = 0;
  // Width carried over from the path so far. The frontier key uses
  // w_base + w so that the d + w of expansions never decreases, including
  // after a pending goal is activated.
  std::size_t w_base = 0;
  std::vector<Candidate> cands;
  std::size_t next = 0;
  std::vector<std::pair<std::string, int>> solved;  // per goal: label, child
  std::vector<int> children;                        // for the current goal
  std::vector<int> all_children;
  enum class Status { Open, Solved, Dead } status = Status::Open;
  bool queued = false;
  double key = 0.0;

  std::size_t open_goal() const { return order[pos]; }
};

struct Key {
  double value;
  int id;
  std::string tactic;
};

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    if (a.value != b.value) return a.value > b.value;
    if (a.id != b.id) return a.id < b.id;
    return a.tactic < b.tactic;
  }
};

class Engine {
 public:
  Engine(const Goal& conjecture, const FeatureDb& db, const TacticLibrary& library,
         const StrategyConfig& cfg)
      : conjecture_(conjecture),
        db_(db),
        library_(library),
        cfg_(cfg),
        budget_(cfg.search_budget, cfg.clock) {}

  SearchResult run() {
    const auto wall0 = std::chrono::steady_clock::now();
    SearchResult result;
    try {
      setup();
      make_root();
      while (!proved_ && !frontier_.empty()) step();
      result.status = proved_ ? SearchResult::Status::Proved : SearchResult::Status::Saturated;
    } catch (const BudgetExceeded&) {
      result.status = SearchResult::Status::TimedOut;
    }
    stats_.elapsed = budget_.elapsed_seconds();
    stats_.node_count = nodes_.size();
    if (result.status == SearchResult::Status::Proved) {
      ProofTree tree = build(0, 0);
      result.script = reconstruct(tree);
      result.tree = std::move(tree);
      RunOptions ro;
      ro.tactic_budget = std::max({1.0, cfg_.tactic_budget * 10,
                                   cfg_.hammer ? cfg_.hammer->budget * 10 : 0.0});
      ro.clock = ClockMode::Virtual;
      ro.check_same_effect = false;
      if (!replay(conjecture_, result.script, library_, ro)) {
        throw InvariantViolation("reconstructed script does not replay: " + result.script);
      }
      stats_.proof_size = atomic_tactics(parse_script(result.script)).size();
    }
    stats_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
    result.stats = stats_;
    result.trace = std::move(trace_);
    return result;
  }

 private:
  void charge(TimeBucket b, std::uint64_t n) {
    stats_.ticks[static_cast<std::size_t>(b)] += n;
    budget_.charge(n);
  }

  void setup() {
    const Query q = db_.query(conjecture_);
    charge(TimeBucket::Prediction, 1 + q.size() + db_.theorem_vectors().size());
    preselected_ = preselect_tactics(db_, q, cfg_.preselect_n, cfg_.tau);
    if (cfg_.hammer) {
      premises_ = preselect_theorems(db_, conjecture_, cfg_.hammer->preselect_n, cfg_.tau);
      charge(TimeBucket::Prediction, 1 + db_.statements().size());
      hammer_.emplace(hammer_tactic(db_, library_, premises_, *cfg_.hammer, cfg_.clock, cfg_.tau));
    }
  }

  void make_root() {
    Node root;
    root.id = 0;
    root.goals = {conjecture_};
    root.order = {0};
    root.solved.resize(1);
    nodes_.push_back(std::move(root));
    trace_.nodes.push_back(TraceNode{0, -1, -1, {conjecture_}, false});
    activate(0);
  }

  const std::vector<Candidate>& predict(const Goal& g) {
    const std::string key = goal_key(g);
    if (cfg_.use_cache) {
      auto it = predictions_.find(key);
      if (it != predictions_.end()) {
        charge(TimeBucket::Prediction, 1);
        return it->second;
      }
    }
    const Query q = db_.query(g);
    charge(TimeBucket::Prediction, 1 + q.size());
    ScoreOptions so;
    so.variant = cfg_.codist.score_variant;
    so.tau = cfg_.tau;
    so.parallel = cfg_.parallel_scoring;
    std::uint64_t work = 0;
    std::vector<ScoredTactic> scored = score_tactics(db_, q, preselected_, so, &work);
    charge(TimeBucket::Prediction, work);
    const bool drop_zero = cfg_.codist.variant == 3 || cfg_.codist.variant == 4;
    std::vector<Candidate> out;
    for (const ScoredTactic& s : scored) {
      if (drop_zero && s.norm_score <= 0.0) continue;
      if (tactic(s.tactic) == nullptr) continue;
      out.push_back(Candidate{s.tactic, s.norm_score});
    }
    auto& slot = predictions_[key];
    slot = std::move(out);
    return slot;
  }

  const Tactic* tactic(const std::string& s) {
    auto it = parsed_.find(s);
    if (it == parsed_.end()) {
      std::optional<Tactic> t;
      try {
        t.emplace(library_.parse(s));
      } catch (const ParseError&) {
      }
      it = parsed_.emplace(s, std::move(t)).first;
    }
    return it->second ? &*it->second : nullptr;
  }

  double best_score(const Goal& g) {
    const auto& c = predict(g);
    return c.empty() ? 0.0 : c.front().score;
  }

  void activate(int id) {
    Node& n = nodes_[static_cast<std::size_t>(id)];
    const Goal& g = n.goals[n.open_goal()];
    std::vector<Candidate> cands = predict(g);
    if (hammer_) {
      const double s = cands.empty() ? 1.0 : cands.front().score;
      cands.insert(cands.begin(), Candidate{kHammer, s});
    }
    n.cands = std::move(cands);
    n.next = 0;
    n.w = 0;
    n.children.clear();
    refresh(id);
  }

  void unqueue(Node& n) {
    if (!n.queued) return;
    frontier_.erase(Key{n.key, n.id, queued_tactic_[n.id]});
    n.queued = false;
  }

  void refresh(int id) {
    Node& n = nodes_[static_cast<std::size_t>(id)];
    unqueue(n);
    if (n.status != Node::Status::Open || n.next >= n.cands.size()) return;
    n.key = codist_value(cfg_.codist, n.d, n.w_base + n.w, n.cands[n.next].score);
    queued_tactic_[id] = n.cands[n.next].tactic;
    frontier_.insert(Key{n.key, n.id, n.cands[n.next].tactic});
    n.queued = true;
  }

  TacticOutcome apply(const Candidate& c, const Goal& g) {
    const bool hammer = c.tactic == kHammer;
    const double limit = hammer ? cfg_.hammer->budget : cfg_.tactic_budget;
    std::string key;
    if (cfg_.use_cache) {
      key = goal_key(g);
      key += '\x1d';
      key += c.tactic;
      auto it = outcomes_.find(key);
      if (it != outcomes_.end()) {
        ++stats_.cache_hits;
        charge(TimeBucket::TacticApplication, 1);
        return it->second;
      }
    }
    std::uint64_t used = 0;
    TacticOutcome o = apply_with_budget(hammer ? *hammer_ : *tactic(c.tactic), g, limit,
                                        cfg_.clock, &used);
    if (cfg_.use_cache) outcomes_.emplace(key, o);
    charge(TimeBucket::TacticApplication, std::max<std::uint64_t>(used, 1));
    return o;
  }

  bool blocked(const Node& n, const std::vector<Goal>& goals) {
    // Ancestor goals: the goal each link of the path was created for.
    std::vector<const Goal*> path{&n.goals[n.open_goal()]};
    for (const Node* m = &n; m->parent >= 0;) {
      const Node& p = nodes_[static_cast<std::size_t>(m->parent)];
      path.push_back(&p.goals[static_cast<std::size_t>(m->parent_goal)]);
      m = &p;
    }
    for (const Goal& g : goals) {
      for (const Goal* a : path) {
        if (goal_equal(g, *a)) return true;
      }
    }
    for (int c : n.children) {
      if (goal_sets_equal(nodes_[static_cast<std::size_t>(c)].goals, goals)) return true;
    }
    return false;
  }

  void step() {
    charge(TimeBucket::NodeSelection, 1);
    const int id = frontier_.begin()->id;
    Node& n = nodes_[static_cast<std::size_t>(id)];
    const Candidate c = n.cands[n.next];
    const std::size_t exponent = n.d + n.w_base + n.w;
    trace_.expansions.push_back(Expansion{id, n.d, n.w_base + n.w, n.key, c.tactic});
    ++stats_.expansions;
    unqueue(n);
    ++n.next;
    ++n.w;
    const Goal goal = n.goals[n.open_goal()];
    TacticOutcome o = apply(c, goal);
    auto* s = std::get_if<Subgoals>(&o);
    if (s != nullptr && s->goals.empty()) {
      const std::string label = s->label;
      if (cfg_.greedy) nodes_[static_cast<std::size_t>(id)].next = n.cands.size();
      solve_goal(id, label, -1, exponent);
    } else if (s != nullptr) {
      charge(TimeBucket::NodeCreation, s->goals.size());
      if (!blocked(n, s->goals)) {
        if (cfg_.greedy) n.next = n.cands.size();
        make_child(id, s->label, s->goals);
      }
    }
    if (!proved_) refresh(id);
  }

  void make_child(int parent, const std::string& label, const std::vector<Goal>& goals) {
    const int id = static_cast<int>(nodes_.size());
    Node child;
    {
      const Node& p = nodes_[static_cast<std::size_t>(parent)];
      child.id = id;
      child.parent = parent;
      child.parent_goal = static_cast<int>(p.open_goal());
      child.d = p.d + 1;
      child.w_base = p.w_base + p.w;
    }
    child.label = label;
    child.goals = goals;
    child.solved.resize(goals.size());
    // Hardest pending goal first.
    std::vector<double> hardness;
    for (const Goal& g : goals) hardness.push_back(best_score(g));
    child.order.resize(goals.size());
    for (std::size_t i = 0; i < goals.size(); ++i) child.order[i] = i;
    std::stable_sort(child.order.begin(), child.order.end(),
                     [&](std::size_t a, std::size_t b) { return hardness[a] < hardness[b]; });
    trace_.nodes.push_back(TraceNode{id, parent, child.parent_goal, goals, false});
    nodes_.push_back(std::move(child));
    Node& p = nodes_[static_cast<std::size_t>(parent)];
    p.children.push_back(id);
    p.all_children.push_back(id);
    activate(id);
  }

  void delete_subtree(int id) {
    Node& n = nodes_[static_cast<std::size_t>(id)];
    charge(TimeBucket::NodeDeletion, 1);
    unqueue(n);
    if (n.status == Node::Status::Open) n.status = Node::Status::Dead;
    trace_.nodes[static_cast<std::size_t>(id)].deleted = true;
    for (int c : n.all_children) delete_subtree(c);
  }

  void solve_goal(int id, const std::string& label, int child, std::size_t exponent) {
    Node& n = nodes_[static_cast<std::size_t>(id)];
    n.solved[n.open_goal()] = {label, child};
    for (int c : n.children) {
      if (c != child) delete_subtree(c);
    }
    n.children.clear();
    ++n.pos;
    if (n.pos < n.goals.size()) {
      n.w_base = std::max(n.w_base + n.w, exponent > n.d ? exponent - n.d : 0);
      activate(id);
      return;
    }
    unqueue(n);
    n.status = Node::Status::Solved;
    if (n.parent < 0) {
      proved_ = true;
      return;
    }
    const std::string own = n.label;
    solve_goal(n.parent, own, id, exponent);
  }

  ProofTree build(int id, std::size_t goal) {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    ProofTree t;
    t.goal = n.goals[goal];
    const auto& [label, child] = n.solved[goal];
    t.tactic = label;
    t.solved = !label.empty();
    if (child >= 0) {
      const Node& c = nodes_[static_cast<std::size_t>(child)];
      for (std::size_t j = 0; j < c.goals.size(); ++j) t.children.push_back(build(child, j));
    }
    return t;
  }

  const Goal& conjecture_;
  const FeatureDb& db_;
  const TacticLibrary& library_;
  const StrategyConfig& cfg_;
  Budget budget_;
  SearchStats stats_;
  SearchTrace trace_;
  std::vector<std::string> preselected_;
  Preselection premises_;
  std::optional<Tactic> hammer_;
  std::vector<Node> nodes_;
  std::set<Key, KeyLess> frontier_;
  std::map<int, std::string> queued_tactic_;
  std::unordered_map<std::string, std::vector<Candidate>> predictions_;
  std::unordered_map<std::string, TacticOutcome> outcomes_;
  std::unordered_map<std::string, std::optional<Tactic>> parsed_;
  bool proved_ = false;
};

}  // namespace

SearchResult search(const Goal& conjecture, const FeatureDb& db, const TacticLibrary& library,
                    const StrategyConfig& cfg) {
  validate(cfg);
  Engine e(conjecture, db, library, cfg);
  return e.run();
}

}  // namespace tacsearch
