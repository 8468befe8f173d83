// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>

#include "tacsearch/errors.hpp"
#include "tacsearch/prover.hpp"

namespace tacsearch {

namespace {

// Bindings for variables 0..n-1; unbound entries have sym == kUnbound.
constexpr int kUnbound = -(1 << 30);

class Bindings {
 public:
  explicit Bindings(std::size_t n) : slots_(n, FoTerm{kUnbound, {}}) {}

  const FoTerm* get(int v) const {
    const FoTerm& s = slots_[static_cast<std::size_t>(v)];
    return s.sym == kUnbound ? nullptr : &s;
  }
  void set(int v, FoTerm t) { slots_[static_cast<std::size_t>(v)] = std::move(t); }

  const FoTerm& walk(const FoTerm& t) const {
    const FoTerm* cur = &t;
    while (cur->is_var()) {
      const FoTerm* b = get(cur->var_index());
      if (b == nullptr) break;
      cur = b;
    }
    return *cur;
  }

  bool occurs(int v, const FoTerm& t) const {
    const FoTerm& w = walk(t);
    if (w.is_var()) return w.var_index() == v;
    return std::any_of(w.args.begin(), w.args.end(),
                       [&](const FoTerm& a) { return occurs(v, a); });
  }

  FoTerm apply(const FoTerm& t) const {
    const FoTerm& w = walk(t);
    if (w.is_var()) return w;
    FoTerm out{w.sym, {}};
    out.args.reserve(w.args.size());
    for (const FoTerm& a : w.args) out.args.push_back(apply(a));
    return out;
  }

 private:
  std::vector<FoTerm> slots_;
};

bool unify(const FoTerm& a, const FoTerm& b, Bindings& s) {
  const FoTerm& x = s.walk(a);
  const FoTerm& y = s.walk(b);
  if (x.is_var() && y.is_var() && x.var_index() == y.var_index()) return true;
  if (x.is_var()) {
    if (s.occurs(x.var_index(), y)) return false;
    s.set(x.var_index(), y);
    return true;
  }
  if (y.is_var()) {
    if (s.occurs(y.var_index(), x)) return false;
    s.set(y.var_index(), x);
    return true;
  }
  if (x.sym != y.sym || x.args.size() != y.args.size()) return false;
  // Bound slots are never overwritten, so x and y stay valid.
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (!unify(x.args[i], y.args[i], s)) return false;
  }
  return true;
}

// One-way matching: binds only variables of `pattern`.
bool match(const FoTerm& pattern, const FoTerm& t, std::vector<std::optional<FoTerm>>& s) {
  if (pattern.is_var()) {
    auto& slot = s[static_cast<std::size_t>(pattern.var_index())];
    if (slot) return *slot == t;
    slot = t;
    return true;
  }
  if (t.is_var() || pattern.sym != t.sym || pattern.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (!match(pattern.args[i], t.args[i], s)) return false;
  }
  return true;
}

int max_var(const FoTerm& t) {
  if (t.is_var()) return t.var_index();
  int m = -1;
  for (const FoTerm& a : t.args) m = std::max(m, max_var(a));
  return m;
}

std::size_t depth(const FoTerm& t) {
  std::size_t d = 0;
  for (const FoTerm& a : t.args) d = std::max(d, depth(a));
  return d + 1;
}

std::size_t symbols(const FoTerm& t) {
  std::size_t n = 1;
  for (const FoTerm& a : t.args) n += symbols(a);
  return n;
}

void shift(FoTerm& t, int offset) {
  if (t.is_var()) {
    t = FoTerm::variable(t.var_index() + offset);
    return;
  }
  for (FoTerm& a : t.args) shift(a, offset);
}

void rename(FoTerm& t, std::vector<int>& map, int& next) {
  if (t.is_var()) {
    int& m = map[static_cast<std::size_t>(t.var_index())];
    if (m < 0) m = next++;
    t = FoTerm::variable(m);
    return;
  }
  for (FoTerm& a : t.args) rename(a, map, next);
}

void key_of(const FoTerm& t, std::string& out) {
  out += std::to_string(t.sym);
  if (!t.args.empty()) {
    out += '(';
    for (const FoTerm& a : t.args) {
      key_of(a, out);
      out += ',';
    }
    out += ')';
  }
}

struct Work {
  std::vector<Literal> lits;
  std::vector<int> premises;
  std::size_t weight = 0;
  int vars = 0;
};

int clause_vars(const std::vector<Literal>& lits) {
  int m = -1;
  for (const Literal& l : lits) m = std::max(m, max_var(l.atom));
  return m + 1;
}

// Dedups literals, sorts them, renumbers variables. Returns false for
// tautologies.
bool normalize(Work& w) {
  std::sort(w.lits.begin(), w.lits.end());
  w.lits.erase(std::unique(w.lits.begin(), w.lits.end()), w.lits.end());
  for (std::size_t i = 0; i + 1 < w.lits.size(); ++i) {
    for (std::size_t j = i + 1; j < w.lits.size(); ++j) {
      if (w.lits[i].positive != w.lits[j].positive && w.lits[i].atom == w.lits[j].atom) {
        return false;
      }
    }
  }
  std::vector<int> map(static_cast<std::size_t>(clause_vars(w.lits)), -1);
  int next = 0;
  for (Literal& l : w.lits) rename(l.atom, map, next);
  w.vars = next;
  w.weight = w.lits.size();
  for (const Literal& l : w.lits) w.weight += symbols(l.atom);
  return true;
}

std::string clause_key(const Work& w) {
  std::string k;
  for (const Literal& l : w.lits) {
    k += l.positive ? '+' : '-';
    key_of(l.atom, k);
    k += ';';
  }
  return k;
}

bool subsumes_rec(const Work& c, std::size_t i, const Work& d,
                  std::vector<std::optional<FoTerm>>& s, Budget& budget) {
  if (i == c.lits.size()) return true;
  for (const Literal& dl : d.lits) {
    budget.charge();
    if (dl.positive != c.lits[i].positive || dl.atom.sym != c.lits[i].atom.sym) continue;
    auto saved = s;
    if (match(c.lits[i].atom, dl.atom, s) && subsumes_rec(c, i + 1, d, s, budget)) return true;
    s = std::move(saved);
  }
  return false;
}

bool subsumes(const Work& c, const Work& d, Budget& budget) {
  if (c.lits.size() > d.lits.size()) return false;
  std::vector<std::optional<FoTerm>> s(static_cast<std::size_t>(c.vars));
  return subsumes_rec(c, 0, d, s, budget);
}

std::vector<int> merge_premises(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Saturation {
 public:
  Saturation(const ClauseSet& cs, Budget& budget, const ResolveLimits& limits)
      : cs_(cs), budget_(budget), limits_(limits) {}

  ProofResult run() {
    ProofResult result;
    try {
      for (const Clause& c : cs_.clauses) {
        Work w{c.literals, c.premises, 0, 0};
        std::sort(w.premises.begin(), w.premises.end());
        if (offer(std::move(w), result)) return result;
      }
      while (!passive_.empty()) {
        budget_.charge();
        auto [weight, age] = passive_.top();
        passive_.pop();
        Work given = std::move(pool_[age]);
        ++result.given;
        if (forward_subsumed(given)) continue;
        active_.push_back(std::move(given));
        const Work& g = active_.back();
        if (factor_and_resolve(g, result)) return result;
        if (pool_.size() > limits_.max_clauses) break;
      }
      result.status = ProofResult::Status::GaveUp;
    } catch (const BudgetExceeded&) {
      result.status = ProofResult::Status::Timeout;
    }
    return result;
  }

 private:
  using Entry = std::pair<std::size_t, std::size_t>;  // (weight, age)

  // Returns true when the empty clause was reached.
  bool offer(Work w, ProofResult& result) {
    budget_.charge();
    if (!normalize(w)) return false;
    ++result.generated;
    if (w.lits.empty()) {
      result.status = ProofResult::Status::Proof;
      for (int p : w.premises) result.premises.push_back(cs_.premise_names[static_cast<std::size_t>(p)]);
      std::sort(result.premises.begin(), result.premises.end());
      return true;
    }
    if (w.lits.size() > limits_.max_literals) return false;
    for (const Literal& l : w.lits) {
      if (depth(l.atom) > limits_.max_depth) return false;
    }
    if (!seen_.insert(clause_key(w)).second) return false;
    passive_.emplace(w.weight, pool_.size());
    pool_.push_back(std::move(w));
    return false;
  }

  bool forward_subsumed(const Work& w) {
    for (const Work& a : active_) {
      if (subsumes(a, w, budget_)) return true;
    }
    return false;
  }

  bool factor_and_resolve(const Work& g, ProofResult& result) {
    // Factoring.
    for (std::size_t i = 0; i < g.lits.size(); ++i) {
      for (std::size_t j = i + 1; j < g.lits.size(); ++j) {
        const Literal& a = g.lits[i];
        const Literal& b = g.lits[j];
        if (a.positive != b.positive || a.atom.sym != b.atom.sym) continue;
        budget_.charge();
        Bindings s(static_cast<std::size_t>(g.vars));
        if (!unify(a.atom, b.atom, s)) continue;
        Work f{{}, g.premises, 0, 0};
        for (std::size_t k = 0; k < g.lits.size(); ++k) {
          if (k != j) f.lits.push_back(Literal{g.lits[k].positive, s.apply(g.lits[k].atom)});
        }
        if (offer(std::move(f), result)) return true;
      }
    }
    // Binary resolution against every active clause, the given one included.
    const std::size_t n = active_.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
      const Work& other = active_[idx];
      for (std::size_t i = 0; i < g.lits.size(); ++i) {
        for (std::size_t j = 0; j < other.lits.size(); ++j) {
          const Literal& a = g.lits[i];
          const Literal& b = other.lits[j];
          if (a.positive == b.positive || a.atom.sym != b.atom.sym) continue;
          budget_.charge();
          FoTerm shifted = b.atom;
          shift(shifted, g.vars);
          Bindings s(static_cast<std::size_t>(g.vars + other.vars));
          if (!unify(a.atom, shifted, s)) continue;
          Work r{{}, merge_premises(g.premises, other.premises), 0, 0};
          for (std::size_t k = 0; k < g.lits.size(); ++k) {
            if (k != i) r.lits.push_back(Literal{g.lits[k].positive, s.apply(g.lits[k].atom)});
          }
          for (std::size_t k = 0; k < other.lits.size(); ++k) {
            if (k == j) continue;
            FoTerm t = other.lits[k].atom;
            shift(t, g.vars);
            r.lits.push_back(Literal{other.lits[k].positive, s.apply(t)});
          }
          if (offer(std::move(r), result)) return true;
        }
      }
    }
    return false;
  }

  const ClauseSet& cs_;
  Budget& budget_;
  ResolveLimits limits_;
  std::vector<Work> pool_;
  std::vector<Work> active_;
  std::unordered_set<std::string> seen_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> passive_;
};

}  // namespace

ProofResult resolve(const ClauseSet& clauses, Budget& budget, const ResolveLimits& limits) {
  Saturation sat(clauses, budget, limits);
  return sat.run();
}

ProofResult prove_goal(const Goal& goal, const std::vector<Theorem>& premises, Budget& budget) {
  ClauseSet cs;
  try {
    cs = clausify(goal, premises);
  } catch (const UnsupportedFragment&) {
    return ProofResult{};
  }
  budget.charge(cs.clauses.size());
  return resolve(cs, budget);
}

}  // namespace tacsearch
