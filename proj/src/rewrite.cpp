// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/rewrite.hpp"

#include <algorithm>

namespace tacsearch {

namespace {

bool same_var(const Term& a, const Term& b) {
  return a.name() == b.name() && a.type() == b.type();
}

bool in_vars(const Term& v, const std::vector<Term>& vars) {
  return std::any_of(vars.begin(), vars.end(), [&](const Term& x) { return same_var(x, v); });
}

void collect_rules(const Term& t, std::vector<Term>& pvars, std::vector<RewriteRule>& out) {
  if (auto q = logic::dest_binder(t, logic::kForall)) {
    // Rename the pattern variable if an outer pattern variable has its name.
    Term v = q->first;
    Term body = q->second;
    if (in_vars(v, pvars)) {
      std::vector<std::string> taken;
      for (const Term& p : pvars) taken.push_back(p.name());
      collect_var_names(body, taken);
      Term fresh = Term::var(fresh_name(v.name(), taken), v.type());
      body = subst(body, {{v, fresh}});
      v = fresh;
    }
    pvars.push_back(v);
    collect_rules(body, pvars, out);
    pvars.pop_back();
    return;
  }
  if (auto c = logic::dest_binary(t, logic::kAnd)) {
    collect_rules(c->first, pvars, out);
    collect_rules(c->second, pvars, out);
    return;
  }
  Term lhs = t;
  Term rhs = logic::truth();
  if (auto e = logic::dest_binary(t, logic::kEq)) {
    lhs = e->first;
    rhs = e->second;
  } else if (auto i = logic::dest_binary(t, logic::kIff)) {
    lhs = i->first;
    rhs = i->second;
  } else if (auto n = logic::dest_not(t)) {
    lhs = *n;
    rhs = logic::falsity();
  }
  if (lhs.is_var() && in_vars(lhs, pvars)) return;
  if (alpha_equal(lhs, rhs)) return;
  std::vector<Term> used;
  for (const Term& v : free_vars(lhs)) {
    if (in_vars(v, pvars)) used.push_back(v);
  }
  for (const Term& v : free_vars(rhs)) {
    if (in_vars(v, pvars) && !in_vars(v, used)) return;
  }
  RewriteRule rule{lhs, rhs, used, false};
  if (lhs.size() == rhs.size()) {
    if (auto theta = match_term(lhs, rhs, used)) {
      rule.permutative = std::all_of(theta->begin(), theta->end(),
                                     [&](const auto& p) { return in_vars(p.second, used); });
    }
  }
  out.push_back(std::move(rule));
}

int compare_terms(const Term& a, const Term& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      if (a.name() != b.name()) return a.name() < b.name() ? -1 : 1;
      if (a.type() < b.type()) return -1;
      if (b.type() < a.type()) return 1;
      return 0;
    case Term::Kind::App:
      if (int c = compare_terms(a.fun(), b.fun())) return c;
      return compare_terms(a.arg(), b.arg());
    case Term::Kind::Abs:
      if (int c = compare_terms(a.bound(), b.bound())) return c;
      return compare_terms(a.body(), b.body());
  }
  return 0;
}

using Pairs = std::vector<std::pair<Term, Term>>;

bool mentions_locals(const Term& t, const Pairs& env) {
  return std::any_of(env.begin(), env.end(),
                     [&](const auto& p) { return occurs_free(p.second, t); });
}

bool match_rec(const Term& p, const Term& t, const std::vector<Term>& pvars, Pairs& env,
               Substitution& theta) {
  if (p.is_var()) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (same_var(it->first, p)) return t.is_var() && same_var(it->second, t);
      if (t.is_var() && same_var(it->second, t)) return false;
    }
    if (in_vars(p, pvars)) {
      if (p.type() != t.type() || mentions_locals(t, env)) return false;
      for (const auto& [v, r] : theta) {
        if (same_var(v, p)) return alpha_equal(r, t);
      }
      theta.emplace_back(p, t);
      return true;
    }
    if (!t.is_var() || !same_var(p, t)) return false;
    return true;
  }
  if (p.kind() != t.kind()) return false;
  switch (p.kind()) {
    case Term::Kind::Const:
      return p.name() == t.name() && p.type() == t.type();
    case Term::Kind::App:
      return match_rec(p.fun(), t.fun(), pvars, env, theta) &&
             match_rec(p.arg(), t.arg(), pvars, env, theta);
    case Term::Kind::Abs: {
      if (p.bound().type() != t.bound().type()) return false;
      env.emplace_back(p.bound(), t.bound());
      const bool ok = match_rec(p.body(), t.body(), pvars, env, theta);
      env.pop_back();
      return ok;
    }
    case Term::Kind::Var:
      break;
  }
  return false;
}

bool is_truth(const Term& t) { return logic::is_const(t, logic::kTrue); }
bool is_falsity(const Term& t) { return logic::is_const(t, logic::kFalse); }

// Constructor head of a num/list value, if any.
std::optional<std::pair<std::string, std::vector<Term>>> constructor_of(const Term& t) {
  auto [head, args] = strip_comb(t);
  if (!head.is_const()) return std::nullopt;
  if ((head.name() == "0" || head.name() == "NIL") && args.empty()) {
    return std::make_pair(head.name(), args);
  }
  if ((head.name() == "SUC" && args.size() == 1) || (head.name() == "::" && args.size() == 2)) {
    return std::make_pair(head.name(), args);
  }
  return std::nullopt;
}

const Term* head_const(const Term& t) {
  const Term* cur = &t;
  while (cur->is_app()) cur = &cur->fun();
  return cur->is_const() ? cur : nullptr;
}

}  // namespace

bool term_less(const Term& a, const Term& b) { return compare_terms(a, b) < 0; }

std::vector<RewriteRule> rules_of(const Term& statement) {
  std::vector<RewriteRule> out;
  std::vector<Term> pvars;
  collect_rules(statement, pvars, out);
  return out;
}

std::optional<Substitution> match_term(const Term& pattern, const Term& t,
                                       const std::vector<Term>& pattern_vars) {
  Pairs env;
  Substitution theta;
  if (!match_rec(pattern, t, pattern_vars, env, theta)) return std::nullopt;
  return theta;
}

std::optional<Term> builtin_simplify(const Term& t) {
  using namespace logic;
  if (auto n = dest_not(t)) {
    if (is_truth(*n)) return falsity();
    if (is_falsity(*n)) return truth();
    if (auto nn = dest_not(*n)) return *nn;
    return std::nullopt;
  }
  if (auto c = dest_binary(t, kAnd)) {
    const auto& [l, r] = *c;
    if (is_truth(l)) return r;
    if (is_truth(r)) return l;
    if (is_falsity(l) || is_falsity(r)) return falsity();
    if (alpha_equal(l, r)) return l;
    return std::nullopt;
  }
  if (auto d = dest_binary(t, kOr)) {
    const auto& [l, r] = *d;
    if (is_truth(l) || is_truth(r)) return truth();
    if (is_falsity(l)) return r;
    if (is_falsity(r)) return l;
    if (alpha_equal(l, r)) return l;
    return std::nullopt;
  }
  if (auto i = dest_binary(t, kImp)) {
    const auto& [l, r] = *i;
    if (is_truth(l)) return r;
    if (is_falsity(l) || is_truth(r)) return truth();
    if (is_falsity(r)) return mk_not(l);
    if (alpha_equal(l, r)) return truth();
    return std::nullopt;
  }
  if (auto b = dest_binary(t, kIff)) {
    const auto& [l, r] = *b;
    if (is_truth(l)) return r;
    if (is_truth(r)) return l;
    if (is_falsity(l)) return mk_not(r);
    if (is_falsity(r)) return mk_not(l);
    if (alpha_equal(l, r)) return truth();
    return std::nullopt;
  }
  if (auto e = dest_binary(t, kEq)) {
    const auto& [l, r] = *e;
    if (alpha_equal(l, r)) return truth();
    if (l.type().is_bool()) {
      if (is_truth(l)) return r;
      if (is_truth(r)) return l;
    }
    auto cl = constructor_of(l);
    auto cr = constructor_of(r);
    if (cl && cr) {
      if (cl->first != cr->first) return falsity();
      if (cl->second.empty()) return truth();
      Term acc = mk_eq(cl->second.back(), cr->second.back());
      for (std::size_t k = cl->second.size() - 1; k-- > 0;) {
        acc = mk_and(mk_eq(cl->second[k], cr->second[k]), acc);
      }
      return acc;
    }
    return std::nullopt;
  }
  for (std::string_view q : {kForall, kExists}) {
    if (auto bd = dest_binder(t, q)) {
      if (!occurs_free(bd->first, bd->second)) return bd->second;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Rewriter::Rewriter(std::vector<RewriteRule> rules, std::size_t max_steps)
    : rules_(std::move(rules)), max_steps_(max_steps) {}

void Rewriter::count_step() {
  if (++steps_ > max_steps_) throw RewriteLimit();
}

std::optional<Term> Rewriter::step_at_root(const Term& t, Budget& budget) {
  budget.charge();
  if (auto s = builtin_simplify(t)) return s;
  const Term* th = head_const(t);
  for (const RewriteRule& rule : rules_) {
    const Term* rh = head_const(rule.lhs);
    if (rh != nullptr && (th == nullptr || rh->name() != th->name())) continue;
    budget.charge();
    if (auto theta = match_term(rule.lhs, t, rule.pattern_vars)) {
      Term out = subst(rule.rhs, *theta);
      if (rule.permutative && !term_less(out, t)) continue;
      return out;
    }
  }
  return std::nullopt;
}

Term Rewriter::norm(const Term& t, Budget& budget, std::size_t depth) {
  if (depth > 4 * max_steps_ + 256) throw RewriteLimit();
  Term cur = t;
  switch (t.kind()) {
    case Term::Kind::App: {
      Term f = norm(t.fun(), budget, depth + 1);
      Term a = norm(t.arg(), budget, depth + 1);
      if (!f.same_node(t.fun()) || !a.same_node(t.arg())) cur = Term::app(f, a);
      break;
    }
    case Term::Kind::Abs: {
      Term b = norm(t.body(), budget, depth + 1);
      if (!b.same_node(t.body())) cur = Term::abs(t.bound(), b);
      break;
    }
    default:
      break;
  }
  if (auto next = step_at_root(cur, budget)) {
    count_step();
    return norm(*next, budget, depth + 1);
  }
  return cur;
}

Term Rewriter::normalize(const Term& t, Budget& budget) {
  steps_ = 0;
  return norm(t, budget, 0);
}

}  // namespace tacsearch
