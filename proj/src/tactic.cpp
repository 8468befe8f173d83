// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/tactic.hpp"

#include <algorithm>
#include <optional>

#include "tacsearch/errors.hpp"
#include "tacsearch/prover.hpp"
#include "tacsearch/rewrite.hpp"
#include "tacsearch/syntax.hpp"

namespace tacsearch {

std::string TacticCall::canonical() const {
  std::string out = name;
  switch (arg) {
    case Arg::None:
      break;
    case Arg::Names:
      out += " [";
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
      }
      out += ']';
      break;
    case Arg::Text:
      out += " \"";
      out += text;
      out += '"';
      break;
  }
  return out;
}

Tactic::Tactic(std::string canonical, Fn fn, bool is_hammer)
    : canonical_(std::move(canonical)),
      fn_(std::make_shared<const Fn>(std::move(fn))),
      is_hammer_(is_hammer) {}

TacticOutcome Tactic::apply(const Goal& goal, Budget& budget) const {
  budget.charge();
  TacticOutcome out = (*fn_)(goal, budget);
  if (auto* s = std::get_if<Subgoals>(&out); s != nullptr && s->label.empty()) {
    s->label = canonical_;
  }
  return out;
}

TacticOutcome apply_with_budget(const Tactic& tactic, const Goal& goal, double seconds,
                                ClockMode mode, std::uint64_t* used_ticks) {
  Budget budget(seconds, mode);
  TacticOutcome out;
  try {
    out = tactic.apply(goal, budget);
  } catch (const BudgetExceeded&) {
    out = Timeout{};
  }
  if (used_ticks != nullptr) *used_ticks = budget.ticks();
  return out;
}

void TheoremEnv::add(const Theorem& thm) {
  if (!by_name_.emplace(thm.name, thm).second) {
    throw CorpusError("duplicate theorem name '" + thm.name + "'");
  }
  order_.push_back(thm.name);
}

const Theorem* TheoremEnv::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &it->second;
}

std::vector<Theorem> TheoremEnv::theorems() const {
  std::vector<Theorem> out;
  out.reserve(order_.size());
  for (const std::string& n : order_) out.push_back(by_name_.at(n));
  return out;
}

namespace {

using namespace logic;

Failure fail(std::string why) { return Failure{std::move(why)}; }

Subgoals one(Goal g) { return Subgoals{{std::move(g)}, {}}; }

bool has_assumption(const std::vector<Term>& asms, const Term& t) {
  return std::any_of(asms.begin(), asms.end(), [&](const Term& a) { return alpha_equal(a, t); });
}

std::vector<Term> with_assumption(std::vector<Term> asms, const Term& t) {
  if (!has_assumption(asms, t)) asms.push_back(t);
  return asms;
}

std::vector<std::string> free_names(const Goal& g) {
  std::vector<std::string> out;
  for (const Term& a : g.assumptions) {
    for (const Term& v : free_vars(a)) out.push_back(v.name());
  }
  for (const Term& v : free_vars(g.conclusion)) out.push_back(v.name());
  return out;
}

// Instantiates the outermost universal with a variable fresh for the goal.
std::optional<Goal> strip_forall(const Goal& g) {
  auto q = dest_binder(g.conclusion, kForall);
  if (!q) return std::nullopt;
  const auto& [v, body] = *q;
  Term fresh = Term::var(fresh_name(v.name(), free_names(g)), v.type());
  Term concl = fresh.name() == v.name() ? body : subst(body, {{v, fresh}});
  return Goal(g.assumptions, concl);
}

std::optional<Goal> strip_once(const Goal& g) {
  if (auto s = strip_forall(g)) return s;
  if (auto imp = dest_binary(g.conclusion, kImp)) {
    return Goal(with_assumption(g.assumptions, imp->first), imp->second);
  }
  return std::nullopt;
}

// Strips leading universals until `pick` accepts the binder. Returns the goal
// with the chosen binder still outermost.
template <class Pred>
std::optional<Goal> strip_until(const Goal& g, Pred pick, Budget& budget) {
  Goal cur = g;
  while (true) {
    budget.charge();
    auto q = dest_binder(cur.conclusion, kForall);
    if (!q) return std::nullopt;
    if (pick(q->first)) return cur;
    cur = *strip_forall(cur);
  }
}

Term fresh_var(const Goal& g, const std::string& base, const Type& ty,
               const std::vector<std::string>& also = {}) {
  std::vector<std::string> taken = free_names(g);
  taken.insert(taken.end(), also.begin(), also.end());
  return Term::var(fresh_name(base, taken), ty);
}

const Signature& std_sig() {
  static const Signature s = Signature::standard();
  return s;
}

Term zero() { return Term::constant("0", Type::num()); }
Term suc(const Term& n) { return Term::app(Term::constant("SUC", *std_sig().type_of("SUC")), n); }
Term nil() { return Term::constant("NIL", Type::list(Type::num())); }
Term cons(const Term& h, const Term& t) {
  return list_mk_comb(Term::constant("::", *std_sig().type_of("::")), {h, t});
}

bool is_num(const Type& t) { return t == Type::num(); }
bool is_num_list(const Type& t) { return t == Type::list(Type::num()); }

// Base/step schema over the outermost binder of the requested type.
TacticOutcome induct(const Goal& g, bool list, Budget& budget) {
  auto pred = [&](const Term& v) { return list ? is_num_list(v.type()) : is_num(v.type()); };
  auto at = strip_until(g, pred, budget);
  if (!at) {
    return fail(list ? "no universally quantified list variable"
                     : "no universally quantified num variable");
  }
  auto [v, body] = *dest_binder(at->conclusion, kForall);
  Term x = fresh_var(*at, v.name(), v.type());
  Term px = x.name() == v.name() ? body : subst(body, {{v, x}});
  Goal base(at->assumptions, subst(body, {{v, list ? nil() : zero()}}));
  Term step_concl;
  if (list) {
    Term h = fresh_var(*at, "h", Type::num(), {x.name()});
    step_concl = subst(body, {{v, cons(h, x)}});
  } else {
    step_concl = subst(body, {{v, suc(x)}});
  }
  Goal step(with_assumption(at->assumptions, px), step_concl);
  return Subgoals{{base, step}, {}};
}

// Case split on a named free variable or leading binder.
TacticOutcome cases(const Goal& g, const std::string& name, const Type& ty, Budget& budget) {
  std::vector<Term> instances;
  auto make_instances = [&](const Goal& at, const std::vector<std::string>& avoid) {
    if (ty.is_bool()) {
      instances = {truth(), falsity()};
    } else if (is_num(ty)) {
      instances = {zero(), suc(fresh_var(at, "n", ty, avoid))};
    } else {
      Term h = fresh_var(at, "h", Type::num(), avoid);
      std::vector<std::string> more = avoid;
      more.push_back(h.name());
      instances = {nil(), cons(h, fresh_var(at, "t", ty, more))};
    }
  };
  for (const Term& v : free_vars(g.conclusion)) {
    if (v.name() != name) continue;
    if (v.type() != ty) return fail("variable '" + name + "' has the wrong type");
    make_instances(g, {});
    std::vector<Goal> out;
    for (const Term& inst : instances) {
      std::vector<Term> asms;
      for (const Term& a : g.assumptions) asms.push_back(subst(a, {{v, inst}}));
      out.emplace_back(asms, subst(g.conclusion, {{v, inst}}));
    }
    return Subgoals{out, {}};
  }
  auto at = strip_until(g, [&](const Term& v) { return v.name() == name; }, budget);
  if (!at) return fail("no variable '" + name + "'");
  auto [v, body] = *dest_binder(at->conclusion, kForall);
  if (v.type() != ty) return fail("variable '" + name + "' has the wrong type");
  make_instances(*at, {});
  std::vector<Goal> out;
  for (const Term& inst : instances) out.emplace_back(at->assumptions, subst(body, {{v, inst}}));
  return Subgoals{out, {}};
}

// Replaces every free occurrence of `from` in t by `to`.
Term replace_all(const Term& t, const Term& from, const Term& to, const std::vector<Term>& fv_from,
                 const std::vector<Term>& fv_to) {
  if (alpha_equal(t, from)) return to;
  if (t.is_app()) {
    Term f = replace_all(t.fun(), from, to, fv_from, fv_to);
    Term a = replace_all(t.arg(), from, to, fv_from, fv_to);
    if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
    return Term::app(f, a);
  }
  if (t.is_abs()) {
    auto binds = [&](const std::vector<Term>& vs) {
      return std::any_of(vs.begin(), vs.end(), [&](const Term& v) {
        return v.name() == t.bound().name() && v.type() == t.bound().type();
      });
    };
    if (binds(fv_from) || binds(fv_to)) return t;
    Term b = replace_all(t.body(), from, to, fv_from, fv_to);
    if (b.same_node(t.body())) return t;
    return Term::abs(t.bound(), b);
  }
  return t;
}

bool occurs_in(const Term& sub, const Term& t) {
  if (alpha_equal(sub, t)) return true;
  if (t.is_app()) return occurs_in(sub, t.fun()) || occurs_in(sub, t.arg());
  if (t.is_abs()) return occurs_in(sub, t.body());
  return false;
}

TacticOutcome eq_subst(const Goal& g, Budget& budget) {
  for (const Term& a : g.assumptions) {
    budget.charge();
    auto e = dest_binary(a, kEq);
    if (!e || alpha_equal(e->first, e->second)) continue;
    if (!occurs_in(e->first, g.conclusion)) continue;
    Term c = replace_all(g.conclusion, e->first, e->second, free_vars(e->first),
                         free_vars(e->second));
    if (alpha_equal(c, g.conclusion)) continue;
    return one(Goal(g.assumptions, c));
  }
  return fail("no usable equational assumption");
}

TacticOutcome rewrite(const Goal& g, const std::vector<const Theorem*>& thms, Budget& budget) {
  std::vector<RewriteRule> rules;
  for (const Theorem* t : thms) {
    auto r = rules_of(t->statement.conclusion);
    rules.insert(rules.end(), r.begin(), r.end());
  }
  for (const Term& a : g.assumptions) {
    auto r = rules_of(a);
    rules.insert(rules.end(), r.begin(), r.end());
  }
  Rewriter rw(std::move(rules));
  Term c;
  try {
    c = rw.normalize(g.conclusion, budget);
  } catch (const RewriteLimit& e) {
    return fail(e.what());
  }
  if (logic::is_const(c, kTrue)) return Subgoals{{}, {}};
  if (alpha_equal(c, g.conclusion)) return fail("rewriting made no progress");
  return one(Goal(g.assumptions, c));
}

// Forward chaining over assumptions: conjunction splitting and modus
// ponens to a fixpoint, then closing on the conclusion, F or p/~p.
TacticOutcome res(const Goal& g, Budget& budget) {
  std::vector<Term> asms = g.assumptions;
  bool changed = true;
  std::size_t rounds = 0;
  while (changed && rounds++ < 16) {
    changed = false;
    const std::size_t n = asms.size();
    for (std::size_t i = 0; i < n; ++i) {
      budget.charge();
      if (auto c = dest_binary(asms[i], kAnd)) {
        for (const Term& part : {c->first, c->second}) {
          if (!has_assumption(asms, part)) {
            asms.push_back(part);
            changed = true;
          }
        }
      }
      if (auto imp = dest_binary(asms[i], kImp)) {
        if (has_assumption(asms, imp->first) && !has_assumption(asms, imp->second)) {
          asms.push_back(imp->second);
          changed = true;
        }
      }
    }
  }
  if (has_assumption(asms, g.conclusion) || has_assumption(asms, falsity())) {
    return Subgoals{{}, {}};
  }
  for (const Term& a : asms) {
    budget.charge();
    if (has_assumption(asms, mk_not(a))) return Subgoals{{}, {}};
  }
  if (asms.size() == g.assumptions.size()) return fail("no new consequences");
  return one(Goal(asms, g.conclusion));
}

struct Spec {
  TacticCall::Arg arg;
};

const std::map<std::string, Spec>& specs() {
  using A = TacticCall::Arg;
  static const std::map<std::string, Spec> table = {
      {"accept_tac", {A::None}},      {"strip_tac", {A::None}},
      {"gen_strip_tac", {A::None}},   {"conj_tac", {A::None}},
      {"disj1_tac", {A::None}},       {"disj2_tac", {A::None}},
      {"contra_tac", {A::None}},      {"refl_tac", {A::None}},
      {"sym_tac", {A::None}},         {"eq_subst_tac", {A::None}},
      {"rewrite_tac", {A::Names}},    {"induct_num_tac", {A::None}},
      {"induct_list_tac", {A::None}}, {"cases_num_tac", {A::Text}},
      {"cases_list_tac", {A::Text}},  {"cases_bool_tac", {A::Text}},
      {"exists_tac", {A::Text}},      {"eq_tac", {A::None}},
      {"disj_cases_tac", {A::None}},  {"res_tac", {A::None}},
      {"hammer_tac", {A::Names}},
  };
  return table;
}

}  // namespace

TacticLibrary::TacticLibrary(const Signature& sig, const TheoremEnv& env)
    : sig_(&sig), env_(&env) {}

bool TacticLibrary::known(const std::string& name) { return specs().count(name) > 0; }

TacticCall::Arg TacticLibrary::argument_kind(const std::string& name) {
  auto it = specs().find(name);
  if (it == specs().end()) throw ParseError("unknown tactic '" + name + "'");
  return it->second.arg;
}

Tactic TacticLibrary::parse(std::string_view text) const { return make(parse_tactic_call(text)); }

Tactic TacticLibrary::make(const TacticCall& call) const {
  const TacticCall::Arg kind = argument_kind(call.name);
  if (kind != call.arg) {
    throw ParseError("tactic '" + call.name + "' expects " +
                     (kind == TacticCall::Arg::None    ? std::string("no argument")
                      : kind == TacticCall::Arg::Names ? std::string("a theorem list")
                                                       : std::string("a quoted argument")));
  }
  std::vector<const Theorem*> thms;
  for (const std::string& n : call.names) {
    const Theorem* t = env_->find(n);
    if (t == nullptr) throw ParseError("unknown theorem '" + n + "'");
    thms.push_back(t);
  }
  const std::string& name = call.name;
  const std::string canonical = call.canonical();
  const Signature* sig = sig_;
  Tactic::Fn fn;

  if (name == "accept_tac") {
    fn = [](const Goal& g, Budget&) -> TacticOutcome {
      if (has_assumption(g.assumptions, g.conclusion)) return Subgoals{{}, {}};
      return fail("conclusion is not an assumption");
    };
  } else if (name == "strip_tac") {
    fn = [](const Goal& g, Budget&) -> TacticOutcome {
      if (auto s = strip_once(g)) return one(*s);
      return fail("nothing to strip");
    };
  } else if (name == "gen_strip_tac") {
    fn = [](const Goal& g, Budget& budget) -> TacticOutcome {
      Goal cur = g;
      bool any = false;
      while (auto s = strip_once(cur)) {
        budget.charge();
        cur = *s;
        any = true;
      }
      if (!any) return fail("nothing to strip");
      return one(cur);
    };
  } else if (name == "conj_tac") {
    fn = [](const Goal& g, Budget&) -> TacticOutcome {
      auto c = dest_binary(g.conclusion, kAnd);
      if (!c) return fail("no conjunction at top");
      return Subgoals{{Goal(g.assumptions, c->first), Goal(g.assumptions, c->second)}, {}};
    };
  } else if (name == "disj1_tac" || name == "disj2_tac") {
    const bool left = name == "disj1_tac";
    fn = [left](const Goal& g, Budget&) -> TacticOutcome {
      auto d = dest_binary(g.conclusion, kOr);
      if (!d) return fail("no disjunction at top");
      return one(Goal(g.assumptions, left ? d->first : d->second));
    };
  } else if (name == "contra_tac") {
    fn = [](const Goal& g, Budget&) -> TacticOutcome {
      auto n = dest_not(g.conclusion);
      if (!n) return fail("no negation at top");
      return one(Goal(with_assumption(g.assumptions, *n), falsity()));
    };
  } else if (name == "refl_tac") {
    fn = [](const Goal& g, Budget&) -> TacticOutcome {
      auto e = dest_binary(g.conclusion, kEq);
      if (!e) e = dest_binary(g.conclusion, kIff);
      if (e && alpha_equal(e->first, e->second)) return Subgoals{{}, {}};
      return fail("not a reflexive equation");
    };
  } else if (name == "sym_tac") {
    fn = [](const Goal& g, Budget&) -> TacticOutcome {
      auto e = dest_binary(g.conclusion, kEq);
      if (!e) return fail("no equation at top");
      if (alpha_equal(e->first, e->second)) return fail("symmetric equation is unchanged");
      return one(Goal(g.assumptions, mk_eq(e->second, e->first)));
    };
  } else if (name == "eq_subst_tac") {
    fn = [](const Goal& g, Budget& budget) -> TacticOutcome { return eq_subst(g, budget); };
  } else if (name == "rewrite_tac") {
    fn = [thms](const Goal& g, Budget& budget) -> TacticOutcome {
      return rewrite(g, thms, budget);
    };
  } else if (name == "induct_num_tac" || name == "induct_list_tac") {
    const bool list = name == "induct_list_tac";
    fn = [list](const Goal& g, Budget& budget) -> TacticOutcome { return induct(g, list, budget); };
  } else if (name == "cases_num_tac" || name == "cases_list_tac" || name == "cases_bool_tac") {
    const Type ty = name == "cases_num_tac"    ? Type::num()
                    : name == "cases_list_tac" ? Type::list(Type::num())
                                               : Type::boolean();
    const std::string var = call.text;
    fn = [ty, var](const Goal& g, Budget& budget) -> TacticOutcome {
      return cases(g, var, ty, budget);
    };
  } else if (name == "exists_tac") {
    const std::string text = call.text;
    fn = [text, sig](const Goal& g, Budget&) -> TacticOutcome {
      auto q = dest_binder(g.conclusion, kExists);
      if (!q) return fail("no existential at top");
      std::vector<Term> ctx;
      for (const Term& a : g.assumptions) {
        for (const Term& v : free_vars(a)) ctx.push_back(v);
      }
      for (const Term& v : free_vars(g.conclusion)) ctx.push_back(v);
      Term w;
      try {
        w = parse_term(text, *sig, ctx);
      } catch (const ParseError& e) {
        return fail(std::string("bad witness: ") + e.what());
      }
      if (w.type() != q->first.type()) return fail("witness has the wrong type");
      return one(Goal(g.assumptions, subst(q->second, {{q->first, w}})));
    };
  } else if (name == "eq_tac") {
    fn = [](const Goal& g, Budget&) -> TacticOutcome {
      auto e = dest_binary(g.conclusion, kIff);
      if (!e) {
        e = dest_binary(g.conclusion, kEq);
        if (e && !e->first.type().is_bool()) e.reset();
      }
      if (!e) return fail("no boolean equivalence at top");
      return Subgoals{{Goal(g.assumptions, mk_imp(e->first, e->second)),
                       Goal(g.assumptions, mk_imp(e->second, e->first))},
                      {}};
    };
  } else if (name == "disj_cases_tac") {
    fn = [](const Goal& g, Budget&) -> TacticOutcome {
      for (std::size_t i = 0; i < g.assumptions.size(); ++i) {
        auto d = dest_binary(g.assumptions[i], kOr);
        if (!d) continue;
        std::vector<Term> rest;
        for (std::size_t j = 0; j < g.assumptions.size(); ++j) {
          if (j != i) rest.push_back(g.assumptions[j]);
        }
        return Subgoals{{Goal(with_assumption(rest, d->first), g.conclusion),
                         Goal(with_assumption(rest, d->second), g.conclusion)},
                        {}};
      }
      return fail("no disjunctive assumption");
    };
  } else if (name == "res_tac") {
    fn = [](const Goal& g, Budget& budget) -> TacticOutcome { return res(g, budget); };
  } else if (name == "hammer_tac") {
    std::vector<Theorem> premises;
    for (const Theorem* t : thms) premises.push_back(*t);
    fn = [premises](const Goal& g, Budget& budget) -> TacticOutcome {
      ProofResult r = prove_goal(g, premises, budget);
      if (r.status == ProofResult::Status::Proof) return Subgoals{{}, {}};
      if (r.status == ProofResult::Status::Timeout) return Timeout{};
      return fail("prover gave up");
    };
  }
  return Tactic(canonical, std::move(fn), false);
}

std::vector<Tactic> TacticLibrary::reference_tactics() const {
  std::vector<Tactic> out;
  for (const auto& [name, spec] : specs()) {
    if (spec.arg == TacticCall::Arg::None) {
      TacticCall c;
      c.name = name;
      out.push_back(make(c));
    }
  }
  return out;
}

}  // namespace tacsearch
