// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <algorithm>
#include <set>

#include "tacsearch/errors.hpp"
#include "tacsearch/prover.hpp"

namespace tacsearch {

int SymbolTable::intern(const std::string& name, std::size_t arity) {
  auto [it, inserted] = ids_.emplace(name, static_cast<int>(names_.size()));
  if (inserted) {
    names_.push_back(name);
    arities_.push_back(arity);
  }
  return it->second;
}

namespace {

using namespace logic;

constexpr std::size_t kMaxClausesPerFormula = 512;

bool same_var(const Term& a, const Term& b) {
  return a.name() == b.name() && a.type() == b.type();
}

bool is_base(const Type& t) { return !t.is_fun() && !t.is_bool(); }

// Quantifier-free NNF over first-order literals.
struct Fm {
  enum class K { True, False, Lit, And, Or };
  K k = K::True;
  Literal lit;
  std::vector<Fm> kids;
};

Fm lit(bool pos, FoTerm atom) { return Fm{Fm::K::Lit, Literal{pos, std::move(atom)}, {}}; }
Fm konst(bool v) { return Fm{v ? Fm::K::True : Fm::K::False, {}, {}}; }
Fm join(Fm::K k, Fm a, Fm b) {
  Fm f{k, {}, {}};
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

// `!p:bool. b` becomes b[T/p] /\ b[F/p]; bool equations become <=>.
Term expand_bool(const Term& t) {
  for (std::string_view q : {kForall, kExists}) {
    if (auto bd = dest_binder(t, q)) {
      Term body = expand_bool(bd->second);
      if (bd->first.type().is_bool()) {
        Term a = subst(body, {{bd->first, truth()}});
        Term b = subst(body, {{bd->first, falsity()}});
        return q == kForall ? mk_and(a, b) : mk_or(a, b);
      }
      return q == kForall ? mk_forall(bd->first, body) : mk_exists(bd->first, body);
    }
  }
  if (auto n = dest_not(t)) return mk_not(expand_bool(*n));
  for (std::string_view op : {kAnd, kOr, kImp, kIff}) {
    if (auto b = dest_binary(t, op)) {
      return mk_binary(op, expand_bool(b->first), expand_bool(b->second));
    }
  }
  if (auto e = dest_binary(t, kEq); e && e->first.type().is_bool()) {
    return mk_iff(expand_bool(e->first), expand_bool(e->second));
  }
  return t;
}

struct Symbol {
  std::vector<Type> args;
  Type result;
  bool predicate;
};

class Converter {
 public:
  ClauseSet& result() { return out_; }

  // Free variables of premises are universal; those of the goal are fixed.
  void add_formula(const Term& t, int premise, bool generalize_free) {
    Term f = t;
    if (generalize_free) {
      auto fvs = free_vars(f);
      for (auto it = fvs.rbegin(); it != fvs.rend(); ++it) f = mk_forall(*it, f);
    }
    f = expand_bool(f);
    env_.clear();
    universals_.clear();
    universal_types_.clear();
    next_var_ = 0;
    Fm nnf = convert(f, true);
    std::vector<std::vector<Literal>> cnf = to_cnf(nnf);
    for (auto& lits : cnf) {
      Clause c;
      c.literals = std::move(lits);
      if (premise >= 0) c.premises.push_back(premise);
      out_.clauses.push_back(std::move(c));
    }
  }

  void add_equality_axioms() {
    if (eq_types_.empty()) return;
    auto v = [](int i) { return FoTerm::variable(i); };
    for (const auto& [key, ty] : eq_types_) {
      const int eq = eq_sym(ty);
      auto atom = [&](FoTerm a, FoTerm b) { return FoTerm{eq, {std::move(a), std::move(b)}}; };
      push({Literal{true, atom(v(0), v(0))}});
      push({Literal{false, atom(v(0), v(1))}, Literal{true, atom(v(1), v(0))}});
      push({Literal{false, atom(v(0), v(1))}, Literal{false, atom(v(1), v(2))},
            Literal{true, atom(v(0), v(2))}});
    }
    const std::map<int, Symbol> syms = symbols_;
    for (const auto& [id, sym] : syms) {
      const std::size_t n = sym.args.size();
      if (n == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        auto eq_arg = eq_types_.find(type_to_string(sym.args[i]));
        if (eq_arg == eq_types_.end()) continue;
        const int eqi = eq_sym(sym.args[i]);
        std::vector<FoTerm> xs;
        std::vector<FoTerm> ys;
        for (std::size_t j = 0; j < n; ++j) {
          xs.push_back(v(static_cast<int>(j)));
          ys.push_back(j == i ? v(static_cast<int>(n)) : v(static_cast<int>(j)));
        }
        Literal hyp{false, FoTerm{eqi, {xs[i], ys[i]}}};
        if (sym.predicate) {
          push({hyp, Literal{false, FoTerm{id, xs}}, Literal{true, FoTerm{id, ys}}});
        } else {
          if (eq_types_.count(type_to_string(sym.result)) == 0) continue;
          const int eqr = eq_sym(sym.result);
          push({hyp, Literal{true, FoTerm{eqr, {FoTerm{id, xs}, FoTerm{id, ys}}}}});
        }
      }
    }
  }

 private:
  void push(std::vector<Literal> lits) {
    Clause c;
    c.literals = std::move(lits);
    out_.clauses.push_back(std::move(c));
  }

  int eq_sym(const Type& ty) {
    const std::string key = type_to_string(ty);
    eq_types_.emplace(key, ty);
    return out_.symbols.intern("=|" + key, 2);
  }

  int symbol(const std::string& name, const Type& ty, std::size_t arity, bool predicate,
             bool free_var) {
    const std::string key = (free_var ? "$" : "") + name + "|" + type_to_string(ty);
    const int id = out_.symbols.intern(key, arity);
    if (!symbols_.count(id)) {
      Symbol s{{}, ty, predicate};
      Type cur = ty;
      for (std::size_t i = 0; i < arity; ++i) {
        s.args.push_back(cur.domain());
        cur = cur.range();
      }
      s.result = cur;
      symbols_.emplace(id, s);
    }
    return id;
  }

  const FoTerm* lookup(const Term& v) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (same_var(it->first, v)) return &it->second;
    }
    return nullptr;
  }

  FoTerm term(const Term& t) {
    if (!is_base(t.type())) {
      throw UnsupportedFragment("non-first-order argument of type " + type_to_string(t.type()));
    }
    auto [head, args] = strip_comb(t);
    std::vector<FoTerm> fargs;
    for (const Term& a : args) fargs.push_back(term(a));
    if (head.is_var()) {
      if (const FoTerm* b = lookup(head)) {
        if (!args.empty()) throw UnsupportedFragment("applied bound variable");
        return *b;
      }
      return FoTerm{symbol(head.name(), head.type(), args.size(), false, true), fargs};
    }
    if (head.is_const()) {
      if (is_logical_connective(head.name()) || head.name() == kEq) {
        throw UnsupportedFragment("logical operator inside a term");
      }
      return FoTerm{symbol(head.name(), head.type(), args.size(), false, false), fargs};
    }
    throw UnsupportedFragment("lambda abstraction");
  }

  FoTerm atom(const Term& t) {
    if (auto e = dest_binary(t, kEq)) {
      return FoTerm{eq_sym(e->first.type()), {term(e->first), term(e->second)}};
    }
    auto [head, args] = strip_comb(t);
    std::vector<FoTerm> fargs;
    for (const Term& a : args) fargs.push_back(term(a));
    if (head.is_var()) {
      if (lookup(head) != nullptr) throw UnsupportedFragment("applied bound variable");
      return FoTerm{symbol(head.name(), head.type(), args.size(), true, true), fargs};
    }
    if (head.is_const()) {
      if (is_logical_connective(head.name())) {
        throw UnsupportedFragment("partially applied connective");
      }
      return FoTerm{symbol(head.name(), head.type(), args.size(), true, false), fargs};
    }
    throw UnsupportedFragment("lambda abstraction");
  }

  Fm convert(const Term& t, bool pos) {
    if (is_const(t, kTrue)) return konst(pos);
    if (is_const(t, kFalse)) return konst(!pos);
    if (auto n = dest_not(t)) return convert(*n, !pos);
    if (auto a = dest_binary(t, kAnd)) {
      return join(pos ? Fm::K::And : Fm::K::Or, convert(a->first, pos), convert(a->second, pos));
    }
    if (auto o = dest_binary(t, kOr)) {
      return join(pos ? Fm::K::Or : Fm::K::And, convert(o->first, pos), convert(o->second, pos));
    }
    if (auto i = dest_binary(t, kImp)) {
      return join(pos ? Fm::K::Or : Fm::K::And, convert(i->first, !pos),
                  convert(i->second, pos));
    }
    if (auto b = dest_binary(t, kIff)) {
      if (pos) {
        return join(Fm::K::And,
                    join(Fm::K::Or, convert(b->first, false), convert(b->second, true)),
                    join(Fm::K::Or, convert(b->first, true), convert(b->second, false)));
      }
      return join(Fm::K::Or,
                  join(Fm::K::And, convert(b->first, true), convert(b->second, false)),
                  join(Fm::K::And, convert(b->first, false), convert(b->second, true)));
    }
    for (std::string_view q : {kForall, kExists}) {
      auto bd = dest_binder(t, q);
      if (!bd) continue;
      const Term& v = bd->first;
      if (!is_base(v.type())) throw UnsupportedFragment("higher-order quantifier");
      const bool universal = (q == kForall) == pos;
      if (universal) {
        env_.emplace_back(v, FoTerm::variable(next_var_++));
        universals_.push_back(env_.back().second);
        universal_types_.push_back(v.type());
      } else {
        const std::string name = "sk" + std::to_string(skolems_++);
        const int id = out_.symbols.intern(name, universals_.size());
        symbols_.emplace(id, Symbol{universal_types_, v.type(), false});
        env_.emplace_back(v, FoTerm{id, universals_});
      }
      Fm body = convert(bd->second, pos);
      env_.pop_back();
      if (universal) {
        universals_.pop_back();
        universal_types_.pop_back();
      }
      return body;
    }
    if (t.is_app() && t.fun().is_const() && is_logical_connective(t.fun().name())) {
      throw UnsupportedFragment("quantifier over a non-abstraction");
    }
    return lit(pos, atom(t));
  }

  std::vector<std::vector<Literal>> to_cnf(const Fm& f) {
    switch (f.k) {
      case Fm::K::True:
        return {};
      case Fm::K::False:
        return {{}};
      case Fm::K::Lit:
        return {{f.lit}};
      case Fm::K::And: {
        auto a = to_cnf(f.kids[0]);
        auto b = to_cnf(f.kids[1]);
        a.insert(a.end(), b.begin(), b.end());
        if (a.size() > kMaxClausesPerFormula) throw UnsupportedFragment("clause explosion");
        return a;
      }
      case Fm::K::Or: {
        auto a = to_cnf(f.kids[0]);
        auto b = to_cnf(f.kids[1]);
        if (a.size() * b.size() > kMaxClausesPerFormula) {
          throw UnsupportedFragment("clause explosion");
        }
        std::vector<std::vector<Literal>> out;
        for (const auto& x : a) {
          for (const auto& y : b) {
            std::vector<Literal> c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
          }
        }
        return out;
      }
    }
    return {};
  }

  ClauseSet out_;
  std::vector<std::pair<Term, FoTerm>> env_;
  std::vector<FoTerm> universals_;
  std::vector<Type> universal_types_;
  int skolems_ = 0;
  int next_var_ = 0;
  std::map<std::string, Type> eq_types_;
  std::map<int, Symbol> symbols_;
};

}  // namespace

ClauseSet clausify(const Goal& goal, const std::vector<Theorem>& premises) {
  Converter conv;
  for (const Term& a : goal.assumptions) conv.add_formula(a, -1, false);
  conv.add_formula(mk_not(goal.conclusion), -1, false);
  for (const Theorem& p : premises) {
    Converter attempt = conv;
    try {
      attempt.result().premise_names.push_back(p.name);
      const int index = static_cast<int>(attempt.result().premise_names.size() - 1);
      attempt.add_formula(p.statement.conclusion, index, true);
      conv = std::move(attempt);
    } catch (const UnsupportedFragment&) {
    }
  }
  conv.add_equality_axioms();
  return std::move(conv.result());
}

}  // namespace tacsearch
