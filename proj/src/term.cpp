// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/term.hpp"

#include <algorithm>
#include <set>

#include "tacsearch/errors.hpp"

namespace tacsearch {

// ---------------------------------------------------------------------------
// Type

struct Type::Node {
  std::string name;
  std::vector<Type> args;
};

Type::Type() : Type(Type::boolean()) {}
Type::Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Type Type::constructor(const std::string& name, std::vector<Type> args) {
  std::size_t expected = 0;
  if (name == "fun") {
    expected = 2;
  } else if (name == "list") {
    expected = 1;
  } else if (name != "bool" && name != "num") {
    throw TypeError("unknown type constructor '" + name + "'");
  }
  if (args.size() != expected) {
    throw TypeError("type constructor '" + name + "' expects " + std::to_string(expected) +
                    " argument(s)");
  }
  return Type(std::make_shared<const Node>(Node{name, std::move(args)}));
}

Type Type::boolean() {
  static const Type t(std::make_shared<const Node>(Node{"bool", {}}));
  return t;
}

Type Type::num() {
  static const Type t(std::make_shared<const Node>(Node{"num", {}}));
  return t;
}

Type Type::list(const Type& element) { return constructor("list", {element}); }
Type Type::fun(const Type& domain, const Type& range) { return constructor("fun", {domain, range}); }

const std::string& Type::name() const { return node_->name; }
const std::vector<Type>& Type::args() const { return node_->args; }
bool Type::is_fun() const { return node_->name == "fun"; }
bool Type::is_bool() const { return node_->name == "bool"; }

const Type& Type::domain() const {
  if (!is_fun()) throw TypeError("domain of non-function type");
  return node_->args[0];
}

const Type& Type::range() const {
  if (!is_fun()) throw TypeError("range of non-function type");
  return node_->args[1];
}

std::size_t Type::arity() const {
  std::size_t n = 0;
  const Type* t = this;
  while (t->is_fun()) {
    ++n;
    t = &t->range();
  }
  return n;
}

void Type::collect_constructors(std::vector<std::string>& out) const {
  out.push_back(node_->name);
  for (const Type& a : node_->args) a.collect_constructors(out);
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->name == b.node_->name && a.node_->args == b.node_->args;
}

bool operator<(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return false;
  if (a.node_->name != b.node_->name) return a.node_->name < b.node_->name;
  return std::lexicographical_compare(a.node_->args.begin(), a.node_->args.end(),
                                      b.node_->args.begin(), b.node_->args.end());
}

namespace {

void type_text(const Type& t, std::string& out) {
  if (t.is_fun()) {
    const bool wrap = t.domain().is_fun();
    if (wrap) out += '(';
    type_text(t.domain(), out);
    if (wrap) out += ')';
    out += "->";
    type_text(t.range(), out);
  } else if (t.args().empty()) {
    out += t.name();
  } else {
    out += t.name();
    out += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ',';
      type_text(t.args()[i], out);
    }
    out += ')';
  }
}

}  // namespace

std::string type_to_string(const Type& t) {
  std::string s;
  type_text(t, s);
  return s;
}

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  Kind kind;
  std::string name;
  Type type;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t size;
};

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term::Term() {
  static const std::shared_ptr<const Node> truth =
      std::make_shared<const Node>(Node{Kind::Const, "T", Type::boolean(), nullptr, nullptr, 1});
  node_ = truth;
}

Term Term::var(const std::string& name, const Type& type) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, name, type, nullptr, nullptr, 1}));
}

Term Term::constant(const std::string& name, const Type& type) {
  return Term(std::make_shared<const Node>(Node{Kind::Const, name, type, nullptr, nullptr, 1}));
}

Term Term::app(const Term& f, const Term& a) {
  const Type& ft = f.node_->type;
  if (!ft.is_fun()) {
    throw TypeError("application of a non-function of type " + type_to_string(ft));
  }
  if (ft.domain() != a.node_->type) {
    throw TypeError("argument type " + type_to_string(a.node_->type) + " does not match " +
                    type_to_string(ft.domain()));
  }
  return Term(std::make_shared<const Node>(Node{Kind::App, std::string(), ft.range(), f.node_,
                                                a.node_, 1 + f.size() + a.size()}));
}

Term Term::abs(const Term& bound, const Term& body) {
  if (!bound.is_var()) throw TypeError("abstraction over a non-variable");
  return Term(std::make_shared<const Node>(
      Node{Kind::Abs, std::string(), Type::fun(bound.node_->type, body.node_->type), bound.node_,
           body.node_, 1 + body.size()}));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Type& Term::type() const { return node_->type; }

const Term& Term::fun() const {
  return *reinterpret_cast<const Term*>(&node_->left);
}
const Term& Term::arg() const {
  return *reinterpret_cast<const Term*>(&node_->right);
}
const Term& Term::bound() const {
  return *reinterpret_cast<const Term*>(&node_->left);
}
const Term& Term::body() const {
  return *reinterpret_cast<const Term*>(&node_->right);
}

std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->size != b.node_->size) return false;
  switch (a.node_->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return a.node_->name == b.node_->name && a.node_->type == b.node_->type;
    case Term::Kind::App:
    case Term::Kind::Abs:
      return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

bool Term::VarLess::operator()(const Term& a, const Term& b) const {
  if (a.name() != b.name()) return a.name() < b.name();
  return a.type() < b.type();
}

namespace {

bool same_var(const Term& a, const Term& b) {
  return a.name() == b.name() && a.type() == b.type();
}

using BoundPairs = std::vector<std::pair<Term, Term>>;

bool alpha_rec(const Term& a, const Term& b, BoundPairs& env) {
  if (env.empty() && a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        const bool left = same_var(it->first, a);
        const bool right = same_var(it->second, b);
        if (left || right) return left && right;
      }
      return same_var(a, b);
    }
    case Term::Kind::Const:
      return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::App:
      return alpha_rec(a.fun(), b.fun(), env) && alpha_rec(a.arg(), b.arg(), env);
    case Term::Kind::Abs: {
      if (a.bound().type() != b.bound().type()) return false;
      env.emplace_back(a.bound(), b.bound());
      const bool r = alpha_rec(a.body(), b.body(), env);
      env.pop_back();
      return r;
    }
  }
  return false;
}

void free_rec(const Term& t, std::vector<Term>& bound, std::vector<Term>& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
        if (same_var(*it, t)) return;
      }
      for (const Term& v : out) {
        if (same_var(v, t)) return;
      }
      out.push_back(t);
      return;
    }
    case Term::Kind::Const:
      return;
    case Term::Kind::App:
      free_rec(t.fun(), bound, out);
      free_rec(t.arg(), bound, out);
      return;
    case Term::Kind::Abs:
      bound.push_back(t.bound());
      free_rec(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  BoundPairs env;
  return alpha_rec(a, b, env);
}

std::vector<Term> free_vars(const Term& t) {
  std::vector<Term> bound;
  std::vector<Term> out;
  free_rec(t, bound, out);
  return out;
}

bool occurs_free(const Term& var, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return same_var(var, t);
    case Term::Kind::Const:
      return false;
    case Term::Kind::App:
      return occurs_free(var, t.fun()) || occurs_free(var, t.arg());
    case Term::Kind::Abs:
      if (same_var(var, t.bound())) return false;
      return occurs_free(var, t.body());
  }
  return false;
}

void collect_var_names(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out.push_back(t.name());
      return;
    case Term::Kind::Const:
      return;
    case Term::Kind::App:
      collect_var_names(t.fun(), out);
      collect_var_names(t.arg(), out);
      return;
    case Term::Kind::Abs:
      out.push_back(t.bound().name());
      collect_var_names(t.body(), out);
      return;
  }
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  std::string name = base;
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += '\'';
  return name;
}

namespace {

Term subst_rec(const Term& t, const Substitution& binding) {
  switch (t.kind()) {
    case Term::Kind::Var:
      for (const auto& [v, r] : binding) {
        if (same_var(v, t)) return r;
      }
      return t;
    case Term::Kind::Const:
      return t;
    case Term::Kind::App: {
      Term f = subst_rec(t.fun(), binding);
      Term a = subst_rec(t.arg(), binding);
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return Term::app(f, a);
    }
    case Term::Kind::Abs: {
      const Term& v = t.bound();
      Substitution inner;
      for (const auto& entry : binding) {
        if (!same_var(entry.first, v) && occurs_free(entry.first, t.body())) {
          inner.push_back(entry);
        }
      }
      if (inner.empty()) return t;
      bool capture = false;
      for (const auto& entry : inner) {
        if (occurs_free(v, entry.second)) {
          capture = true;
          break;
        }
      }
      if (!capture) {
        Term body = subst_rec(t.body(), inner);
        return Term::abs(v, body);
      }
      std::vector<std::string> taken;
      for (const Term& fv : free_vars(t.body())) taken.push_back(fv.name());
      for (const auto& entry : inner) {
        for (const Term& fv : free_vars(entry.second)) taken.push_back(fv.name());
      }
      Term renamed = Term::var(fresh_name(v.name(), taken), v.type());
      inner.emplace_back(v, renamed);
      return Term::abs(renamed, subst_rec(t.body(), inner));
    }
  }
  return t;
}

}  // namespace

Term subst(const Term& t, const Substitution& binding) {
  for (const auto& [v, r] : binding) {
    if (!v.is_var()) throw TypeError("substitution for a non-variable");
    if (v.type() != r.type()) {
      throw TypeError("typed-substitution error: " + v.name() + " : " + type_to_string(v.type()) +
                      " replaced by a term of type " + type_to_string(r.type()));
    }
  }
  if (binding.empty()) return t;
  return subst_rec(t, binding);
}

std::pair<Term, std::vector<Term>> strip_comb(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (cur->is_app()) {
    args.push_back(cur->arg());
    cur = &cur->fun();
  }
  std::reverse(args.begin(), args.end());
  return {*cur, std::move(args)};
}

Term list_mk_comb(const Term& head, const std::vector<Term>& args) {
  Term t = head;
  for (const Term& a : args) t = Term::app(t, a);
  return t;
}

namespace {

void fully_applied(const Term& t, std::vector<Term>& out) {
  if (logic::is_binder(t)) {
    out.push_back(t);
    fully_applied(t.arg().body(), out);
    return;
  }
  if (t.is_abs()) {
    out.push_back(t);
    fully_applied(t.body(), out);
    return;
  }
  out.push_back(t);
  if (!t.is_app()) return;
  auto [head, args] = strip_comb(t);
  if (head.is_abs()) fully_applied(head, out);
  for (const Term& a : args) fully_applied(a, out);
}

void curried(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  if (t.is_app()) {
    curried(t.fun(), out);
    curried(t.arg(), out);
  } else if (t.is_abs()) {
    curried(t.body(), out);
  }
}

}  // namespace

std::vector<Term> subterms(const Term& t, SubtermView view) {
  std::vector<Term> out;
  if (view == SubtermView::FullyApplied) {
    fully_applied(t, out);
  } else {
    curried(t, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// logic

namespace logic {

namespace {

const Type& bool_binop_type() {
  static const Type t =
      Type::fun(Type::boolean(), Type::fun(Type::boolean(), Type::boolean()));
  return t;
}

Term binop_const(std::string_view op) {
  return Term::constant(std::string(op), bool_binop_type());
}

}  // namespace

bool is_logical_connective(std::string_view name) {
  return name == kForall || name == kExists || name == kAnd || name == kOr || name == kImp ||
         name == kNot || name == kIff;
}

Term truth() {
  static const Term t = Term::constant(std::string(kTrue), Type::boolean());
  return t;
}

Term falsity() {
  static const Term t = Term::constant(std::string(kFalse), Type::boolean());
  return t;
}

Term mk_eq(const Term& l, const Term& r) {
  const Type& ty = l.type();
  Term eq = Term::constant(std::string(kEq), Type::fun(ty, Type::fun(ty, Type::boolean())));
  return Term::app(Term::app(eq, l), r);
}

Term mk_binary(std::string_view op, const Term& l, const Term& r) {
  if (op == kEq) return mk_eq(l, r);
  return Term::app(Term::app(binop_const(op), l), r);
}

Term mk_and(const Term& l, const Term& r) { return mk_binary(kAnd, l, r); }
Term mk_or(const Term& l, const Term& r) { return mk_binary(kOr, l, r); }
Term mk_imp(const Term& l, const Term& r) { return mk_binary(kImp, l, r); }
Term mk_iff(const Term& l, const Term& r) { return mk_binary(kIff, l, r); }

Term mk_not(const Term& t) {
  static const Term neg =
      Term::constant(std::string(kNot), Type::fun(Type::boolean(), Type::boolean()));
  return Term::app(neg, t);
}

namespace {

Term mk_quant(std::string_view q, const Term& var, const Term& body) {
  Term lam = Term::abs(var, body);
  Term c = Term::constant(std::string(q), Type::fun(lam.type(), Type::boolean()));
  return Term::app(c, lam);
}

}  // namespace

Term mk_forall(const Term& var, const Term& body) { return mk_quant(kForall, var, body); }
Term mk_exists(const Term& var, const Term& body) { return mk_quant(kExists, var, body); }

bool is_const(const Term& t, std::string_view name) { return t.is_const() && t.name() == name; }

std::optional<std::pair<Term, Term>> dest_binary(const Term& t, std::string_view op) {
  if (!t.is_app() || !t.fun().is_app()) return std::nullopt;
  if (!is_const(t.fun().fun(), op)) return std::nullopt;
  return std::make_pair(t.fun().arg(), t.arg());
}

std::optional<Term> dest_not(const Term& t) {
  if (t.is_app() && is_const(t.fun(), kNot)) return t.arg();
  return std::nullopt;
}

std::optional<std::pair<Term, Term>> dest_binder(const Term& t, std::string_view quantifier) {
  if (!t.is_app() || !is_const(t.fun(), quantifier) || !t.arg().is_abs()) return std::nullopt;
  return std::make_pair(t.arg().bound(), t.arg().body());
}

bool is_binder(const Term& t) {
  return t.is_app() && t.arg().is_abs() && t.fun().is_const() &&
         (t.fun().name() == kForall || t.fun().name() == kExists);
}

}  // namespace logic

// ---------------------------------------------------------------------------
// Goals

Goal::Goal(std::vector<Term> asms, Term concl)
    : assumptions(std::move(asms)), conclusion(std::move(concl)) {
  if (!conclusion.type().is_bool()) throw TypeError("goal conclusion is not boolean");
  for (const Term& a : assumptions) {
    if (!a.type().is_bool()) throw TypeError("goal assumption is not boolean");
  }
}

namespace {

void key_rec(const Term& t, std::vector<Term>& bound, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      for (std::size_t i = bound.size(); i-- > 0;) {
        if (same_var(bound[i], t)) {
          out += '#';
          out += std::to_string(i);
          return;
        }
      }
      out += t.name();
      out += '{';
      out += type_to_string(t.type());
      out += '}';
      return;
    }
    case Term::Kind::Const:
      out += t.name();
      if (Signature::is_polymorphic(t.name())) {
        out += '{';
        out += type_to_string(t.type());
        out += '}';
      }
      return;
    case Term::Kind::App:
      out += '(';
      key_rec(t.fun(), bound, out);
      out += ' ';
      key_rec(t.arg(), bound, out);
      out += ')';
      return;
    case Term::Kind::Abs:
      out += "\\{";
      out += type_to_string(t.bound().type());
      out += "}.";
      bound.push_back(t.bound());
      key_rec(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::string term_key(const Term& t) {
  std::string out;
  std::vector<Term> bound;
  key_rec(t, bound, out);
  return out;
}

std::string goal_key(const Goal& g) {
  std::set<std::string> asms;
  for (const Term& a : g.assumptions) asms.insert(term_key(a));
  std::string out;
  for (const std::string& a : asms) {
    out += a;
    out += '\x1f';
  }
  out += '\x1e';
  out += term_key(g.conclusion);
  return out;
}

bool goal_equal(const Goal& a, const Goal& b) {
  if (!alpha_equal(a.conclusion, b.conclusion)) return false;
  auto covered = [](const std::vector<Term>& xs, const std::vector<Term>& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const Term& x) {
      return std::any_of(ys.begin(), ys.end(), [&](const Term& y) { return alpha_equal(x, y); });
    });
  };
  return covered(a.assumptions, b.assumptions) && covered(b.assumptions, a.assumptions);
}

bool goal_sets_equal(const std::vector<Goal>& a, const std::vector<Goal>& b) {
  std::set<std::string> ka;
  std::set<std::string> kb;
  for (const Goal& g : a) ka.insert(goal_key(g));
  for (const Goal& g : b) kb.insert(goal_key(g));
  return ka == kb;
}

// ---------------------------------------------------------------------------
// Signature

Signature Signature::standard() {
  Signature s;
  const Type b = Type::boolean();
  const Type n = Type::num();
  const Type l = Type::list(n);
  const Type bb = Type::fun(b, Type::fun(b, b));
  s.types_.emplace("T", b);
  s.types_.emplace("F", b);
  s.types_.emplace("~", Type::fun(b, b));
  for (const char* op : {"/\\", "\\/", "==>", "<=>"}) s.types_.emplace(op, bb);
  s.types_.emplace("0", n);
  s.types_.emplace("SUC", Type::fun(n, n));
  s.types_.emplace("+", Type::fun(n, Type::fun(n, n)));
  s.types_.emplace("NIL", l);
  s.types_.emplace("::", Type::fun(n, Type::fun(l, l)));
  return s;
}

bool Signature::is_polymorphic(std::string_view name) {
  return name == logic::kEq || name == logic::kForall || name == logic::kExists;
}

void Signature::declare(const std::string& name, const Type& type) {
  if (contains(name)) throw TypeError("constant '" + name + "' is already declared");
  types_.emplace(name, type);
  declared_.emplace_back(name, type);
}

bool Signature::contains(const std::string& name) const {
  return is_polymorphic(name) || types_.count(name) > 0;
}

std::optional<Type> Signature::type_of(const std::string& name) const {
  auto it = types_.find(name);
  if (it == types_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool typed_ok(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return true;
    case Term::Kind::App:
      return t.fun().type().is_fun() && t.fun().type().domain() == t.arg().type() &&
             t.fun().type().range() == t.type() && typed_ok(t.fun()) && typed_ok(t.arg());
    case Term::Kind::Abs:
      return t.bound().is_var() && t.type() == Type::fun(t.bound().type(), t.body().type()) &&
             typed_ok(t.body());
  }
  return false;
}

}  // namespace

bool well_typed_goal(const Goal& g) {
  if (!g.conclusion.type().is_bool() || !typed_ok(g.conclusion)) return false;
  return std::all_of(g.assumptions.begin(), g.assumptions.end(),
                     [](const Term& a) { return a.type().is_bool() && typed_ok(a); });
}

}  // namespace tacsearch
