// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tacsearch {

// Simple types over the constructors bool, num, list(_) and fun(_, _).
// Immutable, shared, cheap to copy.
class Type {
 public:
  Type();  // bool

  static Type constructor(const std::string& name, std::vector<Type> args = {});
  static Type boolean();
  static Type num();
  static Type list(const Type& element);
  static Type fun(const Type& domain, const Type& range);

  const std::string& name() const;
  const std::vector<Type>& args() const;

  bool is_fun() const;
  bool is_bool() const;
  const Type& domain() const;
  const Type& range() const;
  // Number of arrows along the right spine.
  std::size_t arity() const;

  // type-constructor names occurring anywhere in the type, pre-order
  void collect_constructors(std::vector<std::string>& out) const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend bool operator<(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// `num`, `list(num)`, `(num->num)->bool`.
std::string type_to_string(const Type& t);

class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, App, Abs };

  Term();  // the constant T

  static Term var(const std::string& name, const Type& type);
  static Term constant(const std::string& name, const Type& type);
  // Throws TypeError unless f : a -> r and a matches the argument type.
  static Term app(const Term& f, const Term& a);
  static Term abs(const Term& bound, const Term& body);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_abs() const { return kind() == Kind::Abs; }

  // Var/Const only.
  const std::string& name() const;
  const Type& type() const;  // any kind
  // App only.
  const Term& fun() const;
  const Term& arg() const;
  // Abs only.
  const Term& bound() const;
  const Term& body() const;

  std::size_t size() const;
  bool same_node(const Term& other) const { return node_ == other.node_; }

  // Exact structural equality (bound names included). Use alpha_equal for
  // logical identity.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  // Identity of variables as map keys: (name, type).
  struct VarLess {
    bool operator()(const Term& a, const Term& b) const;
  };

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Syntactic utilities

bool alpha_equal(const Term& a, const Term& b);

// Free variables in order of first occurrence.
std::vector<Term> free_vars(const Term& t);
bool occurs_free(const Term& var, const Term& t);
// Names of free variables and all binder names in t.
void collect_var_names(const Term& t, std::vector<std::string>& out);

using Substitution = std::vector<std::pair<Term, Term>>;

// Capture-avoiding simultaneous substitution. Throws TypeError when a
// replacement's type differs from the variable it replaces.
Term subst(const Term& t, const Substitution& binding);

// Appends primes to `base` until it's not in `taken`.
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken);

enum class SubtermView { FullyApplied, Curried };
std::vector<Term> subterms(const Term& t, SubtermView view);

// Head and argument list of an application spine.
std::pair<Term, std::vector<Term>> strip_comb(const Term& t);
Term list_mk_comb(const Term& head, const std::vector<Term>& args);

// ---------------------------------------------------------------------------
// Logical vocabulary

namespace logic {

inline constexpr std::string_view kForall = "!";
inline constexpr std::string_view kExists = "?";
inline constexpr std::string_view kAnd = "/\\";
inline constexpr std::string_view kOr = "\\/";
inline constexpr std::string_view kImp = "==>";
inline constexpr std::string_view kIff = "<=>";
inline constexpr std::string_view kNot = "~";
inline constexpr std::string_view kEq = "=";
inline constexpr std::string_view kTrue = "T";
inline constexpr std::string_view kFalse = "F";

bool is_logical_connective(std::string_view name);  // ! ? /\ \/ ==> ~ <=>

Term truth();
Term falsity();
Term mk_eq(const Term& l, const Term& r);
Term mk_and(const Term& l, const Term& r);
Term mk_or(const Term& l, const Term& r);
Term mk_imp(const Term& l, const Term& r);
Term mk_iff(const Term& l, const Term& r);
Term mk_not(const Term& t);
Term mk_forall(const Term& var, const Term& body);
Term mk_exists(const Term& var, const Term& body);
Term mk_binary(std::string_view op, const Term& l, const Term& r);

bool is_const(const Term& t, std::string_view name);
// `l op r` for a binary constant op.
std::optional<std::pair<Term, Term>> dest_binary(const Term& t, std::string_view op);
std::optional<Term> dest_not(const Term& t);
// Quantifier node Q (\x. body).
std::optional<std::pair<Term, Term>> dest_binder(const Term& t, std::string_view quantifier);
bool is_binder(const Term& t);

}  // namespace logic

// ---------------------------------------------------------------------------
// Goals and theorems

struct Goal {
  std::vector<Term> assumptions;
  Term conclusion;

  Goal() : conclusion(logic::truth()) {}
  Goal(std::vector<Term> asms, Term concl);
};

// Conclusions alpha-equal and assumption lists equal as sets up to alpha.
bool goal_equal(const Goal& a, const Goal& b);
// Canonical alpha-invariant text of a goal; equal keys iff goal_equal.
std::string goal_key(const Goal& g);
// Alpha-invariant text of a term.
std::string term_key(const Term& t);
// Set-equality of goal lists under goal_equal.
bool goal_sets_equal(const std::vector<Goal>& a, const std::vector<Goal>& b);

struct Theorem {
  std::string name;
  Goal statement;
  std::vector<std::string> dependencies;
  std::size_t sequence_index = 0;
};

// Constant declarations. `=`, `!`, `?` are polymorphic and instantiated per
// use; every other constant has a single fixed type.
class Signature {
 public:
  static Signature standard();

  void declare(const std::string& name, const Type& type);
  bool contains(const std::string& name) const;
  std::optional<Type> type_of(const std::string& name) const;
  static bool is_polymorphic(std::string_view name);

  // Declared (non-builtin) constants in declaration order.
  const std::vector<std::pair<std::string, Type>>& declarations() const { return declared_; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.declared_ == b.declared_;
  }

 private:
  std::map<std::string, Type> types_;
  std::vector<std::pair<std::string, Type>> declared_;
};

// Recursively checks well-typedness and that every goal member is boolean.
bool well_typed_goal(const Goal& g);

}  // namespace tacsearch
