// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/features.hpp"

#include <algorithm>
#include <set>

#include "tacsearch/syntax.hpp"

namespace tacsearch {

std::string_view class_tag(FeatureClass c) {
  switch (c) {
    case FeatureClass::Const:
      return "const";
    case FeatureClass::Tycon:
      return "tycon";
    case FeatureClass::Fosub:
      return "fosub";
    case FeatureClass::Var:
      return "var";
    case FeatureClass::Top:
      return "top";
    case FeatureClass::Hosub:
      return "hosub";
  }
  return "?";
}

namespace {

using namespace logic;

constexpr std::string_view kSkeletonOps[] = {kAnd, kOr, kImp, kIff};

bool is_skeleton_node(const Term& t) {
  if (is_binder(t) || dest_not(t)) return true;
  return std::any_of(std::begin(kSkeletonOps), std::end(kSkeletonOps),
                     [&](std::string_view op) { return dest_binary(t, op).has_value(); });
}

std::string skeleton(const Term& t, std::set<std::string>* all);

std::string operand(const Term& t, std::set<std::string>* all) {
  if (!is_skeleton_node(t)) {
    if (all) all->insert("A");
    return "A";
  }
  return "(" + skeleton(t, all) + ")";
}

std::string skeleton(const Term& t, std::set<std::string>* all) {
  std::string s;
  if (is_binder(t)) {
    s = t.fun().name() + " " + operand(t.arg().body(), all);
  } else if (auto n = dest_not(t)) {
    s = "~ " + operand(*n, all);
  } else {
    bool found = false;
    for (std::string_view op : kSkeletonOps) {
      if (auto b = dest_binary(t, op)) {
        s = operand(b->first, all) + " " + std::string(op) + " " + operand(b->second, all);
        found = true;
        break;
      }
    }
    if (!found) s = "A";
  }
  if (all) all->insert(s);
  return s;
}

class Collector {
 public:
  explicit Collector(unsigned classes) : classes_(classes) {}

  void add(const Term& t) {
    if (on(FeatureClass::Const) || on(FeatureClass::Tycon) || on(FeatureClass::Var)) atoms(t);
    if (on(FeatureClass::Fosub)) {
      for (const Term& s : subterms(t, SubtermView::FullyApplied)) {
        put(FeatureClass::Fosub, print_term(s, PrintMode::Placeholder));
      }
    }
    if (on(FeatureClass::Hosub)) {
      for (const Term& s : subterms(t, SubtermView::Curried)) {
        put(FeatureClass::Hosub, print_term(s, PrintMode::Placeholder));
      }
    }
    if (on(FeatureClass::Top)) {
      std::set<std::string> tops;
      skeleton(t, &tops);
      for (const std::string& s : tops) put(FeatureClass::Top, s);
    }
  }

  FeatureSet take() { return FeatureSet(out_.begin(), out_.end()); }

 private:
  bool on(FeatureClass c) const { return (classes_ & class_bit(c)) != 0; }

  void put(FeatureClass c, const std::string& payload) {
    std::string f(class_tag(c));
    f += ':';
    f += payload;
    out_.insert(std::move(f));
  }

  void tycons(const Type& ty) {
    if (!on(FeatureClass::Tycon)) return;
    std::vector<std::string> names;
    ty.collect_constructors(names);
    for (const std::string& n : names) put(FeatureClass::Tycon, n);
  }

  void atoms(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var:
        if (on(FeatureClass::Var)) put(FeatureClass::Var, t.name());
        tycons(t.type());
        return;
      case Term::Kind::Const:
        if (on(FeatureClass::Const)) put(FeatureClass::Const, t.name());
        tycons(t.type());
        return;
      case Term::Kind::App:
        atoms(t.fun());
        atoms(t.arg());
        return;
      case Term::Kind::Abs:
        atoms(t.bound());
        atoms(t.body());
        return;
    }
  }

  unsigned classes_;
  std::set<std::string> out_;
};

}  // namespace

std::string top_skeleton(const Term& t) { return skeleton(t, nullptr); }

FeatureSet features_of_term(const Term& t, const FeatureOptions& opts) {
  Collector c(opts.classes);
  c.add(t);
  return c.take();
}

FeatureSet features_of_goal(const Goal& g, const FeatureOptions& opts) {
  Collector c(opts.classes);
  c.add(g.conclusion);
  if (opts.pool_assumptions) {
    for (const Term& a : g.assumptions) c.add(a);
  }
  return c.take();
}

FeatureSet features_of_statement(const Theorem& thm, const FeatureOptions& opts) {
  return features_of_goal(thm.statement, opts);
}

}  // namespace tacsearch
