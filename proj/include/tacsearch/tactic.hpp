// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tacsearch/budget.hpp"
#include "tacsearch/term.hpp"

namespace tacsearch {

struct Subgoals {
  std::vector<Goal> goals;
  // Set by tactics whose replayable string is only known after running
  // (the search-time hammer); the tactic's own string otherwise.
  std::string label;
};

struct Failure {
  std::string reason;
};

struct Timeout {};

using TacticOutcome = std::variant<Subgoals, Failure, Timeout>;

inline bool closed(const TacticOutcome& o) {
  const auto* s = std::get_if<Subgoals>(&o);
  return s != nullptr && s->goals.empty();
}

// A tactic call as written in a script: `name`, `name [A, B]` or
// `name "term"`.
struct TacticCall {
  enum class Arg { None, Names, Text };
  std::string name;
  Arg arg = Arg::None;
  std::vector<std::string> names;
  std::string text;

  std::string canonical() const;
  friend bool operator==(const TacticCall&, const TacticCall&) = default;
};

// Parses a single tactic call; the rest of the script grammar lives in
// script.hpp.
TacticCall parse_tactic_call(std::string_view text);

class Tactic {
 public:
  using Fn = std::function<TacticOutcome(const Goal&, Budget&)>;

  Tactic(std::string canonical, Fn fn, bool is_hammer = false);

  const std::string& canonical_string() const { return canonical_; }
  bool is_hammer() const { return is_hammer_; }

  // May throw BudgetExceeded; apply_with_budget folds that into Timeout.
  TacticOutcome apply(const Goal& goal, Budget& budget) const;

 private:
  std::string canonical_;
  std::shared_ptr<const Fn> fn_;
  bool is_hammer_;
};

// Runs the tactic under a fresh budget. `used_ticks` receives the work
// charged, including on timeout.
TacticOutcome apply_with_budget(const Tactic& tactic, const Goal& goal, double seconds,
                                ClockMode mode = ClockMode::Virtual,
                                std::uint64_t* used_ticks = nullptr);

// Named theorems visible to tactic arguments.
class TheoremEnv {
 public:
  void add(const Theorem& thm);
  const Theorem* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  std::size_t size() const { return order_.size(); }
  // Theorems in insertion order.
  std::vector<Theorem> theorems() const;

 private:
  std::map<std::string, Theorem> by_name_;
  std::vector<std::string> order_;
};

class TacticLibrary {
 public:
  TacticLibrary(const Signature& sig, const TheoremEnv& env);

  // Throws ParseError for unknown tactic names, wrong argument kinds and
  // theorem names missing from the environment.
  Tactic make(const TacticCall& call) const;
  Tactic parse(std::string_view text) const;

  // The argument-free members of the library.
  std::vector<Tactic> reference_tactics() const;

  static bool known(const std::string& name);
  static TacticCall::Arg argument_kind(const std::string& name);

  const Signature& signature() const { return *sig_; }
  const TheoremEnv& env() const { return *env_; }

 private:
  const Signature* sig_;
  const TheoremEnv* env_;
};

}  // namespace tacsearch
