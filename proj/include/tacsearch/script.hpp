// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tacsearch/budget.hpp"
#include "tacsearch/tactic.hpp"
#include "tacsearch/term.hpp"

namespace tacsearch {

// script := seq
// seq    := atom ( THEN atom | THENL [ script, ... ] )*     left-assoc
// atom   := name | name [ thm, ... ] | name "text" | ( script )
struct ScriptAst {
  enum class Kind { Atomic, Then, Thenl };
  Kind kind = Kind::Atomic;
  std::string tactic;              // Atomic
  std::vector<ScriptAst> children;  // Then: {left, right}; Thenl: {head, branches...}

  static ScriptAst atomic(std::string tactic);
  static ScriptAst then(ScriptAst a, ScriptAst b);
  static ScriptAst thenl(ScriptAst head, std::vector<ScriptAst> branches);

  friend bool operator==(const ScriptAst&, const ScriptAst&) = default;
};

// Atomic tactic strings are stored in canonical form. Throws ParseError,
// with "unsupported tactical" for ORELSE, THEN1, REVERSE, VALID, by,
// suffices_by and REPEAT.
ScriptAst parse_script(std::string_view text);
std::string print_script(const ScriptAst& ast);

// Every atomic tactic string, left to right.
std::vector<std::string> atomic_tactics(const ScriptAst& ast);

// Called before each atomic application with the goal it runs on and the
// tactic's canonical string.
using Recorder = std::function<void(const Goal&, const std::string&)>;

struct RunOptions {
  double tactic_budget = 1.0;
  ClockMode clock = ClockMode::Virtual;
  // Applies every recorded tactic a second time through a re-parse of its
  // canonical string and throws InvariantViolation on a different effect.
  bool check_same_effect = true;
};

// THEN applies the right script to every goal the left one leaves; THENL
// needs one branch per goal and throws ScriptError otherwise. Unknown
// tactics and bad arguments throw ParseError.
TacticOutcome run_script(const ScriptAst& ast, const Goal& goal, const TacticLibrary& library,
                         const Recorder& recorder = nullptr, const RunOptions& opts = {});

// True iff the script closes the goal. Parse failures propagate as ParseError.
bool replay(const Goal& conjecture, std::string_view script, const TacticLibrary& library,
            const RunOptions& opts = {});

}  // namespace tacsearch
