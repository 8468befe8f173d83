// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tacsearch/term.hpp"

namespace tacsearch {

// Concrete term syntax. Precedence, loosest first:
//
//   !x:ty.  ?x:ty.  \x:ty.    binders, extend as far right as possible
//   <=>                       right
//   ==>                       right
//   \/                        right
//   /\                        right
//   ~                         prefix
//   =                         non-associative
//   ::                        right
//   +                         left
//   f x                       application
//
// Free variables must be annotated on first use, `(x:num)`, unless they are
// already in the context passed to the parser.

enum class PrintMode {
  Normal,
  // Every variable prints as V and binders as `!V.`; used for feature payloads.
  Placeholder,
};

std::string print_term(const Term& t, PrintMode mode = PrintMode::Normal);
// `a1; a2 |- c`, or just `c` without assumptions. Free variables are
// annotated, `(x:num)`, where they first occur, so parse_goal reads it back.
std::string print_goal(const Goal& g);

Type parse_type(std::string_view text);

// `context` supplies the free variables in scope; annotated free variables
// met while parsing are appended to it.
Term parse_term(std::string_view text, const Signature& sig, std::vector<Term>& context);
Term parse_term(std::string_view text, const Signature& sig);

// Inverse of print_goal. Assumptions and conclusion share one context.
Goal parse_goal(std::string_view text, const Signature& sig, std::vector<Term>& context);
Goal parse_goal(std::string_view text, const Signature& sig);

}  // namespace tacsearch
