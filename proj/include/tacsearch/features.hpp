// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tacsearch/term.hpp"

namespace tacsearch {

enum class FeatureClass : std::uint8_t { Const, Tycon, Fosub, Var, Top, Hosub };

inline constexpr unsigned kAllFeatureClasses = 0x3f;

inline constexpr unsigned class_bit(FeatureClass c) { return 1u << static_cast<unsigned>(c); }

std::string_view class_tag(FeatureClass c);

struct FeatureOptions {
  unsigned classes = kAllFeatureClasses;
  // Pool assumption features with the conclusion's; off means conclusion only.
  bool pool_assumptions = true;
};

// Sorted, duplicate-free `<class>:<payload>` strings.
using FeatureSet = std::vector<std::string>;

FeatureSet features_of_term(const Term& t, const FeatureOptions& opts = {});
FeatureSet features_of_goal(const Goal& g, const FeatureOptions& opts = {});
FeatureSet features_of_statement(const Theorem& thm, const FeatureOptions& opts = {});

// Logical skeleton of t over ! ? /\ \/ ==> ~ <=> with atoms printed as A.
std::string top_skeleton(const Term& t);

}  // namespace tacsearch
