// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <stdexcept>

#include "tacsearch/harness.hpp"

namespace tacsearch {

namespace {

StrategyConfig base(const std::string& name) {
  StrategyConfig c;
  c.name = name;
  c.codist = CoDistance{1, 0.8, 0.8, 1};
  return c;
}

StrategyConfig no_hammer(const std::string& name) {
  StrategyConfig c = base(name);
  c.codist = CoDistance{5, 0.8, 0.8, 1};
  return c;
}

StrategyConfig with_hammer(const std::string& name, std::size_t premises, double budget) {
  StrategyConfig c = no_hammer(name);
  c.hammer = HammerConfig{500, premises, budget};
  return c;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"nh", "sh",  "greedy", "D0",  "D1",  "D2",  "D3",  "D4",  "D5", "D6",
          "D7", "D8",  "D9",     "D16", "D17", "D18", "D19", "E2",  "E3"};
}

StrategyConfig preset(const std::string& name) {
  if (name == "nh") return no_hammer("nh");
  if (name == "sh") return with_hammer("sh", 16, 0.1);
  if (name == "greedy") {
    StrategyConfig c = no_hammer("greedy");
    c.greedy = true;
    return c;
  }
  if (name == "D0") {
    StrategyConfig c = base(name);
    c.codist.variant = 2;
    c.codist.score_variant = 2;
    return c;
  }
  if (name == "D1") return base(name);
  if (name == "D2") {
    StrategyConfig c = base(name);
    c.features.classes &= ~class_bit(FeatureClass::Top);
    return c;
  }
  if (name == "D3") {
    StrategyConfig c = base(name);
    c.features.classes &= ~class_bit(FeatureClass::Hosub);
    return c;
  }
  if (name == "D4" || name == "D5") {
    StrategyConfig c = base(name);
    c.tactic_budget = name == "D4" ? 0.004 : 0.1;
    return c;
  }
  if (name == "D6") {
    StrategyConfig c = base(name);
    c.codist = CoDistance{3, 0.8, 0.8, 1};
    return c;
  }
  if (name == "D7" || name == "D8") {
    StrategyConfig c = base(name);
    const double k = name == "D7" ? 0.8 : 0.4;
    c.codist = CoDistance{4, k, k, 1};
    return c;
  }
  if (name == "D9") return no_hammer(name);
  if (name == "D16") return with_hammer(name, 8, 0.02);
  if (name == "D17") return with_hammer(name, 16, 0.02);
  if (name == "D18") return with_hammer(name, 8, 0.1);
  if (name == "D19") return with_hammer(name, 16, 0.1);
  if (name == "E2" || name == "E3") {
    StrategyConfig c = no_hammer(name);
    c.self_learn = true;
    c.ortho = name == "E3";
    return c;
  }
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

}  // namespace tacsearch
