// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/budget.hpp"

#include <algorithm>
#include <cmath>

namespace tacsearch {

Budget::Budget(double seconds, ClockMode mode)
    : limit_(seconds),
      mode_(mode),
      limit_ticks_(static_cast<std::uint64_t>(std::llround(std::max(0.0, seconds) / kTickSeconds))),
      wall_cap_(std::max(20.0 * seconds, 2.0)),
      start_(Clock::now()) {}

double Budget::wall_seconds() const {
  return std::chrono::duration<double>(Clock::now() - start_).count();
}

void Budget::charge(std::uint64_t ticks) {
  ticks_ += ticks;
  if (mode_ == ClockMode::Virtual) {
    if (ticks_ > limit_ticks_) throw BudgetExceeded();
    // The wall cap is a backstop only; sample the clock sparsely.
    if ((ticks_ & 0xfff) < ticks && wall_seconds() > wall_cap_) throw BudgetExceeded();
  } else if (wall_seconds() > limit_) {
    throw BudgetExceeded();
  }
}

bool Budget::expired() const {
  if (mode_ == ClockMode::Virtual) return ticks_ > limit_ticks_;
  return wall_seconds() > limit_;
}

double Budget::elapsed_seconds() const {
  if (mode_ == ClockMode::Virtual) return static_cast<double>(ticks_) * kTickSeconds;
  return wall_seconds();
}

double Budget::remaining_seconds() const { return std::max(0.0, limit_ - elapsed_seconds()); }

}  // namespace tacsearch
