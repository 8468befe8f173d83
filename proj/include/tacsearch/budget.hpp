// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace tacsearch {

// Budgets are checked cooperatively: tactics, the rewriter and the prover
// call charge() once per unit of work. In Virtual mode the clock is the
// accumulated work count, one tick per nominal microsecond, so budgeted
// results are identical from run to run. Wall mode reads the monotonic
// clock instead. Virtual budgets still carry a generous wall-clock cap so a
// mis-charged loop cannot hang the process.
enum class ClockMode { Virtual, Wall };

inline constexpr double kTickSeconds = 1e-6;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("budget exceeded") {}
};

class Budget {
 public:
  explicit Budget(double seconds, ClockMode mode = ClockMode::Virtual);

  // Throws BudgetExceeded once the limit is passed.
  void charge(std::uint64_t ticks = 1);
  bool expired() const;

  std::uint64_t ticks() const { return ticks_; }
  double elapsed_seconds() const;
  double limit_seconds() const { return limit_; }
  double remaining_seconds() const;
  ClockMode mode() const { return mode_; }

 private:
  using Clock = std::chrono::steady_clock;

  double wall_seconds() const;

  double limit_;
  ClockMode mode_;
  std::uint64_t ticks_ = 0;
  std::uint64_t limit_ticks_;
  double wall_cap_;
  Clock::time_point start_;
};

}  // namespace tacsearch
