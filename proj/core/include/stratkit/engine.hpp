#pragma once

#include <cstdint>

namespace stratkit {

/// Cap on reduction steps for a single Groebner-basis computation. Runaway
/// computations surface as BudgetExceededError instead of hanging.
uint64_t reduction_budget();
void set_reduction_budget(uint64_t steps);

/// Cumulative reduction-step counter (deterministic effort metric used by
/// reports; wall-clock time is not).
uint64_t total_reduction_steps();
void reset_total_reduction_steps();

namespace detail {
void charge_steps(uint64_t& local_counter, uint64_t amount);
}

}  // namespace stratkit
