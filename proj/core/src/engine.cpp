#include "stratkit/engine.hpp"

#include <atomic>

#include "stratkit/errors.hpp"

namespace stratkit {

namespace {
std::atomic<uint64_t> g_budget{10'000'000};
std::atomic<uint64_t> g_total_steps{0};
}  // namespace

uint64_t reduction_budget() { return g_budget.load(std::memory_order_relaxed); }

void set_reduction_budget(uint64_t steps) {
  g_budget.store(steps, std::memory_order_relaxed);
}

uint64_t total_reduction_steps() {
  return g_total_steps.load(std::memory_order_relaxed);
}

void reset_total_reduction_steps() {
  g_total_steps.store(0, std::memory_order_relaxed);
}

namespace detail {

void charge_steps(uint64_t& local_counter, uint64_t amount) {
  local_counter += amount;
  g_total_steps.fetch_add(amount, std::memory_order_relaxed);
  if (local_counter > g_budget.load(std::memory_order_relaxed))
    throw BudgetExceededError("reduction-step budget exceeded (" +
                              std::to_string(local_counter) + " steps)");
}

}  // namespace detail

}  // namespace stratkit
