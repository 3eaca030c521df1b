#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

#include "eac/rng.hpp"

namespace eac {

/// Worker count for trial fan-out: hardware concurrency, at least 1.
inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs trial(t, derive_seed(seed, t)) for t in [0, trials) across workers and
/// returns the results indexed by trial, so any reduction over them is
/// independent of scheduling. The first exception thrown by a trial is rethrown.
template <class F>
auto parallel_trials(std::uint64_t trials, std::uint64_t seed, F&& trial, unsigned workers = default_workers()) {
  using Result = std::invoke_result_t<F&, std::uint64_t, std::uint64_t>;
  std::vector<Result> results(trials);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::atomic_flag error_claimed = ATOMIC_FLAG_INIT;

  const auto work = [&] {
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= trials || failed.load()) return;
      try {
        results[t] = trial(t, derive_seed(seed, t));
      } catch (...) {
        if (!error_claimed.test_and_set()) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), std::max<std::uint64_t>(trials, 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace eac
