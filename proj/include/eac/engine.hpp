#pragma once

#include <chrono>
#include <concepts>
#include <cstdint>
#include <optional>
#include <vector>

#include "eac/energy.hpp"
#include "eac/error.hpp"
#include "eac/rng.hpp"

namespace eac {

/// A Markov chain on an expanded state space S, graded by badness, whose
/// target set is grade 0. The chain owns its current state so that badness can
/// be maintained incrementally.
///
///   sample_initial(rng)  draws X_0 from the superset's sampler
///   propose(rng)         draws a candidate move under the symmetric kernel Q
///   badness_after(move)  grade the state would have if `move` were applied
///   apply(move)          commits the move
///
/// A chain may also define `bool admissible(const Move&) const`; inadmissible
/// moves are rejected before the energy policy is consulted.
template <class C>
concept GradedChain = requires(C& chain, const C& view, Rng& rng, const typename C::Move& move) {
  typename C::State;
  typename C::Move;
  chain.sample_initial(rng);
  { view.badness() } -> std::convertible_to<Grade>;
  { chain.propose(rng) } -> std::same_as<typename C::Move>;
  { view.badness_after(move) } -> std::convertible_to<Grade>;
  chain.apply(move);
  { view.state() } -> std::convertible_to<typename C::State>;
};

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000'000;

struct RunConfig {
  std::uint64_t seed = 0;
  /// Proposals to run after the first visit to grade 0.
  std::uint64_t extra_steps = 0;
  std::optional<std::uint64_t> max_steps = kDefaultMaxSteps;
  std::optional<std::uint64_t> trajectory_stride;
};

struct RunReport {
  std::uint64_t seed = 0;
  std::uint64_t tau = 0;
  std::uint64_t total_steps = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
  Grade initial_badness = 0;
  std::vector<Grade> grade_trajectory;
  double wall_time_ms = 0.0;
};

template <class State>
struct RunResult {
  State state;
  RunReport report;
};

struct StepEvent {
  std::uint64_t step = 0;
  Grade from_grade = 0;
  Grade to_grade = 0;
  bool accepted = false;
};

struct NoObserver {
  template <class Chain>
  void operator()(const Chain&, const StepEvent&) const noexcept {}
};

/// Runs the contraction from the chain's current state. `report` receives the
/// step counters; the caller owns initialisation and timing.
template <GradedChain Chain, class Observer = NoObserver>
void contract(Chain& chain, EnergyPolicy& policy, const RunConfig& config, Rng& rng, RunReport& report,
              Observer&& observer = {}) {
  Grade grade = chain.badness();
  const std::uint64_t cap = config.max_steps.value_or(UINT64_MAX);
  const std::uint64_t stride = config.trajectory_stride.value_or(0);
  if (policy.dynamic()) policy.observe(grade);
  if (stride != 0) report.grade_trajectory.push_back(grade);

  bool reached = false;
  std::uint64_t step = 0;
  for (;;) {
    if (!reached && grade == 0) {
      reached = true;
      report.tau = step;
    }
    if (reached && step - report.tau >= config.extra_steps) break;
    if (step >= cap) {
      report.total_steps = step;
      if (!reached) throw StepCapExceeded(step, grade);
      break;
    }

    const auto move = chain.propose(rng);
    bool ok = true;
    if constexpr (requires { { chain.admissible(move) } -> std::convertible_to<bool>; }) {
      ok = chain.admissible(move);
    }
    Grade next = grade;
    bool accept = false;
    if (ok) {
      next = chain.badness_after(move);
      const double p = accept_probability(policy, grade, next);
      accept = p >= 1.0 || (p > 0.0 && rng.uniform01() < p);
    }
    StepEvent event{step, grade, accept ? next : grade, accept};
    if (accept) {
      chain.apply(move);
      grade = next;
      ++report.accepted;
    } else {
      ++report.rejected;
    }
    ++step;
    if (policy.dynamic()) policy.observe(grade);
    if (stride != 0 && step % stride == 0) report.grade_trajectory.push_back(grade);
    observer(chain, event);
  }
  report.total_steps = step;
}

/// Expand and contract: draw X_0 from the superset, contract to grade 0, then
/// run `config.extra_steps` further proposals under the same policy.
template <GradedChain Chain, class Observer = NoObserver>
RunResult<typename Chain::State> run_expand_contract(Chain& chain, EnergyPolicy policy, const RunConfig& config,
                                                     Observer&& observer = {}) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  RunReport report;
  report.seed = config.seed;
  chain.sample_initial(rng);
  report.initial_badness = chain.badness();
  contract(chain, policy, config, rng, report, std::forward<Observer>(observer));
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {chain.state(), std::move(report)};
}

}  // namespace eac
