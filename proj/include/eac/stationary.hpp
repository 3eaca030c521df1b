#pragma once

#include <Eigen/Dense>

#include <concepts>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "eac/energy.hpp"
#include "eac/error.hpp"

namespace eac {

/// Exhaustive description of a tiny graded chain: every state, its grade, the
/// proposal kernel Q(x, .) as (successor, probability) pairs summing to 1, and
/// the law of X_0.
template <class K>
concept EnumerableChain = requires(const K& chain, const typename K::State& state) {
  typename K::State;
  { chain.states() } -> std::convertible_to<std::vector<typename K::State>>;
  { chain.grade(state) } -> std::convertible_to<Grade>;
  { chain.kernel(state) } -> std::convertible_to<std::vector<std::pair<typename K::State, double>>>;
  { chain.initial_probability(state) } -> std::convertible_to<double>;
};

inline constexpr std::size_t kMaxStationaryStates = 4096;

/// Law of X_t as t -> infinity (Cesaro sense) for a finite chain started at
/// `initial`: the mass absorbed into each closed class, spread over that
/// class's unique stationary distribution.
Eigen::VectorXd limit_distribution(const Eigen::MatrixXd& transition, const Eigen::VectorXd& initial);

/// max over x, y of |w(x) P(x, y) - w(y) P(y, x)|.
double detailed_balance_residual(const Eigen::MatrixXd& transition, const Eigen::VectorXd& weights);

/// max over y of |(v P)(y) - v(y)|.
double stationarity_residual(const Eigen::MatrixXd& transition, const Eigen::VectorXd& distribution);

template <class State>
struct StationaryReport {
  std::vector<State> states;
  std::vector<Grade> grades;
  /// The Metropolised matrix Q*, row-stochastic.
  Eigen::MatrixXd transition;
  Eigen::VectorXd initial;
  /// Limit law of the chain started from `initial`.
  Eigen::VectorXd limit;
  /// Indices of the grade-0 states and the limit law restricted (and
  /// renormalised) to them.
  std::vector<std::size_t> target_indices;
  Eigen::VectorXd target_limit;
  /// Residual of the uniform measure on grade 0 as a stationary vector of Q*.
  double uniform_target_residual = 0.0;
};

/// Builds Q*(x, y) = Q(x, y) * accept(b(x), b(y)) for x != y, holding the
/// rejected mass on the diagonal.
template <EnumerableChain K>
std::pair<std::vector<typename K::State>, Eigen::MatrixXd> metropolised_matrix(const K& chain,
                                                                               const EnergyPolicy& policy,
                                                                               std::size_t max_states =
                                                                                   kMaxStationaryStates) {
  using State = typename K::State;
  std::vector<State> states = chain.states();
  if (states.size() > max_states) throw InstanceTooLarge("state space too large for exact stationary check");
  std::map<State, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i], i);

  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd transition = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Grade from = chain.grade(states[i]);
    double moved = 0.0;
    for (const auto& [next, weight] : chain.kernel(states[i])) {
      const auto found = index.find(next);
      if (found == index.end()) throw InvalidInput("kernel leaves the enumerated state space");
      const std::size_t j = found->second;
      if (j == i) continue;
      const double p = weight * accept_probability(policy, from, chain.grade(next));
      transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += p;
      moved += p;
    }
    transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0 - moved;
  }
  return {std::move(states), std::move(transition)};
}

template <EnumerableChain K>
StationaryReport<typename K::State> stationary_check(const K& chain, const EnergyPolicy& policy,
                                                     std::size_t max_states = kMaxStationaryStates) {
  if (policy.dynamic()) throw InvalidInput("stationary check needs a fixed energy function");
  StationaryReport<typename K::State> report;
  std::tie(report.states, report.transition) = metropolised_matrix(chain, policy, max_states);

  const auto n = static_cast<Eigen::Index>(report.states.size());
  report.initial.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& state = report.states[static_cast<std::size_t>(i)];
    report.grades.push_back(chain.grade(state));
    report.initial(i) = chain.initial_probability(state);
    if (report.grades.back() == 0) report.target_indices.push_back(static_cast<std::size_t>(i));
  }
  report.limit = limit_distribution(report.transition, report.initial);

  const auto targets = static_cast<Eigen::Index>(report.target_indices.size());
  report.target_limit.resize(targets);
  Eigen::VectorXd uniform = Eigen::VectorXd::Zero(n);
  for (Eigen::Index t = 0; t < targets; ++t) {
    const auto i = static_cast<Eigen::Index>(report.target_indices[static_cast<std::size_t>(t)]);
    report.target_limit(t) = report.limit(i);
    uniform(i) = 1.0 / static_cast<double>(targets);
  }
  if (targets > 0) {
    const double mass = report.target_limit.sum();
    if (mass > 0.0) report.target_limit /= mass;
    report.uniform_target_residual = stationarity_residual(report.transition, uniform);
  }
  return report;
}

}  // namespace eac
