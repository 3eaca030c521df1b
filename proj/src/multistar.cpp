#include "eac/multistar.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "eac/error.hpp"

namespace eac {

MultiStarSpec::MultiStarSpec(std::vector<int> hub_degrees) : hubs_(std::move(hub_degrees)) {
  if (hubs_.empty()) throw InvalidInput("multi-star needs at least one hub");
  if (hubs_.size() > 11) throw InvalidInput("multi-star supports at most 11 hubs");
  for (int d : hubs_)
    if (d < 2) throw InvalidInput("hub degrees must be at least 2");
  leaves_ = static_cast<std::size_t>(std::accumulate(hubs_.begin(), hubs_.end(), std::int64_t{0}));
}

std::size_t MultiStarSpec::pair_index(std::size_t i, std::size_t j) const {
  const std::size_t k = hubs_.size();
  // Pairs (0,1),(0,2),...,(0,k-1),(1,2),...
  return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

DegreeSequence MultiStarSpec::degree_sequence() const {
  std::vector<int> degrees(leaves_, 1);
  degrees.insert(degrees.end(), hubs_.begin(), hubs_.end());
  return DegreeSequence(std::move(degrees));
}

std::vector<int> hub_adjacency_counts(const MultiStarSpec& spec, std::uint64_t mask) {
  std::vector<int> counts(spec.hub_count(), 0);
  for (std::size_t i = 0; i < spec.hub_count(); ++i)
    for (std::size_t j = i + 1; j < spec.hub_count(); ++j)
      if ((mask >> spec.pair_index(i, j)) & 1u) {
        ++counts[i];
        ++counts[j];
      }
  return counts;
}

HubPattern hub_pattern(const Multigraph& graph, const MultiStarSpec& spec) {
  const DegreeSequence expected = spec.degree_sequence();
  const std::vector<int> actual = graph.degrees();
  if (!std::equal(actual.begin(), actual.end(), expected.degrees().begin(), expected.degrees().end()))
    throw InvalidInput("graph does not have the multi-star degree sequence");

  HubPattern pattern;
  const Vertex first_hub = spec.hub_vertex(0);
  for (const Edge& e : graph.edges) {
    if (e.u < first_hub || e.loop()) continue;
    pattern.mask |= std::uint64_t{1} << spec.pair_index(e.u - first_hub, e.v - first_hub);
  }
  pattern.non_adjacent = spec.hub_pairs() - static_cast<std::size_t>(std::popcount(pattern.mask));
  return pattern;
}

BigInt multistar_class_size(const MultiStarSpec& spec, std::span<const int> hub_counts) {
  if (hub_counts.size() != spec.hub_count()) throw InvalidInput("need one adjacency count per hub");
  const auto k = static_cast<int>(spec.hub_count());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < hub_counts.size(); ++i) {
    const int c = hub_counts[i];
    if (c < 0 || c > spec.hub_degrees()[i] || c > k - 1) throw InvalidInput("inconsistent hub adjacency counts");
    s += c;
  }
  if (s % 2 != 0) throw InvalidInput("inconsistent hub adjacency counts: odd total");

  const auto factorial = [](std::int64_t x) {
    BigInt out = 1;
    for (std::int64_t i = 2; i <= x; ++i) out *= i;
    return out;
  };
  BigInt denominator = factorial(s / 2) * (BigInt(1) << static_cast<unsigned>(s / 2));
  for (std::size_t i = 0; i < hub_counts.size(); ++i) denominator *= factorial(spec.hub_degrees()[i] - hub_counts[i]);
  return factorial(static_cast<std::int64_t>(spec.leaf_count())) / denominator;
}

std::uint64_t default_extra_steps(std::size_t m) {
  if (m <= 1) return 0;
  return static_cast<std::uint64_t>(std::ceil(10.0 * std::log(static_cast<double>(m))));
}

MultiStarSample sample_multistar(const MultiStarSpec& spec, const MultiStarOptions& options) {
  const DegreeSequence degrees = spec.degree_sequence();
  GraphChain chain(degrees, {.arity = 2, .mode = BadnessMode::classic, .optimized = options.optimized});
  RunConfig config;
  config.seed = options.seed;
  config.extra_steps = options.extra_steps.value_or(default_extra_steps(degrees.m()));
  config.max_steps = options.max_steps;
  auto result = run_expand_contract(chain, EnergyPolicy::strict(), config);
  MultiStarSample out{std::move(result.state), std::move(result.report), {}};
  out.pattern = hub_pattern(out.graph, spec);
  return out;
}

}  // namespace eac
