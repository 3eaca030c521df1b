#include "eac/graph_sampler.hpp"

#include <numeric>

#include "eac/error.hpp"

namespace eac {

Multigraph configuration_model_sample(std::span<const int> degrees, Rng& rng) {
  std::vector<Vertex> endpoints;
  std::int64_t total = 0;
  for (int d : degrees) {
    if (d < 0) throw InvalidInput("negative degree");
    total += d;
  }
  if (total % 2 != 0) throw InvalidInput("odd degree sum");
  endpoints.reserve(static_cast<std::size_t>(total));
  for (std::size_t v = 0; v < degrees.size(); ++v) endpoints.insert(endpoints.end(), static_cast<std::size_t>(degrees[v]), static_cast<Vertex>(v));

  // A uniform shuffle paired off consecutively is a uniform perfect matching.
  rng.shuffle(endpoints.begin(), endpoints.end());
  Multigraph graph;
  graph.n = degrees.size();
  graph.edges.reserve(endpoints.size() / 2);
  for (std::size_t i = 0; i + 1 < endpoints.size(); i += 2) graph.edges.emplace_back(endpoints[i], endpoints[i + 1]);
  return graph;
}

Multigraph configuration_model_sample(std::span<const int> degrees, std::uint64_t seed) {
  Rng rng(seed);
  return configuration_model_sample(degrees, rng);
}

BigInt matching_count(std::uint64_t m) {
  // (2m-1)!! = (2m)! / (2^m m!)
  BigInt out = 1;
  for (std::uint64_t k = 3; k < 2 * m; k += 2) out *= k;
  return out;
}

BigRational expected_initial_loops(std::span<const int> degrees) {
  BigInt pairs = 0;
  std::int64_t total = 0;
  for (int d : degrees) {
    pairs += BigInt(d) * (d - 1) / 2;
    total += d;
  }
  if (total < 2) throw InvalidInput("expected loop count needs m >= 1");
  return BigRational(pairs, BigInt(total - 1));
}

Multigraph conditioned_configuration_sample(std::span<const int> degrees, Rng& rng, std::uint64_t* attempts,
                                            std::uint64_t max_attempts) {
  for (std::uint64_t i = 1; i <= max_attempts; ++i) {
    Multigraph graph = configuration_model_sample(degrees, rng);
    if (graph.is_simple()) {
      if (attempts) *attempts = i;
      return graph;
    }
  }
  throw StepCapExceeded(max_attempts, -1);
}

GraphChain::GraphChain(DegreeSequence degrees, GraphChainOptions options)
    : degrees_(std::move(degrees)), options_(options) {
  if (options_.arity != 2 && options_.arity != 3) throw InvalidInput("swap arity must be 2 or 3");
}

void GraphChain::sample_initial(Rng& rng) { reset(configuration_model_sample(degrees_.degrees(), rng)); }

void GraphChain::reset(const Multigraph& graph) { tracker_.emplace(graph, options_.mode); }

SwapProposal GraphChain::propose(Rng& rng) const {
  // 1 in 8 stays uniform: with few good edges every targeted swap can be blocked.
  if (options_.optimized && tracker_->bad_count() > 0 && rng.below(8) != 0)
    return propose_targeted_swap(*tracker_, options_.arity, rng);
  return propose_swap(*tracker_, options_.arity, rng);
}

GraphSample sample_simple_graph(const DegreeSequence& degrees, const GraphSampleOptions& options) {
  if (!degrees.graphical()) throw InvalidInput("degree sequence is not graphical");
  if (options.extra_steps > 0 && options.policy.kind() != EnergyPolicy::Kind::strict)
    throw InvalidInput("extra steps need the strict policy");
  GraphChain chain(degrees, options.chain);
  RunConfig config;
  config.seed = options.seed;
  config.max_steps = options.max_steps;
  config.extra_steps = options.extra_steps;
  if (degrees.m() < static_cast<std::size_t>(options.chain.arity)) {
    // Too few edges to swap; with a graphical sequence the pairing model must
    // be retried until simple.
    Rng rng(options.seed);
    GraphSample out;
    std::uint64_t attempts = 0;
    out.graph = conditioned_configuration_sample(degrees.degrees(), rng, &attempts);
    out.report.seed = options.seed;
    return out;
  }
  auto result = run_expand_contract(chain, options.policy, config);
  return {std::move(result.state), std::move(result.report)};
}

}  // namespace eac
