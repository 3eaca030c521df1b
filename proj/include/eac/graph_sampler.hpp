#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>

#include "eac/degree_sequence.hpp"
#include "eac/engine.hpp"
#include "eac/multigraph.hpp"
#include "eac/swap.hpp"

namespace eac {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Pairing model: split vertex i into d_i endpoints, match all 2m endpoints
/// uniformly at random, collapse back to a multigraph. O(m).
Multigraph configuration_model_sample(std::span<const int> degrees, Rng& rng);
Multigraph configuration_model_sample(std::span<const int> degrees, std::uint64_t seed);

/// (2m)! / (2^m m!), the number of perfect matchings of 2m endpoints.
BigInt matching_count(std::uint64_t m);

/// Expected number of loops in a pairing-model multigraph:
/// sum_i C(d_i, 2) / (2m - 1). Needs m >= 1.
BigRational expected_initial_loops(std::span<const int> degrees);

/// Repeats the pairing model until the multigraph is simple. Exactly uniform
/// on simple graphs; `attempts` receives the number of draws used.
Multigraph conditioned_configuration_sample(std::span<const int> degrees, Rng& rng, std::uint64_t* attempts = nullptr,
                                            std::uint64_t max_attempts = 100'000'000);

struct GraphChainOptions {
  int arity = 3;
  BadnessMode mode = BadnessMode::modified;
  /// Always pair one bad edge with good edges; reject any new bad edge.
  bool optimized = true;
};

/// Swap chain on multigraphs with fixed degrees, graded by bad edges. When
/// optimised and at least one bad edge exists, 7 in 8 proposals are targeted;
/// all others are uniform k-swaps.
class GraphChain {
 public:
  using State = Multigraph;
  using Move = SwapProposal;

  GraphChain(DegreeSequence degrees, GraphChainOptions options);

  void sample_initial(Rng& rng);
  /// Starts from a given multigraph instead of the pairing model.
  void reset(const Multigraph& graph);

  Grade badness() const { return static_cast<Grade>(tracker_->bad_count()); }
  Move propose(Rng& rng) const;
  bool admissible(const Move& move) const { return !move.targeted || targeted_admissible(*tracker_, move); }
  Grade badness_after(const Move& move) const { return swap_badness_after(*tracker_, move); }
  void apply(const Move& move) { tracker_->replace(move.position_span(), move.added_span()); }
  Multigraph state() const { return tracker_->graph(); }

  const BadEdgeTracker& tracker() const { return *tracker_; }
  const DegreeSequence& degrees() const noexcept { return degrees_; }
  const GraphChainOptions& options() const noexcept { return options_; }

 private:
  DegreeSequence degrees_;
  GraphChainOptions options_;
  std::optional<BadEdgeTracker> tracker_;
};

struct GraphSampleOptions {
  GraphChainOptions chain;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> max_steps = kDefaultMaxSteps;
  /// Proposals after the first simple graph; needs the strict policy.
  std::uint64_t extra_steps = 0;
  EnergyPolicy policy = EnergyPolicy::strict();
};

struct GraphSample {
  Multigraph graph;
  RunReport report;
};

/// Expand and contract for simple graphs with the given degrees. Throws
/// InvalidInput if the sequence is not graphical or extra steps are asked of a
/// non-strict policy, StepCapExceeded if the cap is hit.
GraphSample sample_simple_graph(const DegreeSequence& degrees, const GraphSampleOptions& options);

}  // namespace eac
