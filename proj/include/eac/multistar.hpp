#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eac/graph_sampler.hpp"

namespace eac {

/// Degree sequence (1, ..., 1, d_1, ..., d_k) with d_1 + ... + d_k leaves.
/// Vertices 0..L-1 are the leaves and L..L+k-1 the hubs.
class MultiStarSpec {
 public:
  /// Hub degrees must be >= 2; at most 11 hubs so the pattern fits 64 bits.
  explicit MultiStarSpec(std::vector<int> hub_degrees);

  std::span<const int> hub_degrees() const noexcept { return hubs_; }
  std::size_t hub_count() const noexcept { return hubs_.size(); }
  std::size_t leaf_count() const noexcept { return leaves_; }
  /// K = k(k-1)/2.
  std::size_t hub_pairs() const noexcept { return hubs_.size() * (hubs_.size() - 1) / 2; }
  Vertex hub_vertex(std::size_t hub) const { return static_cast<Vertex>(leaves_ + hub); }
  /// Index of hub pair (i, j), i < j, in lexicographic order.
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  DegreeSequence degree_sequence() const;

 private:
  std::vector<int> hubs_;
  std::size_t leaves_ = 0;
};

/// Hub adjacency: bit pair_index(i, j) set when hubs i and j are adjacent.
struct HubPattern {
  std::uint64_t mask = 0;
  /// Number of non-adjacent hub pairs.
  std::size_t non_adjacent = 0;

  friend bool operator==(const HubPattern&, const HubPattern&) = default;
};

/// Hub-to-hub degrees c_1..c_k implied by a pattern.
std::vector<int> hub_adjacency_counts(const MultiStarSpec& spec, std::uint64_t mask);

/// Reads the hub pattern of a simple graph with the spec's degree sequence.
/// Throws InvalidInput on a degree mismatch.
HubPattern hub_pattern(const Multigraph& graph, const MultiStarSpec& spec);

/// Number of labelled graphs whose hubs have c_i hub neighbours:
/// L! / (prod (d_i - c_i)! * 2^(s/2) * (s/2)!), s = sum c_i.
BigInt multistar_class_size(const MultiStarSpec& spec, std::span<const int> hub_counts);

/// ceil(10 ln m).
std::uint64_t default_extra_steps(std::size_t m);

struct MultiStarOptions {
  /// Extra strict 2-swap steps after the first simple graph; default_extra_steps(m) when unset.
  std::optional<std::uint64_t> extra_steps;
  bool optimized = false;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> max_steps = kDefaultMaxSteps;
};

struct MultiStarSample {
  Multigraph graph;
  RunReport report;
  HubPattern pattern;
};

/// Pairing model, 2-swaps with classic badness under the strict policy until
/// simple, then `extra_steps` further proposals.
MultiStarSample sample_multistar(const MultiStarSpec& spec, const MultiStarOptions& options);

}  // namespace eac
