#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "eac/degree_sequence.hpp"
#include "eac/energy.hpp"

namespace eac {

/// Unordered vertex pair; a loop is (v, v). Normalised so that u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool loop() const noexcept { return u == v; }
  std::uint64_t key() const noexcept { return (static_cast<std::uint64_t>(u) << 32) | v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge array over n vertices; loops and repeated pairs allowed. A loop adds 2
/// to its vertex's degree.
struct Multigraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  std::size_t m() const noexcept { return edges.size(); }
  std::vector<int> degrees() const;
  /// Histogram of the edge array keyed by Edge::key().
  std::unordered_map<std::uint64_t, int> multiplicities() const;
  std::size_t loop_count() const;
  bool is_simple() const;
  /// Edge array sorted lexicographically.
  std::vector<Edge> sorted_edges() const;
  /// Canonical "u v;u v;..." key of the sorted edge array.
  std::string canonical_key() const;
};

enum class BadnessMode { classic, modified };

std::string to_string(BadnessMode mode);
BadnessMode parse_badness_mode(const std::string& text);

/// Classic badness of a graph with no history: loops count their
/// multiplicity, and a pair with multiplicity k >= 2 counts k.
Grade badness(const Multigraph& graph, BadnessMode mode = BadnessMode::classic);

/// Edge array plus multiplicity table with the bad edges kept as a prefix
/// block of the array. In modified mode a pair that has ever carried a
/// multiple edge stays tainted (all its copies bad) until its multiplicity
/// returns to 0.
class BadEdgeTracker {
 public:
  BadEdgeTracker(const Multigraph& graph, BadnessMode mode);

  BadnessMode mode() const noexcept { return mode_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  /// Number of bad edge copies; also the length of the bad block.
  std::size_t bad_count() const noexcept { return bad_end_; }
  bool is_bad_position(std::size_t position) const noexcept { return position < bad_end_; }
  const Edge& edge(std::size_t position) const { return edges_[position]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  int multiplicity(Vertex a, Vertex b) const;
  bool tainted(Vertex a, Vertex b) const;

  /// Badness after the edges at `positions` are replaced by `added`
  /// (positions distinct, same length spans).
  Grade badness_after(std::span<const std::size_t> positions, std::span<const Edge> added) const;
  /// True if the replacement leaves every pair in `added` good: not a loop,
  /// multiplicity exactly 1 and not tainted.
  bool adds_only_good(std::span<const std::size_t> positions, std::span<const Edge> added) const;
  /// Replaces edge `positions[i]` by `added[i]` and restores the block partition.
  void replace(std::span<const std::size_t> positions, std::span<const Edge> added);

  Multigraph graph() const;

  /// Recomputes the multiplicity histogram, positions, statuses and bad block
  /// from the edge array and compares against the incremental bookkeeping.
  /// In classic mode the bad count is also checked against badness(graph()).
  bool coherent() const;

 private:
  struct PairInfo {
    int multiplicity = 0;
    bool tainted = false;
    std::vector<std::uint32_t> positions;
  };

  bool bad(const Edge& pair, const PairInfo& info) const noexcept {
    return pair.loop() || info.multiplicity >= 2 || info.tainted;
  }
  void swap_positions(std::size_t i, std::size_t j);
  void settle(const Edge& pair);

  std::size_t n_;
  BadnessMode mode_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, PairInfo> pairs_;
  std::size_t bad_end_ = 0;
};

}  // namespace eac
