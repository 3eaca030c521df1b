#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "eac/families/magic_square.hpp"
#include "eac/multigraph.hpp"
#include "eac/multistar.hpp"
#include "eac/stats/distribution.hpp"

namespace eac {

/// Every labelled simple graph with exactly these degrees, edges sorted.
/// Backtracks over the adjacency matrix row by row, pruning with
/// Erdős–Gallai on the residual degrees. Guard: n <= 12, m <= 20.
std::vector<Multigraph> enumerate_graphs(std::span<const int> degrees);

/// Uniform oracle over enumerate_graphs, keyed by Multigraph::canonical_key.
OracleDistribution graph_oracle(std::span<const int> degrees);

/// Every n x n magic square on 1..n^2. Guard: n <= 4.
std::vector<Square> enumerate_magic_squares(std::size_t n);

/// Row-major comma-joined key.
std::string square_key(const Square& square);

/// Hub patterns keyed by their decimal mask, weighted by class size. Guard: k <= 5.
OracleDistribution multistar_oracle(const MultiStarSpec& spec);

struct BadnessStatistics {
  std::uint64_t trials = 0;
  double mean_initial_badness = 0.0;
  double mean_loop_count = 0.0;
  double fraction_simple = 0.0;
};

/// Classic-badness statistics of pairing-model draws, trial t seeded with
/// derive_seed(seed, t).
BadnessStatistics badness_statistics(std::span<const int> degrees, std::uint64_t trials, std::uint64_t seed);

nlohmann::json to_json(const BadnessStatistics& stats);

}  // namespace eac
