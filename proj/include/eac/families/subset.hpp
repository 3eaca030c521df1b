#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eac/engine.hpp"

namespace eac {

/// Subsets of {0..n-1} graded by |size - k|. Initial state includes each
/// element independently with probability k/n; a move picks an element and
/// includes or excludes it with probability 1/2 each.
class SubsetChain {
 public:
  using State = std::vector<std::size_t>;  // sorted members
  struct Move {
    std::size_t element = 0;
    bool include = false;
  };

  SubsetChain(std::size_t n, std::size_t k);

  void sample_initial(Rng& rng);
  Grade badness() const { return distance(count_); }
  Move propose(Rng& rng) const { return {static_cast<std::size_t>(rng.below(n_)), rng.coin()}; }
  Grade badness_after(const Move& move) const;
  void apply(const Move& move);
  State state() const;

  std::size_t cardinality() const noexcept { return count_; }

 private:
  Grade distance(std::size_t count) const {
    return count > k_ ? static_cast<Grade>(count - k_) : static_cast<Grade>(k_ - count);
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<char> members_;
  std::size_t count_ = 0;
};

struct SubsetSample {
  std::vector<std::size_t> members;
  RunReport report;
};

/// Uniform k-subset of {0..n-1}. Throws InvalidInput unless k <= n.
SubsetSample sample_k_subset(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace eac
