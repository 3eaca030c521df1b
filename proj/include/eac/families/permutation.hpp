#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eac/engine.hpp"

namespace eac {

/// Functions [n] -> [n] graded by n - |range|. A move reassigns one point to
/// a uniform value. In optimised mode the point is drawn from the bad points,
/// those whose value has two or more preimages; codomain symmetry is kept so
/// the surjective output stays uniform.
class FunctionChain {
 public:
  using State = std::vector<std::size_t>;  // value table
  struct Move {
    std::size_t point = 0;
    std::size_t value = 0;
  };

  FunctionChain(std::size_t n, bool optimized);

  void sample_initial(Rng& rng);
  /// Starts from a given value table.
  void reset(const std::vector<std::size_t>& values);
  Grade badness() const { return static_cast<Grade>(n_ - range_); }
  Move propose(Rng& rng) const;
  Grade badness_after(const Move& move) const;
  void apply(const Move& move);
  State state() const { return values_; }

  std::size_t range_size() const noexcept { return range_; }
  const std::vector<std::size_t>& bad_points() const noexcept { return bad_; }
  /// Recounts preimages and bad points from the value table.
  bool coherent() const;

 private:
  void set_bad(std::size_t point, bool bad);
  void detach(std::size_t point);
  void attach(std::size_t point, std::size_t value);

  std::size_t n_;
  bool optimized_;
  std::vector<std::size_t> values_;
  std::vector<std::vector<std::size_t>> preimages_;
  std::vector<std::size_t> slot_;  // index of each point in preimages_[values_[point]]
  std::vector<std::size_t> bad_;
  std::vector<std::ptrdiff_t> bad_slot_;  // -1 when good
  std::size_t range_ = 0;
};

struct PermutationSample {
  std::vector<std::size_t> values;
  RunReport report;
};

PermutationSample sample_permutation(std::size_t n, bool optimized, std::uint64_t seed);

}  // namespace eac
