#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eac/engine.hpp"

namespace eac {

/// Success probability p of a geometric variable on {0, 1, 2, ...} with
/// E[G^2] = (1 - p)(2 - p) / p^2 = c. Bisection; c = 0 gives p = 1.
double solve_geometric_parameter(double c);

/// Non-negative integer n-tuples graded by |sum a_i^2 - E|. Components start
/// geometric with E[G^2] = E/n; a move adds or subtracts 1 from one component.
/// Moves that make a component negative are inadmissible; ties in energy
/// distance are accepted under the strict policy.
class LatticeChain {
 public:
  using State = std::vector<std::int64_t>;
  struct Move {
    std::size_t index = 0;
    int delta = 1;
  };

  LatticeChain(std::size_t n, std::int64_t energy);

  void sample_initial(Rng& rng);
  void reset(const State& point);
  Grade badness() const { return distance(energy_); }
  Move propose(Rng& rng) const { return {static_cast<std::size_t>(rng.below(point_.size())), rng.coin() ? 1 : -1}; }
  bool admissible(const Move& move) const { return point_[move.index] + move.delta >= 0; }
  Grade badness_after(const Move& move) const;
  void apply(const Move& move);
  State state() const { return point_; }

  std::int64_t energy() const noexcept { return energy_; }

 private:
  Grade distance(std::int64_t energy) const { return energy > target_ ? energy - target_ : target_ - energy; }

  std::int64_t target_;
  std::vector<std::int64_t> point_;
  std::int64_t energy_ = 0;
};

struct LatticeSample {
  std::vector<std::int64_t> point;
  RunReport report;
};

LatticeSample sample_lattice_point(std::size_t n, std::int64_t energy, std::uint64_t seed,
                                   std::optional<std::uint64_t> max_steps = kDefaultMaxSteps);

}  // namespace eac
