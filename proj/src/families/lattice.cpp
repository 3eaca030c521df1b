#include "eac/families/lattice.hpp"

#include <cmath>

#include "eac/error.hpp"

namespace eac {

double solve_geometric_parameter(double c) {
  if (!(c >= 0.0)) throw InvalidInput("second moment must be non-negative");
  if (c == 0.0) return 1.0;
  const auto second_moment = [](double p) { return (1.0 - p) * (2.0 - p) / (p * p); };
  // second_moment decreases from +inf at p -> 0 to 0 at p = 1.
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (second_moment(mid) > c)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

LatticeChain::LatticeChain(std::size_t n, std::int64_t energy) : target_(energy), point_(n, 0) {
  if (n == 0) throw InvalidInput("lattice dimension must be at least 1");
  if (energy < 0) throw InvalidInput("target energy must be non-negative");
}

void LatticeChain::sample_initial(Rng& rng) {
  const double p = solve_geometric_parameter(static_cast<double>(target_) / static_cast<double>(point_.size()));
  State point(point_.size());
  for (auto& a : point) a = static_cast<std::int64_t>(rng.geometric(p));
  reset(point);
}

void LatticeChain::reset(const State& point) {
  if (point.size() != point_.size()) throw InvalidInput("point has the wrong dimension");
  point_ = point;
  energy_ = 0;
  for (auto a : point_) {
    if (a < 0) throw InvalidInput("components must be non-negative");
    energy_ += a * a;
  }
}

Grade LatticeChain::badness_after(const Move& move) const {
  const std::int64_t a = point_[move.index];
  return distance(energy_ + 2 * a * move.delta + 1);
}

void LatticeChain::apply(const Move& move) {
  std::int64_t& a = point_[move.index];
  energy_ += 2 * a * move.delta + 1;
  a += move.delta;
}

LatticeSample sample_lattice_point(std::size_t n, std::int64_t energy, std::uint64_t seed,
                                   std::optional<std::uint64_t> max_steps) {
  LatticeChain chain(n, energy);
  RunConfig config;
  config.seed = seed;
  config.max_steps = max_steps;
  auto result = run_expand_contract(chain, EnergyPolicy::strict(), config);
  return {std::move(result.state), std::move(result.report)};
}

}  // namespace eac
