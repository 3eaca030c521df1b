#include "eac/swap.hpp"

#include <algorithm>

#include "eac/error.hpp"

namespace eac {

SwapProposal make_swap(const BadEdgeTracker& tracker, std::span<const std::size_t> positions,
                       std::span<const bool> flip) {
  SwapProposal proposal;
  proposal.arity = static_cast<int>(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    proposal.positions[i] = positions[i];
    const Edge& e = tracker.edge(positions[i]);
    proposal.removed[i] = flip[i] ? std::array<Vertex, 2>{e.v, e.u} : std::array<Vertex, 2>{e.u, e.v};
  }
  const auto& r = proposal.removed;
  if (proposal.arity == 2) {
    proposal.added[0] = Edge(r[0][1], r[1][0]);
    proposal.added[1] = Edge(r[1][1], r[0][0]);
  } else {
    proposal.added[0] = Edge(r[0][1], r[1][0]);
    proposal.added[1] = Edge(r[1][1], r[2][0]);
    proposal.added[2] = Edge(r[2][1], r[0][0]);
  }
  return proposal;
}

namespace {

void check_arity(const BadEdgeTracker& tracker, int arity) {
  if (arity != 2 && arity != 3) throw InvalidInput("swap arity must be 2 or 3");
  if (tracker.m() < static_cast<std::size_t>(arity)) throw InvalidInput("too few edges for a swap");
}

// Draws positions[from..arity) uniformly among indices not already chosen.
void fill_distinct(std::array<std::size_t, 3>& positions, int from, int arity, std::size_t m, Rng& rng) {
  for (int i = from; i < arity; ++i) {
    std::size_t p = rng.below(m - static_cast<std::size_t>(i));
    std::array<std::size_t, 3> taken = positions;
    std::sort(taken.begin(), taken.begin() + i);
    for (int j = 0; j < i; ++j)
      if (p >= taken[j]) ++p;
    positions[i] = p;
  }
}

SwapProposal finish(const BadEdgeTracker& tracker, const std::array<std::size_t, 3>& positions, int arity,
                    Rng& rng) {
  std::array<bool, 3> flip{};
  for (int i = 0; i < arity; ++i) flip[i] = rng.coin();
  return make_swap(tracker, {positions.data(), static_cast<std::size_t>(arity)},
                   {flip.data(), static_cast<std::size_t>(arity)});
}

}  // namespace

SwapProposal propose_swap(const BadEdgeTracker& tracker, int arity, Rng& rng) {
  check_arity(tracker, arity);
  std::array<std::size_t, 3> positions{};
  fill_distinct(positions, 0, arity, tracker.m(), rng);
  return finish(tracker, positions, arity, rng);
}

SwapProposal propose_targeted_swap(const BadEdgeTracker& tracker, int arity, Rng& rng) {
  check_arity(tracker, arity);
  if (tracker.bad_count() == 0) throw InvalidInput("targeted swap needs a bad edge");
  std::array<std::size_t, 3> positions{};
  positions[0] = rng.below(tracker.bad_count());
  fill_distinct(positions, 1, arity, tracker.m(), rng);
  SwapProposal proposal = finish(tracker, positions, arity, rng);
  proposal.targeted = true;
  return proposal;
}

Grade swap_badness_after(const BadEdgeTracker& tracker, const SwapProposal& proposal) {
  return tracker.badness_after(proposal.position_span(), proposal.added_span());
}

bool targeted_admissible(const BadEdgeTracker& tracker, const SwapProposal& proposal) {
  for (int i = 1; i < proposal.arity; ++i)
    if (tracker.is_bad_position(proposal.positions[i])) return false;
  return tracker.adds_only_good(proposal.position_span(), proposal.added_span());
}

SwapOutcome apply_swap(BadEdgeTracker& tracker, const SwapProposal& proposal, const EnergyPolicy& policy, Rng& rng) {
  if (proposal.targeted && !targeted_admissible(tracker, proposal)) return SwapOutcome::rejected;
  const auto before = static_cast<Grade>(tracker.bad_count());
  const Grade after = swap_badness_after(tracker, proposal);
  const double p = accept_probability(policy, before, after);
  if (!(p >= 1.0 || (p > 0.0 && rng.uniform01() < p))) return SwapOutcome::rejected;
  tracker.replace(proposal.position_span(), proposal.added_span());
  return SwapOutcome::accepted;
}

}  // namespace eac
