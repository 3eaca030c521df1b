#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "eac/energy.hpp"
#include "eac/multigraph.hpp"
#include "eac/rng.hpp"

namespace eac {

/// Degree-preserving k-swap, k in {2, 3}. With the removed edges oriented as
/// (a,b),(c,d) it adds (b,c),(d,a); with (a,b),(c,d),(e,f) it adds
/// (b,c),(d,e),(f,a).
struct SwapProposal {
  int arity = 3;
  /// Proposal drawn from the bad block (optimised mode).
  bool targeted = false;
  std::array<std::size_t, 3> positions{};
  /// Removed edges in the chosen orientation: (tail, head).
  std::array<std::array<Vertex, 2>, 3> removed{};
  std::array<Edge, 3> added{};

  std::span<const std::size_t> position_span() const { return {positions.data(), static_cast<std::size_t>(arity)}; }
  std::span<const Edge> added_span() const { return {added.data(), static_cast<std::size_t>(arity)}; }
};

/// Builds the swap on the given array positions; `flip[i]` reverses edge i's
/// stored (u, v) orientation.
SwapProposal make_swap(const BadEdgeTracker& tracker, std::span<const std::size_t> positions,
                       std::span<const bool> flip);

/// Uniform over ordered distinct positions and independent fair orientations,
/// which is uniform over the 8 C(m,3) distinct 3-swaps (2 C(m,2) 2-swaps).
/// Throws InvalidInput if m < arity.
SwapProposal propose_swap(const BadEdgeTracker& tracker, int arity, Rng& rng);

/// One uniformly chosen bad edge plus (arity - 1) edges drawn uniformly from
/// the rest of the array, orientations fair. Needs bad_count() > 0.
SwapProposal propose_targeted_swap(const BadEdgeTracker& tracker, int arity, Rng& rng);

Grade swap_badness_after(const BadEdgeTracker& tracker, const SwapProposal& proposal);

/// Admissible in optimised mode: exactly one bad edge removed and no new bad
/// edge created.
bool targeted_admissible(const BadEdgeTracker& tracker, const SwapProposal& proposal);

enum class SwapOutcome { accepted, rejected };

/// Accepts or rejects `proposal` under `policy` and updates `tracker` in place.
/// Targeted proposals are additionally subject to targeted_admissible.
SwapOutcome apply_swap(BadEdgeTracker& tracker, const SwapProposal& proposal, const EnergyPolicy& policy, Rng& rng);

}  // namespace eac
