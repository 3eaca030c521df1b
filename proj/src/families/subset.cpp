#include "eac/families/subset.hpp"

#include "eac/error.hpp"

namespace eac {

SubsetChain::SubsetChain(std::size_t n, std::size_t k) : n_(n), k_(k), members_(n, 0) {
  if (k > n) throw InvalidInput("subset size k must satisfy 0 <= k <= n");
}

void SubsetChain::sample_initial(Rng& rng) {
  const double p = n_ == 0 ? 0.0 : static_cast<double>(k_) / static_cast<double>(n_);
  count_ = 0;
  for (auto& member : members_) {
    member = rng.bernoulli(p) ? 1 : 0;
    count_ += static_cast<std::size_t>(member);
  }
}

Grade SubsetChain::badness_after(const Move& move) const {
  const bool present = members_[move.element] != 0;
  if (move.include == present) return badness();
  return distance(move.include ? count_ + 1 : count_ - 1);
}

void SubsetChain::apply(const Move& move) {
  char& member = members_[move.element];
  if ((member != 0) == move.include) return;
  member = move.include ? 1 : 0;
  if (move.include)
    ++count_;
  else
    --count_;
}

SubsetChain::State SubsetChain::state() const {
  State out;
  out.reserve(count_);
  for (std::size_t i = 0; i < n_; ++i)
    if (members_[i]) out.push_back(i);
  return out;
}

SubsetSample sample_k_subset(std::size_t n, std::size_t k, std::uint64_t seed) {
  SubsetChain chain(n, k);
  if (n == 0) {
    RunReport report;
    report.seed = seed;
    return {{}, report};
  }
  RunConfig config;
  config.seed = seed;
  auto result = run_expand_contract(chain, EnergyPolicy::strict(), config);
  return {std::move(result.state), std::move(result.report)};
}

}  // namespace eac
