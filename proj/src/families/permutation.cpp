#include "eac/families/permutation.hpp"

#include "eac/error.hpp"

namespace eac {

FunctionChain::FunctionChain(std::size_t n, bool optimized) : n_(n), optimized_(optimized) {
  if (n == 0) throw InvalidInput("permutations need n >= 1");
}

void FunctionChain::sample_initial(Rng& rng) {
  std::vector<std::size_t> values(n_);
  for (auto& v : values) v = static_cast<std::size_t>(rng.below(n_));
  reset(values);
}

void FunctionChain::reset(const std::vector<std::size_t>& values) {
  if (values.size() != n_) throw InvalidInput("value table has the wrong length");
  values_.assign(n_, 0);
  preimages_.assign(n_, {});
  slot_.assign(n_, 0);
  bad_.clear();
  bad_slot_.assign(n_, -1);
  range_ = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    if (values[x] >= n_) throw InvalidInput("value out of range");
    attach(x, values[x]);
  }
}

void FunctionChain::set_bad(std::size_t point, bool bad) {
  if (bad == (bad_slot_[point] >= 0)) return;
  if (bad) {
    bad_slot_[point] = static_cast<std::ptrdiff_t>(bad_.size());
    bad_.push_back(point);
  } else {
    const auto slot = static_cast<std::size_t>(bad_slot_[point]);
    bad_[slot] = bad_.back();
    bad_slot_[bad_[slot]] = static_cast<std::ptrdiff_t>(slot);
    bad_.pop_back();
    bad_slot_[point] = -1;
  }
}

void FunctionChain::detach(std::size_t point) {
  auto& pre = preimages_[values_[point]];
  const std::size_t slot = slot_[point];
  pre[slot] = pre.back();
  slot_[pre[slot]] = slot;
  pre.pop_back();
  set_bad(point, false);
  if (pre.empty()) --range_;
  if (pre.size() == 1) set_bad(pre.front(), false);
}

void FunctionChain::attach(std::size_t point, std::size_t value) {
  auto& pre = preimages_[value];
  values_[point] = value;
  slot_[point] = pre.size();
  pre.push_back(point);
  if (pre.size() == 1) ++range_;
  if (pre.size() == 2) set_bad(pre.front(), true);
  if (pre.size() >= 2) set_bad(point, true);
}

FunctionChain::Move FunctionChain::propose(Rng& rng) const {
  std::size_t point = 0;
  if (optimized_ && !bad_.empty())
    point = bad_[static_cast<std::size_t>(rng.below(bad_.size()))];
  else
    point = static_cast<std::size_t>(rng.below(n_));
  return {point, static_cast<std::size_t>(rng.below(n_))};
}

Grade FunctionChain::badness_after(const Move& move) const {
  const std::size_t old = values_[move.point];
  if (old == move.value) return badness();
  std::size_t range = range_;
  if (preimages_[old].size() == 1) --range;
  if (preimages_[move.value].empty()) ++range;
  return static_cast<Grade>(n_ - range);
}

void FunctionChain::apply(const Move& move) {
  if (values_[move.point] == move.value) return;
  detach(move.point);
  attach(move.point, move.value);
}

bool FunctionChain::coherent() const {
  std::vector<std::size_t> counts(n_, 0);
  for (auto v : values_) ++counts[v];
  std::size_t range = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    if (counts[v] != preimages_[v].size()) return false;
    if (counts[v] > 0) ++range;
  }
  if (range != range_) return false;
  std::size_t bad = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    const bool should = counts[values_[x]] >= 2;
    if (should != (bad_slot_[x] >= 0)) return false;
    if (should) ++bad;
  }
  return bad == bad_.size();
}

PermutationSample sample_permutation(std::size_t n, bool optimized, std::uint64_t seed) {
  FunctionChain chain(n, optimized);
  RunConfig config;
  config.seed = seed;
  auto result = run_expand_contract(chain, EnergyPolicy::strict(), config);
  return {std::move(result.state), std::move(result.report)};
}

}  // namespace eac
