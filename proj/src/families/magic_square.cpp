#include "eac/families/magic_square.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "eac/error.hpp"

namespace eac {

std::int64_t magic_constant(std::size_t n) {
  const auto k = static_cast<std::int64_t>(n);
  return k * (k * k + 1) / 2;
}

MagicSquareChain::MagicSquareChain(std::size_t n)
    : n_(static_cast<Eigen::Index>(n)), target_(magic_constant(n)), square_(n_, n_), sums_(2 * n_ + 2) {
  if (n == 0) throw InvalidInput("square size must be at least 1");
}

void MagicSquareChain::sample_initial(Rng& rng) {
  std::vector<std::int64_t> entries(static_cast<std::size_t>(n_ * n_));
  std::iota(entries.begin(), entries.end(), 1);
  rng.shuffle(entries.begin(), entries.end());
  reset(Eigen::Map<const Square>(entries.data(), n_, n_));
}

void MagicSquareChain::reset(const Square& square) {
  if (square.rows() != n_ || square.cols() != n_) throw InvalidInput("square has the wrong shape");
  square_ = square;
  for (Eigen::Index i = 0; i < n_; ++i) {
    sums_(i) = square_.row(i).sum();
    sums_(n_ + i) = square_.col(i).sum();
  }
  sums_(2 * n_) = square_.diagonal().sum();
  sums_(2 * n_ + 1) = square_.rowwise().reverse().diagonal().sum();
  badness_ = (sums_.array() - target_).abs().sum();
}

int MagicSquareChain::lines_through(Eigen::Index cell, std::array<Eigen::Index, 4>& out) const {
  const Eigen::Index r = cell / n_, c = cell % n_;
  int count = 0;
  out[count++] = r;
  out[count++] = n_ + c;
  if (r == c) out[count++] = 2 * n_;
  if (r + c == n_ - 1) out[count++] = 2 * n_ + 1;
  return count;
}

MagicSquareChain::Move MagicSquareChain::propose(Rng& rng) const {
  const auto cells = static_cast<std::uint64_t>(n_ * n_);
  const auto first = static_cast<Eigen::Index>(rng.below(cells));
  auto second = static_cast<Eigen::Index>(rng.below(cells - 1));
  if (second >= first) ++second;
  return {first, second};
}

Grade MagicSquareChain::badness_after(const Move& move) const {
  const std::int64_t a = square_.data()[move.first];
  const std::int64_t b = square_.data()[move.second];
  std::array<Eigen::Index, 8> lines{};
  std::array<std::int64_t, 8> change{};
  int used = 0;
  const auto add = [&](Eigen::Index line, std::int64_t delta) {
    for (int i = 0; i < used; ++i)
      if (lines[i] == line) {
        change[i] += delta;
        return;
      }
    lines[used] = line;
    change[used++] = delta;
  };
  std::array<Eigen::Index, 4> through{};
  for (int i = 0, k = lines_through(move.first, through); i < k; ++i) add(through[i], b - a);
  for (int i = 0, k = lines_through(move.second, through); i < k; ++i) add(through[i], a - b);

  Grade next = badness_;
  for (int i = 0; i < used; ++i) {
    const std::int64_t sum = sums_(lines[i]);
    next += std::abs(sum + change[i] - target_) - std::abs(sum - target_);
  }
  return next;
}

void MagicSquareChain::apply(const Move& move) {
  badness_ = badness_after(move);
  std::int64_t* data = square_.data();
  const std::int64_t a = data[move.first];
  const std::int64_t b = data[move.second];
  std::array<Eigen::Index, 4> through{};
  for (int i = 0, k = lines_through(move.first, through); i < k; ++i) sums_(through[i]) += b - a;
  for (int i = 0, k = lines_through(move.second, through); i < k; ++i) sums_(through[i]) += a - b;
  std::swap(data[move.first], data[move.second]);
}

MagicSquareSample sample_magic_square(std::size_t n, double alpha, std::uint64_t seed,
                                      std::optional<std::uint64_t> max_steps) {
  if (n < 3) throw InvalidInput("magic squares need n >= 3");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidInput("alpha must lie in (0, 1]");
  MagicSquareChain chain(n);
  RunConfig config;
  config.seed = seed;
  config.max_steps = max_steps;
  auto result = run_expand_contract(chain, EnergyPolicy::quadratic(alpha), config);
  return {std::move(result.state), std::move(result.report)};
}

}  // namespace eac
