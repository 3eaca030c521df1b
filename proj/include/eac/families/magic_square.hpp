#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "eac/engine.hpp"

namespace eac {

using Square = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kDefaultMagicAlpha = 0.937;
inline constexpr std::uint64_t kMagicMaxSteps = 100'000'000;

/// n (n^2 + 1) / 2.
std::int64_t magic_constant(std::size_t n);

/// L1 distance of the n row sums, n column sums and both diagonal sums from
/// the magic constant.
template <class Derived>
Grade magic_badness(const Eigen::MatrixBase<Derived>& square) {
  const auto n = square.rows();
  const std::int64_t target = magic_constant(static_cast<std::size_t>(n));
  Grade total = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    total += std::abs(square.row(i).sum() - target);
    total += std::abs(square.col(i).sum() - target);
  }
  total += std::abs(square.diagonal().sum() - target);
  total += std::abs(square.rowwise().reverse().diagonal().sum() - target);
  return total;
}

/// n x n arrangements of {1..n^2} graded by magic_badness. A move swaps two
/// uniformly chosen distinct cells.
class MagicSquareChain {
 public:
  using State = Square;
  struct Move {
    Eigen::Index first = 0;  // row-major cell indices
    Eigen::Index second = 0;
  };

  explicit MagicSquareChain(std::size_t n);

  void sample_initial(Rng& rng);
  void reset(const Square& square);
  Grade badness() const { return badness_; }
  Move propose(Rng& rng) const;
  Grade badness_after(const Move& move) const;
  void apply(const Move& move);
  State state() const { return square_; }

 private:
  // Lines are rows 0..n-1, columns n..2n-1, main diagonal 2n, anti-diagonal 2n+1.
  int lines_through(Eigen::Index cell, std::array<Eigen::Index, 4>& out) const;

  Eigen::Index n_;
  std::int64_t target_;
  Square square_;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> sums_;
  Grade badness_ = 0;
};

struct MagicSquareSample {
  Square square;
  RunReport report;
};

/// Quadratic-energy contraction to a magic square. Throws InvalidInput for
/// n < 3 or alpha outside (0, 1].
MagicSquareSample sample_magic_square(std::size_t n, double alpha, std::uint64_t seed,
                                      std::optional<std::uint64_t> max_steps = kMagicMaxSteps);

}  // namespace eac
