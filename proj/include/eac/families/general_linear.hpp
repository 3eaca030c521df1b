#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eac/engine.hpp"

namespace eac {

using MatrixModQ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VectorModQ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

bool is_prime(std::int64_t q);

/// Inverse of a nonzero residue modulo a prime.
std::int64_t inverse_mod(std::int64_t a, std::int64_t q);

struct EchelonForm {
  MatrixModQ reduced;
  /// Pivot column of each nonzero row, ascending. The remaining columns are
  /// linear combinations of the pivot columns to their left.
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form over F_q, q prime. Entries are reduced into [0, q).
template <class Derived>
EchelonForm reduced_row_echelon(const Eigen::MatrixBase<Derived>& matrix, std::int64_t q) {
  EchelonForm out;
  out.reduced = matrix.template cast<std::int64_t>().unaryExpr([q](std::int64_t x) { return ((x % q) + q) % q; });
  MatrixModQ& a = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(row));
    const std::int64_t scale = inverse_mod(a(row, col), q);
    a.row(row) = a.row(row).unaryExpr([&](std::int64_t x) { return (x * scale) % q; });
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const std::int64_t factor = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) = ((a(r, c) - factor * a(row, c)) % q + q) % q;
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <class Derived>
Eigen::Index rank_mod(const Eigen::MatrixBase<Derived>& matrix, std::int64_t q) {
  return reduced_row_echelon(matrix, q).rank();
}

/// Determinant over F_q in [0, q).
std::int64_t determinant_mod(const MatrixModQ& matrix, std::int64_t q);

/// n x n matrices over F_q graded by n - rank. A move replaces one column by
/// a uniform vector. Optimised mode only replaces non-pivot (dependent)
/// columns, so the rank never drops.
class MatrixChain {
 public:
  using State = MatrixModQ;
  struct Move {
    Eigen::Index column = 0;
    VectorModQ vector;
  };

  MatrixChain(std::size_t n, std::int64_t q, bool optimized);

  void sample_initial(Rng& rng);
  void reset(const MatrixModQ& matrix);
  Grade badness() const { return static_cast<Grade>(n_) - static_cast<Grade>(echelon_.rank()); }
  Move propose(Rng& rng) const;
  Grade badness_after(const Move& move) const;
  void apply(const Move& move);
  State state() const { return matrix_; }

  const EchelonForm& echelon() const noexcept { return echelon_; }
  /// Non-pivot columns of the current matrix.
  std::vector<Eigen::Index> dependent_columns() const;

 private:
  VectorModQ random_vector(Rng& rng) const;

  Eigen::Index n_;
  std::int64_t q_;
  bool optimized_;
  MatrixModQ matrix_;
  EchelonForm echelon_;
};

struct MatrixSample {
  MatrixModQ matrix;
  RunReport report;
};

/// Uniform element of GL_n(F_q). Throws InvalidInput unless q is prime and n >= 1.
MatrixSample sample_gl(std::size_t n, std::int64_t q, std::uint64_t seed, bool optimized = true);

}  // namespace eac
