#include "eac/families/general_linear.hpp"

#include "eac/error.hpp"

namespace eac {

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
  // Extended Euclid.
  std::int64_t r0 = q, r1 = ((a % q) + q) % q, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - t * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - t * s1};
  }
  if (r0 != 1) throw InvalidInput("residue is not invertible");
  return ((s0 % q) + q) % q;
}

std::int64_t determinant_mod(const MatrixModQ& matrix, std::int64_t q) {
  MatrixModQ a = matrix.unaryExpr([q](std::int64_t x) { return ((x % q) + q) % q; });
  const Eigen::Index n = a.rows();
  std::int64_t det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = (q - det) % q;
    }
    det = det * a(col, col) % q;
    const std::int64_t inv = inverse_mod(a(col, col), q);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const std::int64_t factor = a(r, col) * inv % q;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) = ((a(r, c) - factor * a(col, c)) % q + q) % q;
    }
  }
  return det;
}

MatrixChain::MatrixChain(std::size_t n, std::int64_t q, bool optimized)
    : n_(static_cast<Eigen::Index>(n)), q_(q), optimized_(optimized) {
  if (n == 0) throw InvalidInput("matrix size must be at least 1");
  if (!is_prime(q)) throw InvalidInput("field size q must be prime");
  if (q > 3'037'000'499) throw InvalidInput("field size too large for 64-bit products");
}

VectorModQ MatrixChain::random_vector(Rng& rng) const {
  VectorModQ v(n_);
  for (Eigen::Index i = 0; i < n_; ++i) v(i) = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(q_)));
  return v;
}

void MatrixChain::sample_initial(Rng& rng) {
  MatrixModQ m(n_, n_);
  for (Eigen::Index c = 0; c < n_; ++c) m.col(c) = random_vector(rng);
  reset(m);
}

void MatrixChain::reset(const MatrixModQ& matrix) {
  if (matrix.rows() != n_ || matrix.cols() != n_) throw InvalidInput("matrix has the wrong shape");
  matrix_ = matrix.unaryExpr([this](std::int64_t x) { return ((x % q_) + q_) % q_; });
  echelon_ = reduced_row_echelon(matrix_, q_);
}

std::vector<Eigen::Index> MatrixChain::dependent_columns() const {
  std::vector<Eigen::Index> out;
  std::size_t next = 0;
  for (Eigen::Index c = 0; c < n_; ++c) {
    if (next < echelon_.pivots.size() && echelon_.pivots[next] == c)
      ++next;
    else
      out.push_back(c);
  }
  return out;
}

MatrixChain::Move MatrixChain::propose(Rng& rng) const {
  Eigen::Index column = 0;
  const auto dependent = optimized_ ? dependent_columns() : std::vector<Eigen::Index>{};
  if (!dependent.empty())
    column = dependent[static_cast<std::size_t>(rng.below(dependent.size()))];
  else
    column = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n_)));
  return {column, random_vector(rng)};
}

Grade MatrixChain::badness_after(const Move& move) const {
  MatrixModQ next = matrix_;
  next.col(move.column) = move.vector;
  return static_cast<Grade>(n_) - static_cast<Grade>(rank_mod(next, q_));
}

void MatrixChain::apply(const Move& move) {
  matrix_.col(move.column) = move.vector;
  echelon_ = reduced_row_echelon(matrix_, q_);
}

MatrixSample sample_gl(std::size_t n, std::int64_t q, std::uint64_t seed, bool optimized) {
  MatrixChain chain(n, q, optimized);
  RunConfig config;
  config.seed = seed;
  auto result = run_expand_contract(chain, EnergyPolicy::strict(), config);
  return {std::move(result.state), std::move(result.report)};
}

}  // namespace eac
