#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "eac/energy.hpp"
#include "eac/multigraph.hpp"

namespace eac {

// Exhaustive (EnumerableChain) descriptions of tiny instances of the chains,
// for exact stationarity and symmetry checks.

/// Subsets of {0..n-1} as bitmasks, graded by |size - k|, n <= 16.
struct SubsetKernel {
  using State = std::uint32_t;
  std::size_t n;
  std::size_t k;

  std::vector<State> states() const;
  Grade grade(State s) const;
  std::vector<std::pair<State, double>> kernel(State s) const;
  double initial_probability(State s) const;
};

/// All functions [n] -> [n], graded by n - |range|, unoptimised moves.
struct FunctionKernel {
  using State = std::vector<std::size_t>;
  std::size_t n;

  std::vector<State> states() const;
  Grade grade(const State& s) const;
  std::vector<std::pair<State, double>> kernel(const State& s) const;
  double initial_probability(const State&) const;
};

/// All n x n matrices over F_q (row-major entry vectors), graded by n - rank,
/// uniform column replacement.
struct MatrixKernel {
  using State = std::vector<std::int64_t>;
  std::size_t n;
  std::int64_t q;

  std::vector<State> states() const;
  Grade grade(const State& s) const;
  std::vector<std::pair<State, double>> kernel(const State& s) const;
  double initial_probability(const State&) const;
};

/// Multigraphs with the given degrees (sorted edge arrays), graded by classic
/// badness, uniform oriented k-swaps, pairing-model initial law.
class MultigraphKernel {
 public:
  using State = std::vector<Edge>;

  MultigraphKernel(std::vector<int> degrees, int arity);

  std::vector<State> states() const;
  Grade grade(const State& s) const;
  std::vector<std::pair<State, double>> kernel(const State& s) const;
  double initial_probability(const State& s) const;

 private:
  std::vector<int> degrees_;
  int arity_;
  std::map<State, double> initial_;
};

}  // namespace eac
