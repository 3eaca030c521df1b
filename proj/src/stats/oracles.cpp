#include "eac/stats/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eac/degree_sequence.hpp"
#include "eac/error.hpp"
#include "eac/graph_sampler.hpp"
#include "eac/stats/parallel.hpp"

namespace eac {

namespace {

class GraphEnumerator {
 public:
  explicit GraphEnumerator(std::span<const int> degrees) : residual_(degrees.begin(), degrees.end()) {}

  std::vector<Multigraph> run() {
    if (erdos_gallai(residual_)) row(0);
    return std::move(out_);
  }

 private:
  void row(std::size_t i) {
    if (i == residual_.size()) {
      out_.push_back(Multigraph{residual_.size(), edges_});
      return;
    }
    const int need = residual_[i];
    residual_[i] = 0;
    choose(i, i + 1, need);
    residual_[i] = need;
  }

  // Picks `need` neighbours j >= start of vertex i among vertices with spare degree.
  void choose(std::size_t i, std::size_t start, int need) {
    if (need == 0) {
      const std::span<const int> rest(residual_.data() + i + 1, residual_.size() - i - 1);
      if (erdos_gallai(rest)) row(i + 1);
      return;
    }
    int available = 0;
    for (std::size_t j = start; j < residual_.size(); ++j) available += residual_[j] > 0;
    if (available < need) return;
    for (std::size_t j = start; j < residual_.size(); ++j) {
      if (residual_[j] == 0) continue;
      --residual_[j];
      edges_.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      choose(i, j + 1, need - 1);
      edges_.pop_back();
      ++residual_[j];
    }
  }

  std::vector<int> residual_;
  std::vector<Edge> edges_;
  std::vector<Multigraph> out_;
};

class MagicEnumerator {
 public:
  explicit MagicEnumerator(std::size_t n)
      : n_(n), cells_(n * n, 0), used_(n * n + 1, 0), target_(magic_constant(n)) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> row, col;
      for (std::size_t j = 0; j < n; ++j) {
        row.push_back(i * n + j);
        col.push_back(j * n + i);
      }
      lines_.push_back(row);
      lines_.push_back(col);
    }
    std::vector<std::size_t> diagonal, anti;
    for (std::size_t i = 0; i < n; ++i) {
      diagonal.push_back(i * n + i);
      anti.push_back(i * n + (n - 1 - i));
    }
    lines_.push_back(diagonal);
    lines_.push_back(anti);
    sums_.assign(lines_.size(), 0);
    filled_.assign(lines_.size(), 0);
    through_.resize(n * n);
    for (std::size_t l = 0; l < lines_.size(); ++l)
      for (auto cell : lines_[l]) through_[cell].push_back(l);

    // For 4x4 this order makes every other cell forced by a line sum.
    if (n == 4)
      order_ = {0, 1, 2, 4, 8, 6, 5, 10};
    for (std::size_t cell = 0; cell < n * n; ++cell)
      if (std::find(order_.begin(), order_.end(), cell) == order_.end()) order_.push_back(cell);
  }

  std::vector<Square> run() {
    search(0);
    return std::move(out_);
  }

 private:
  void search(std::size_t k) {
    while (k < order_.size() && cells_[order_[k]] != 0) ++k;
    if (k == order_.size()) {
      Square square(n_, n_);
      for (std::size_t i = 0; i < cells_.size(); ++i) square.data()[i] = cells_[i];
      out_.push_back(std::move(square));
      return;
    }
    const std::size_t cell = order_[k];
    for (std::int64_t v = 1; v <= static_cast<std::int64_t>(n_ * n_); ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      const std::size_t mark = trail_.size();
      if (place(cell, v)) search(k + 1);
      undo(mark);
    }
  }

  // Places v and every value forced by a line with one empty cell left.
  bool place(std::size_t cell, std::int64_t v) {
    cells_[cell] = v;
    used_[static_cast<std::size_t>(v)] = 1;
    trail_.push_back(cell);
    for (auto l : through_[cell]) {
      sums_[l] += v;
      ++filled_[l];
    }
    for (auto l : through_[cell]) {
      if (filled_[l] == n_) {
        if (sums_[l] != target_) return false;
      } else if (filled_[l] + 1 == n_) {
        const std::int64_t w = target_ - sums_[l];
        if (w < 1 || w > static_cast<std::int64_t>(n_ * n_) || used_[static_cast<std::size_t>(w)]) return false;
        const auto empty = *std::find_if(lines_[l].begin(), lines_[l].end(), [&](auto c) { return cells_[c] == 0; });
        if (!place(empty, w)) return false;
      } else if (sums_[l] >= target_) {
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t cell = trail_.back();
      trail_.pop_back();
      const std::int64_t v = cells_[cell];
      for (auto l : through_[cell]) {
        sums_[l] -= v;
        --filled_[l];
      }
      used_[static_cast<std::size_t>(v)] = 0;
      cells_[cell] = 0;
    }
  }

  std::size_t n_;
  std::vector<std::int64_t> cells_;
  std::vector<char> used_;
  std::int64_t target_;
  std::vector<std::vector<std::size_t>> lines_;
  std::vector<std::vector<std::size_t>> through_;
  std::vector<std::int64_t> sums_;
  std::vector<std::size_t> filled_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> trail_;
  std::vector<Square> out_;
};

}  // namespace

std::vector<Multigraph> enumerate_graphs(std::span<const int> degrees) {
  if (degrees.size() > 12) throw InstanceTooLarge("graph enumeration supports n <= 12");
  std::int64_t sum = 0;
  for (int d : degrees) {
    if (d < 0) throw InvalidInput("degrees must be non-negative");
    sum += d;
  }
  if (sum % 2 != 0) throw InvalidInput("degree sum must be even");
  if (sum / 2 > 20) throw InstanceTooLarge("graph enumeration supports m <= 20");
  return GraphEnumerator(degrees).run();
}

OracleDistribution graph_oracle(std::span<const int> degrees) {
  std::vector<std::string> keys;
  for (const auto& g : enumerate_graphs(degrees)) keys.push_back(g.canonical_key());
  return OracleDistribution::uniform(std::move(keys));
}

std::vector<Square> enumerate_magic_squares(std::size_t n) {
  if (n == 0) throw InvalidInput("square size must be at least 1");
  if (n > 4) throw InstanceTooLarge("magic square enumeration supports n <= 4");
  return MagicEnumerator(n).run();
}

std::string square_key(const Square& square) {
  return join_key(std::span<const std::int64_t>(square.data(), static_cast<std::size_t>(square.size())));
}

OracleDistribution multistar_oracle(const MultiStarSpec& spec) {
  if (spec.hub_count() > 5) throw InstanceTooLarge("multi-star oracle supports k <= 5");
  std::vector<std::string> keys;
  std::vector<BigInt> sizes;
  const std::uint64_t patterns = std::uint64_t{1} << spec.hub_pairs();
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    const std::vector<int> counts = hub_adjacency_counts(spec, mask);
    bool fits = true;
    for (std::size_t i = 0; i < counts.size(); ++i) fits = fits && counts[i] <= spec.hub_degrees()[i];
    if (!fits) continue;
    keys.push_back(std::to_string(mask));
    sizes.push_back(multistar_class_size(spec, counts));
  }
  const BigInt total = std::accumulate(sizes.begin(), sizes.end(), BigInt(0));
  std::vector<double> weights;
  for (const auto& size : sizes) weights.push_back(BigRational(size, total).convert_to<double>());
  return OracleDistribution::weighted(std::move(keys), weights);
}

BadnessStatistics badness_statistics(std::span<const int> degrees, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidInput("need at least one trial");
  struct Trial {
    Grade badness = 0;
    std::size_t loops = 0;
    bool simple = false;
  };
  const std::vector<int> d(degrees.begin(), degrees.end());
  const auto results = parallel_trials(trials, seed, [&](std::uint64_t, std::uint64_t trial_seed) {
    const Multigraph g = configuration_model_sample(d, trial_seed);
    const Grade b = badness(g, BadnessMode::classic);
    return Trial{b, g.loop_count(), b == 0};
  });
  BadnessStatistics out;
  out.trials = trials;
  double badness_sum = 0.0, loop_sum = 0.0, simple = 0.0;
  for (const auto& r : results) {
    badness_sum += static_cast<double>(r.badness);
    loop_sum += static_cast<double>(r.loops);
    simple += r.simple ? 1.0 : 0.0;
  }
  const auto t = static_cast<double>(trials);
  out.mean_initial_badness = badness_sum / t;
  out.mean_loop_count = loop_sum / t;
  out.fraction_simple = simple / t;
  return out;
}

nlohmann::json to_json(const BadnessStatistics& stats) {
  return {{"trials", stats.trials},
          {"mean_initial_badness", stats.mean_initial_badness},
          {"mean_loop_count", stats.mean_loop_count},
          {"fraction_simple", stats.fraction_simple}};
}

}  // namespace eac
