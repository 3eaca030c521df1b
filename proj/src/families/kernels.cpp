#include "eac/families/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "eac/error.hpp"
#include "eac/families/general_linear.hpp"

namespace eac {

std::vector<SubsetKernel::State> SubsetKernel::states() const {
  if (n > 16) throw InstanceTooLarge("subset kernel supports n <= 16");
  std::vector<State> out(std::size_t{1} << n);
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = static_cast<State>(s);
  return out;
}

Grade SubsetKernel::grade(State s) const {
  return std::abs(static_cast<Grade>(std::popcount(s)) - static_cast<Grade>(k));
}

std::vector<std::pair<SubsetKernel::State, double>> SubsetKernel::kernel(State s) const {
  std::vector<std::pair<State, double>> out;
  const double w = 1.0 / (2.0 * static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(s | (State{1} << i), w);
    out.emplace_back(s & ~(State{1} << i), w);
  }
  return out;
}

double SubsetKernel::initial_probability(State s) const {
  const double p = static_cast<double>(k) / static_cast<double>(n);
  const int c = std::popcount(s);
  return std::pow(p, c) * std::pow(1.0 - p, static_cast<double>(n) - c);
}

std::vector<FunctionKernel::State> FunctionKernel::states() const {
  const double count = std::pow(static_cast<double>(n), static_cast<double>(n));
  if (count > 5000) throw InstanceTooLarge("function kernel supports n^n <= 5000");
  std::vector<State> out;
  State f(n, 0);
  for (;;) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

Grade FunctionKernel::grade(const State& s) const {
  std::vector<char> hit(n, 0);
  for (auto v : s) hit[v] = 1;
  return static_cast<Grade>(n) - std::count(hit.begin(), hit.end(), 1);
}

std::vector<std::pair<FunctionKernel::State, double>> FunctionKernel::kernel(const State& s) const {
  std::vector<std::pair<State, double>> out;
  const double w = 1.0 / static_cast<double>(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      State next = s;
      next[x] = y;
      out.emplace_back(std::move(next), w);
    }
  return out;
}

double FunctionKernel::initial_probability(const State&) const {
  return std::pow(static_cast<double>(n), -static_cast<double>(n));
}

std::vector<MatrixKernel::State> MatrixKernel::states() const {
  const double count = std::pow(static_cast<double>(q), static_cast<double>(n * n));
  if (count > 5000) throw InstanceTooLarge("matrix kernel supports q^(n^2) <= 5000");
  std::vector<State> out;
  State a(n * n, 0);
  for (;;) {
    out.push_back(a);
    std::size_t i = 0;
    while (i < a.size() && ++a[i] == q) a[i++] = 0;
    if (i == a.size()) break;
  }
  return out;
}

Grade MatrixKernel::grade(const State& s) const {
  const auto size = static_cast<Eigen::Index>(n);
  const MatrixModQ m = Eigen::Map<const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      s.data(), size, size);
  return static_cast<Grade>(n) - static_cast<Grade>(rank_mod(m, q));
}

std::vector<std::pair<MatrixKernel::State, double>> MatrixKernel::kernel(const State& s) const {
  std::vector<std::pair<State, double>> out;
  const auto vectors = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(q), static_cast<double>(n))));
  const double w = 1.0 / static_cast<double>(n * vectors);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t code = 0; code < vectors; ++code) {
      State next = s;
      std::size_t rest = code;
      for (std::size_t row = 0; row < n; ++row) {
        next[row * n + col] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(q));
        rest /= static_cast<std::size_t>(q);
      }
      out.emplace_back(std::move(next), w);
    }
  }
  return out;
}

double MatrixKernel::initial_probability(const State&) const {
  return std::pow(static_cast<double>(q), -static_cast<double>(n * n));
}

MultigraphKernel::MultigraphKernel(std::vector<int> degrees, int arity) : degrees_(std::move(degrees)), arity_(arity) {
  if (arity_ != 2 && arity_ != 3) throw InvalidInput("swap arity must be 2 or 3");
  std::vector<Vertex> endpoints;
  for (std::size_t v = 0; v < degrees_.size(); ++v)
    endpoints.insert(endpoints.end(), static_cast<std::size_t>(degrees_[v]), static_cast<Vertex>(v));
  if (endpoints.size() % 2 != 0) throw InvalidInput("odd degree sum");
  if (endpoints.size() > 14) throw InstanceTooLarge("multigraph kernel supports m <= 7");

  // Every perfect matching of the endpoints, collapsed to its multigraph.
  std::vector<char> used(endpoints.size(), 0);
  std::vector<Edge> edges;
  std::size_t matchings = 0;
  std::function<void()> recurse = [&] {
    const auto first = std::find(used.begin(), used.end(), 0);
    if (first == used.end()) {
      State key = edges;
      std::sort(key.begin(), key.end());
      initial_[key] += 1.0;
      ++matchings;
      return;
    }
    const auto i = static_cast<std::size_t>(first - used.begin());
    used[i] = 1;
    for (std::size_t j = i + 1; j < endpoints.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      edges.emplace_back(endpoints[i], endpoints[j]);
      recurse();
      edges.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  recurse();
  for (auto& [state, weight] : initial_) weight /= static_cast<double>(matchings);
}

std::vector<MultigraphKernel::State> MultigraphKernel::states() const {
  std::vector<State> out;
  for (const auto& [state, weight] : initial_) out.push_back(state);
  return out;
}

Grade MultigraphKernel::grade(const State& s) const {
  return badness(Multigraph{degrees_.size(), s}, BadnessMode::classic);
}

std::vector<std::pair<MultigraphKernel::State, double>> MultigraphKernel::kernel(const State& s) const {
  const std::size_t m = s.size();
  std::vector<std::pair<State, double>> out;
  if (m < static_cast<std::size_t>(arity_)) return {{s, 1.0}};
  const std::size_t orientations = std::size_t{1} << arity_;
  double tuples = static_cast<double>(orientations);
  for (int i = 0; i < arity_; ++i) tuples *= static_cast<double>(m - static_cast<std::size_t>(i));
  const double w = 1.0 / tuples;

  std::vector<std::size_t> pick(static_cast<std::size_t>(arity_));
  std::function<void(std::size_t)> choose = [&](std::size_t depth) {
    if (depth == pick.size()) {
      for (std::size_t mask = 0; mask < orientations; ++mask) {
        std::vector<std::pair<Vertex, Vertex>> r;
        for (std::size_t i = 0; i < pick.size(); ++i) {
          const Edge& e = s[pick[i]];
          r.push_back(((mask >> i) & 1u) ? std::pair{e.v, e.u} : std::pair{e.u, e.v});
        }
        State next = s;
        // Cycle (a,b),(c,d)[,(e,f)] -> (b,c),(d,e)|(d,a),(f,a).
        for (std::size_t i = 0; i < r.size(); ++i) next[pick[i]] = Edge(r[i].second, r[(i + 1) % r.size()].first);
        std::sort(next.begin(), next.end());
        out.emplace_back(std::move(next), w);
      }
      return;
    }
    for (std::size_t p = 0; p < m; ++p) {
      if (std::find(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(depth), p) !=
          pick.begin() + static_cast<std::ptrdiff_t>(depth))
        continue;
      pick[depth] = p;
      choose(depth + 1);
    }
  };
  choose(0);
  return out;
}

double MultigraphKernel::initial_probability(const State& s) const {
  const auto it = initial_.find(s);
  return it == initial_.end() ? 0.0 : it->second;
}

}  // namespace eac
