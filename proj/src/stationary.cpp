#include "eac/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace eac {

namespace {

// Tarjan's strongly connected components over the support of `transition`.
std::vector<int> strong_components(const Eigen::MatrixXd& transition, int& count) {
  const auto n = static_cast<int>(transition.rows());
  std::vector<int> component(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n)),
      order(static_cast<std::size_t>(n), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int counter = 0;
  count = 0;

  std::function<void(int)> visit = [&](int v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w = 0; w < n; ++w) {
      if (w == v || transition(v, w) <= 0.0) continue;
      if (order[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      int w = -1;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        component[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (order[v] < 0) visit(v);
  return component;
}

// Grassmann-Taksar-Heyman elimination: subtraction-free, so couplings as small
// as exp(-50) survive. Needs an irreducible block.
Eigen::VectorXd gth_stationary(Eigen::MatrixXd p) {
  const Eigen::Index n = p.rows();
  for (Eigen::Index k = n - 1; k > 0; --k) {
    const double out = p.row(k).head(k).sum();
    p.col(k).head(k) /= out;
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) p(i, j) += p(i, k) * p(k, j);
  }
  Eigen::VectorXd pi(n);
  pi(0) = 1.0;
  for (Eigen::Index j = 1; j < n; ++j) pi(j) = pi.head(j).dot(p.col(j).head(j));
  return pi / pi.sum();
}

}  // namespace

Eigen::VectorXd limit_distribution(const Eigen::MatrixXd& transition, const Eigen::VectorXd& initial) {
  const auto n = transition.rows();
  int count = 0;
  const std::vector<int> component = strong_components(transition, count);

  std::vector<char> closed(static_cast<std::size_t>(count), 1);
  for (Eigen::Index v = 0; v < n; ++v)
    for (Eigen::Index w = 0; w < n; ++w)
      if (transition(v, w) > 0.0 && component[v] != component[w]) closed[component[v]] = 0;

  std::vector<Eigen::Index> transient;
  std::vector<int> class_of(static_cast<std::size_t>(count), -1);
  std::vector<std::vector<Eigen::Index>> classes;
  for (Eigen::Index v = 0; v < n; ++v) {
    const int c = component[v];
    if (!closed[c]) {
      transient.push_back(v);
      continue;
    }
    if (class_of[c] < 0) {
      class_of[c] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of[c]].push_back(v);
  }

  // Mass entering each closed class.
  Eigen::VectorXd absorbed = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(classes.size()));
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto v : classes[c]) absorbed(static_cast<Eigen::Index>(c)) += initial(v);
  if (!transient.empty()) {
    const auto t = static_cast<Eigen::Index>(transient.size());
    Eigen::MatrixXd fundamental = Eigen::MatrixXd::Identity(t, t);
    Eigen::MatrixXd exits = Eigen::MatrixXd::Zero(t, static_cast<Eigen::Index>(classes.size()));
    Eigen::VectorXd start(t);
    for (Eigen::Index i = 0; i < t; ++i) {
      start(i) = initial(transient[i]);
      for (Eigen::Index j = 0; j < t; ++j) fundamental(i, j) -= transition(transient[i], transient[j]);
      for (Eigen::Index w = 0; w < n; ++w) {
        const int c = component[w];
        if (closed[c]) exits(i, class_of[c]) += transition(transient[i], w);
      }
    }
    const Eigen::MatrixXd absorption = fundamental.partialPivLu().solve(exits);
    absorbed += absorption.transpose() * start;
  }

  Eigen::VectorXd limit = Eigen::VectorXd::Zero(n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& members = classes[c];
    const auto size = static_cast<Eigen::Index>(members.size());
    Eigen::MatrixXd block(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
      for (Eigen::Index j = 0; j < size; ++j) block(i, j) = transition(members[i], members[j]);
    const Eigen::VectorXd pi = gth_stationary(block);
    for (Eigen::Index i = 0; i < size; ++i) limit(members[i]) += absorbed(static_cast<Eigen::Index>(c)) * pi(i);
  }
  return limit;
}

double detailed_balance_residual(const Eigen::MatrixXd& transition, const Eigen::VectorXd& weights) {
  const Eigen::MatrixXd flow = weights.asDiagonal() * transition;
  return (flow - flow.transpose()).cwiseAbs().maxCoeff();
}

double stationarity_residual(const Eigen::MatrixXd& transition, const Eigen::VectorXd& distribution) {
  const Eigen::VectorXd next = transition.transpose() * distribution;
  return (next - distribution).cwiseAbs().maxCoeff();
}

}  // namespace eac
