#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace eac {

/// Probability table over canonical state keys.
using Distribution = std::map<std::string, double>;

/// Comma-joined values; the canonical key for subsets, function tables and
/// row-major arrays.
template <class T>
std::string join_key(std::span<const T> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

class EmpiricalDistribution {
 public:
  void add(const std::string& key, std::uint64_t count = 1);
  void merge(const EmpiricalDistribution& other);

  const std::map<std::string, std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t count(const std::string& key) const;
  Distribution normalized() const;

 private:
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

class OracleDistribution {
 public:
  /// Uniform over `support`. Throws InvalidInput on duplicates or an empty support.
  static OracleDistribution uniform(std::vector<std::string> support);
  /// Weights proportional to `weights` (non-negative, positive total).
  static OracleDistribution weighted(std::vector<std::string> support, std::span<const double> weights);

  const std::vector<std::string>& support() const noexcept { return support_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return support_.size(); }
  Distribution distribution() const;

 private:
  std::vector<std::string> support_;
  std::vector<double> weights_;
};

/// 1/2 sum |mu(x) - nu(x)|. Throws UnnormalizedInput unless both sum to 1 (1e-9).
double tv_distance(const Distribution& mu, const Distribution& nu);

/// max |log mu(x) - log nu(x)| over the union support; +inf when exactly one
/// side is zero somewhere.
double ratio_distance(const Distribution& mu, const Distribution& nu);

struct DistanceReport {
  double tv = 0.0;
  double ratio = 0.0;
  std::uint64_t n_samples = 0;
  std::size_t support_size = 0;
  /// State attaining the ratio distance.
  std::string worst_state;
  /// Smallest empirical count over the oracle support (0 when a state is unseen).
  std::uint64_t min_count = 0;
};

DistanceReport compare(const EmpiricalDistribution& empirical, const OracleDistribution& oracle);

nlohmann::json to_json(const DistanceReport& report);

}  // namespace eac
