#include "eac/stats/distribution.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "eac/error.hpp"

namespace eac {

void EmpiricalDistribution::add(const std::string& key, std::uint64_t count) {
  counts_[key] += count;
  total_ += count;
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
  for (const auto& [key, count] : other.counts_) add(key, count);
}

std::uint64_t EmpiricalDistribution::count(const std::string& key) const {
  const auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

Distribution EmpiricalDistribution::normalized() const {
  if (total_ == 0) throw UnnormalizedInput("empirical distribution has no samples");
  Distribution out;
  for (const auto& [key, count] : counts_) out[key] = static_cast<double>(count) / static_cast<double>(total_);
  return out;
}

OracleDistribution OracleDistribution::uniform(std::vector<std::string> support) {
  const std::vector<double> weights(support.size(), 1.0);
  return weighted(std::move(support), weights);
}

OracleDistribution OracleDistribution::weighted(std::vector<std::string> support, std::span<const double> weights) {
  if (support.empty()) throw InvalidInput("oracle support is empty");
  if (weights.size() != support.size()) throw InvalidInput("need one weight per support state");
  if (std::set<std::string>(support.begin(), support.end()).size() != support.size())
    throw InvalidInput("oracle support has duplicate states");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidInput("oracle weights must be non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidInput("oracle weights sum to zero");
  OracleDistribution out;
  out.support_ = std::move(support);
  for (double w : weights) out.weights_.push_back(w / total);
  return out;
}

Distribution OracleDistribution::distribution() const {
  Distribution out;
  for (std::size_t i = 0; i < support_.size(); ++i) out[support_[i]] = weights_[i];
  return out;
}

namespace {

void require_normalized(const Distribution& d) {
  double total = 0.0;
  for (const auto& [key, p] : d) {
    if (!(p >= 0.0)) throw UnnormalizedInput("negative probability for " + key);
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw UnnormalizedInput("distribution sums to " + std::to_string(total));
}

double at(const Distribution& d, const std::string& key) {
  const auto it = d.find(key);
  return it == d.end() ? 0.0 : it->second;
}

std::set<std::string> union_keys(const Distribution& mu, const Distribution& nu) {
  std::set<std::string> keys;
  for (const auto& [key, p] : mu) keys.insert(key);
  for (const auto& [key, p] : nu) keys.insert(key);
  return keys;
}

// |log a - log b| with the support-mismatch clause.
double log_gap(double a, double b) {
  if (a == 0.0 && b == 0.0) return 0.0;
  if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(std::log(a) - std::log(b));
}

}  // namespace

double tv_distance(const Distribution& mu, const Distribution& nu) {
  require_normalized(mu);
  require_normalized(nu);
  double sum = 0.0;
  for (const auto& key : union_keys(mu, nu)) sum += std::abs(at(mu, key) - at(nu, key));
  return std::min(1.0, 0.5 * sum);
}

double ratio_distance(const Distribution& mu, const Distribution& nu) {
  require_normalized(mu);
  require_normalized(nu);
  double worst = 0.0;
  for (const auto& key : union_keys(mu, nu)) worst = std::max(worst, log_gap(at(mu, key), at(nu, key)));
  return worst;
}

DistanceReport compare(const EmpiricalDistribution& empirical, const OracleDistribution& oracle) {
  const Distribution mu = empirical.normalized();
  const Distribution nu = oracle.distribution();
  DistanceReport report;
  report.tv = tv_distance(mu, nu);
  report.ratio = ratio_distance(mu, nu);
  report.n_samples = empirical.total();
  report.support_size = oracle.size();

  double worst = -1.0;
  for (const auto& key : union_keys(mu, nu)) {
    const double gap = log_gap(at(mu, key), at(nu, key));
    if (gap > worst) {
      worst = gap;
      report.worst_state = key;
    }
  }
  report.min_count = std::numeric_limits<std::uint64_t>::max();
  for (const auto& key : oracle.support()) report.min_count = std::min(report.min_count, empirical.count(key));
  return report;
}

nlohmann::json to_json(const DistanceReport& report) {
  nlohmann::json out;
  out["tv"] = report.tv;
  // JSON has no infinity; an unobserved state is reported as the string "inf".
  if (std::isinf(report.ratio))
    out["ratio"] = "inf";
  else
    out["ratio"] = report.ratio;
  out["n_samples"] = report.n_samples;
  out["support_size"] = report.support_size;
  out["worst_state"] = report.worst_state;
  out["min_count"] = report.min_count;
  return out;
}

}  // namespace eac
