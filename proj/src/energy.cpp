#include "eac/energy.hpp"

#include <algorithm>
#include <cmath>

#include "eac/error.hpp"

namespace eac {

EnergyPolicy EnergyPolicy::linear(double c) {
  if (!(c >= 0.0)) throw InvalidInput("linear energy needs C >= 0");
  EnergyPolicy policy(Kind::linear);
  policy.parameter_ = c;
  return policy;
}

EnergyPolicy EnergyPolicy::quadratic(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidInput("quadratic energy needs alpha in [0, 1]");
  EnergyPolicy policy(Kind::quadratic);
  policy.parameter_ = alpha;
  return policy;
}

EnergyPolicy EnergyPolicy::tabular(std::vector<double> h, double gamma, bool dynamic) {
  if (dynamic && !(gamma > 0.0)) throw InvalidInput("dynamic energy needs gamma > 0");
  EnergyPolicy policy(Kind::tabular);
  policy.table_ = std::move(h);
  policy.gamma_ = gamma;
  policy.dynamic_ = dynamic;
  return policy;
}

EnergyPolicy EnergyPolicy::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  double value = 0.0;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      value = std::stod(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw InvalidInput("trailing characters");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad energy parameter in '" + text + "'");
    }
  }
  if (name == "strict" && colon == std::string::npos) return strict();
  if (colon == std::string::npos) throw InvalidInput("unknown energy '" + text + "'");
  if (name == "linear") return linear(value);
  if (name == "quadratic") return quadratic(value);
  if (name == "wanglandau") return tabular({}, value, true);
  throw InvalidInput("unknown energy '" + text + "'");
}

double EnergyPolicy::energy(Grade grade) const {
  if (grade < 0 || static_cast<std::size_t>(grade) >= table_.size()) return 0.0;
  return table_[static_cast<std::size_t>(grade)];
}

void EnergyPolicy::observe(Grade grade) {
  if (grade < 0) return;
  const auto index = static_cast<std::size_t>(grade);
  if (index >= table_.size()) table_.resize(index + 1, 0.0);
  table_[index] += gamma_;
}

double accept_probability(const EnergyPolicy& policy, Grade from_grade, Grade to_grade) {
  switch (policy.kind()) {
    case EnergyPolicy::Kind::strict:
      return to_grade <= from_grade ? 1.0 : 0.0;
    case EnergyPolicy::Kind::linear:
      return std::min(1.0, std::exp(policy.parameter() * static_cast<double>(from_grade - to_grade)));
    case EnergyPolicy::Kind::quadratic: {
      if (to_grade <= from_grade) return 1.0;
      const double exponent =
          static_cast<double>(to_grade) * static_cast<double>(to_grade) -
          static_cast<double>(from_grade) * static_cast<double>(from_grade);
      return std::pow(policy.parameter(), exponent);
    }
    case EnergyPolicy::Kind::tabular:
      return std::min(1.0, std::exp(policy.energy(from_grade) - policy.energy(to_grade)));
  }
  return 0.0;
}

EnergyPolicy wang_landau_update(EnergyPolicy policy, Grade observed_grade) {
  policy.observe(observed_grade);
  return policy;
}

std::string to_string(const EnergyPolicy& policy) {
  switch (policy.kind()) {
    case EnergyPolicy::Kind::strict:
      return "strict";
    case EnergyPolicy::Kind::linear:
      return "linear:" + std::to_string(policy.parameter());
    case EnergyPolicy::Kind::quadratic:
      return "quadratic:" + std::to_string(policy.parameter());
    case EnergyPolicy::Kind::tabular:
      return policy.dynamic() ? "wanglandau:" + std::to_string(policy.gamma()) : "tabular";
  }
  return "unknown";
}

}  // namespace eac
