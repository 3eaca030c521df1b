#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eac {

using Grade = std::int64_t;

/// Acceptance rule over badness grades. A move from grade i to grade j is
/// accepted with probability min(exp(H(i) - H(j)), 1) for the energy H the
/// policy represents.
class EnergyPolicy {
 public:
  enum class Kind { strict, linear, quadratic, tabular };

  static EnergyPolicy strict() { return EnergyPolicy(Kind::strict); }
  /// H(i) = C i, C >= 0.
  static EnergyPolicy linear(double c);
  /// Uphill moves i -> j accepted with alpha^(j^2 - i^2), alpha in [0, 1].
  static EnergyPolicy quadratic(double alpha);
  /// Table-driven H (grades past the end of the table read as 0). With
  /// `dynamic`, every visit to grade b raises H(b) by gamma.
  static EnergyPolicy tabular(std::vector<double> h, double gamma = 0.1, bool dynamic = false);

  /// Parses "strict", "linear:C", "quadratic:A", "wanglandau:G".
  static EnergyPolicy parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }
  double gamma() const noexcept { return gamma_; }
  bool dynamic() const noexcept { return dynamic_; }

  /// H(grade) for tabular policies.
  double energy(Grade grade) const;
  const std::vector<double>& table() const noexcept { return table_; }

  /// Raises H(grade) by gamma, growing the table as needed.
  void observe(Grade grade);

 private:
  explicit EnergyPolicy(Kind kind) : kind_(kind) {}

  Kind kind_;
  double parameter_ = 0.0;
  double gamma_ = 0.1;
  bool dynamic_ = false;
  std::vector<double> table_;
};

double accept_probability(const EnergyPolicy& policy, Grade from_grade, Grade to_grade);

/// Returns a copy of `policy` after observing `observed_grade` once.
EnergyPolicy wang_landau_update(EnergyPolicy policy, Grade observed_grade);

std::string to_string(const EnergyPolicy& policy);

}  // namespace eac
