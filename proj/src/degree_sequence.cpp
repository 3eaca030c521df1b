#include "eac/degree_sequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "eac/error.hpp"

namespace eac {

std::string to_string(DegreeClass value) {
  switch (value) {
    case DegreeClass::valid_simple:
      return "valid_simple";
    case DegreeClass::valid_multigraph_only:
      return "valid_multigraph_only";
    case DegreeClass::invalid:
      return "invalid";
  }
  return "invalid";
}

bool erdos_gallai(std::span<const int> degrees) {
  std::vector<std::int64_t> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const std::size_t n = d.size();
  std::vector<std::int64_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];
  if (prefix[n] % 2 != 0) return false;

  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    // d is non-increasing, so the entries >= k form a prefix of length `at_least`.
    const auto at_least = static_cast<std::size_t>(
        std::upper_bound(d.begin(), d.end(), kk, std::greater<>()) - d.begin());
    const std::size_t split = std::max(k, at_least);
    const std::int64_t tail = kk * static_cast<std::int64_t>(split - k) + (prefix[n] - prefix[split]);
    if (prefix[k] > kk * (kk - 1) + tail) return false;
  }
  return true;
}

DegreeClass validate_degree_sequence(std::span<const int> degrees) {
  std::int64_t sum = 0;
  for (int d : degrees) {
    if (d < 1) return DegreeClass::invalid;
    sum += d;
  }
  if (sum % 2 != 0) return DegreeClass::invalid;
  return erdos_gallai(degrees) ? DegreeClass::valid_simple : DegreeClass::valid_multigraph_only;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  class_ = validate_degree_sequence(degrees_);
  if (class_ == DegreeClass::invalid)
    throw InvalidInput("degree sequence must be positive integers with an even sum");
  const auto sum = std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
  edges_ = static_cast<std::size_t>(sum / 2);
  max_degree_ = degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<int> DegreeSequence::sorted() const {
  std::vector<int> out = degrees_;
  std::sort(out.begin(), out.end());
  return out;
}

DegreeSequence DegreeSequence::regular(std::size_t n, int d) { return DegreeSequence(std::vector<int>(n, d)); }

}  // namespace eac
