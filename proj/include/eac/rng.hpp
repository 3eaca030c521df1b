#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace eac {

/// The repository-wide generator: 64-bit Mersenne Twister with hand-rolled
/// bounded draws, so streams are bit-identical across standard libraries
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }

  result_type operator()() { return engine_(); }

  /// Uniform on [0, bound), bound > 0. Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = engine_();
    __uint128_t product = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = engine_();
        product = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin() { return (engine_() >> 63) != 0; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Number of failures before the first success, success probability p in (0, 1].
  std::uint64_t geometric(double p) {
    if (p >= 1.0) return 0;
    const double u = 1.0 - uniform01();  // (0, 1]
    return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p)));
  }

  template <class It>
  void shuffle(It first, It last) {
    const auto count = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = count; i > 1; --i) {
      const std::uint64_t j = below(i);
      using std::swap;
      swap(first[i - 1], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Per-trial stream seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) { return seed ^ trial; }

}  // namespace eac
