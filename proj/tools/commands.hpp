#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eac::cli {

// Flags shared by every subcommand; each command reads the ones it needs.
struct Flags {
  std::optional<std::uint64_t> seed;
  std::string degrees_file;
  std::string edges_file;
  std::string chain = "3swap";
  std::string badness = "modified";
  bool optimized = false;
  std::string extra_steps = "0";
  std::optional<double> alpha;
  std::optional<std::string> energy;
  std::string hubs;
  std::uint64_t samples = 100000;
  std::uint64_t trials = 20;
  std::string modes = "3swap,3swap+opt";
  std::string format;
  std::optional<std::uint64_t> max_steps;
  std::size_t n = 0;
  std::size_t k = 0;
  std::int64_t q = 2;
  std::int64_t sum_squares = 0;
  std::optional<std::uint32_t> vertex;
};

// Primary output goes to stdout, diagnostics to stderr.
void sample(const std::string& family, const Flags& flags);
void verify(const std::string& family, const Flags& flags);
void bench_graph(const Flags& flags);
void analyze_distance(const Flags& flags);

std::vector<int> parse_hubs(const std::string& text);

}  // namespace eac::cli
