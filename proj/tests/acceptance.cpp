// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "eac/families/general_linear.hpp"
#include "eac/families/kernels.hpp"
#include "eac/families/magic_square.hpp"
#include "eac/families/permutation.hpp"
#include "eac/families/subset.hpp"
#include "eac/graph_distance.hpp"
#include "eac/graph_sampler.hpp"
#include "eac/io.hpp"
#include "eac/multistar.hpp"
#include "eac/stationary.hpp"
#include "eac/stats/distribution.hpp"
#include "eac/stats/oracles.hpp"
#include "eac/stats/parallel.hpp"

using namespace eac;

namespace {

// Tolerances, one block per criterion.
constexpr std::uint64_t kUniformSamples = 100'000;
constexpr double kTrioTv = 0.02;
constexpr double kTrioSeconds = 60.0;

constexpr double kGraphTv = 0.03;

constexpr double kConditionedTv = 0.02;

constexpr std::uint64_t kMultiStarRuns = 200'000;
constexpr double kMultiStarExact = 2.0 / 27.0;
constexpr double kMultiStarAbs = 0.01;
constexpr double kMultiStarRatio = 0.2;

constexpr std::uint64_t kLoopTrials = 100'000;
constexpr double kLoopRel = 0.10;
constexpr std::uint64_t kRegularTrials = 2'000;

constexpr std::size_t kScalingRuns = 200;
constexpr std::size_t kDoublingRuns = 41;
constexpr double kDoublingLow = 2.5;
constexpr double kDoublingHigh = 6.0;

constexpr double kMagicAlpha = 0.937;
constexpr double kMagicTv = 0.2;
constexpr double kMagicRatio = 3.0;

constexpr double kStationaryTol = 1e-10;

constexpr std::uint64_t kFuzzSteps = 1'000'000;

constexpr std::size_t kHubGraphs = 100;
constexpr double kHubSdFraction = 0.05;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [fail]");
  }
};

std::string fmt(double x, int digits = 4) {
  if (std::isinf(x)) return "inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Key>
EmpiricalDistribution tally(std::uint64_t samples, std::uint64_t seed, const std::function<Key(std::uint64_t)>& draw) {
  EmpiricalDistribution empirical;
  for (std::uint64_t t = 0; t < samples; ++t) empirical.add(draw(derive_seed(seed, t)));
  return empirical;
}

EmpiricalDistribution tally_parallel(std::uint64_t samples, std::uint64_t seed,
                                     const std::function<std::string(std::uint64_t)>& draw) {
  const auto keys = parallel_trials(samples, seed, [&](std::uint64_t, std::uint64_t s) { return draw(s); });
  EmpiricalDistribution empirical;
  for (const auto& k : keys) empirical.add(k);
  return empirical;
}

double percentile(std::vector<std::uint64_t> values, double q) {
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size()))) - 1;
  return static_cast<double>(values[std::min(rank, values.size() - 1)]);
}

// 1 ------------------------------------------------------------------------

Outcome exact_uniformity_trio() {
  Outcome out;

  std::vector<std::string> subsets;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    if (std::popcount(mask) != 3) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < 6; ++i)
      if ((mask >> i) & 1u) members.push_back(i);
    subsets.push_back(join_key<std::size_t>(members));
  }
  auto start = std::chrono::steady_clock::now();
  auto report = compare(tally<std::string>(kUniformSamples, 101,
                                           [](std::uint64_t s) { return join_key<std::size_t>(sample_k_subset(6, 3, s).members); }),
                        OracleDistribution::uniform(subsets));
  double secs = seconds_since(start);
  out.require(report.support_size == 20 && report.tv < kTrioTv && secs < kTrioSeconds,
              "subsets tv=" + fmt(report.tv) + " in " + fmt(secs, 3) + "s");

  std::vector<std::size_t> p{0, 1, 2, 3};
  std::vector<std::string> perms;
  do perms.push_back(join_key<std::size_t>(p));
  while (std::next_permutation(p.begin(), p.end()));
  for (bool optimized : {false, true}) {
    start = std::chrono::steady_clock::now();
    report = compare(tally<std::string>(kUniformSamples, 102,
                                        [&](std::uint64_t s) {
                                          return join_key<std::size_t>(sample_permutation(4, optimized, s).values);
                                        }),
                     OracleDistribution::uniform(perms));
    secs = seconds_since(start);
    out.require(report.support_size == 24 && report.tv < kTrioTv && secs < kTrioSeconds,
                std::string(optimized ? "perms(opt)" : "perms") + " tv=" + fmt(report.tv) + " in " + fmt(secs, 3) + "s");
  }

  std::vector<std::string> gl;
  for (int code = 0; code < 16; ++code) {
    const std::int64_t a = code & 1, b = (code >> 1) & 1, c = (code >> 2) & 1, d = (code >> 3) & 1;
    if ((a * d + b * c) % 2 == 0) continue;
    gl.push_back(join_key<std::int64_t>(std::vector<std::int64_t>{a, c, b, d}));
  }
  for (bool optimized : {false, true}) {
    start = std::chrono::steady_clock::now();
    report = compare(tally<std::string>(kUniformSamples, 103,
                                        [&](std::uint64_t s) {
                                          const auto m = sample_gl(2, 2, s, optimized).matrix;
                                          return join_key(std::span<const std::int64_t>(m.data(), 4));
                                        }),
                     OracleDistribution::uniform(gl));
    secs = seconds_since(start);
    out.require(report.support_size == 6 && report.tv < kTrioTv && secs < kTrioSeconds,
                std::string(optimized ? "GL(opt)" : "GL") + " tv=" + fmt(report.tv) + " in " + fmt(secs, 3) + "s");
  }
  return out;
}

// 2 ------------------------------------------------------------------------

Outcome graph_uniformity() {
  Outcome out;
  for (const auto& degrees : std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 2, 2, 2, 2}, {1, 1, 2, 2, 2, 2}}) {
    const DegreeSequence seq(degrees);
    const auto empirical = tally_parallel(kUniformSamples, 201, [&](std::uint64_t s) {
      GraphSampleOptions options;
      options.chain = {3, BadnessMode::modified, true};
      options.seed = s;
      return sample_simple_graph(seq, options).graph.canonical_key();
    });
    const auto report = compare(empirical, graph_oracle(degrees));
    out.require(report.tv < kGraphTv && std::isfinite(report.ratio),
                "(" + join_key<int>(degrees) + ") states=" + std::to_string(report.support_size) +
                    " tv=" + fmt(report.tv) + " ratio=" + fmt(report.ratio));
  }
  return out;
}

// 3 ------------------------------------------------------------------------

Outcome conditioned_uniformity() {
  Outcome out;
  const std::vector<int> degrees{2, 2, 2, 2, 2};
  const auto empirical = tally_parallel(kUniformSamples, 301, [&](std::uint64_t s) {
    Rng rng(s);
    return conditioned_configuration_sample(degrees, rng).canonical_key();
  });
  const auto report = compare(empirical, graph_oracle(degrees));
  out.require(report.tv < kConditionedTv, "tv=" + fmt(report.tv) + " states=" + std::to_string(report.support_size));
  return out;
}

// 4 ------------------------------------------------------------------------

Outcome multistar_classes() {
  Outcome out;
  const MultiStarSpec spec({5, 5});
  const auto masks = parallel_trials(kMultiStarRuns, 401, [&](std::uint64_t, std::uint64_t s) {
    MultiStarOptions options;
    options.seed = s;
    return sample_multistar(spec, options).pattern.mask;
  });
  EmpiricalDistribution empirical;
  for (auto m : masks) empirical.add(std::to_string(m));
  const double apart = static_cast<double>(empirical.count("0")) / static_cast<double>(empirical.total());
  const auto report = compare(empirical, multistar_oracle(spec));
  out.require(std::abs(apart - kMultiStarExact) <= kMultiStarAbs,
              "P(non-adjacent)=" + fmt(apart, 5) + " exact=" + fmt(kMultiStarExact, 5));
  out.require(empirical.count("0") > 0 && empirical.count("1") > 0, "both patterns seen");
  out.require(report.ratio <= kMultiStarRatio, "class ratio=" + fmt(report.ratio));
  return out;
}

// 5 ------------------------------------------------------------------------

Outcome initial_badness() {
  Outcome out;
  const std::vector<int> two{2, 2};
  const auto small = badness_statistics(two, kLoopTrials, 501);
  const double exact_two = static_cast<double>(expected_initial_loops(two));
  out.require(std::abs(small.mean_loop_count - exact_two) <= kLoopRel * exact_two,
              "(2,2) loops=" + fmt(small.mean_loop_count) + " exact=" + fmt(exact_two));

  const std::vector<int> regular(512, 8);
  const auto big = badness_statistics(regular, kRegularTrials, 502);
  const double exact = static_cast<double>(expected_initial_loops(regular));
  out.require(big.mean_initial_badness <= 64.0, "8-regular mean badness=" + fmt(big.mean_initial_badness));
  out.require(std::abs(big.mean_loop_count - exact) <= kLoopRel * exact,
              "loops=" + fmt(big.mean_loop_count) + " exact=" + fmt(exact));
  return out;
}

// 6 ------------------------------------------------------------------------

Outcome step_scaling() {
  Outcome out;
  const std::size_t target_m = 10'000;
  const int d = static_cast<int>(std::floor(std::pow(static_cast<double>(target_m), 0.25)));
  const std::size_t n = 2 * target_m / static_cast<std::size_t>(d);
  const DegreeSequence seq = DegreeSequence::regular(n, d);
  const auto taus = parallel_trials(kScalingRuns, 601, [&](std::uint64_t, std::uint64_t s) {
    GraphSampleOptions options;
    options.chain = {3, BadnessMode::classic, false};
    options.seed = s;
    return sample_simple_graph(seq, options).report.tau;
  });
  const double bound = static_cast<double>(seq.m()) * std::log(static_cast<double>(d));
  const double p95 = percentile(taus, 0.95);
  out.require(p95 <= bound, "unoptimized d=" + std::to_string(d) + " m=" + std::to_string(seq.m()) + " p95=" +
                                fmt(p95, 6) + " bound=" + fmt(bound, 6));

  const std::size_t fixed_n = 100'000;
  std::vector<double> medians;
  for (int degree : {4, 8, 16, 32}) {
    const DegreeSequence regular = DegreeSequence::regular(fixed_n, degree);
    const auto steps = parallel_trials(kDoublingRuns, 602 + static_cast<std::uint64_t>(degree), [&](std::uint64_t, std::uint64_t s) {
      GraphSampleOptions options;
      options.chain = {3, BadnessMode::modified, true};
      options.seed = s;
      return sample_simple_graph(regular, options).report.tau;
    });
    medians.push_back(percentile(steps, 0.5));
  }
  for (std::size_t i = 1; i < medians.size(); ++i) {
    const double factor = medians[i] / medians[i - 1];
    out.require(factor >= kDoublingLow && factor <= kDoublingHigh,
                "d " + std::to_string(2 << i) + "->" + std::to_string(4 << i) + " x" + fmt(factor, 3));
  }
  return out;
}

// 7 ------------------------------------------------------------------------

Outcome magic_squares() {
  Outcome out;
  std::vector<std::string> support;
  for (const auto& s : enumerate_magic_squares(4)) support.push_back(square_key(s));
  const auto empirical = tally_parallel(kUniformSamples, 701, [](std::uint64_t s) {
    return square_key(sample_magic_square(4, kMagicAlpha, s).square);
  });
  const auto report = compare(empirical, OracleDistribution::uniform(support));
  out.require(report.tv <= kMagicTv, "4x4 tv=" + fmt(report.tv));
  out.require(report.ratio <= kMagicRatio,
              "ratio=" + fmt(report.ratio) + " (min count " + std::to_string(report.min_count) + ")");

  std::set<std::string> three;
  for (const auto& s : enumerate_magic_squares(3)) three.insert(square_key(s));
  std::set<std::string> seen;
  for (std::uint64_t t = 0; t < 2000; ++t) seen.insert(square_key(sample_magic_square(3, kMagicAlpha, derive_seed(702, t)).square));
  out.require(seen == three, "3x3 squares seen=" + std::to_string(seen.size()) + "/8");
  return out;
}

// 8 ------------------------------------------------------------------------

template <class Report>
double uniform_gap(const Report& r) {
  const double u = 1.0 / static_cast<double>(r.target_limit.size());
  return (r.target_limit.array() - u).abs().maxCoeff();
}

Outcome stationarity() {
  Outcome out;
  const auto subsets = stationary_check(SubsetKernel{3, 1}, EnergyPolicy::strict());
  out.require(subsets.target_indices.size() == 3 && uniform_gap(subsets) < kStationaryTol,
              "subsets of [3] gap=" + fmt(uniform_gap(subsets)));
  const auto graphs = stationary_check(MultigraphKernel({2, 2, 2, 2, 2}, 3), EnergyPolicy::strict());
  out.require(graphs.target_indices.size() == 12 && uniform_gap(graphs) < kStationaryTol,
              "multigraphs (2,2,2,2,2) gap=" + fmt(uniform_gap(graphs)));
  const auto gl = stationary_check(MatrixKernel{2, 2}, EnergyPolicy::strict());
  out.require(gl.target_indices.size() == 6 && uniform_gap(gl) < kStationaryTol, "GL_2(F_2) gap=" + fmt(uniform_gap(gl)));
  return out;
}

// 9 ------------------------------------------------------------------------

struct FuzzResult {
  std::uint64_t steps = 0;
  std::uint64_t degree_failures = 0;
  std::uint64_t monotone_failures = 0;
  std::uint64_t coherence_failures = 0;
  std::uint64_t simplicity_failures = 0;
  std::uint64_t determinism_failures = 0;
};

FuzzResult fuzz_trial(std::uint64_t seed) {
  FuzzResult r;
  Rng gen(seed);
  // Degrees of a random simple graph, isolated vertices dropped.
  const std::size_t n = 6 + gen.below(50);
  const double p = 0.05 + 0.3 * gen.uniform01();
  std::vector<int> degrees(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gen.uniform01() < p) {
        ++degrees[i];
        ++degrees[j];
      }
  std::erase(degrees, 0);
  if (degrees.size() < 3) return r;
  const DegreeSequence seq(degrees);
  const GraphChainOptions options{gen.coin() ? 3 : 2, gen.coin() ? BadnessMode::modified : BadnessMode::classic, gen.coin()};
  if (seq.m() < static_cast<std::size_t>(options.arity)) return r;

  RunConfig config;
  config.seed = gen();
  config.extra_steps = 500 + gen.below(2000);
  config.max_steps = 10'000'000;
  const auto run = [&](bool check) {
    GraphChain chain(seq, options);
    Grade last = std::numeric_limits<Grade>::max();
    return run_expand_contract(chain, EnergyPolicy::strict(), config, [&](const GraphChain& c, const StepEvent& e) {
      if (!check) return;
      ++r.steps;
      if (c.state().degrees() != degrees) ++r.degree_failures;
      if (e.to_grade > e.from_grade || e.from_grade > last) ++r.monotone_failures;
      last = e.to_grade;
      if (!c.tracker().coherent()) ++r.coherence_failures;
    });
  };
  const auto first = run(true);
  if (!first.state.is_simple() || first.state.degrees() != degrees) ++r.simplicity_failures;
  const auto second = run(false);
  if (edge_list_string(first.state) != edge_list_string(second.state) ||
      first.report.total_steps != second.report.total_steps)
    ++r.determinism_failures;
  return r;
}

Outcome property_suites() {
  Outcome out;
  FuzzResult total;
  std::uint64_t batch = 0;
  while (total.steps < kFuzzSteps) {
    const auto results = parallel_trials(64, derive_seed(901, batch++), [](std::uint64_t, std::uint64_t s) { return fuzz_trial(s); });
    for (const auto& r : results) {
      total.steps += r.steps;
      total.degree_failures += r.degree_failures;
      total.monotone_failures += r.monotone_failures;
      total.coherence_failures += r.coherence_failures;
      total.simplicity_failures += r.simplicity_failures;
      total.determinism_failures += r.determinism_failures;
    }
  }
  // Multi-star outputs and reruns.
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng gen(derive_seed(902, t));
    std::vector<int> hubs(1 + gen.below(4));
    for (auto& h : hubs) h = 2 + static_cast<int>(gen.below(10));
    const MultiStarSpec spec(hubs);
    MultiStarOptions options;
    options.seed = gen();
    options.optimized = gen.coin();
    const auto a = sample_multistar(spec, options);
    const auto b = sample_multistar(spec, options);
    const DegreeSequence seq = spec.degree_sequence();
    if (!a.graph.is_simple() || a.graph.degrees() != std::vector<int>(seq.degrees().begin(), seq.degrees().end()))
      ++total.simplicity_failures;
    if (edge_list_string(a.graph) != edge_list_string(b.graph)) ++total.determinism_failures;
  }
  out.require(total.steps >= kFuzzSteps, "steps=" + std::to_string(total.steps));
  out.require(total.degree_failures == 0, "degree=" + std::to_string(total.degree_failures));
  out.require(total.simplicity_failures == 0, "simplicity=" + std::to_string(total.simplicity_failures));
  out.require(total.monotone_failures == 0, "monotone=" + std::to_string(total.monotone_failures));
  out.require(total.coherence_failures == 0, "coherence=" + std::to_string(total.coherence_failures));
  out.require(total.determinism_failures == 0, "determinism=" + std::to_string(total.determinism_failures));
  return out;
}

// 10 -----------------------------------------------------------------------

Outcome distance_pipeline() {
  Outcome out;
  Multigraph star{6, {}};
  for (Vertex leaf = 1; leaf < 6; ++leaf) star.edges.emplace_back(0, leaf);
  Multigraph path{3, {Edge(0, 1), Edge(1, 2)}};
  Multigraph cycle{5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0)}};
  out.require(mean_distance_to_vertex(star, 0) == 1.0 && mean_distance_to_vertex(path, 0) == 1.5 &&
                  mean_distance_to_vertex(cycle, 2) == 1.5,
              "star/path/cycle = " + fmt(mean_distance_to_vertex(star, 0)) + "/" +
                  fmt(mean_distance_to_vertex(path, 0)) + "/" + fmt(mean_distance_to_vertex(cycle, 2)));

  // One hub of degree 300 among 1999 vertices of degree 3 (one of degree 4 for parity).
  std::vector<int> degrees(2000, 3);
  degrees[0] = 300;
  degrees[1] = 4;
  const DegreeSequence seq(degrees);
  const auto distances = parallel_trials(kHubGraphs, 1001, [&](std::uint64_t, std::uint64_t s) {
    GraphSampleOptions options;
    options.seed = s;
    return mean_distance_to_vertex(sample_simple_graph(seq, options).graph, 0);
  });
  const double mean = std::accumulate(distances.begin(), distances.end(), 0.0) / static_cast<double>(distances.size());
  double var = 0.0;
  for (double x : distances) var += (x - mean) * (x - mean);
  const double sd = std::sqrt(var / static_cast<double>(distances.size() - 1));
  out.require(sd < kHubSdFraction * mean, "heavy hub mean=" + fmt(mean) + " sd=" + fmt(sd));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"exact-uniformity trio", exact_uniformity_trio},
      {"graph sampler uniformity", graph_uniformity},
      {"conditioned pairing model", conditioned_uniformity},
      {"multi-star classes", multistar_classes},
      {"initial badness", initial_badness},
      {"step-count scaling", step_scaling},
      {"magic squares", magic_squares},
      {"framework stationarity", stationarity},
      {"property suites", property_suites},
      {"distance pipeline", distance_pipeline},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("threw: ") + e.what());
    }
    all = all && outcome.pass;
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", outcome.pass ? "PASS" : "FAIL", index, name,
                outcome.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
