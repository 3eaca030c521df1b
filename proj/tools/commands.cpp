#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "eac/error.hpp"
#include "eac/families/general_linear.hpp"
#include "eac/families/lattice.hpp"
#include "eac/families/magic_square.hpp"
#include "eac/families/permutation.hpp"
#include "eac/families/subset.hpp"
#include "eac/graph_distance.hpp"
#include "eac/graph_sampler.hpp"
#include "eac/io.hpp"
#include "eac/multistar.hpp"
#include "eac/stats/distribution.hpp"
#include "eac/stats/oracles.hpp"
#include "eac/stats/parallel.hpp"

namespace eac::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxOracleStates = 1'000'000;

std::uint64_t effective_seed(const Flags& flags) {
  if (flags.seed) return *flags.seed;
  std::random_device device;
  const std::uint64_t seed = (static_cast<std::uint64_t>(device()) << 32) | device();
  std::cerr << "seed: " << seed << "\n";
  return seed;
}

std::uint64_t extra_steps(const Flags& flags, std::size_t m) {
  if (flags.extra_steps == "auto") return default_extra_steps(m);
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(flags.extra_steps, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != flags.extra_steps.size() || flags.extra_steps.front() == '-')
    throw InvalidInput("--extra-steps must be a non-negative integer or 'auto'");
  return value;
}

EnergyPolicy policy(const Flags& flags, const EnergyPolicy& fallback) {
  return flags.energy ? EnergyPolicy::parse(*flags.energy) : fallback;
}

bool edges_format(const Flags& flags, bool graph) {
  if (flags.format.empty()) return graph;
  if (flags.format == "edges") {
    if (!graph) throw InvalidInput("--format edges is only available for graphs");
    return true;
  }
  if (flags.format == "json") return false;
  throw InvalidInput("--format must be 'edges' or 'json'");
}

GraphChainOptions chain_options(const Flags& flags) {
  GraphChainOptions options;
  if (flags.chain == "2swap")
    options.arity = 2;
  else if (flags.chain == "3swap")
    options.arity = 3;
  else
    throw InvalidInput("--chain must be '2swap' or '3swap'");
  options.mode = parse_badness_mode(flags.badness);
  options.optimized = flags.optimized;
  return options;
}

json edges_json(const Multigraph& g) {
  json out = json::array();
  for (const auto& e : g.sorted_edges()) out.push_back({e.u, e.v});
  return out;
}

// The run report without the wall clock, so reruns print identical bytes.
json stable_report(const RunReport& report) {
  json j = to_json(report);
  j.erase("wall_time_ms");
  return j;
}

RunConfig config_for(const Flags& flags, std::uint64_t seed, std::size_t m, const EnergyPolicy& p,
                     std::optional<std::uint64_t> default_cap = kDefaultMaxSteps) {
  RunConfig config;
  config.seed = seed;
  config.extra_steps = extra_steps(flags, m);
  config.max_steps = flags.max_steps ? flags.max_steps : default_cap;
  if (config.extra_steps > 0 && p.kind() != EnergyPolicy::Kind::strict)
    throw InvalidInput("--extra-steps needs the strict energy");
  return config;
}

// One run of a family's sampler: the value as JSON, its oracle key, and the report.
struct Draw {
  json value;
  std::string key;
  RunReport report;
  std::optional<Multigraph> graph;
};

using Drawer = std::function<Draw(std::uint64_t)>;

Drawer graph_drawer(const Flags& flags) {
  const DegreeSequence degrees(read_degree_file(flags.degrees_file));
  GraphSampleOptions options;
  options.chain = chain_options(flags);
  options.policy = policy(flags, EnergyPolicy::strict());
  options.extra_steps = extra_steps(flags, degrees.m());
  if (flags.max_steps) options.max_steps = flags.max_steps;
  return [degrees, options](std::uint64_t seed) {
    GraphSampleOptions o = options;
    o.seed = seed;
    auto s = sample_simple_graph(degrees, o);
    return Draw{edges_json(s.graph), s.graph.canonical_key(), std::move(s.report), std::move(s.graph)};
  };
}

Drawer multistar_drawer(const Flags& flags) {
  const MultiStarSpec spec(parse_hubs(flags.hubs));
  if (flags.energy) throw InvalidInput("multi-star sampling uses the strict energy only");
  MultiStarOptions options;
  options.optimized = flags.optimized;
  options.extra_steps = extra_steps(flags, spec.degree_sequence().m());
  if (flags.max_steps) options.max_steps = flags.max_steps;
  return [spec, options](std::uint64_t seed) {
    MultiStarOptions o = options;
    o.seed = seed;
    auto s = sample_multistar(spec, o);
    Draw d{edges_json(s.graph), std::to_string(s.pattern.mask), std::move(s.report), std::move(s.graph)};
    return d;
  };
}

Drawer subset_drawer(const Flags& flags) {
  const EnergyPolicy p = policy(flags, EnergyPolicy::strict());
  const RunConfig base = config_for(flags, 0, flags.n, p);
  const std::size_t n = flags.n, k = flags.k;
  if (k > n) throw InvalidInput("subset size k must satisfy 0 <= k <= n");
  return [=](std::uint64_t seed) {
    std::vector<std::size_t> members;
    RunReport report;
    report.seed = seed;
    if (n > 0) {
      SubsetChain chain(n, k);
      RunConfig config = base;
      config.seed = seed;
      auto r = run_expand_contract(chain, p, config);
      members = std::move(r.state);
      report = std::move(r.report);
    }
    return Draw{members, join_key<std::size_t>(members), std::move(report), std::nullopt};
  };
}

Drawer perm_drawer(const Flags& flags) {
  const EnergyPolicy p = policy(flags, EnergyPolicy::strict());
  const RunConfig base = config_for(flags, 0, flags.n, p);
  FunctionChain prototype(flags.n, flags.optimized);
  return [=](std::uint64_t seed) {
    FunctionChain chain = prototype;
    RunConfig config = base;
    config.seed = seed;
    auto r = run_expand_contract(chain, p, config);
    return Draw{r.state, join_key<std::size_t>(r.state), std::move(r.report), std::nullopt};
  };
}

json matrix_json(const MatrixModQ& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_key(const MatrixModQ& m) {
  return join_key(std::span<const std::int64_t>(m.data(), static_cast<std::size_t>(m.size())));
}

Drawer gl_drawer(const Flags& flags) {
  const EnergyPolicy p = policy(flags, EnergyPolicy::strict());
  const RunConfig base = config_for(flags, 0, flags.n, p);
  MatrixChain prototype(flags.n, flags.q, flags.optimized);
  return [=](std::uint64_t seed) {
    MatrixChain chain = prototype;
    RunConfig config = base;
    config.seed = seed;
    auto r = run_expand_contract(chain, p, config);
    return Draw{matrix_json(r.state), matrix_key(r.state), std::move(r.report), std::nullopt};
  };
}

Drawer lattice_drawer(const Flags& flags) {
  const EnergyPolicy p = policy(flags, EnergyPolicy::strict());
  const RunConfig base = config_for(flags, 0, flags.n, p);
  LatticeChain prototype(flags.n, flags.sum_squares);
  return [=](std::uint64_t seed) {
    LatticeChain chain = prototype;
    RunConfig config = base;
    config.seed = seed;
    auto r = run_expand_contract(chain, p, config);
    return Draw{r.state, join_key<std::int64_t>(r.state), std::move(r.report), std::nullopt};
  };
}

Drawer magic_drawer(const Flags& flags) {
  const double alpha = flags.alpha.value_or(kDefaultMagicAlpha);
  if (flags.n < 3) throw InvalidInput("magic squares need n >= 3");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidInput("alpha must lie in (0, 1]");
  const EnergyPolicy p = policy(flags, EnergyPolicy::quadratic(alpha));
  const RunConfig base = config_for(flags, 0, flags.n, p, kMagicMaxSteps);
  MagicSquareChain prototype(flags.n);
  return [=](std::uint64_t seed) {
    MagicSquareChain chain = prototype;
    RunConfig config = base;
    config.seed = seed;
    auto r = run_expand_contract(chain, p, config);
    json rows = json::array();
    for (Eigen::Index i = 0; i < r.state.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < r.state.cols(); ++j) row.push_back(r.state(i, j));
      rows.push_back(row);
    }
    return Draw{rows, square_key(r.state), std::move(r.report), std::nullopt};
  };
}

Drawer drawer_for(const std::string& family, const Flags& flags) {
  if (family == "graph") return graph_drawer(flags);
  if (family == "multistar") return multistar_drawer(flags);
  if (family == "subset") return subset_drawer(flags);
  if (family == "perm") return perm_drawer(flags);
  if (family == "gl") return gl_drawer(flags);
  if (family == "lattice") return lattice_drawer(flags);
  if (family == "magic") return magic_drawer(flags);
  throw InvalidInput("unknown family '" + family + "'");
}

// Oracles for verify, built by enumeration.

void guard(std::size_t count) {
  if (count > kMaxOracleStates) throw InstanceTooLarge("oracle support too large to enumerate");
}

OracleDistribution subset_oracle(std::size_t n, std::size_t k) {
  if (n > 24) throw InstanceTooLarge("subset oracle supports n <= 24");
  std::vector<std::string> keys;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) members.push_back(i);
    keys.push_back(join_key<std::size_t>(members));
    guard(keys.size());
  }
  return OracleDistribution::uniform(keys);
}

OracleDistribution perm_oracle(std::size_t n) {
  if (n > 9) throw InstanceTooLarge("permutation oracle supports n <= 9");
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::string> keys;
  do keys.push_back(join_key<std::size_t>(p));
  while (std::next_permutation(p.begin(), p.end()));
  return OracleDistribution::uniform(keys);
}

OracleDistribution gl_oracle(std::size_t n, std::int64_t q) {
  if (n == 0 || !is_prime(q)) throw InvalidInput("GL oracle needs n >= 1 and prime q");
  const double cells = static_cast<double>(n * n);
  if (std::pow(static_cast<double>(q), cells) > 1 << 20) throw InstanceTooLarge("GL oracle supports q^(n^2) <= 2^20");
  const auto total = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(q), cells)));
  std::vector<std::string> keys;
  MatrixModQ m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      m.data()[i] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(q));
      c /= static_cast<std::uint64_t>(q);
    }
    if (determinant_mod(m, q) != 0) keys.push_back(matrix_key(m));
  }
  return OracleDistribution::uniform(keys);
}

OracleDistribution lattice_oracle(std::size_t n, std::int64_t energy) {
  std::vector<std::string> keys;
  std::vector<std::int64_t> point(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      if (left == 0) {
        keys.push_back(join_key<std::int64_t>(point));
        guard(keys.size());
      }
      return;
    }
    for (std::int64_t a = 0; a * a <= left; ++a) {
      point[i] = a;
      rec(i + 1, left - a * a);
    }
    point[i] = 0;
  };
  if (n == 0 || n > 12) throw InstanceTooLarge("lattice oracle supports 1 <= n <= 12");
  rec(0, energy);
  if (keys.empty()) throw InvalidInput("no lattice point has this sum of squares");
  return OracleDistribution::uniform(keys);
}

OracleDistribution oracle_for(const std::string& family, const Flags& flags) {
  if (family == "graph") return graph_oracle(read_degree_file(flags.degrees_file));
  if (family == "multistar") return multistar_oracle(MultiStarSpec(parse_hubs(flags.hubs)));
  if (family == "subset") return subset_oracle(flags.n, flags.k);
  if (family == "perm") return perm_oracle(flags.n);
  if (family == "gl") return gl_oracle(flags.n, flags.q);
  if (family == "lattice") return lattice_oracle(flags.n, flags.sum_squares);
  if (family == "magic") {
    std::vector<std::string> keys;
    for (const auto& s : enumerate_magic_squares(flags.n)) keys.push_back(square_key(s));
    if (keys.empty()) throw InvalidInput("no magic squares of this size");
    return OracleDistribution::uniform(keys);
  }
  throw InvalidInput("unknown family '" + family + "'");
}

double percentile(std::vector<std::uint64_t> values, double q) {
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
  return static_cast<double>(values[std::min(rank == 0 ? 0 : rank - 1, values.size() - 1)]);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

std::vector<int> parse_hubs(const std::string& text) {
  if (text.empty()) throw InvalidInput("--hubs is required");
  std::vector<int> hubs;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value <= 0) throw InvalidInput("bad hub degree '" + item + "'");
    hubs.push_back(value);
  }
  return hubs;
}

void sample(const std::string& family, const Flags& flags) {
  const bool graph = family == "graph" || family == "multistar";
  const bool edges = edges_format(flags, graph);
  const Drawer draw = drawer_for(family, flags);
  const std::uint64_t seed = effective_seed(flags);
  const Draw d = draw(seed);
  std::cerr << to_json(d.report).dump() << "\n";
  if (edges) {
    write_edge_list(std::cout, *d.graph);
    return;
  }
  json out{{"family", family}, {"seed", seed}, {"value", d.value}, {"report", stable_report(d.report)}};
  if (d.graph) {
    out["n"] = d.graph->n;
    out["m"] = d.graph->m();
  }
  std::cout << out.dump() << "\n";
}

void verify(const std::string& family, const Flags& flags) {
  if (flags.samples == 0) throw InvalidInput("--samples must be positive");
  if (!flags.format.empty() && flags.format != "json") throw InvalidInput("verify prints JSON only");
  const Drawer draw = drawer_for(family, flags);
  const OracleDistribution oracle = oracle_for(family, flags);
  const std::uint64_t seed = effective_seed(flags);
  const auto keys = parallel_trials(flags.samples, seed, [&](std::uint64_t, std::uint64_t s) { return draw(s).key; });
  EmpiricalDistribution empirical;
  for (const auto& k : keys) empirical.add(k);
  const DistanceReport report = compare(empirical, oracle);
  json out = to_json(report);
  out["family"] = family;
  out["seed"] = seed;
  out["min_count"] = report.min_count;
  std::cout << out.dump() << "\n";
}

void bench_graph(const Flags& flags) {
  if (flags.trials == 0) throw InvalidInput("--trials must be at least 1");
  const DegreeSequence degrees(read_degree_file(flags.degrees_file));
  const std::uint64_t seed = effective_seed(flags);
  json rows = json::array();
  for (const auto& mode : split(flags.modes, ',')) {
    Flags f = flags;
    const auto plus = mode.find('+');
    f.chain = mode.substr(0, plus);
    f.optimized = plus != std::string::npos;
    if (f.optimized && mode.substr(plus) != "+opt") throw InvalidInput("bad mode '" + mode + "'");
    GraphSampleOptions options;
    options.chain = chain_options(f);
    if (flags.max_steps) options.max_steps = flags.max_steps;
    const auto start = std::chrono::steady_clock::now();
    const auto taus = parallel_trials(flags.trials, seed, [&](std::uint64_t, std::uint64_t s) {
      GraphSampleOptions o = options;
      o.seed = s;
      return sample_simple_graph(degrees, o).report.tau;
    });
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back({{"mode", mode},
                    {"badness", to_string(options.chain.mode)},
                    {"trials", flags.trials},
                    {"median_steps", percentile(taus, 0.5)},
                    {"p95_steps", percentile(taus, 0.95)},
                    {"wall_time_ms", ms}});
  }
  std::cout << json{{"n", degrees.n()}, {"m", degrees.m()}, {"d_max", degrees.max_degree()}, {"seed", seed}, {"modes", rows}}
                   .dump()
            << "\n";
}

void analyze_distance(const Flags& flags) {
  if (flags.edges_file.empty()) throw InvalidInput("an edge-list file is required");
  const Multigraph g = read_edge_list_file(flags.edges_file);
  if (g.n == 0) throw InvalidInput("empty graph");
  Vertex source = 0;
  if (flags.vertex) {
    source = *flags.vertex;
  } else {
    const auto d = g.degrees();
    source = static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
  }
  std::cout << json{{"n", g.n}, {"m", g.m()}, {"vertex", source}, {"mean_distance", mean_distance_to_vertex(g, source)}}.dump()
            << "\n";
}

}  // namespace eac::cli
