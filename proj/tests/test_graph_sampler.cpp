#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>
#include <map>

#include "eac/error.hpp"
#include "eac/graph_distance.hpp"
#include "eac/graph_sampler.hpp"
#include "eac/stats/distribution.hpp"
#include "eac/stats/oracles.hpp"

using namespace eac;

namespace {

// Every perfect matching of the endpoints, with a callback on the edge list.
void for_each_matching(const std::vector<int>& degrees, const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<Vertex> ends;
  for (std::size_t v = 0; v < degrees.size(); ++v)
    for (int k = 0; k < degrees[v]; ++k) ends.push_back(static_cast<Vertex>(v));
  std::vector<char> used(ends.size(), 0);
  std::vector<Edge> edges;
  std::function<void()> rec = [&] {
    std::size_t i = 0;
    while (i < ends.size() && used[i]) ++i;
    if (i == ends.size()) {
      visit(edges);
      return;
    }
    used[i] = 1;
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      edges.emplace_back(ends[i], ends[j]);
      rec();
      edges.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec();
}

Multigraph path(std::size_t n) {
  Multigraph g{n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return g;
}

}  // namespace

TEST_CASE("pairing model examples") {
  const auto one = configuration_model_sample(std::vector<int>{1, 1}, 3);
  REQUIRE(one.m() == 1);
  CHECK(one.edges[0] == Edge(0, 1));
  const auto loop = configuration_model_sample(std::vector<int>{2}, 3);
  REQUIRE(loop.m() == 1);
  CHECK(loop.edges[0].loop());
  CHECK_THROWS_AS(configuration_model_sample(std::vector<int>{1, 2}, 1), InvalidInput);
}

TEST_CASE("pairing model on (1,1,1,1) hits each matching with probability 1/3") {
  Rng rng(31);
  std::map<std::string, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[configuration_model_sample(std::vector<int>{1, 1, 1, 1}, rng).canonical_key()];
  REQUIRE(counts.size() == 3);
  double chi2 = 0.0;
  for (const auto& [key, c] : counts) chi2 += std::pow(c - draws / 3.0, 2) / (draws / 3.0);
  CHECK(chi2 < 13.8);  // chi-square, 2 dof, p = 0.001
}

TEST_CASE("pairing model law matches matching enumeration") {
  const std::vector<int> degrees{1, 2, 3, 2};
  EmpiricalDistribution exact;
  for_each_matching(degrees, [&](const std::vector<Edge>& edges) { exact.add(Multigraph{4, edges}.canonical_key()); });
  CHECK(exact.total() == 105);
  EmpiricalDistribution sampled;
  Rng rng(8);
  for (int i = 0; i < 100000; ++i) sampled.add(configuration_model_sample(degrees, rng).canonical_key());
  CHECK(tv_distance(sampled.normalized(), exact.normalized()) < 0.02);
}

TEST_CASE("matching_count agrees with enumeration") {
  CHECK(matching_count(0) == 1);
  CHECK(matching_count(1) == 1);
  CHECK(matching_count(2) == 3);
  CHECK(matching_count(3) == 15);
  for (int m = 1; m <= 5; ++m) {
    std::uint64_t count = 0;
    for_each_matching(std::vector<int>(static_cast<std::size_t>(2 * m), 1), [&](const std::vector<Edge>&) { ++count; });
    CHECK(matching_count(static_cast<std::uint64_t>(m)) == count);
  }
  CHECK(matching_count(30) == BigInt("29215606371473169285018060091249259296875"));
}

TEST_CASE("expected_initial_loops agrees with enumeration") {
  CHECK(expected_initial_loops(std::vector<int>{1, 1}) == 0);
  CHECK(expected_initial_loops(std::vector<int>{2, 2}) == BigRational(2, 3));
  CHECK(expected_initial_loops(std::vector<int>{2}) == 1);
  CHECK_THROWS_AS(expected_initial_loops(std::vector<int>{}), InvalidInput);
  for (const auto& degrees : std::vector<std::vector<int>>{{2, 2}, {3, 1, 2}, {4, 2, 2}, {3, 3, 2}, {1, 5, 2}}) {
    std::uint64_t matchings = 0, loops = 0;
    for_each_matching(degrees, [&](const std::vector<Edge>& edges) {
      ++matchings;
      for (const auto& e : edges) loops += e.loop();
    });
    CHECK(expected_initial_loops(degrees) == BigRational(loops, matchings));
  }
}

TEST_CASE("sample_simple_graph returns a simple graph with the degrees") {
  const std::vector<std::vector<int>> sequences{
      {1, 1}, {1, 1, 1, 1}, {2, 2, 2}, {2, 2, 2, 2, 2}, {1, 1, 1, 2, 2, 2, 3, 3, 3}, {3, 3, 3, 3}, {5, 5, 4, 3, 3, 2, 2, 1, 1}};
  std::uint64_t seed = 0;
  for (const auto& degrees : sequences)
    for (int arity : {2, 3})
      for (auto mode : {BadnessMode::classic, BadnessMode::modified})
        for (bool optimized : {false, true})
          for (int rep = 0; rep < 5; ++rep) {
            GraphSampleOptions options;
            options.chain = {arity, mode, optimized};
            options.seed = ++seed;
            const auto s = sample_simple_graph(DegreeSequence(degrees), options);
            CHECK(s.graph.is_simple());
            CHECK(s.graph.degrees() == degrees);
            CHECK(s.report.accepted + s.report.rejected == s.report.total_steps);
          }
}

TEST_CASE("sample_simple_graph is deterministic and rejects non-graphical input") {
  GraphSampleOptions options;
  options.seed = 1234;
  const DegreeSequence d = DegreeSequence::regular(40, 4);
  const auto a = sample_simple_graph(d, options);
  const auto b = sample_simple_graph(d, options);
  CHECK(a.graph.canonical_key() == b.graph.canonical_key());
  CHECK(a.report.total_steps == b.report.total_steps);
  CHECK(a.report.seed == 1234);
  CHECK_THROWS_AS(sample_simple_graph(DegreeSequence({1, 1, 4}), options), InvalidInput);
}

TEST_CASE("uniformity on (1,1,1,1) and the 5-cycles") {
  const auto run = [](const std::vector<int>& degrees, std::uint64_t samples) {
    EmpiricalDistribution empirical;
    GraphSampleOptions options;
    const DegreeSequence d(degrees);
    for (std::uint64_t t = 0; t < samples; ++t) {
      options.seed = derive_seed(0xC0FFEE, t);
      empirical.add(sample_simple_graph(d, options).graph.canonical_key());
    }
    return compare(empirical, graph_oracle(degrees));
  };
  const auto four = run({1, 1, 1, 1}, 100000);
  CHECK(four.support_size == 3);
  CHECK(four.tv < 0.02);
  const auto cycle = run({2, 2, 2, 2, 2}, 100000);
  CHECK(cycle.support_size == 12);
  CHECK(cycle.tv < 0.03);
  CHECK(std::isfinite(cycle.ratio));
}

TEST_CASE("relabelling within equal-degree groups leaves the law unchanged") {
  // Degrees (1,1,2,2,2): swapping vertices 0<->1 or 2<->4 maps the target set to itself.
  const std::vector<int> degrees{1, 1, 2, 2, 2};
  const DegreeSequence d(degrees);
  EmpiricalDistribution plain, relabelled;
  const std::array<Vertex, 5> perm{1, 0, 4, 3, 2};
  GraphSampleOptions options;
  for (std::uint64_t t = 0; t < 40000; ++t) {
    options.seed = derive_seed(77, t);
    const auto g = sample_simple_graph(d, options).graph;
    plain.add(g.canonical_key());
    Multigraph h{g.n, {}};
    for (const auto& e : g.edges) h.edges.emplace_back(perm[e.u], perm[e.v]);
    relabelled.add(h.canonical_key());
  }
  CHECK(tv_distance(plain.normalized(), relabelled.normalized()) < 0.03);
}

TEST_CASE("conditioned pairing model returns simple graphs") {
  Rng rng(4);
  std::uint64_t attempts = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = conditioned_configuration_sample(std::vector<int>{2, 2, 2, 2, 2}, rng, &attempts);
    CHECK(g.is_simple());
    CHECK(attempts >= 1);
  }
  CHECK_THROWS_AS(conditioned_configuration_sample(std::vector<int>{4, 2}, rng, nullptr, 50), StepCapExceeded);
}

TEST_CASE("mean distance to a vertex") {
  Multigraph star{6, {}};
  for (Vertex leaf = 1; leaf < 6; ++leaf) star.edges.emplace_back(0, leaf);
  CHECK(mean_distance_to_vertex(star, 0) == doctest::Approx(1.0));
  CHECK(mean_distance_to_vertex(path(3), 0) == doctest::Approx(1.5));
  Multigraph cycle = path(5);
  cycle.edges.emplace_back(4, 0);
  for (Vertex v = 0; v < 5; ++v) CHECK(mean_distance_to_vertex(cycle, v) == doctest::Approx(1.5));
  Multigraph lonely{3, {Edge(1, 2)}};
  CHECK(mean_distance_to_vertex(lonely, 0) == 0.0);
  // Other components are ignored.
  CHECK(mean_distance_to_vertex(lonely, 1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(mean_distance_to_vertex(lonely, 3), InvalidInput);
}
