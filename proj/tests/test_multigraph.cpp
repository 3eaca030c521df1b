#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <set>

#include "eac/error.hpp"
#include "eac/graph_sampler.hpp"
#include "eac/multigraph.hpp"
#include "eac/swap.hpp"

using namespace eac;

namespace {

Multigraph graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Multigraph g;
  g.n = n;
  for (auto [u, v] : edges) g.edges.emplace_back(u, v);
  return g;
}

// Independent classic count: loops by multiplicity, pairs with k >= 2 count k.
Grade oracle_badness(const Multigraph& g) {
  std::map<std::pair<Vertex, Vertex>, int> mult;
  for (const auto& e : g.edges) ++mult[{e.u, e.v}];
  Grade bad = 0;
  for (const auto& [pair, k] : mult)
    if (pair.first == pair.second || k >= 2) bad += k;
  return bad;
}

}  // namespace

TEST_CASE("edge normalisation and keys") {
  const Edge e(5, 2);
  CHECK(e.u == 2);
  CHECK(e.v == 5);
  CHECK(Edge(3, 3).loop());
  CHECK(graph(3, {{2, 1}, {0, 1}}).canonical_key() == "0 1;1 2");
  CHECK(graph(3, {{0, 0}, {1, 2}}).degrees() == std::vector<int>{2, 1, 1});
}

TEST_CASE("classic badness examples") {
  CHECK(badness(graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 0);
  CHECK(badness(graph(3, {{0, 0}, {1, 2}})) == 1);
  CHECK(badness(graph(2, {{0, 1}, {0, 1}, {0, 1}})) == 3);
  CHECK(badness(graph(2, {{0, 0}, {0, 0}, {1, 1}})) == 3);
  CHECK(badness(graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}})) == 3);
  const auto g = graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(badness(g, BadnessMode::modified) == 0);
  CHECK(g.is_simple());
  CHECK(parse_badness_mode("modified") == BadnessMode::modified);
  CHECK_THROWS_AS(parse_badness_mode("other"), InvalidInput);
}

TEST_CASE("tracker keeps bad edges as a prefix") {
  const auto g = graph(4, {{0, 1}, {2, 3}, {1, 1}, {0, 2}, {0, 2}});
  BadEdgeTracker t(g, BadnessMode::classic);
  CHECK(t.bad_count() == 3);
  for (std::size_t i = 0; i < t.m(); ++i) {
    const Edge& e = t.edge(i);
    const bool bad = e.loop() || t.multiplicity(e.u, e.v) >= 2;
    CHECK(t.is_bad_position(i) == bad);
  }
  CHECK(t.multiplicity(2, 0) == 2);
  CHECK(t.multiplicity(3, 1) == 0);
  CHECK(t.coherent());
}

TEST_CASE("removing a loop without new bad edges drops bad_count by one") {
  // Loop at 0 plus two disjoint edges; the 3-swap (0,0),(1,2),(3,4) -> (0,1),(2,3),(4,0).
  BadEdgeTracker t(graph(5, {{0, 0}, {1, 2}, {3, 4}}), BadnessMode::classic);
  REQUIRE(t.bad_count() == 1);
  std::array<std::size_t, 3> pos{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Edge& e = t.edge(i);
    pos[e.loop() ? 0 : (e.u == 1 ? 1 : 2)] = i;
  }
  const std::array<bool, 3> flip{false, false, false};
  const auto p = make_swap(t, pos, flip);
  const auto before = t.graph().degrees();
  CHECK(swap_badness_after(t, p) == 0);
  t.replace(p.position_span(), p.added_span());
  CHECK(t.bad_count() == 0);
  CHECK(t.graph().degrees() == before);
  CHECK(t.graph().is_simple());
  CHECK(t.coherent());
}

TEST_CASE("modified mode taints the survivor of a double edge") {
  // (0,1) twice, (2,3), (4,5). Swap one (0,1) copy with (2,3): adds (1,2), (3,0).
  const auto g = graph(6, {{0, 1}, {0, 1}, {2, 3}, {4, 5}});
  for (const auto mode : {BadnessMode::classic, BadnessMode::modified}) {
    BadEdgeTracker t(g, mode);
    CHECK(t.bad_count() == 2);
    std::size_t double_pos = 0, single_pos = 0;
    for (std::size_t i = 0; i < t.m(); ++i) {
      if (t.edge(i) == Edge(0, 1)) double_pos = i;
      if (t.edge(i) == Edge(2, 3)) single_pos = i;
    }
    const std::array<std::size_t, 2> pos{double_pos, single_pos};
    const std::array<bool, 2> flip{false, false};
    const auto p = make_swap(t, pos, flip);
    CHECK(p.added[0] == Edge(1, 2));
    CHECK(p.added[1] == Edge(0, 3));
    t.replace(p.position_span(), p.added_span());
    CHECK(t.multiplicity(0, 1) == 1);
    CHECK(t.coherent());
    if (mode == BadnessMode::modified) {
      CHECK(t.tainted(0, 1));
      CHECK(t.bad_count() == 1);
      // Removing the last copy clears the taint.
      std::size_t left = 0, other = 0;
      for (std::size_t i = 0; i < t.m(); ++i) {
        if (t.edge(i) == Edge(0, 1)) left = i;
        if (t.edge(i) == Edge(4, 5)) other = i;
      }
      const std::array<std::size_t, 2> pos2{left, other};
      const auto p2 = make_swap(t, pos2, flip);
      t.replace(p2.position_span(), p2.added_span());
      CHECK(t.multiplicity(0, 1) == 0);
      CHECK_FALSE(t.tainted(0, 1));
      CHECK(t.bad_count() == 0);
      CHECK(t.coherent());
    } else {
      CHECK(t.bad_count() == 0);
    }
  }
}

TEST_CASE("tracker stays coherent under random swaps") {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> degrees(3 + rng.below(8));
    int sum = 0;
    for (auto& d : degrees) sum += d = 1 + static_cast<int>(rng.below(5));
    if (sum % 2) ++degrees[0];
    const auto mode = trial % 2 ? BadnessMode::modified : BadnessMode::classic;
    BadEdgeTracker t(configuration_model_sample(degrees, rng), mode);
    if (t.m() < 3) continue;
    for (int step = 0; step < 300; ++step) {
      const int arity = rng.coin() ? 2 : 3;
      const auto p = propose_swap(t, arity, rng);
      const Grade predicted = swap_badness_after(t, p);
      t.replace(p.position_span(), p.added_span());
      REQUIRE(t.coherent());
      CHECK(static_cast<Grade>(t.bad_count()) == predicted);
      CHECK(t.graph().degrees() == degrees);
      if (mode == BadnessMode::classic) CHECK(predicted == oracle_badness(t.graph()));
      if (mode == BadnessMode::modified) CHECK(predicted >= oracle_badness(t.graph()));
    }
  }
}

TEST_CASE("3-swaps on three edges: 8 distinct equally likely outcomes") {
  const auto g = graph(6, {{0, 1}, {2, 3}, {4, 5}});
  BadEdgeTracker t(g, BadnessMode::classic);
  Rng rng(5);
  std::map<std::string, int> seen;
  const int draws = 80000;
  for (int i = 0; i < draws; ++i) {
    const auto p = propose_swap(t, 3, rng);
    Multigraph out{6, {p.added[0], p.added[1], p.added[2]}};
    ++seen[out.canonical_key()];
  }
  CHECK(seen.size() == 8);
  for (const auto& [key, count] : seen) CHECK(std::abs(count - draws / 8) < 5 * std::sqrt(draws / 8.0));
}

TEST_CASE("2-swaps on two edges: the 4 oriented proposals") {
  const auto g = graph(4, {{0, 1}, {2, 3}});
  BadEdgeTracker t(g, BadnessMode::classic);
  Rng rng(6);
  std::map<std::string, int> seen;
  for (int i = 0; i < 40000; ++i) {
    const auto p = propose_swap(t, 2, rng);
    ++seen[std::to_string(p.removed[0][0]) + std::to_string(p.removed[0][1]) + std::to_string(p.removed[1][0]) +
           std::to_string(p.removed[1][1])];
    // Whatever the orientation, the outcome is a perfect matching other than the current one.
    CHECK(Multigraph{4, {p.added[0], p.added[1]}}.is_simple());
    CHECK_FALSE(p.added[0] == Edge(0, 1));
  }
  // Edge order x orientation: 8 ordered oriented pairs, realising 4 proposals up to order.
  CHECK(seen.size() == 8);
  for (const auto& [key, count] : seen) CHECK(std::abs(count - 5000) < 400);
  CHECK_THROWS_AS(propose_swap(BadEdgeTracker(graph(2, {{0, 1}}), BadnessMode::classic), 2, rng), InvalidInput);
}
