#include "eac/graph_distance.hpp"

#include <queue>

#include "eac/error.hpp"

namespace eac {

double mean_distance_to_vertex(const Multigraph& graph, Vertex source) {
  if (source >= graph.n) throw InvalidInput("vertex out of range");
  std::vector<std::vector<Vertex>> adjacency(graph.n);
  for (const Edge& e : graph.edges) {
    if (e.loop()) continue;
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }

  std::vector<std::int64_t> distance(graph.n, -1);
  std::queue<Vertex> frontier;
  distance[source] = 0;
  frontier.push(source);
  std::int64_t total = 0;
  std::int64_t reached = 0;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adjacency[v]) {
      if (distance[w] >= 0) continue;
      distance[w] = distance[v] + 1;
      total += distance[w];
      ++reached;
      frontier.push(w);
    }
  }
  return reached == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(reached);
}

}  // namespace eac
