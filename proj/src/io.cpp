#include "eac/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <regex>
#include <sstream>

#include "eac/error.hpp"

namespace eac {

std::vector<int> parse_degrees(std::istream& in) {
  std::vector<int> degrees;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer in degree list: " + token);
    }
    if (used != token.size()) throw InvalidInput("not an integer in degree list: " + token);
    if (value < 1 || value > std::numeric_limits<int>::max()) throw InvalidInput("degrees must be positive: " + token);
    degrees.push_back(static_cast<int>(value));
  }
  if (degrees.empty()) throw InvalidInput("degree list is empty");
  return degrees;
}

std::vector<int> read_degree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open degree file " + path);
  return parse_degrees(in);
}

void write_edge_list(std::ostream& out, const Multigraph& graph) {
  out << "# n=" << graph.n << " m=" << graph.m() << '\n';
  for (const Edge& e : graph.sorted_edges()) out << e.u << ' ' << e.v << '\n';
}

std::string edge_list_string(const Multigraph& graph) {
  std::ostringstream out;
  write_edge_list(out, graph);
  return out.str();
}

Multigraph parse_edge_list(std::istream& in) {
  static const std::regex header(R"(#\s*n=(\d+)\s+m=(\d+)\s*)");
  Multigraph graph;
  bool have_header = false;
  std::size_t declared_m = 0;
  std::size_t largest = 0;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') {
      std::smatch match;
      if (!have_header && std::regex_match(line, match, header)) {
        graph.n = std::stoull(match[1].str());
        declared_m = std::stoull(match[2].str());
        have_header = true;
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 || u > std::numeric_limits<Vertex>::max() ||
        v > std::numeric_limits<Vertex>::max())
      throw InvalidInput("bad edge on line " + std::to_string(number));
    graph.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    largest = std::max<std::size_t>(largest, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (have_header) {
    if (largest > graph.n) throw InvalidInput("edge endpoint exceeds declared n");
    if (declared_m != graph.m()) throw InvalidInput("edge count does not match declared m");
  } else {
    graph.n = largest;
  }
  return graph;
}

Multigraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open edge list " + path);
  return parse_edge_list(in);
}

nlohmann::json to_json(const RunReport& report) {
  return {{"seed", report.seed},
          {"tau", report.tau},
          {"total_steps", report.total_steps},
          {"accepted", report.accepted},
          {"rejected", report.rejected},
          {"initial_badness", report.initial_badness},
          {"wall_time_ms", report.wall_time_ms}};
}

}  // namespace eac
