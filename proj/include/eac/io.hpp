#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "eac/engine.hpp"
#include "eac/multigraph.hpp"

namespace eac {

/// Whitespace-separated positive integers; entry i is the degree of vertex i.
std::vector<int> parse_degrees(std::istream& in);
std::vector<int> read_degree_file(const std::string& path);

/// "# n=<n> m=<m>" then sorted "u v" lines.
void write_edge_list(std::ostream& out, const Multigraph& graph);
std::string edge_list_string(const Multigraph& graph);

/// Reads the edge-list format. Without a header, n is one more than the
/// largest vertex seen.
Multigraph parse_edge_list(std::istream& in);
Multigraph read_edge_list_file(const std::string& path);

nlohmann::json to_json(const RunReport& report);

}  // namespace eac
