#ifndef GZETA_GRAPH_IO_HPP
#define GZETA_GRAPH_IO_HPP

// JSON graph loading. Format:
//   { "vertices": N, "edges": [[u, v], ...] }
// Vertices are 0-based; multi-edges and self-loops are allowed; the graph
// must be connected. The root defaults to vertex 0.

#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gzeta/graph.hpp"

namespace gzeta {

inline GraphModel load_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph json: parse error: ") +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw std::invalid_argument(
        "graph json: need an object with \"vertices\" and \"edges\"");
  if (!doc["vertices"].is_number_integer())
    throw std::invalid_argument("graph json: \"vertices\" must be an integer");
  const int n = doc["vertices"].get<int>();
  if (n < 1) throw std::invalid_argument("graph json: need vertices >= 1");
  if (!doc["edges"].is_array())
    throw std::invalid_argument("graph json: \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument(
          "graph json: each edge must be a pair of integers");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph json: edge endpoint out of range");
    edges.emplace_back(u, v);
  }
  return GraphModel::finite(HalfEdgeGraph::from_edges(n, edges), 0, false);
}

inline GraphModel load_graph_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("graph json: cannot open " + path);
  return load_graph_json(in);
}

}  // namespace gzeta

#endif  // GZETA_GRAPH_IO_HPP
