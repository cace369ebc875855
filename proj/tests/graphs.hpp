#pragma once

#include <vector>

#include "monoham/graph.hpp"

namespace testing_graphs {

using monoham::ColoredGraph;
using monoham::Edge;
using monoham::Vertex;

inline ColoredGraph from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, monoham::kUncolored});
  return ColoredGraph(n, std::move(edges));
}

inline ColoredGraph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return from_pairs(n, p);
}

inline ColoredGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex i = 0; i < n; ++i) p.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return from_pairs(n, p);
}

inline ColoredGraph star_graph(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex i = 1; i <= leaves; ++i) p.emplace_back(0, i);
  return from_pairs(leaves + 1, p);
}

inline ColoredGraph petersen() {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex i = 0; i < 5; ++i) {
    p.emplace_back(i, (i + 1) % 5);
    p.emplace_back(i, i + 5);
    p.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return from_pairs(10, p);
}

/// Two disjoint cliques of the given sizes.
inline ColoredGraph two_cliques(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = u + 1; v < a; ++v) p.emplace_back(u, v);
  for (Vertex u = 0; u < b; ++u)
    for (Vertex v = u + 1; v < b; ++v) p.emplace_back(static_cast<Vertex>(a + u), static_cast<Vertex>(a + v));
  return from_pairs(a + b, p);
}

inline ColoredGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) p.emplace_back(u, static_cast<Vertex>(a + v));
  return from_pairs(a + b, p);
}

}  // namespace testing_graphs
