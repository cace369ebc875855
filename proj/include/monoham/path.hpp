#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monoham/graph.hpp"

namespace monoham {

/// Simple path with colour bookkeeping. Edge position i joins vertices[i] and
/// vertices[i+1].
struct PathSeq {
  std::vector<Vertex> vertices;
  std::optional<Color> majority_color;
  std::vector<std::size_t> off_color_edges;

  std::size_t num_vertices() const { return vertices.size(); }
  /// Number of edges.
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

/// Distinct in-range vertices with consecutive pairs adjacent in g.
bool is_simple_path(const ColoredGraph& g, std::span<const Vertex> seq);
/// Simple path through every vertex of g.
bool is_hamilton_path(const ColoredGraph& g, std::span<const Vertex> seq);
/// Every vertex exactly once, consecutive adjacency and the closing edge.
bool is_hamilton_cycle(const ColoredGraph& g, std::span<const Vertex> cycle);

/// Edge count per colour along seq (index c holds colour c, index 0 the
/// uncoloured edges). `closed` adds the edge back to the start.
std::vector<std::size_t> color_counts(const ColoredGraph& g, std::span<const Vertex> seq, bool closed);
/// Largest single-colour count along seq; ties go to the smaller colour.
std::pair<Color, std::size_t> best_color(const ColoredGraph& g, std::span<const Vertex> seq,
                                         bool closed);

/// Fills majority_color (the most frequent colour, or `majority` when given)
/// and off_color_edges from g.
void annotate_colors(const ColoredGraph& g, PathSeq& path, std::optional<Color> majority = {});
PathSeq make_path(const ColoredGraph& g, std::vector<Vertex> seq, std::optional<Color> majority = {});

/// is_simple_path plus agreement of the colour annotation with g.
bool path_consistent(const ColoredGraph& g, const PathSeq& path);

/// Edges of seq as graph edges (colours from g).
std::vector<Edge> path_edges(const ColoredGraph& g, std::span<const Vertex> seq, bool closed);

}  // namespace monoham
