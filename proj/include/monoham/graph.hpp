#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "monoham/types.hpp"

namespace monoham {

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = kUncolored;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on vertices 0..n-1 with an optional edge colouring
/// in 1..r. When r > 0 every edge carries a colour; when r == 0 none does.
///
/// Adjacency is stored in CSR form with sorted neighbour lists, so the graph
/// can be shared freely between threads once built.
class ColoredGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ColoredGraph() = default;

  /// Normalises every edge to u < v and sorts them. Throws InputError on
  /// self-loops, parallel edges, out-of-range endpoints, colours above
  /// `num_colors`, or an uncoloured edge in a coloured graph.
  ColoredGraph(std::size_t n, std::vector<Edge> edges, Color num_colors = 0);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  Color num_colors() const { return r_; }
  bool is_colored() const { return r_ > 0; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Edge indices aligned with neighbors(v).
  std::span<const std::uint32_t> incident_edges(Vertex v) const {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) != npos; }
  std::size_t edge_index(Vertex u, Vertex v) const;
  /// Colour of edge {u,v}; throws InputError if it is not an edge.
  Color color(Vertex u, Vertex v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Same edge set, new colouring. `colors` is indexed like edges().
  ColoredGraph with_colors(std::span<const Color> colors, Color num_colors) const;
  /// Same edge set with all colours dropped.
  ColoredGraph uncolored() const;
  /// Spanning subgraph holding only the edges of colour `c`.
  ColoredGraph color_class(Color c) const;

  std::vector<std::vector<Vertex>> adjacency_lists() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  Color r_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::uint32_t> adj_edge_;
};

/// Result of restricting a graph to a vertex subset. Child vertex i is parent
/// vertex to_parent[i]; to_child maps parent vertices back (kNoVertex outside).
struct Subgraph {
  ColoredGraph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> to_child;

  Vertex parent(Vertex child) const { return to_parent[child]; }
  Vertex child(Vertex parent) const { return to_child[parent]; }
  std::vector<Vertex> lift(std::span<const Vertex> child_vertices) const;
};

/// G[S]. Child labels follow the sorted order of S, so S = V(G) yields the
/// identity map. Throws InputError on out-of-range or repeated vertices.
Subgraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> subset);

struct GnpParams {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Binomial random graph G(n,p), deterministic per seed.
ColoredGraph gen_gnp(const GnpParams& params);

ColoredGraph complete_graph(std::size_t n);

/// (ln n + ln ln n + slack) / n clamped to [0,1]: the Hamiltonicity threshold
/// with a concrete additive slack.
double hamiltonicity_threshold(std::size_t n, double slack);
/// (ln n + slack) / n clamped to [0,1]: the perfect-matching threshold.
double matching_threshold(std::size_t n, double slack);

/// Text format: header `n r`, then one `u v c` line per edge (c = 0 means
/// uncoloured). Throws InputError on malformed input, duplicates, self-loops.
ColoredGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const ColoredGraph& g);
/// Writes edges in the `u v c` edge-line syntax, colours looked up in g.
void write_edge_lines(std::ostream& out, const ColoredGraph& g,
                      std::span<const Edge> edges);

}  // namespace monoham
