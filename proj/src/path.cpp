#include "monoham/path.hpp"

#include <algorithm>

namespace monoham {

bool is_simple_path(const ColoredGraph& g, std::span<const Vertex> seq) {
  std::vector<char> seen(g.num_vertices(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= g.num_vertices() || seen[seq[i]]) return false;
    seen[seq[i]] = 1;
    if (i > 0 && !g.has_edge(seq[i - 1], seq[i])) return false;
  }
  return true;
}

bool is_hamilton_path(const ColoredGraph& g, std::span<const Vertex> seq) {
  return seq.size() == g.num_vertices() && is_simple_path(g, seq);
}

bool is_hamilton_cycle(const ColoredGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3 || !is_hamilton_path(g, cycle)) return false;
  return g.has_edge(cycle.back(), cycle.front());
}

std::vector<std::size_t> color_counts(const ColoredGraph& g, std::span<const Vertex> seq, bool closed) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(g.num_colors()) + 1, 0);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) ++counts[g.color(seq[i], seq[i + 1])];
  if (closed && seq.size() >= 3) ++counts[g.color(seq.back(), seq.front())];
  return counts;
}

std::pair<Color, std::size_t> best_color(const ColoredGraph& g, std::span<const Vertex> seq,
                                         bool closed) {
  auto counts = color_counts(g, seq, closed);
  Color best = kUncolored;
  std::size_t count = 0;
  for (Color c = 1; c < counts.size(); ++c) {
    if (counts[c] > count) {
      best = c;
      count = counts[c];
    }
  }
  return {best, count};
}

void annotate_colors(const ColoredGraph& g, PathSeq& path, std::optional<Color> majority) {
  path.off_color_edges.clear();
  if (!g.is_colored()) {
    path.majority_color.reset();
    return;
  }
  if (!majority) {
    auto [c, count] = best_color(g, path.vertices, false);
    if (count == 0) {
      path.majority_color.reset();
      return;
    }
    majority = c;
  }
  path.majority_color = majority;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
    if (g.color(path.vertices[i], path.vertices[i + 1]) != *majority) path.off_color_edges.push_back(i);
}

PathSeq make_path(const ColoredGraph& g, std::vector<Vertex> seq, std::optional<Color> majority) {
  PathSeq p;
  p.vertices = std::move(seq);
  annotate_colors(g, p, majority);
  return p;
}

bool path_consistent(const ColoredGraph& g, const PathSeq& path) {
  if (!is_simple_path(g, path.vertices)) return false;
  PathSeq copy = path;
  annotate_colors(g, copy, path.majority_color);
  return copy.off_color_edges == path.off_color_edges;
}

std::vector<Edge> path_edges(const ColoredGraph& g, std::span<const Vertex> seq, bool closed) {
  std::vector<Edge> out;
  auto add = [&](Vertex a, Vertex b) {
    out.push_back({std::min(a, b), std::max(a, b), g.color(a, b)});
  };
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) add(seq[i], seq[i + 1]);
  if (closed && seq.size() >= 3) add(seq.back(), seq.front());
  return out;
}

}  // namespace monoham
