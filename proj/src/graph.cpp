#include "monoham/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace monoham {

namespace {

// Uniform double in [0,1) from the top 53 bits; stable across standard libraries.
double unit_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ColoredGraph::ColoredGraph(std::size_t n, std::vector<Edge> edges, Color num_colors)
    : n_(n), r_(num_colors), edges_(std::move(edges)) {
  if (n_ >= static_cast<std::size_t>(kNoVertex)) throw InputError("vertex count too large");
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_)
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (r_ == 0 && e.color != kUncolored)
      throw InputError("coloured edge in an uncoloured graph");
    if (r_ > 0 && (e.color == kUncolored || e.color > r_))
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has colour " + std::to_string(e.color) + " outside 1.." +
                       std::to_string(r_));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw InputError("duplicate edge {" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + "}");
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adj_.resize(2 * edges_.size());
  adj_edge_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u,v), so each vertex first receives its smaller
  // neighbours (as v) in increasing order and then its larger ones (as u).
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = static_cast<std::uint32_t>(i);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = static_cast<std::uint32_t>(i);
  }
}

std::size_t ColoredGraph::edge_index(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return npos;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return npos;
  return adj_edge_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

Color ColoredGraph::color(Vertex u, Vertex v) const {
  std::size_t idx = edge_index(u, v);
  if (idx == npos)
    throw InputError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  return edges_[idx].color;
}

std::size_t ColoredGraph::min_degree() const {
  if (n_ == 0) return 0;
  std::size_t best = degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t ColoredGraph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

ColoredGraph ColoredGraph::with_colors(std::span<const Color> colors, Color num_colors) const {
  if (colors.size() != edges_.size()) throw InputError("colour vector size mismatch");
  std::vector<Edge> out = edges_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].color = colors[i];
  return ColoredGraph(n_, std::move(out), num_colors);
}

ColoredGraph ColoredGraph::uncolored() const {
  std::vector<Edge> out = edges_;
  for (Edge& e : out) e.color = kUncolored;
  return ColoredGraph(n_, std::move(out), 0);
}

ColoredGraph ColoredGraph::color_class(Color c) const {
  if (r_ == 0 || c == kUncolored || c > r_)
    throw InputError("colour " + std::to_string(c) + " out of range");
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (e.color == c) out.push_back(e);
  return ColoredGraph(n_, std::move(out), r_);
}

std::vector<std::vector<Vertex>> ColoredGraph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> out(n_);
  for (Vertex v = 0; v < n_; ++v) {
    auto nb = neighbors(v);
    out[v].assign(nb.begin(), nb.end());
  }
  return out;
}

std::vector<Vertex> Subgraph::lift(std::span<const Vertex> child_vertices) const {
  std::vector<Vertex> out;
  out.reserve(child_vertices.size());
  for (Vertex c : child_vertices) out.push_back(to_parent.at(c));
  return out;
}

Subgraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> subset) {
  const std::size_t n = g.num_vertices();
  Subgraph sub;
  sub.to_child.assign(n, kNoVertex);
  sub.to_parent.assign(subset.begin(), subset.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    Vertex v = sub.to_parent[i];
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (i > 0 && sub.to_parent[i - 1] == v)
      throw InputError("vertex " + std::to_string(v) + " repeated in subset");
    sub.to_child[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex cu = 0; cu < sub.to_parent.size(); ++cu) {
    Vertex u = sub.to_parent[cu];
    auto nb = g.neighbors(u);
    auto ids = g.incident_edges(u);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      Vertex cv = sub.to_child[nb[j]];
      if (cv != kNoVertex && cu < cv) edges.push_back({cu, cv, g.edge(ids[j]).color});
    }
  }
  sub.graph = ColoredGraph(sub.to_parent.size(), std::move(edges), g.num_colors());
  return sub;
}

ColoredGraph gen_gnp(const GnpParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw InputError("p must lie in [0,1]");
  const std::size_t n = params.n;
  std::vector<Edge> edges;
  if (n < 2 || params.p == 0.0) return ColoredGraph(n, std::move(edges));
  if (params.p == 1.0) return complete_graph(n);

  Rng rng(params.seed);
  const double mean = params.p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  edges.reserve(static_cast<std::size_t>(mean + 6.0 * std::sqrt(mean + 1.0)));
  // Geometric skipping over the pair sequence (1,0),(2,0),(2,1),(3,0),...
  const double log_q = std::log1p(-params.p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    double u = unit_real(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-u) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v), kUncolored});
  }
  return ColoredGraph(n, std::move(edges));
}

ColoredGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, kUncolored});
  return ColoredGraph(n, std::move(edges));
}

double hamiltonicity_threshold(std::size_t n, double slack) {
  if (n < 3) return 1.0;
  const double ln = std::log(static_cast<double>(n));
  return std::clamp((ln + std::log(ln) + slack) / static_cast<double>(n), 0.0, 1.0);
}

double matching_threshold(std::size_t n, double slack) {
  if (n < 2) return 1.0;
  const double ln = std::log(static_cast<double>(n));
  return std::clamp((ln + slack) / static_cast<double>(n), 0.0, 1.0);
}

}  // namespace monoham
