#include "monoham/exhaustive.hpp"

#include <bit>
#include <string>

namespace monoham {

namespace {

void require_cap(const ColoredGraph& g) {
  if (g.num_vertices() > kExactPathCap)
    throw CapacityError("exact path search limited to n <= " + std::to_string(kExactPathCap));
}

// ends[mask] = set of v such that some path with vertex set `mask` starts at
// `start` and ends at v.
std::vector<std::uint32_t> paths_from(const std::vector<std::uint32_t>& nb, Vertex start) {
  const std::size_t n = nb.size();
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1u << start] = 1u << start;
  for (std::uint32_t mask = 1; mask < ends.size(); ++mask) {
    std::uint32_t e = ends[mask];
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = nb[v] & ~mask;
      while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  return ends;
}

}  // namespace

std::vector<std::uint32_t> neighbor_masks(const ColoredGraph& g) {
  if (g.num_vertices() > 32) throw CapacityError("neighbour masks limited to n <= 32");
  std::vector<std::uint32_t> nb(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= 1u << e.v;
    nb[e.v] |= 1u << e.u;
  }
  return nb;
}

std::size_t longest_path_vertices_exact(const ColoredGraph& g) {
  require_cap(g);
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  auto nb = neighbor_masks(g);
  // reach[mask] != 0 iff mask spans a path; bit v set iff one ends at v.
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) reach[1u << v] = 1u << v;
  std::size_t best = 1;
  for (std::uint32_t mask = 1; mask < reach.size(); ++mask) {
    std::uint32_t e = reach[mask];
    if (!e) continue;
    best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = nb[v] & ~mask;
      while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        reach[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  return best;
}

std::vector<Vertex> hamilton_cycle_exact(const ColoredGraph& g) {
  require_cap(g);
  const std::size_t n = g.num_vertices();
  if (n < 3) return {};
  auto nb = neighbor_masks(g);
  auto ends = paths_from(nb, 0);
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::uint32_t closing = ends[full] & nb[0];
  if (!closing) return {};
  // Walk back from a closing endpoint.
  std::vector<Vertex> cycle;
  std::uint32_t mask = full;
  int v = std::countr_zero(closing);
  while (true) {
    cycle.push_back(static_cast<Vertex>(v));
    if (mask == 1u) break;
    std::uint32_t prev_mask = mask & ~(1u << v);
    std::uint32_t cand = ends[prev_mask] & nb[v];
    v = std::countr_zero(cand);
    mask = prev_mask;
  }
  return {cycle.rbegin(), cycle.rend()};
}

bool is_hamiltonian_exact(const ColoredGraph& g) { return !hamilton_cycle_exact(g).empty(); }

}  // namespace monoham
