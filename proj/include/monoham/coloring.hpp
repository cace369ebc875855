#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monoham/graph.hpp"

namespace monoham {

/// Parts V_1..V_r of the layered construction. Parts 1..r-1 have
/// floor(n/(r+1)) vertices and V_r takes the rest.
struct LayeredPartition {
  std::vector<std::vector<Vertex>> parts;
  /// layer[v] in 1..r.
  std::vector<Color> layer;
};

/// Seeded uniformly random balanced split. Requires r >= 2 and n >= r+1.
LayeredPartition layered_partition(std::size_t n, Color r, std::uint64_t seed);

/// Colours {u,v} with min(layer(u), layer(v)), so every edge touching V_i
/// inside V_i u ... u V_r gets colour i.
ColoredGraph layered_extremal_coloring(const ColoredGraph& g, Color r, std::uint64_t seed);
ColoredGraph apply_layers(const ColoredGraph& g, const LayeredPartition& layers);

/// Each edge uniform in 1..r, seeded.
ColoredGraph random_coloring(const ColoredGraph& g, Color r, std::uint64_t seed);

/// Largest maximum-matching size over colour classes.
std::size_t max_mono_matching(const ColoredGraph& g);

/// Lexicographic objective minimised by the greedy adversary.
struct AdversaryObjective {
  std::size_t max_nu = 0;
  std::size_t argmax_count = 0;
  std::size_t total_nu = 0;

  friend auto operator<=>(const AdversaryObjective&, const AdversaryObjective&) = default;
};

struct AdversaryResult {
  ColoredGraph graph;
  /// trace[0] is the starting objective, trace[i] the objective after round i.
  std::vector<AdversaryObjective> trace;
  std::size_t accepted_moves = 0;
};

/// Local search from random_coloring(g, r, seed). Each round picks an edge
/// of a maximum matching of a largest colour class and tries moving it to
/// every other colour; a move is kept only when (max nu, #colours attaining
/// it, sum nu) strictly decreases. rounds = 0 returns the random colouring.
AdversaryResult greedy_min_adversary(const ColoredGraph& g, Color r, std::uint64_t seed,
                                     std::size_t rounds);

}  // namespace monoham
