#pragma once

// Brute-force reference implementations for cross-checking the library at
// small n. They read only the graph accessors and share no code with the
// algorithms they check.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "monoham/graph.hpp"

namespace monoham::oracle {

/// Matching number by recursion over vertex subsets (n <= 20).
std::size_t matching_number(const ColoredGraph& g);

struct TutteBerge {
  /// max over U of odd(G-U) - |U|.
  std::int64_t deficiency = 0;
  /// Lexicographically first maximiser (by bitmask order).
  std::vector<Vertex> u;
  std::size_t nu = 0;
};

/// Enumerates every U subset of V (n <= 20).
TutteBerge tutte_berge(const ColoredGraph& g);

/// Calls f on every Hamilton cycle once, as a vertex order starting at 0
/// with the second vertex smaller than the last (n <= 12).
void for_each_hamilton_cycle(const ColoredGraph& g, const std::function<void(std::span<const Vertex>)>& f);

bool is_hamiltonian(const ColoredGraph& g);

/// Vertex count of a longest path, by depth-first enumeration of simple
/// paths (n <= 12).
std::size_t longest_path_vertices(const ColoredGraph& g);

/// Ends y of paths that start at `start` and visit exactly `vertices`,
/// sorted (|vertices| <= 10).
std::vector<Vertex> path_ends_over(const ColoredGraph& g, std::span<const Vertex> vertices, Vertex start);

/// Ends reachable from `path` by sequences of rotations with path.front()
/// fixed, by breadth-first search over explicit paths; sorted.
std::vector<Vertex> rotation_ends(const ColoredGraph& g, std::span<const Vertex> path);

/// Non-edges whose addition creates a Hamilton cycle or lengthens a longest
/// path, in lexicographic order (n <= 12).
std::vector<Edge> boosters(const ColoredGraph& g);

/// |N(U)| >= alpha |U| for every nonempty U of size <= k (n <= 20).
bool is_expander(const ColoredGraph& g, double k, double alpha);

bool is_connected(const ColoredGraph& g);

/// An edge joins every k-subset of x to every k-subset of y.
bool bipartite_subset_condition(const ColoredGraph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                                std::size_t k);

/// (gamma,p)-pseudorandomness by enumerating every pair of disjoint sets of
/// size >= ceil(gamma n) (n <= 12).
bool pseudorandom(const ColoredGraph& g, double gamma, double p);

/// Every U with |U| >= min_size has | |E(U)| / C(|U|,2) - p | <= gamma p
/// (n <= 20).
bool set_densities_within(const ColoredGraph& g, std::size_t min_size, double gamma, double p);

/// Number of connected components.
std::size_t components(const ColoredGraph& g);

}  // namespace monoham::oracle
