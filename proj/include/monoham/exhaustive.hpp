#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monoham/graph.hpp"

namespace monoham {

/// Size cap of the bitmask dynamic programmes below.
inline constexpr std::size_t kExactPathCap = 20;

/// Vertex count of a longest path (0 for the empty graph). n <= 20.
std::size_t longest_path_vertices_exact(const ColoredGraph& g);

/// Whether g has a Hamilton cycle (graphs with fewer than 3 vertices have
/// none). n <= 20.
bool is_hamiltonian_exact(const ColoredGraph& g);

/// A Hamilton cycle found by the same programme, empty if none.
std::vector<Vertex> hamilton_cycle_exact(const ColoredGraph& g);

/// Neighbour bitmasks, for n <= 32.
std::vector<std::uint32_t> neighbor_masks(const ColoredGraph& g);

}  // namespace monoham
