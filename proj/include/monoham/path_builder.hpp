#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monoham/graph.hpp"
#include "monoham/matching.hpp"
#include "monoham/path.hpp"

namespace monoham {

/// Depth-first search on the bipartite subgraph between X and Y (only edges
/// of `color` when given), tracking unexplored / active / finished vertices
/// and restarting from unexplored vertices until none remain. Returns the
/// longest active stack seen. If every pair of k-subsets X' of X and Y' of Y
/// spans an edge, the path has at least 2|X| - 4k edges. Throws InputError
/// when |X| != |Y| or the sides overlap.
PathSeq dfs_long_path(const ColoredGraph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                      std::size_t k, std::optional<Color> color = {});

/// Graph on t parts of a random equipartition. Pair (i,j) is an edge when
/// its densest colour has density at least p_hat / (2r), p_hat = |E| / C(n,2);
/// the edge takes that colour (ties to the smaller colour).
struct ReducedGraph {
  std::size_t t = 0;
  Color r = 0;
  std::vector<std::vector<Vertex>> parts;
  double p_hat = 0.0;
  double threshold = 0.0;
  /// counts[(i*t + j)*r + (c-1)]: colour-c edges between parts i and j.
  std::vector<std::size_t> counts;
  ColoredGraph graph;

  std::size_t count(std::size_t i, std::size_t j, Color c) const { return counts[(i * t + j) * r + (c - 1)]; }
  double density(std::size_t i, std::size_t j, Color c) const;
  double total_density(std::size_t i, std::size_t j) const;
};

/// Throws InputError if cg is uncoloured, t == 0 or t > n.
ReducedGraph build_reduced(const ColoredGraph& cg, std::size_t t, std::uint64_t seed);

struct StitchResult {
  PathSeq path;
  bool ok = true;
  /// First consecutive pair without a connector.
  std::optional<std::pair<std::size_t, std::size_t>> failed_pair;
  std::string failure;
  /// Number of connector edges used.
  std::size_t connectors = 0;
};

/// Joins paths in order through an edge from the last `seg` vertices of the
/// current path to the first `seg` vertices of the next one (the next path is
/// also tried reversed; scan order: closest to the joint first, ties by the
/// position in the next path). Stops at the first pair without a connector
/// and returns what was joined so far. Throws InputError if seg == 0 or the
/// paths share vertices.
StitchResult stitch_paths(const ColoredGraph& g, const std::vector<PathSeq>& paths, std::size_t seg);

struct PathBuilderConfig {
  std::size_t t = 20;
  /// Expansion scale handed to dfs_long_path; 0 selects ceil(eps * part size).
  std::size_t k_dfs = 0;
  /// 0 selects ceil(n / (4t)).
  std::size_t seg = 0;
  /// Grow the stitched path by rotation-extension inside its colour class.
  bool extend = true;
  /// Vertex cap for the result; 0 means none.
  std::size_t max_vertices = 0;
  std::uint64_t seed = 0;
};

struct AlmostMonoResult {
  PathSeq path;
  Color color = kUncolored;
  ReducedGraph reduced;
  Matching reduced_matching;
  /// One DFS path per matched reduced edge, in matching order.
  std::vector<PathSeq> pieces;
  /// Pieces dropped because no connector reached them.
  std::vector<std::string> stitch_failures;
  std::size_t stitched_vertices = 0;
};

/// Reduced graph, largest monochromatic matching in it, one DFS path per
/// matched pair inside that colour, stitching, then optional growth. All
/// edges but at most |M| - 1 connectors carry the chosen colour, and growth
/// never adds off-colour edges. Throws InputError for uncoloured input or
/// r < 1.
AlmostMonoResult almost_mono_path(const ColoredGraph& cg, Color r, double eps, const PathBuilderConfig& cfg);

}  // namespace monoham
