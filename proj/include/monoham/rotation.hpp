#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "monoham/graph.hpp"
#include "monoham/transcript.hpp"

namespace monoham {

using AdjacencyLists = std::vector<std::vector<Vertex>>;

/// One rotation: tail u, chord {u, pivot}, new tail = successor of pivot.
/// `parent` is the state it was applied to (state 0 is the input path).
struct RotationStep {
  Vertex tail = 0;
  Vertex pivot = 0;
  Vertex new_tail = 0;
  std::uint32_t parent = 0;
};

/// Rotation closure of a path with one end pinned. State i+1 is obtained from
/// state steps[i].parent by steps[i]; every endpoint in R records the first
/// state that reached it, so a path to it can be rebuilt by replaying steps.
struct RotationState {
  std::vector<Vertex> path;
  Vertex fixed_end = kNoVertex;
  /// R, sorted. Always contains the input path's opposite endpoint.
  std::vector<Vertex> endpoints;
  std::vector<std::uint32_t> endpoint_state;
  std::vector<RotationStep> steps;
  /// False when the state budget cut the search over repeated endpoints.
  bool exact = true;

  bool contains(Vertex y) const;
  /// Rotations leading from `path` to a path ending at y (empty for the
  /// input endpoint). Throws InputError if y is not in R.
  std::vector<RotationStep> moves_to(Vertex y) const;
  std::vector<Vertex> path_to(Vertex y) const;
  /// `PATH` line for the input path followed by the `ROT` lines to y.
  Transcript transcript_to(Vertex y) const;
};

struct ClosureOptions {
  /// Budget on stored states beyond the first state of each endpoint,
  /// measured in path vertices copied. States that reach a new endpoint are
  /// always explored.
  std::size_t work_budget = 1'000'000;
};

/// Closure of `path` under Posa rotations with `fixed_end` pinned. Throws
/// InputError if the path is not a simple path of g or fixed_end is not one
/// of its endpoints.
RotationState rotation_closure(const ColoredGraph& g, std::span<const Vertex> path,
                               Vertex fixed_end, const ClosureOptions& opts = {});

/// N(R) \ R in g.
std::vector<Vertex> external_neighborhood(const ColoredGraph& g, std::span<const Vertex> set);

/// Extends `path` (keeping `fixed_end` as its start) until no endpoint of its
/// rotation closure has a neighbour off the path. The result satisfies the
/// hypothesis of Posa's lemma for the computed closure.
std::vector<Vertex> closure_maximal_path(const ColoredGraph& g, std::vector<Vertex> path,
                                         Vertex fixed_end, const ClosureOptions& opts = {});

enum class EngineGoal {
  /// Close a cycle through every vertex.
  cycle,
  /// Cover every vertex with a path.
  path,
  /// Reach `cap` vertices.
  cap,
};

struct EngineOptions {
  EngineGoal goal = EngineGoal::cycle;
  std::size_t cap = 0;
  std::uint64_t seed = 0;
  /// Second-level searches (rotating the other end from each endpoint of the
  /// first level) per stuck event.
  std::size_t level2_tries = 48;
  /// Host edges that may be added as boosters; 0 means one per vertex.
  std::size_t max_boosters = 0;
  /// Bound on vertex operations spent in rotation searches.
  std::size_t work_budget = 1'500'000'000;
};

struct EngineResult {
  bool success = false;
  /// Set when the result is a cycle (order in `path`, closing edge implied).
  bool closed = false;
  std::vector<Vertex> path;
  std::vector<Edge> boosters;
  std::size_t extensions = 0;
  std::size_t rotations = 0;
  std::size_t opens = 0;
  std::size_t searches = 0;
  bool budget_exhausted = false;
  Transcript transcript;
};

/// Edge set keyed for O(1) lookup; edges the engine avoids cutting.
class EdgeSet {
 public:
  void insert(Vertex a, Vertex b) { set_.insert(key(a, b)); }
  bool contains(Vertex a, Vertex b) const { return !set_.empty() && set_.count(key(a, b)) > 0; }
  bool empty() const { return set_.empty(); }
  std::size_t size() const { return set_.size(); }

 private:
  static std::uint64_t key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  std::unordered_set<std::uint64_t> set_;
};

/// Rotation-extension search on `work` (sorted adjacency lists).
///
/// The path grows at either end towards the unvisited neighbour with the
/// fewest unvisited neighbours. When both ends are stuck, a breadth-first
/// search over rotations with one end pinned looks for an endpoint with an
/// unvisited neighbour, or one adjacent to the pinned end (the path then
/// closes into a cycle and is reopened at a vertex with an unvisited
/// neighbour). A second level repeats the search from every endpoint found
/// with the roles of the ends swapped. If `host` is given, an edge of the
/// host missing from `work` is added as a booster when it immediately yields
/// an extension or a closing edge. Edges in `protect` are cut only when no
/// other move exists.
///
/// The path never shrinks, so a failed run still returns the longest path
/// seen. `initial` may contain edges absent from `work`.
EngineResult rotation_extension(AdjacencyLists work, const AdjacencyLists* host,
                                std::span<const Vertex> initial, const EdgeSet* protect,
                                const EngineOptions& opts);

struct PosaResult {
  bool hamilton_cycle = false;
  /// Cycle order when hamilton_cycle, otherwise the longest path found.
  std::vector<Vertex> vertices;
  Transcript transcript;
};

/// Rotation-extension on g aiming for a Hamilton cycle. Any reported cycle
/// has passed is_hamilton_cycle.
PosaResult posa_longest_path(const ColoredGraph& g, std::uint64_t seed);

}  // namespace monoham
