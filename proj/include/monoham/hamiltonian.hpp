#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoham/graph.hpp"
#include "monoham/pseudorandom.hpp"
#include "monoham/rotation.hpp"
#include "monoham/transcript.hpp"

namespace monoham {

/// Booster decisions are exact (bitmask longest path) up to this size.
inline constexpr std::size_t kBoosterExactCap = 12;

struct BoosterReport {
  std::vector<Edge> boosters;
  /// False above kBoosterExactCap: boosters were certified by a witnessed
  /// improvement of the rotation-extension search, and some may be missed.
  bool exact = true;
  /// Set when the input turned out to be Hamiltonian (exact mode only).
  bool precondition_violated = false;
  std::size_t candidates = 0;
  /// Longest path (vertices) of the input, exact or heuristic.
  std::size_t longest_path = 0;
};

/// Non-edges of h (or the members of `pool` that are non-edges) whose
/// addition creates a Hamilton cycle or a longer longest path.
BoosterReport boosters_of(const ColoredGraph& h, const std::vector<Edge>* pool = nullptr,
                          std::uint64_t seed = 0);

/// max(2, ceil(eps ln n)).
std::size_t default_d0(std::size_t n, double eps);

/// Spanning subgraph H of G[W] (child labels, map in the result): every
/// v in W keeps all its G[W]-edges when d(v,W) < d0, else a uniform random
/// d0 of them; H is the union. Throws InputError if d0 < 2.
Subgraph sparse_expander_subgraph(const ColoredGraph& g, std::span<const Vertex> w,
                                  std::size_t d0, std::uint64_t seed);

struct ExpanderOptions {
  std::size_t exact_cap = 18;
  /// Random sets per size in sampled mode.
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

/// (k,alpha)-expansion: |N(U)| >= alpha |U| for all U with |U| <= k.
struct ExpanderReport {
  double k = 0.0;
  double alpha = 0.0;
  CheckMode mode = CheckMode::exact;
  bool holds = true;
  std::vector<Vertex> witness;
  std::size_t witness_neighbors = 0;
  std::size_t sets_examined = 0;
};

/// Exact mode enumerates every U (n <= exact_cap, else CapacityError).
/// Sampled mode tries all singletons, pairs of low-degree vertices within
/// distance 2, sets grown greedily to minimise |N(U)|, Y u N(Y) shapes, and
/// random sets; holds then means no violation was found.
ExpanderReport is_expander(const ColoredGraph& h, double k, double alpha, CheckMode mode,
                           const ExpanderOptions& opts = {});

/// The four sufficient conditions for (h/4,2)-expansion with parameters m,d:
/// minimum degree 2; vertices of degree < d avoid 3- and 4-cycles and lie at
/// distance >= 5 from each other; sets of size <= 5m span <= d|U|/10 edges;
/// an edge joins every two disjoint m-sets. Also requires h >= 4m.
struct ExpanderConditions {
  bool size_ok = false;
  bool min_degree = false;
  bool low_degree_separated = false;
  bool small_sets_sparse = false;
  bool pairs_joined = false;

  bool all() const { return size_ok && min_degree && low_degree_separated && small_sets_sparse && pairs_joined; }
};

/// Exhaustive check, n <= 18.
ExpanderConditions check_expander_conditions(const ColoredGraph& h, std::size_t m, std::size_t d);

/// Vertices within distance `radius` of v, excluding v (BFS).
std::vector<Vertex> ball(const ColoredGraph& g, Vertex v, std::size_t radius);

struct HamiltonOptions {
  /// Attempts with fresh seeds after the first.
  std::size_t retries = 3;
  EngineOptions engine;
  /// Used by hamilton_path_endpoints.
  ClosureOptions closure;
};

struct HamiltonResult {
  bool success = false;
  /// Cycle in parent labels.
  std::vector<Vertex> cycle;
  std::size_t attempts = 0;
  std::size_t boosters_added = 0;
  std::size_t sparse_edges = 0;
  std::string failure;
  /// Moves in parent labels.
  Transcript transcript;
};

/// Hamilton cycle of G[W]: sparse spanning subgraph H, rotation-extension
/// on H, boosters from G[W] \ H added one at a time (at most |W|), retried
/// with fresh seeds. |W| <= 3 is decided directly. Throws InputError when
/// |W| < 2 or W is not a vertex set of g.
HamiltonResult hamilton_in_subset(const ColoredGraph& g, std::span<const Vertex> w, std::size_t d0,
                                  std::uint64_t seed, const HamiltonOptions& opts = {});

struct EndpointResult {
  bool success = false;
  std::string failure;
  Vertex anchor = kNoVertex;
  /// Y in parent labels, sorted.
  std::vector<Vertex> endpoints;
  /// |Y| > |W|/4.
  bool target_met = false;
  bool closure_exact = true;
  HamiltonResult cycle;
  Subgraph sub;
  RotationState state;

  /// Hamilton path of G[W] from the anchor to y, parent labels.
  std::vector<Vertex> path_to(Vertex y) const;
  Transcript transcript_to(Vertex y) const;
};

/// Endpoints y such that G[W] has a Hamilton path from `anchor` to y, found
/// as the rotation closure of a Hamilton path derived from a cycle.
EndpointResult hamilton_path_endpoints(const ColoredGraph& g, std::span<const Vertex> w, Vertex anchor,
                                       std::size_t d0, std::uint64_t seed,
                                       const HamiltonOptions& opts = {});

struct PropertyOptions {
  double eps = 0.1;
  /// Degree below which a vertex counts as low; default ln n / 10.
  std::optional<double> low_degree_threshold;
  std::size_t exact_cap = 18;
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
};

/// Degree bounds, separation of low-degree vertices, and sparsity of small
/// sets, each with a witness on failure.
struct PropertyReport {
  double low_degree_threshold = 0.0;
  bool p1 = false;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  /// Vertex attaining the violated degree bound.
  std::optional<Vertex> p1_witness;

  bool p2 = false;
  /// Closed walk (short cycle) or connecting path.
  std::vector<Vertex> p2_witness;

  bool p3 = false;
  CheckMode p3_mode = CheckMode::exact;
  std::vector<Vertex> p3_witness;
  std::size_t p3_witness_edges = 0;
};

PropertyReport check_properties(const ColoredGraph& g, const PropertyOptions& opts = {});

}  // namespace monoham
