#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monoham/graph.hpp"

namespace monoham {

struct PartitionOptions {
  /// Degree below which a vertex is low; default ln n / 10.
  std::optional<double> low_degree_threshold;
  /// Blob resampling steps per restart.
  std::size_t blob_resamples = 200;
  std::size_t restarts = 10;
};

/// V = V* u V' with V* = U1 u U2. Low-degree vertices sit in U1 with their
/// whole neighbourhood; every other vertex should see at least d_guarantee
/// neighbours in each of U1 and U2.
struct PartitionPlan {
  double eps = 0.0;
  /// 1 / (ceil(1/eps) + 1).
  double eps_prime = 0.0;
  std::size_t blob_size = 0;
  std::vector<Vertex> v_star;
  std::vector<Vertex> v_prime;
  std::vector<Vertex> u1;
  std::vector<Vertex> u2;
  /// X and X u N(X).
  std::vector<Vertex> low_degree;
  std::vector<Vertex> low_closure;
  /// eps ln n / 100.
  double d_guarantee = 0.0;
  double low_degree_threshold = 0.0;
  /// Every degree condition verified.
  bool certified = false;
  /// Vertices failing the degree floor in the returned plan.
  std::vector<Vertex> unsatisfied;
  std::vector<Vertex> isolated;
  std::size_t resamples_used = 0;
  std::size_t restarts_used = 0;
};

/// Random blob construction with per-vertex certificate checks. Blobs of size
/// ceil(1/eps') each contribute an ordered pair of distinct vertices, one to
/// U1 and one to U2; blobs near a vertex below the degree floor are resampled,
/// and the whole draw restarts when the resampling budget runs out. Returns
/// the best plan seen, certified or not. Throws InputError unless
/// 0 < eps < 1/2.
PartitionPlan prepare_partition(const ColoredGraph& g, double eps, std::uint64_t seed,
                                const PartitionOptions& opts = {});

struct PlanCheck {
  bool degree_floor = false;
  bool low_closure = false;
  /// |V*| <= 2 eps n.
  bool size_bound = false;
  /// U1, U2 disjoint, V* = U1 u U2, V' its complement.
  bool disjoint_cover = false;
  std::vector<Vertex> floor_violations;
  std::vector<Vertex> closure_violations;

  bool ok() const { return degree_floor && low_closure && size_bound && disjoint_cover; }
};

/// Recomputes every invariant of the plan from g.
PlanCheck verify_plan(const ColoredGraph& g, const PartitionPlan& plan);

}  // namespace monoham
