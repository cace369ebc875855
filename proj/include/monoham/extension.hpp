#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monoham/graph.hpp"
#include "monoham/hamiltonian.hpp"
#include "monoham/partition.hpp"
#include "monoham/path.hpp"
#include "monoham/transcript.hpp"

namespace monoham {

enum class ExtensionMethod {
  none,
  /// Two Hamilton paths of G[W_1], G[W_2] joined through P.
  split,
  /// Rotation-extension on G started from P, avoiding P's edges.
  rotation_repair,
};

enum class ExtensionFailure { none, no_neighbor_w, no_y_edge, sub_hamiltonicity, repair_failed };

const char* extension_method_name(ExtensionMethod m);
const char* extension_failure_name(ExtensionFailure f);

struct ExtensionOptions {
  /// Split attempts after the first, each with a fresh split of V''.
  std::size_t retries = 3;
  /// 0 selects default_d0(n, plan.eps).
  std::size_t d0 = 0;
  std::uint64_t seed = 0;
  /// Fall back to rotation_repair when every split attempt fails.
  bool allow_repair = true;
  HamiltonOptions ham;
};

struct ExtensionResult {
  bool success = false;
  std::vector<Vertex> cycle;
  ExtensionMethod method = ExtensionMethod::none;
  /// Last failure of the split construction (kept when the repair succeeds).
  ExtensionFailure failure = ExtensionFailure::none;
  std::string detail;
  std::size_t attempts = 0;
  Transcript transcript;
};

/// Extends path P (inside plan.v_prime, at most 2n/3 vertices) to a Hamilton
/// cycle of g. V' \ V(P) is split evenly into V''_1, V''_2; W_i = V''_i u U_i;
/// w_i is a neighbour in W_i of the i-th end of P, Y_i the endpoints of
/// Hamilton paths of G[W_i] from w_i, and an edge y_1 y_2 between Y_1 and Y_2
/// closes the cycle a_1 w_1 .. y_1 y_2 .. w_2 a_2 .. a_1. Paths of at most one
/// vertex reduce to hamilton_in_subset on V. Every returned cycle is
/// validated. Throws PreconditionError when P leaves V' or is too long, and
/// InputError when P is not a path of g.
ExtensionResult extend_to_hamilton(const ColoredGraph& g, const PartitionPlan& plan, const PathSeq& p,
                                   const ExtensionOptions& opts = {});

}  // namespace monoham
