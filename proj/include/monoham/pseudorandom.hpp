#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "monoham/graph.hpp"

namespace monoham {

enum class CheckMode { exact, sampled };

struct PseudorandomOptions {
  /// Largest n accepted in exact mode.
  std::size_t exact_cap = 18;
  /// Random pairs drawn in sampled mode.
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

/// Outcome of a (gamma,p)-pseudorandomness check. In sampled mode holds=true
/// only means that no violating pair was drawn.
struct PseudorandomVerdict {
  double gamma = 0.0;
  double p = 0.0;
  CheckMode mode = CheckMode::exact;
  bool holds = true;
  /// Violating pair (empty when holds).
  std::vector<Vertex> witness_u;
  std::vector<Vertex> witness_w;
  double witness_density = 0.0;
  std::size_t pairs_examined = 0;
};

/// |E(U,W)| / (|U||W|) for disjoint U, W.
double pair_density(const ColoredGraph& g, std::span<const Vertex> u, std::span<const Vertex> w);

/// Checks |d(U,W) - p| <= gamma p over disjoint U, W of size >= ceil(gamma n).
/// Exact mode enumerates every U and, for each size of W, the extreme
/// choices of W (the vertices with fewest and most neighbours in U), which
/// decides the predicate without enumerating W. Throws CapacityError above
/// the exact cap and InputError on gamma or p outside (0,1].
PseudorandomVerdict check_pseudorandom(const ColoredGraph& g, double gamma, double p,
                                       CheckMode mode, const PseudorandomOptions& opts = {});

}  // namespace monoham
