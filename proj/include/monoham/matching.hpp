#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monoham/graph.hpp"

namespace monoham {

/// Pairwise vertex-disjoint edges, optionally tagged with the colour all of
/// them share. Edges are kept sorted with u < v.
struct Matching {
  std::vector<Edge> edges;
  std::optional<Color> color;

  std::size_t size() const { return edges.size(); }
  bool covers(Vertex v) const;
};

/// True iff `m` is a matching of `g` (disjoint edges, all present, colour
/// tag consistent). Colours stored in m.edges are ignored; g is authoritative.
bool is_matching(const ColoredGraph& g, const Matching& m);

/// Mate array (kNoVertex for exposed vertices) to matching, colours from g.
Matching matching_from_mates(const ColoredGraph& g, std::span<const Vertex> mate);
std::vector<Vertex> mates_of(const Matching& m, std::size_t n);

/// Maximum-cardinality matching via Edmonds' blossom algorithm. With
/// `restrict_color` the search runs on that colour class and the result is
/// tagged with it. The result is deterministic: greedy start in edge order,
/// then augmentation from exposed vertices in increasing order.
Matching max_matching(const ColoredGraph& g, std::optional<Color> restrict_color = {});

/// Same as max_matching, but starts from `initial` (which must be a matching
/// of the searched graph) and only augments it.
Matching augment_matching(const ColoredGraph& g, const Matching& initial,
                          std::optional<Color> restrict_color = {});

/// Exhaustive branch-and-bound over all matchings; returns the
/// lexicographically smallest maximum matching. n <= 14.
Matching max_matching_oracle(const ColoredGraph& g);
inline constexpr std::size_t kMatchingOracleCap = 14;

/// Gallai-Edmonds decomposition: D holds vertices missed by some maximum
/// matching, A = N(D) \ D, C the rest.
struct GallaiEdmonds {
  std::vector<Vertex> d;
  std::vector<Vertex> a;
  std::vector<Vertex> c;
  Matching matching;
};
GallaiEdmonds gallai_edmonds(const ColoredGraph& g);

/// Number of odd components of G - removed.
std::size_t odd_components_without(const ColoredGraph& g, std::span<const Vertex> removed);
/// odd(G - U) - |U|.
std::int64_t tutte_berge_deficiency(const ColoredGraph& g, std::span<const Vertex> u);

struct TutteBergeCertificate {
  std::vector<Vertex> u;
  std::int64_t deficiency = 0;
  std::size_t nu = 0;
};

/// Certificate with U = A from the Gallai-Edmonds decomposition, which
/// maximises odd(G-U) - |U|; nu = (n - deficiency) / 2.
TutteBergeCertificate tutte_berge_certificate(const ColoredGraph& g);
/// Recomputes the deficiency from g and cert.u and checks nu against it.
bool certificate_consistent(const ColoredGraph& g, const TutteBergeCertificate& cert);

/// One maximum matching per colour class, index i holding colour i+1.
std::vector<Matching> mono_matchings(const ColoredGraph& g);

struct RamseyInstance {
  std::vector<std::size_t> k;
  double delta = 0.0;
};

enum class RamseyOutcome { witness, counterexample, hypothesis_unmet };

struct RamseyResult {
  RamseyOutcome outcome = RamseyOutcome::hypothesis_unmet;
  /// Whether some colour reached its target, independent of the hypothesis.
  bool found = false;
  /// Colour of the witness (valid when found).
  Color color = kUncolored;
  /// A matching of size exactly k_color in that colour.
  Matching matching;
  /// Maximum matching size of every colour class.
  std::vector<std::size_t> nu_per_color;
};

/// Checks the instance's hypothesis: r = k.size() colours, every k_i >= 1,
/// 0 <= delta <= 1/(2(r+1)), at least (1-delta) C(n,2) edges, and
/// (1-(r+1)delta) n >= sum(k_i - 1) + max k_i + 1.
bool ramsey_hypothesis_holds(const ColoredGraph& g, const RamseyInstance& inst);

/// Searches every colour class for a matching of size k_i. An unmet
/// hypothesis is reported as an outcome, not thrown; the search still runs
/// and nu_per_color is filled in either case.
RamseyResult ramsey_matching_witness(const ColoredGraph& g, const RamseyInstance& inst);

}  // namespace monoham
