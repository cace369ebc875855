#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "graphs.hpp"
#include "monoham/exhaustive.hpp"
#include "monoham/hamiltonian.hpp"
#include "monoham/oracles.hpp"
#include "monoham/path.hpp"

using namespace monoham;
using namespace testing_graphs;

namespace {

std::vector<Vertex> all_of(std::size_t n) {
  std::vector<Vertex> w(n);
  for (Vertex v = 0; v < n; ++v) w[v] = v;
  return w;
}

ColoredGraph plus_edge(const ColoredGraph& g, Edge e) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(e);
  return ColoredGraph(g.num_vertices(), edges);
}

}  // namespace

TEST(Exhaustive, AgreesWithEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 4 + seed % 7;
    ColoredGraph g = gen_gnp({n, 0.4, seed});
    EXPECT_EQ(longest_path_vertices_exact(g), oracle::longest_path_vertices(g));
    EXPECT_EQ(is_hamiltonian_exact(g), oracle::is_hamiltonian(g));
    const auto c = hamilton_cycle_exact(g);
    if (!c.empty()) {
      EXPECT_TRUE(is_hamilton_cycle(g, c));
    }
  }
}

TEST(Boosters, PathClosesToCycle) {
  ColoredGraph g = path_graph(8);
  BoosterReport r = boosters_of(g);
  EXPECT_TRUE(r.exact);
  EXPECT_NE(std::find(r.boosters.begin(), r.boosters.end(), Edge{0, 7, 0}), r.boosters.end());
}

TEST(Boosters, HamiltonianInputFlagged) {
  EXPECT_TRUE(boosters_of(complete_graph(6)).precondition_violated);
}

TEST(Boosters, MatchBruteForceAndImprove) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 6 + seed % 5;
    ColoredGraph g = gen_gnp({n, 0.3, seed});
    if (oracle::is_hamiltonian(g)) continue;
    BoosterReport r = boosters_of(g);
    EXPECT_EQ(r.boosters, oracle::boosters(g)) << "seed " << seed;
    const std::size_t base = oracle::longest_path_vertices(g);
    for (const Edge& e : r.boosters) {
      ColoredGraph h = plus_edge(g, e);
      EXPECT_TRUE(oracle::is_hamiltonian(h) || oracle::longest_path_vertices(h) > base);
    }
  }
}

TEST(Boosters, PetersenCount) {
  // Petersen is a connected non-Hamiltonian (2,2)-expander.
  ColoredGraph g = petersen();
  ASSERT_TRUE(oracle::is_expander(g, 2, 2));
  BoosterReport r = boosters_of(g);
  EXPECT_GE(2.0 * static_cast<double>(r.boosters.size()), 9.0);
}

TEST(Boosters, HeuristicAboveCapOnlyReportsImprovements) {
  ColoredGraph g = path_graph(20);
  BoosterReport r = boosters_of(g);
  EXPECT_FALSE(r.exact);
  EXPECT_FALSE(r.boosters.empty());
  for (const Edge& e : r.boosters) EXPECT_FALSE(g.has_edge(e.u, e.v));
}

TEST(SparseSubgraph, LargeD0KeepsEverything) {
  ColoredGraph g = gen_gnp({40, 0.2, 1});
  Subgraph h = sparse_expander_subgraph(g, all_of(40), g.max_degree(), 0);
  EXPECT_EQ(h.graph, g);
}

TEST(SparseSubgraph, DegreeTwoOnK10) {
  ColoredGraph g = complete_graph(10);
  Subgraph h = sparse_expander_subgraph(g, all_of(10), 2, 3);
  EXPECT_LE(h.graph.num_edges(), 20u);
  EXPECT_GE(h.graph.min_degree(), 2u);
  EXPECT_THROW(sparse_expander_subgraph(g, all_of(10), 1, 3), InputError);
}

// Needs d0 = ceil(0.1 ln 2000) = 1, which leaves H a union of stars and paths;
// with the d0 >= 2 floor H still has adjacent degree-2/degree-3 pairs, whose
// neighbourhood (3 vertices) is below 2|U| = 4.
TEST(SparseSubgraph, DISABLED_RandomSubgraphIsExpander) {
  std::size_t holds = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2000;
    ColoredGraph g = gen_gnp({n, 25.0 / n, seed});
    Subgraph h = sparse_expander_subgraph(g, all_of(n), default_d0(n, 0.1), seed);
    holds += is_expander(h.graph, n / 4.0, 2, CheckMode::sampled).holds;
  }
  EXPECT_GE(holds, 29u);
}

TEST(Expander, CompleteGraph) {
  for (std::size_t n = 4; n <= 12; ++n) EXPECT_TRUE(is_expander(complete_graph(n), n / 4.0, 2, CheckMode::exact).holds);
}

TEST(Expander, StarViolated) {
  ExpanderReport r = is_expander(star_graph(8), 2, 2, CheckMode::exact);
  EXPECT_FALSE(r.holds);
  // A single leaf already has too few neighbours.
  EXPECT_EQ(r.witness.size(), 1u);
  EXPECT_EQ(r.witness_neighbors, 1u);
  EXPECT_FALSE(is_expander(star_graph(8), 2, 2, CheckMode::sampled).holds);
}

TEST(Expander, ExactAgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 6 + seed % 8;
    ColoredGraph g = gen_gnp({n, 0.3 + 0.05 * static_cast<double>(seed % 6), seed});
    const double k = static_cast<double>(n) / 4;
    const bool exact = is_expander(g, k, 2, CheckMode::exact).holds;
    EXPECT_EQ(exact, oracle::is_expander(g, k, 2)) << "seed " << seed;
    if (exact) {
      EXPECT_TRUE(oracle::is_connected(g));
    }
  }
  EXPECT_THROW(is_expander(complete_graph(19), 4, 2, CheckMode::exact), CapacityError);
}

TEST(Expander, ConditionsCheckerReportsEachItem) {
  ExpanderConditions c = check_expander_conditions(cycle_graph(12), 3, 1);
  EXPECT_TRUE(c.size_ok);
  EXPECT_TRUE(c.min_degree);
  EXPECT_FALSE(c.small_sets_sparse);
  EXPECT_FALSE(c.pairs_joined);
  EXPECT_FALSE(check_expander_conditions(path_graph(8), 2, 3).min_degree);
  EXPECT_FALSE(check_expander_conditions(cycle_graph(8), 3, 3).size_ok);
  // Every vertex of C_6 is low and has low neighbours.
  EXPECT_FALSE(check_expander_conditions(cycle_graph(6), 1, 3).low_degree_separated);
  EXPECT_THROW(check_expander_conditions(complete_graph(19), 1, 1), CapacityError);
}

TEST(Expander, ConditionsImplyExpansion) {
  // Whatever passes the checker must expand; the search records how many did.
  std::size_t passed = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const std::size_t n = 8 + seed % 11;
    ColoredGraph g = gen_gnp({n, 0.2 + 0.1 * static_cast<double>(seed % 7), seed});
    for (std::size_t m = 1; 4 * m <= n; ++m)
      for (std::size_t d = 1; d <= n; ++d) {
        if (!check_expander_conditions(g, m, d).all()) continue;
        ++passed;
        EXPECT_TRUE(is_expander(g, n / 4.0, 2, CheckMode::exact).holds);
      }
  }
  RecordProperty("passed", static_cast<int>(passed));
}

TEST(Ball, Radius) {
  ColoredGraph g = path_graph(7);
  EXPECT_EQ(ball(g, 3, 2), (std::vector<Vertex>{1, 2, 4, 5}));
}

TEST(HamiltonInSubset, CompleteSubset) {
  ColoredGraph g = complete_graph(15);
  std::vector<Vertex> w{1, 3, 5, 7, 9, 11};
  HamiltonResult r = hamilton_in_subset(g, w, 2, 0);
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.cycle.size(), 6u);
  for (std::size_t i = 0; i < r.cycle.size(); ++i) EXPECT_TRUE(g.has_edge(r.cycle[i], r.cycle[(i + 1) % 6]));
}

TEST(HamiltonInSubset, TinySets) {
  ColoredGraph g = complete_graph(5);
  EXPECT_THROW(hamilton_in_subset(g, std::vector<Vertex>{2}, 2, 0), InputError);
  EXPECT_TRUE(hamilton_in_subset(g, std::vector<Vertex>{0, 1, 2}, 2, 0).success);
  EXPECT_FALSE(hamilton_in_subset(path_graph(3), all_of(3), 2, 0).success);
}

TEST(HamiltonInSubset, NearThreshold) {
  const std::size_t n = 1500;
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ColoredGraph g = gen_gnp({n, hamiltonicity_threshold(n, 4), seed});
    HamiltonResult r = hamilton_in_subset(g, all_of(n), default_d0(n, 0.1), seed);
    if (!r.success) continue;
    ASSERT_TRUE(is_hamilton_cycle(g, r.cycle));
    ReplayResult rp = replay(g, r.transcript);
    ASSERT_TRUE(rp.ok) << rp.error;
    ++hits;
  }
  EXPECT_GE(hits, 28u);
}

TEST(Endpoints, CompleteSubset) {
  ColoredGraph g = complete_graph(10);
  std::vector<Vertex> w{0, 2, 4, 6, 8};
  EndpointResult r = hamilton_path_endpoints(g, w, 4, 2, 0);
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.endpoints, (std::vector<Vertex>{0, 2, 6, 8}));
  for (Vertex y : r.endpoints) {
    auto p = r.path_to(y);
    EXPECT_EQ(p.front(), 4u);
    EXPECT_EQ(p.back(), y);
    EXPECT_EQ(p.size(), 5u);
  }
}

TEST(Endpoints, CycleMatchesBruteForce) {
  for (std::size_t m = 4; m <= 9; ++m) {
    ColoredGraph g = cycle_graph(m);
    const auto w = all_of(m);
    for (Vertex anchor = 0; anchor < m; ++anchor) {
      EndpointResult r = hamilton_path_endpoints(g, w, anchor, 2, anchor);
      ASSERT_TRUE(r.success);
      EXPECT_EQ(r.endpoints, oracle::path_ends_over(g, w, anchor));
      for (Vertex y : r.endpoints) {
        ReplayResult rp = replay(g, r.transcript_to(y));
        EXPECT_TRUE(rp.ok) << rp.error;
        EXPECT_EQ(rp.path, r.path_to(y));
      }
    }
  }
}

TEST(Endpoints, RandomInstances) {
  const std::size_t n = 1000;
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ColoredGraph g = gen_gnp({n, hamiltonicity_threshold(n, 3), seed});
    EndpointResult r = hamilton_path_endpoints(g, all_of(n), static_cast<Vertex>(seed), default_d0(n, 0.1), seed);
    if (!r.success) continue;
    for (std::size_t i = 0; i < r.endpoints.size(); i += 97) EXPECT_TRUE(is_hamilton_path(g, r.path_to(r.endpoints[i])));
    hits += r.target_met;
  }
  EXPECT_GE(hits, 28u);
}

TEST(Properties, CompleteGraph) {
  PropertyReport r = check_properties(complete_graph(5));
  EXPECT_TRUE(r.p1);
  EXPECT_EQ(r.min_degree, 4u);
}

TEST(Properties, CloseLowVerticesWitnessed) {
  // 0 and 3 have degree 2 and lie on no short cycle; everything else has
  // degree >= 3 through two 4-cliques.
  ColoredGraph g = from_pairs(14, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {3, 5}, {1, 6}, {1, 7}, {4, 10}, {4, 11},
                                   {2, 12}, {2, 13}, {5, 6}, {5, 8}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9},
                                   {8, 9}, {10, 11}, {10, 12}, {10, 13}, {11, 12}, {11, 13}, {12, 13}});
  PropertyOptions o;
  o.low_degree_threshold = 3;
  PropertyReport r = check_properties(g, o);
  EXPECT_FALSE(r.p2);
  ASSERT_EQ(r.p2_witness.size(), 4u);
  EXPECT_TRUE(is_simple_path(g, r.p2_witness));
  EXPECT_EQ(std::min(r.p2_witness.front(), r.p2_witness.back()), 0u);
  EXPECT_EQ(std::max(r.p2_witness.front(), r.p2_witness.back()), 3u);
}

TEST(Properties, RandomNearThreshold) {
  const std::size_t n = 3000;
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ColoredGraph g = gen_gnp({n, hamiltonicity_threshold(n, 3), seed});
    PropertyOptions o;
    o.seed = seed;
    PropertyReport r = check_properties(g, o);
    hits += r.p1 && r.p2;
  }
  EXPECT_GE(hits, 28u);
}

// P3 bounds e(U) by eps |U| ln n / 10, which is below 1 for |U| = 2 at this
// n; any edge is a violation, so "no sampled violation" cannot hold.
TEST(Properties, DISABLED_RandomNearThresholdSmallSetsSparse) {
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ColoredGraph g = gen_gnp({3000, hamiltonicity_threshold(3000, 3), seed});
    hits += check_properties(g).p3;
  }
  EXPECT_GE(hits, 28u);
}
