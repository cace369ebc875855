#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "graphs.hpp"
#include "monoham/graph.hpp"
#include "monoham/oracles.hpp"
#include "monoham/pseudorandom.hpp"

using namespace monoham;

TEST(Gnp, FullProbabilityGivesCompleteGraph) {
  ColoredGraph g = gen_gnp({10, 1.0, 0});
  EXPECT_EQ(g.num_edges(), 45u);
  EXPECT_EQ(g, complete_graph(10));
}

TEST(Gnp, EmptyVertexSet) {
  ColoredGraph g = gen_gnp({0, 0.5, 0});
  EXPECT_EQ(g.num_vertices(), 0u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(Gnp, EdgeCountConcentrates) {
  const double n = 10000, p = 0.001;
  const double mean = n * (n - 1) / 2 * p;
  const double sd = std::sqrt(mean * (1 - p));
  for (std::uint64_t seed = 7; seed < 37; ++seed) {
    ColoredGraph g = gen_gnp({10000, p, seed});
    EXPECT_LE(std::abs(static_cast<double>(g.num_edges()) - mean), 5 * sd) << "seed " << seed;
  }
}

TEST(Gnp, Deterministic) {
  EXPECT_EQ(gen_gnp({300, 0.05, 11}), gen_gnp({300, 0.05, 11}));
  EXPECT_FALSE(gen_gnp({300, 0.05, 11}) == gen_gnp({300, 0.05, 12}));
}

TEST(Gnp, RejectsBadProbability) {
  EXPECT_THROW(gen_gnp({10, 1.5, 0}), InputError);
  EXPECT_THROW(gen_gnp({10, -0.1, 0}), InputError);
}

TEST(CompleteGraph, SmallCases) {
  EXPECT_EQ(complete_graph(1).num_edges(), 0u);
  EXPECT_EQ(complete_graph(4).num_edges(), 6u);
  ColoredGraph k5 = complete_graph(5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(k5.degree(v), 4u);
}

TEST(ColoredGraph, RejectsMalformedEdges) {
  EXPECT_THROW(ColoredGraph(3, {{0, 0, 0}}), InputError);
  EXPECT_THROW(ColoredGraph(3, {{0, 1, 0}, {1, 0, 0}}), InputError);
  EXPECT_THROW(ColoredGraph(3, {{0, 5, 0}}), InputError);
  EXPECT_THROW(ColoredGraph(3, {{0, 1, 3}}, 2), InputError);
  EXPECT_THROW(ColoredGraph(3, {{0, 1, 0}}, 2), InputError);
}

TEST(ColoredGraph, ColorLookups) {
  ColoredGraph g(4, {{2, 1, 2}, {0, 3, 1}}, 2);
  EXPECT_EQ(g.color(1, 2), 2);
  EXPECT_EQ(g.color(3, 0), 1);
  EXPECT_THROW(g.color(0, 1), InputError);
  EXPECT_EQ(g.color_class(2).num_edges(), 1u);
  EXPECT_FALSE(g.uncolored().is_colored());
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  ColoredGraph g = gen_gnp({40, 0.2, 3});
  std::vector<Vertex> all(40);
  for (Vertex v = 0; v < 40; ++v) all[v] = v;
  Subgraph s = induced_subgraph(g, all);
  EXPECT_EQ(s.graph, g);
  for (Vertex v = 0; v < 40; ++v) EXPECT_EQ(s.parent(v), v);
}

TEST(InducedSubgraph, EmptySet) {
  Subgraph s = induced_subgraph(complete_graph(5), {});
  EXPECT_EQ(s.graph.num_vertices(), 0u);
}

TEST(InducedSubgraph, ThreeVerticesOfK5) {
  std::vector<Vertex> s{4, 1, 2};
  Subgraph sub = induced_subgraph(complete_graph(5), s);
  EXPECT_EQ(sub.graph.num_edges(), 3u);
  EXPECT_EQ(sub.parent(0), 1u);
  EXPECT_EQ(sub.child(4), 2u);
  EXPECT_EQ(sub.child(0), kNoVertex);
}

TEST(InducedSubgraph, RejectsRepeats) {
  std::vector<Vertex> s{1, 1};
  EXPECT_THROW(induced_subgraph(complete_graph(5), s), InputError);
}

TEST(InducedSubgraph, Composes) {
  ColoredGraph g = gen_gnp({30, 0.3, 5});
  std::vector<Vertex> s{1, 3, 4, 8, 9, 12, 15, 20, 21, 29};
  std::vector<Vertex> t{3, 9, 15, 21, 29};
  Subgraph gs = induced_subgraph(g, s);
  std::vector<Vertex> t_child;
  for (Vertex v : t) t_child.push_back(gs.child(v));
  Subgraph gst = induced_subgraph(gs.graph, t_child);
  Subgraph gt = induced_subgraph(g, t);
  EXPECT_EQ(gst.graph, gt.graph);
  for (Vertex i = 0; i < t.size(); ++i) EXPECT_EQ(gs.parent(gst.parent(i)), gt.parent(i));
}

TEST(GraphIo, RoundTrip) {
  ColoredGraph g(5, {{0, 1, 1}, {1, 4, 2}, {2, 3, 1}}, 2);
  std::stringstream ss;
  write_graph(ss, g);
  EXPECT_EQ(read_graph(ss), g);
}

TEST(GraphIo, RejectsGarbage) {
  std::stringstream a("3 0\n0 1 0\n0 1 0\n");
  EXPECT_THROW(read_graph(a), InputError);
  std::stringstream b("3 0\n0 x 0\n");
  EXPECT_THROW(read_graph(b), InputError);
}

TEST(Thresholds, Formulae) {
  const double n = 1000;
  EXPECT_NEAR(hamiltonicity_threshold(1000, 3), (std::log(n) + std::log(std::log(n)) + 3) / n, 1e-12);
  EXPECT_NEAR(matching_threshold(1000, 3), (std::log(n) + 3) / n, 1e-12);
  EXPECT_EQ(hamiltonicity_threshold(3, 100), 1.0);
}

TEST(Pseudorandom, CompleteGraphHolds) {
  PseudorandomVerdict v = check_pseudorandom(complete_graph(12), 0.5, 1.0, CheckMode::exact);
  EXPECT_TRUE(v.holds);
}

TEST(Pseudorandom, EmptyGraphViolated) {
  PseudorandomVerdict v = check_pseudorandom(ColoredGraph(10, {}), 0.3, 0.5, CheckMode::exact);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness_density, 0.0);
  EXPECT_GE(v.witness_u.size(), 3u);
  EXPECT_GE(v.witness_w.size(), 3u);
}

TEST(Pseudorandom, ExactAgreesWithPairEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 7 + seed % 4;
    const double p = 0.3 + 0.1 * static_cast<double>(seed % 5);
    ColoredGraph g = gen_gnp({n, p, seed});
    for (double gamma : {0.3, 0.45, 0.6}) {
      PseudorandomVerdict v = check_pseudorandom(g, gamma, p, CheckMode::exact);
      EXPECT_EQ(v.holds, oracle::pseudorandom(g, gamma, p)) << "seed " << seed << " gamma " << gamma;
      if (!v.holds) {
        const double d = pair_density(g, v.witness_u, v.witness_w);
        EXPECT_GT(std::abs(d - p), gamma * p);
      }
    }
  }
}

TEST(Pseudorandom, ExactCapEnforced) {
  EXPECT_THROW(check_pseudorandom(complete_graph(19), 0.5, 1.0, CheckMode::exact), CapacityError);
  EXPECT_THROW(check_pseudorandom(complete_graph(5), 0.0, 1.0, CheckMode::exact), InputError);
}

TEST(Pseudorandom, SetDensityConsequence) {
  // Pseudorandom pairs force every large set to have density near p.
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400 && checked < 10; ++seed) {
    const std::size_t n = 12;
    ColoredGraph g = gen_gnp({n, 0.7, seed});
    const double gamma = 0.4;
    if (!check_pseudorandom(g, gamma, 0.7, CheckMode::exact).holds) continue;
    const auto min = 2 * static_cast<std::size_t>(std::ceil(gamma * n));
    EXPECT_TRUE(oracle::set_densities_within(g, min, gamma, 0.7)) << "seed " << seed;
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(Pseudorandom, SampledRandomGraphs) {
  std::size_t clean = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const double p = 20.0 / 2000;
    ColoredGraph g = gen_gnp({2000, p, seed});
    PseudorandomOptions o;
    o.samples = 10000;
    o.seed = seed;
    clean += check_pseudorandom(g, 0.25, p, CheckMode::sampled, o).holds;
  }
  EXPECT_GE(clean, 29u);
}
