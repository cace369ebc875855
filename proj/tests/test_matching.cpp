#include <gtest/gtest.h>

#include <algorithm>

#include "graphs.hpp"
#include "monoham/coloring.hpp"
#include "monoham/matching.hpp"
#include "monoham/oracles.hpp"

using namespace monoham;
using namespace testing_graphs;

TEST(MaxMatching, SmallGraphs) {
  EXPECT_EQ(max_matching(path_graph(3)).size(), 1u);
  EXPECT_EQ(max_matching(complete_graph(4)).size(), 2u);
  EXPECT_EQ(max_matching(petersen()).size(), 5u);
  EXPECT_EQ(oracle::matching_number(petersen()), 5u);
  EXPECT_EQ(max_matching(ColoredGraph(0, {})).size(), 0u);
}

TEST(MaxMatching, Blossoms) {
  // Two triangles joined by a path force blossom contraction.
  ColoredGraph g = from_pairs(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  Matching m = max_matching(g);
  EXPECT_TRUE(is_matching(g, m));
  EXPECT_EQ(m.size(), 4u);
}

TEST(MaxMatching, AgreesWithOracles) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ColoredGraph g = gen_gnp({12, 0.3, seed});
    Matching m = max_matching(g);
    ASSERT_TRUE(is_matching(g, m));
    Matching o = max_matching_oracle(g);
    EXPECT_TRUE(is_matching(g, o));
    EXPECT_EQ(m.size(), o.size()) << "seed " << seed;
    EXPECT_EQ(m.size(), oracle::matching_number(g)) << "seed " << seed;
  }
}

TEST(MaxMatching, RestrictedColour) {
  ColoredGraph g(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}}, 2);
  Matching m1 = max_matching(g, Color{1});
  EXPECT_EQ(m1.size(), 2u);
  EXPECT_EQ(m1.color, Color{1});
  EXPECT_EQ(max_matching(g, Color{2}).size(), 1u);
}

TEST(MaxMatching, AugmentKeepsStart) {
  ColoredGraph g = path_graph(4);
  Matching start;
  start.edges = {{1, 2, 0}};
  Matching m = augment_matching(g, start);
  EXPECT_EQ(m.size(), 2u);
  Matching bad;
  bad.edges = {{0, 2, 0}};
  EXPECT_THROW(augment_matching(g, bad), InputError);
}

TEST(MatchingOracle, SmallCases) {
  EXPECT_EQ(max_matching_oracle(ColoredGraph(6, {})).size(), 0u);
  EXPECT_EQ(max_matching_oracle(cycle_graph(5)).size(), 2u);
  Matching m = max_matching_oracle(path_graph(4));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.edges[0], (Edge{0, 1, 0}));
  EXPECT_THROW(max_matching_oracle(complete_graph(15)), CapacityError);
}

TEST(TutteBerge, KnownCertificates) {
  TutteBergeCertificate k4 = tutte_berge_certificate(complete_graph(4));
  EXPECT_TRUE(k4.u.empty());
  EXPECT_EQ(k4.deficiency, 0);
  EXPECT_EQ(k4.nu, 2u);

  TutteBergeCertificate tri = tutte_berge_certificate(complete_graph(3));
  EXPECT_TRUE(tri.u.empty());
  EXPECT_EQ(tri.deficiency, 1);
  EXPECT_EQ(tri.nu, 1u);

  TutteBergeCertificate star = tutte_berge_certificate(star_graph(3));
  EXPECT_EQ(star.u, std::vector<Vertex>{0});
  EXPECT_EQ(star.deficiency, 2);
  EXPECT_EQ(star.nu, 1u);
  oracle::TutteBerge o = oracle::tutte_berge(star_graph(3));
  EXPECT_EQ(o.deficiency, 2);
}

TEST(TutteBerge, EnumerationMatches) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 4 + seed % 11;
    ColoredGraph g = gen_gnp({n, 0.15 + 0.05 * static_cast<double>(seed % 6), seed});
    TutteBergeCertificate c = tutte_berge_certificate(g);
    oracle::TutteBerge o = oracle::tutte_berge(g);
    EXPECT_EQ(c.deficiency, o.deficiency) << "seed " << seed;
    EXPECT_EQ(c.nu, o.nu);
    EXPECT_EQ(c.nu, max_matching(g).size());
    EXPECT_TRUE(certificate_consistent(g, c));
    EXPECT_EQ(tutte_berge_deficiency(g, c.u), c.deficiency);
  }
}

TEST(TutteBerge, TamperedCertificateRejected) {
  TutteBergeCertificate c = tutte_berge_certificate(star_graph(3));
  c.nu = 2;
  EXPECT_FALSE(certificate_consistent(star_graph(3), c));
}

TEST(GallaiEdmonds, PartsCoverVertices) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    ColoredGraph g = gen_gnp({14, 0.2, seed});
    GallaiEdmonds ge = gallai_edmonds(g);
    EXPECT_EQ(ge.d.size() + ge.a.size() + ge.c.size(), 14u);
    // D is exactly the set of vertices missed by some maximum matching.
    const std::size_t nu = max_matching(g).size();
    for (Vertex v : ge.d) {
      std::vector<Edge> edges;
      for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) edges.push_back(e);
      EXPECT_EQ(oracle::matching_number(ColoredGraph(14, edges)), nu);
    }
    for (Vertex v : ge.c) {
      std::vector<Edge> edges;
      for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) edges.push_back(e);
      EXPECT_EQ(oracle::matching_number(ColoredGraph(14, edges)) + 1, nu);
    }
  }
}

TEST(ComponentBound, EdgesAtMostCliqueOnLargestPiece) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 2 + seed % 19;
    ColoredGraph g = gen_gnp({n, 0.05 + 0.01 * static_cast<double>(seed % 20), seed});
    const std::size_t t = oracle::components(g);
    const std::size_t k = n - t + 1;
    EXPECT_LE(g.num_edges(), k * (k - 1) / 2);
  }
}

TEST(MonoMatchings, Examples) {
  std::vector<Matching> layered = mono_matchings(layered_extremal_coloring(complete_graph(10), 4, 2));
  ASSERT_EQ(layered.size(), 4u);
  for (const Matching& m : layered) EXPECT_EQ(m.size(), 2u);

  std::vector<Matching> mono = mono_matchings(random_coloring(complete_graph(4), 1, 0));
  ASSERT_EQ(mono.size(), 1u);
  EXPECT_EQ(mono[0].size(), 2u);
}

TEST(MonoMatchings, PigeonholeOnMaximumMatching) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ColoredGraph host = gen_gnp({30, 0.2, seed});
    const Color r = static_cast<Color>(2 + seed % 3);
    ColoredGraph g = random_coloring(host, r, seed);
    const std::size_t nu = max_matching(host).size();
    std::size_t best = 0;
    for (const Matching& m : mono_matchings(g)) best = std::max(best, m.size());
    EXPECT_GE(best, (nu + r - 1) / r);
  }
}

namespace {

ColoredGraph colour_by_mask(const ColoredGraph& host, std::uint32_t mask) {
  std::vector<Color> colours(host.num_edges());
  for (std::size_t i = 0; i < colours.size(); ++i) colours[i] = static_cast<Color>(1 + (mask >> i & 1u));
  return host.with_colors(colours, 2);
}

}  // namespace

TEST(Ramsey, K5AllColourings) {
  ColoredGraph k5 = complete_graph(5);
  RamseyInstance inst{{2, 2}, 0.0};
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    RamseyResult r = ramsey_matching_witness(colour_by_mask(k5, mask), inst);
    ASSERT_EQ(r.outcome, RamseyOutcome::witness) << mask;
    EXPECT_EQ(r.matching.size(), 2u);
    EXPECT_TRUE(is_matching(colour_by_mask(k5, mask), r.matching));
  }
}

TEST(Ramsey, K4HasCounterexample) {
  ColoredGraph k4 = complete_graph(4);
  RamseyInstance inst{{2, 2}, 0.0};
  bool counterexample = false;
  for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
    ColoredGraph g = colour_by_mask(k4, mask);
    RamseyResult r = ramsey_matching_witness(g, inst);
    EXPECT_EQ(r.outcome == RamseyOutcome::witness, false);
    if (!r.found) {
      counterexample = true;
      EXPECT_EQ(oracle::matching_number(g.color_class(1)), 1u);
      EXPECT_EQ(oracle::matching_number(g.color_class(2)), 1u);
    }
  }
  EXPECT_TRUE(counterexample);
  EXPECT_FALSE(ramsey_hypothesis_holds(k4, inst));
}

TEST(Ramsey, DeficientHost) {
  const std::size_t n = 24;
  // Removing a clique on 7 vertices drops 21 of 276 edges, under delta C(n,2) = 23.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!(u < 7 && v < 7)) edges.push_back({u, v, 0});
  ColoredGraph host(n, edges);
  RamseyInstance inst{{6, 6}, 1.0 / 12};
  ASSERT_TRUE(ramsey_hypothesis_holds(random_coloring(host, 2, 0), inst));
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    RamseyResult r = ramsey_matching_witness(random_coloring(host, 2, seed), inst);
    ASSERT_EQ(r.outcome, RamseyOutcome::witness) << seed;
  }
}

TEST(Ramsey, CompleteGraphsAlwaysHaveThirdSizedMatching) {
  for (std::size_t n = 3; n <= 6; ++n) {
    ColoredGraph kn = complete_graph(n);
    const std::size_t m = kn.num_edges();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      ColoredGraph g = colour_by_mask(kn, mask);
      EXPECT_GE(max_mono_matching(g), n / 3);
    }
  }
}
