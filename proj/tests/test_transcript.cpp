#include <gtest/gtest.h>

#include <sstream>

#include "graphs.hpp"
#include "monoham/transcript.hpp"

using namespace monoham;
using namespace testing_graphs;

TEST(Transcript, TextRoundTrip) {
  Transcript t;
  t.add(MoveKind::start, {3});
  t.add(MoveKind::ext, {4});
  t.add(MoveKind::rot, {4, 3, 5});
  t.add(MoveKind::boost, {1, 2});
  t.add(MoveKind::close);
  std::stringstream ss(t.to_text());
  Transcript back = Transcript::parse(ss);
  EXPECT_EQ(back.moves(), t.moves());
  EXPECT_EQ(back.count(MoveKind::ext), 1u);
}

TEST(Transcript, ParseSkipsCommentsAndRejectsJunk) {
  std::stringstream ok("# header\n\nSTART 0\nEXT 1\n");
  EXPECT_EQ(Transcript::parse(ok).size(), 2u);
  std::stringstream unknown("JUMP 1\n");
  EXPECT_THROW(Transcript::parse(unknown), InputError);
  std::stringstream arity("ROT 1 2\n");
  EXPECT_THROW(Transcript::parse(arity), InputError);
  std::stringstream bad("EXT -1\n");
  EXPECT_THROW(Transcript::parse(bad), InputError);
}

TEST(Replay, RotationAndClose) {
  // Path 0-1-2-3-4 with chord {4,1}: rotating gives 0-1-4-3-2, then {2,0} closes.
  ColoredGraph g = from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 0}});
  Transcript t;
  t.add(MoveKind::path, {0, 1, 2, 3, 4});
  t.add(MoveKind::rot, {4, 1, 2});
  t.add(MoveKind::close);
  t.add(MoveKind::cycle, {0, 1, 4, 3, 2});
  ReplayResult r = replay(g, t);
  EXPECT_TRUE(r.ok) << r.error;
  EXPECT_TRUE(r.closed);
  EXPECT_EQ(r.path, (std::vector<Vertex>{0, 1, 4, 3, 2}));
}

TEST(Replay, IllegalRotationNamesMove) {
  ColoredGraph g = path_graph(5);
  Transcript t;
  t.add(MoveKind::path, {0, 1, 2, 3, 4});
  t.add(MoveKind::rot, {4, 1, 2});
  ReplayResult r = replay(g, t);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed_move, 2u);
}

TEST(Replay, ExtendAndReverse) {
  ColoredGraph g = path_graph(4);
  Transcript t;
  t.add(MoveKind::start, {1});
  t.add(MoveKind::ext, {2});
  t.add(MoveKind::ext, {3});
  t.add(MoveKind::rev);
  t.add(MoveKind::ext, {0});
  ReplayResult r = replay(g, t);
  EXPECT_TRUE(r.ok) << r.error;
  EXPECT_EQ(r.path, (std::vector<Vertex>{3, 2, 1, 0}));
  t.add(MoveKind::ext, {2});
  EXPECT_FALSE(replay(g, t).ok);
}

TEST(Replay, BoostMustBeHostEdge) {
  ColoredGraph g = cycle_graph(4);
  Transcript t;
  t.add(MoveKind::boost, {0, 1});
  EXPECT_TRUE(replay(g, t).ok);
  Transcript bad;
  bad.add(MoveKind::boost, {0, 2});
  EXPECT_FALSE(replay(g, bad).ok);
}

TEST(Replay, CycleMustBeHamilton) {
  ColoredGraph g = cycle_graph(5);
  Transcript ok;
  ok.add(MoveKind::cycle, {0, 1, 2, 3, 4});
  EXPECT_TRUE(replay(g, ok).ok);
  Transcript bad;
  bad.add(MoveKind::cycle, {0, 1, 2, 4, 3});
  EXPECT_FALSE(replay(g, bad).ok);
}

TEST(Replay, MatchMustBePerfect) {
  ColoredGraph g = cycle_graph(4);
  Transcript ok;
  ok.add(MoveKind::match, {0, 1});
  ok.add(MoveKind::match, {2, 3});
  EXPECT_TRUE(replay(g, ok).ok);
  Transcript partial;
  partial.add(MoveKind::match, {0, 1});
  EXPECT_FALSE(replay(g, partial).ok);
  Transcript overlap;
  overlap.add(MoveKind::match, {0, 1});
  overlap.add(MoveKind::match, {1, 2});
  EXPECT_FALSE(replay(g, overlap).ok);
}

TEST(Transcript, Relabel) {
  Transcript t;
  t.add(MoveKind::rot, {0, 1, 2});
  std::vector<Vertex> map{7, 8, 9};
  EXPECT_EQ(t.relabeled(map).moves()[0].args, (std::vector<Vertex>{7, 8, 9}));
}
