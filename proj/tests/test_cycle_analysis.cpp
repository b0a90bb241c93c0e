#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ladder/cycle_analysis.hpp"

using namespace ladder;

namespace {

std::set<NodeId> as_set(const std::vector<NodeId>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(MaximalCycle, BareSixCycle) {
  auto c = find_maximal_cycle(fix::c6());
  ASSERT_TRUE(c);
  EXPECT_EQ(as_set(c->nodes), (std::set<NodeId>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(c->nodes.front(), 1);
  EXPECT_TRUE(c->chords.empty());
}

TEST(MaximalCycle, LadderBlockBoundary) {
  Graph g = make_ladder(3);
  for (const Edge& rail : {Edge(1, 3), Edge(4, 6)}) {
    auto c = find_maximal_cycle(g, rail);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->length(), 6u);
    EXPECT_EQ(c->chords, (std::vector<Edge>{Edge(3, 4)}));
  }
}

TEST(MaximalCycle, TreeHasNone) { EXPECT_FALSE(find_maximal_cycle(fix::cat())); }

TEST(MaximalCycle, ForeignEdgeThrows) {
  try {
    find_maximal_cycle(fix::c6(), Edge(1, 9));
    FAIL();
  } catch (const LadderError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EdgeNotInComponent);
  }
}

TEST(Whiskers, TwoWhiskers) {
  Graph g = fix::c6w();
  auto ws = whiskers_of(*find_maximal_cycle(g), g);
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[0].foot, 1);
  EXPECT_EQ(ws[0].nodes, (std::vector<NodeId>{fix::w1, fix::w2}));
  EXPECT_EQ(ws[1].foot, 2);
  EXPECT_EQ(ws[1].nodes, (std::vector<NodeId>{fix::x1, fix::x2, fix::x3}));
}

TEST(Whiskers, BareCycle) { EXPECT_TRUE(whiskers_of(*find_maximal_cycle(fix::c6()), fix::c6()).empty()); }

TEST(Whiskers, BranchingAttachmentIsNotAWhisker) {
  Graph g = fix::c6();
  g.add_edge(1, 7);
  g.add_edge(7, 8);
  g.add_edge(7, 9);
  EXPECT_TRUE(whiskers_of(*find_maximal_cycle(g), g).empty());
}

TEST(Frame, PairsMatchedPrefixes) {
  Graph g = fix::c6w();
  Frame f = frame_of(*find_maximal_cycle(g), g);
  EXPECT_EQ(f.nodes(), (std::set<NodeId>{1, 2, 3, 4, 5, 6, fix::w1, fix::w2, fix::x1, fix::x2}));
  EXPECT_EQ(f.completion, (std::vector<Edge>{Edge(fix::w1, fix::x1), Edge(fix::w2, fix::x2)}));
  Graph done = g;
  for (const Edge& e : f.completion) done.add_edge(e);
  EXPECT_EQ(completed_cycle(f, done).length(), 10u);
}

TEST(Frame, BareCycle) {
  Frame f = frame_of(*find_maximal_cycle(fix::c6()), fix::c6());
  EXPECT_TRUE(f.completion.empty());
  EXPECT_EQ(f.nodes(), (std::set<NodeId>{1, 2, 3, 4, 5, 6}));
}

TEST(Frame, NonAdjacentFeet) {
  Graph g = fix::c6();
  g.add_edge(1, 7);
  g.add_edge(3, 8);
  Frame f = frame_of(*find_maximal_cycle(g), g);
  EXPECT_TRUE(f.completion.empty());
}

TEST(Frame, FourCycleThrows) {
  try {
    frame_of(*find_maximal_cycle(make_cycle(4)), make_cycle(4));
    FAIL();
  } catch (const LadderError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CycleTooShort);
  }
}

TEST(Preprocess, FourCycleDropsOneEdge) {
  auto r = preprocess(make_cycle(4));
  EXPECT_EQ(r.ignored.size(), 1u);
  EXPECT_TRUE(is_line_graph(r.graph));
  EXPECT_EQ(r.graph.node_count(), 4u);
}

TEST(Preprocess, PrefersRequestedEdge) {
  auto r = preprocess(make_cycle(4), {Edge(2, 3)});
  EXPECT_EQ(r.ignored, (std::set<Edge>{Edge(2, 3)}));
}

TEST(Preprocess, CompletesFrame) {
  auto r = preprocess(fix::c6w());
  EXPECT_EQ(r.phantom, (std::set<Edge>{Edge(fix::w1, fix::x1), Edge(fix::w2, fix::x2)}));
  EXPECT_FALSE(has_uncompleted_frame(r.graph));
  EXPECT_TRUE(has_uncompleted_frame(fix::c6w()));
}

TEST(Preprocess, TreeUnchanged) {
  auto r = preprocess(fix::cat());
  EXPECT_EQ(r.graph, fix::cat());
  EXPECT_TRUE(r.ignored.empty());
  EXPECT_TRUE(r.phantom.empty());
}

TEST(Chain, TreeAndCycle) {
  auto t = cycle_tree_chain(fix::cat());
  ASSERT_EQ(t.parts.size(), 1u);
  EXPECT_FALSE(t.parts[0].is_cycle());
  auto c = cycle_tree_chain(fix::c6());
  ASSERT_EQ(c.parts.size(), 1u);
  EXPECT_TRUE(c.parts[0].is_cycle());
}

TEST(Chain, TwoCyclesJoinedByPath) {
  Graph g = fix::c6();
  Graph other = make_cycle(6, 7);
  for (const Edge& e : other.edges()) g.add_edge(e);
  g.add_edge(4, 13);
  g.add_edge(13, 14);
  g.add_edge(14, 7);
  auto ch = cycle_tree_chain(g);
  ASSERT_EQ(ch.parts.size(), 3u);
  EXPECT_TRUE(ch.parts[0].is_cycle());
  EXPECT_FALSE(ch.parts[1].is_cycle());
  EXPECT_TRUE(ch.parts[2].is_cycle());
  EXPECT_EQ(ch.parts[1].nodes, (std::vector<NodeId>{13, 14}));
  EXPECT_EQ(ch.links.size(), 2u);
}

TEST(Chain, UncompletedFrameThrows) {
  try {
    cycle_tree_chain(fix::c6w());
    FAIL();
  } catch (const LadderError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UncompletedFrame);
  }
}

TEST(Blocks, BiconnectedBlocks) {
  Graph g = fix::c6w();
  auto blocks = biconnected_blocks(g);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(as_set(blocks[0]), (std::set<NodeId>{1, 2, 3, 4, 5, 6}));
}
