#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "ladder/engine.hpp"
#include "ladder/generators.hpp"

using namespace ladder;

namespace {

void expect_error(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << error_name(code);
  } catch (const LadderError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<StepReport> reveal(LadderEngine& eng, const std::vector<Edge>& edges) {
  std::vector<StepReport> out;
  for (const Edge& e : edges) {
    out.push_back(eng.process_request(e.a, e.b));
    EXPECT_TRUE(out.back().invariants_ok) << to_string(e) << ": "
                                          << (out.back().violations.empty() ? "" : out.back().violations[0]);
    EXPECT_TRUE(eng.line().valid(eng.node_count()));
  }
  return out;
}

}  // namespace

TEST(Engine, StartsAsSingletonsInIdOrder) {
  LadderEngine eng(5);
  EXPECT_EQ(eng.line().order(), (std::vector<NodeId>{1, 2, 3, 4, 5}));
  EXPECT_EQ(eng.component_labels().size(), 5u);
}

TEST(Engine, FirstEdgeMergesSingletons) {
  LadderEngine eng(6);
  auto r = eng.process_request(2, 5);
  EXPECT_FALSE(r.known);
  EXPECT_EQ(r.case_name, "singletons");
  EXPECT_EQ(r.serve_cost, 1);
  EXPECT_EQ(eng.component_of(2), eng.component_of(5));
}

TEST(Engine, KnownEdgeCostsNoMigration) {
  LadderEngine eng(8);
  reveal(eng, {Edge(1, 2), Edge(2, 3), Edge(3, 4)});
  auto before = eng.line().order();
  auto r = eng.process_request(2, 3);
  EXPECT_TRUE(r.known);
  EXPECT_EQ(r.migration_cost, 0);
  EXPECT_LE(r.serve_cost, 12);
  EXPECT_EQ(eng.line().order(), before);
}

TEST(Engine, RejectsBadRequests) {
  LadderEngine eng(4);
  expect_error(ErrorCode::SelfLoop, [&] { eng.process_request(2, 2); });
  expect_error(ErrorCode::UndefinedNode, [&] { eng.process_request(0, 2); });
  expect_error(ErrorCode::UndefinedNode, [&] { eng.process_request(1, 5); });
}

TEST(Engine, FourCycleClosureIsIgnored) {
  LadderEngine eng(4);
  reveal(eng, {Edge(1, 2), Edge(2, 4), Edge(4, 3)});
  auto r = eng.process_request(3, 1);
  EXPECT_EQ(r.case_name, "four_cycle");
  EXPECT_TRUE(eng.ignored().count(Edge(1, 3)));
  EXPECT_LE(r.serve_cost, 12);
  EXPECT_TRUE(r.invariants_ok);
}

TEST(Engine, ClosingSixCycle) {
  LadderEngine eng(6);
  reveal(eng, make_path(6).edges());
  auto r = eng.process_request(6, 1);
  EXPECT_EQ(r.case_name, "frame");
  EXPECT_TRUE(r.invariants_ok);
  ASSERT_FALSE(r.scenarios.empty());
  for (const auto& [v, s] : r.scenarios) EXPECT_EQ(s, Scenario::FirstTimeOnACycle) << v;
  int label = eng.component_of(1);
  EXPECT_TRUE(is_correct_embedding(eng.maintained(label), eng.embedding(label)));
  EXPECT_EQ(eng.maintained(label).edge_count(), 6u);
}

TEST(Engine, WhiskersGrowTheFrame) {
  LadderEngine eng(11);
  reveal(eng, fix::c6().edges());
  auto r1 = eng.add_inner_whisker(1, fix::w1);
  EXPECT_TRUE(r1.invariants_ok);
  auto r2 = eng.add_inner_whisker(2, fix::x1);
  EXPECT_TRUE(r2.invariants_ok);
  EXPECT_TRUE(eng.phantom().count(Edge(fix::w1, fix::x1)));
  reveal(eng, {Edge(fix::w1, fix::w2), Edge(fix::x1, fix::x2), Edge(fix::x2, fix::x3)});
  int label = eng.component_of(1);
  const auto& g = eng.maintained(label);
  EXPECT_TRUE(g.has_edge(fix::w2, fix::x2));
  auto c = find_maximal_cycle(g);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->length(), 10u);
  EXPECT_TRUE(eng.check_invariants().ok());
  // the phantom edge is served like any other once requested
  auto r = eng.process_request(fix::w1, fix::x1);
  EXPECT_EQ(r.migration_cost, 0);
  EXPECT_FALSE(eng.phantom().count(Edge(fix::w1, fix::x1)));
}

TEST(Engine, InnerWhiskerNeedsLineGraph) {
  LadderEngine eng(12);
  reveal(eng, fix::c6().edges());
  reveal(eng, {Edge(8, 9), Edge(8, 10), Edge(8, 11)});
  expect_error(ErrorCode::NotALineGraph, [&] { eng.add_inner_whisker(1, 8); });
  reveal(eng, {Edge(9, 12)});
  expect_error(ErrorCode::InfeasibleConstraints, [&] { eng.add_inner_whisker(8, 7); });
}

TEST(Engine, HalvesCheckComponentCount) {
  LadderEngine eng(6);
  reveal(eng, {Edge(1, 2)});
  expect_error(ErrorCode::InfeasibleConstraints, [&] { eng.process_edge_one_component(3, 4); });
  expect_error(ErrorCode::InfeasibleConstraints, [&] { eng.process_edge_two_components(1, 2); });
  reveal(eng, {Edge(2, 3)});
  expect_error(ErrorCode::InfeasibleConstraints, [&] { eng.process_edge_two_components(1, 3); });
}

TEST(Engine, FaultInjectionIsCaught) {
  auto inst = gen_ladder_subgraph(6, 1.0, 3);
  auto seq = gen_request_sequence(inst.graph, SequenceMode::Reveal, 0, 4);
  EngineOptions opts;
  opts.inject_fault_after = 5;
  LadderEngine eng(inst.node_count(), opts);
  bool flagged = false;
  for (const Edge& e : seq) flagged |= !eng.process_request(e.a, e.b).invariants_ok;
  EXPECT_TRUE(flagged);

  opts.strict = true;
  LadderEngine strict(inst.node_count(), opts);
  expect_error(ErrorCode::InvariantViolation, [&] {
    for (const Edge& e : seq) strict.process_request(e.a, e.b);
  });
}

TEST(Engine, ReplayTailHasNoMigration) {
  auto inst = gen_ladder_subgraph(10, 0.8, 21);
  auto seq = gen_request_sequence(inst.graph, SequenceMode::ReplayHeavy, 400, 22);
  LadderEngine eng(inst.node_count());
  std::set<Edge> seen;
  for (const Edge& e : seq) {
    bool repeat = seen.count(e) != 0;
    seen.insert(e);
    auto r = eng.process_request(e.a, e.b);
    if (repeat && seen.size() == inst.graph.edge_count()) {
      EXPECT_EQ(r.migration_cost, 0);
    }
  }
}

// Property sweep over random ladder subgraphs: proximity, invariants, caps and
// the run-level accounting bound.
TEST(EngineProperty, RandomRevealRuns) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    int levels = 2 + static_cast<int>(s % 24);
    auto inst = gen_ladder_subgraph(levels, 0.55 + 0.45 * ((s * 13) % 10) / 10.0, s);
    auto seq = gen_request_sequence(inst.graph, SequenceMode::Reveal, 0, s + 100);
    LadderEngine eng(inst.node_count());
    std::int64_t migration = 0;
    for (const Edge& e : seq) {
      auto r = eng.process_request(e.a, e.b);
      migration += r.migration_cost;
      ASSERT_TRUE(r.invariants_ok) << "seed " << s << " step " << r.index;
      ASSERT_LE(r.max_revealed_stretch, 12);
      ASSERT_LE(r.max_maintained_stretch, 5);
    }
    const auto& c = eng.counters();
    int n = inst.node_count();
    EXPECT_LE(c.max_count(Scenario::FirstTimeOnACycle), 1) << s;
    EXPECT_LE(c.max_count(Scenario::InnerSimpleGraphReorienting), 1) << s;
    EXPECT_LE(c.max_count(Scenario::NoMoreAnExitGraph), 1) << s;
    EXPECT_LE(c.max_count(Scenario::ConnectivityComponentMovement), static_cast<int>(std::ceil(std::log2(n)))) << s;
    EXPECT_LE(migration, 2 * static_cast<std::int64_t>(n) * c.tags()) << s;
    EXPECT_EQ(c.total_charged() + c.unattributed, migration) << s;
  }
}
