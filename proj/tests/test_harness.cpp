#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "ladder/graph_io.hpp"
#include "ladder/harness.hpp"

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

}  // namespace

TEST(Generators, LadderDensityExtremes) {
  auto full = gen_ladder_subgraph(5, 1.0, 1);
  EXPECT_EQ(full.graph.edge_count(), 13u);
  EXPECT_TRUE(is_correct_embedding(full.graph, full.truth));
  auto none = gen_ladder_subgraph(5, 0.0, 1);
  EXPECT_EQ(none.graph.edge_count(), 0u);
  EXPECT_EQ(none.graph.node_count(), 10u);
}

TEST(Generators, Deterministic) {
  auto a = gen_ladder_subgraph(16, 0.7, 7), b = gen_ladder_subgraph(16, 0.7, 7);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.truth, b.truth);
  EXPECT_NE(a.graph, gen_ladder_subgraph(16, 0.7, 8).graph);
}

TEST(Generators, BfsRevealCoversBeforeRepeating) {
  auto inst = gen_ladder_subgraph(8, 0.8, 2);
  auto seq = gen_request_sequence(inst.graph, SequenceMode::BfsReveal, 200, 3);
  std::size_t m = inst.graph.edge_count();
  ASSERT_GE(seq.size(), m);
  std::set<Edge> first(seq.begin(), seq.begin() + static_cast<long>(m));
  EXPECT_EQ(first.size(), m);
  for (const Edge& e : seq) EXPECT_TRUE(inst.graph.has_edge(e));
}

TEST(Generators, ReplayHeavyMostlyRepeats) {
  auto inst = gen_ladder_subgraph(8, 1.0, 2);
  auto seq = gen_request_sequence(inst.graph, SequenceMode::ReplayHeavy, 0, 3);
  std::size_t m = inst.graph.edge_count();
  ASSERT_GT(seq.size(), m);
  EXPECT_GE(static_cast<double>(seq.size() - m) / static_cast<double>(seq.size()), 0.9);
}

TEST(Generators, ModeNamesRoundTrip) {
  for (auto m : {SequenceMode::Random, SequenceMode::Reveal, SequenceMode::BfsReveal, SequenceMode::ReplayHeavy,
                 SequenceMode::Adversarial})
    EXPECT_EQ(parse_sequence_mode(sequence_mode_name(m)), m);
  EXPECT_FALSE(parse_sequence_mode("zigzag"));
}

TEST(Instances, Specs) {
  auto l = make_instance("ladder:n=4,density=1", 1);
  EXPECT_EQ(l.n, 8);
  EXPECT_EQ(l.size_param, 4);
  EXPECT_TRUE(l.truth);
  auto c = make_instance("cycle:n=9", 1);
  EXPECT_EQ(c.graph.edge_count(), 9u);
  EXPECT_TRUE(is_connected(c.graph));
  auto r = make_instance("random:k=7,p=0.2", 1);
  EXPECT_EQ(r.n, 7);
  EXPECT_TRUE(is_connected(r.graph));
  auto t = make_instance("tree:n=5", 2);
  EXPECT_TRUE(is_tree(t.graph));
  for (const char* bad : {"ladder", "ladder:n=x", "ladder:n=3,density=2", "blob:n=3", "cycle:n=2", "ladder:n=3,q=1"})
    expect_error(ErrorCode::ParseError, [&] { make_instance(bad, 1); });
}

TEST(Experiment, FullLadderBfsRevealIsClean) {
  RunSpec spec;
  spec.gen = "ladder:n=8,density=1";
  spec.mode = SequenceMode::BfsReveal;
  auto t = run_spec(spec);
  EXPECT_EQ(t.rows.size(), 22u);
  EXPECT_TRUE(t.invariants_ok());
  std::int64_t sum = 0;
  for (const auto& r : t.rows) {
    sum += r.serve + r.migrate;
    EXPECT_EQ(r.cumulative, sum);
  }
  ASSERT_TRUE(t.counters);
}

TEST(Experiment, CycleBaselineEndsQuiet) {
  RunSpec spec;
  spec.algorithm = "cycle";
  spec.gen = "cycle:n=12";
  spec.mode = SequenceMode::ReplayHeavy;
  auto t = run_spec(spec);
  for (std::size_t i = 12; i < t.rows.size(); ++i) EXPECT_EQ(t.rows[i].migrate, 0);
  EXPECT_FALSE(t.counters);
}

TEST(Experiment, EmptySequence) {
  auto t = run_experiment("ladder", make_instance("ladder:n=3", 1), {});
  EXPECT_TRUE(t.rows.empty());
  EXPECT_EQ(t.to_csv(), "index,u,v,known,case,serve,migrate,scenarios,cumulative,invariants_ok\n");
}

TEST(Experiment, UnknownAlgorithm) {
  expect_error(ErrorCode::ParseError, [] { make_algorithm("quantum", 4, {}); });
  ExperimentOptions o;
  o.oracle = "magic";
  expect_error(ErrorCode::ParseError, [&] { make_algorithm("general", 4, o); });
}

TEST(Experiment, ByteIdenticalReruns) {
  RunSpec spec;
  spec.gen = "ladder:n=12,density=0.8";
  spec.mode = SequenceMode::Random;
  spec.length = 80;
  spec.seed = 42;
  auto a = run_spec(spec), b = run_spec(spec);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.summary().dump(), b.summary().dump());
  EXPECT_EQ(a.event_log(), b.event_log());
  EXPECT_EQ(a.summary()["schema"], 1);
}

TEST(Experiment, AdversarialClosedLoop) {
  RunSpec spec;
  spec.gen = "ladder:n=4,density=1";
  spec.mode = SequenceMode::Adversarial;
  spec.length = 30;
  auto t = run_spec(spec);
  ASSERT_EQ(t.rows.size(), 30u);
  EXPECT_EQ(t.sequence, "adversarial");
  for (const auto& r : t.rows) EXPECT_GE(r.serve + r.migrate, 2);
}

TEST(Experiment, RunManyKeepsOrder) {
  std::vector<RunSpec> specs;
  for (int n : {3, 5, 7, 9}) {
    RunSpec s;
    s.gen = "ladder:n=" + std::to_string(n);
    specs.push_back(s);
  }
  auto par = run_many(specs, 3);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    EXPECT_EQ(par[i].size_param, 3 + 2 * static_cast<int>(i));
    EXPECT_EQ(par[i].to_csv(), run_spec(specs[i]).to_csv());
  }
}

TEST(Scaling, NeedsThreeSizes) {
  RunSpec s;
  s.gen = "ladder:n=4";
  auto t = run_spec(s);
  expect_error(ErrorCode::InsufficientData, [&] { scaling_fit({t, t, t}); });
}

TEST(Scaling, CycleBaselineBounded) {
  std::vector<RunSpec> specs;
  for (int n : {8, 16, 32})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      RunSpec s;
      s.algorithm = "cycle";
      s.gen = "cycle:n=" + std::to_string(n);
      s.seed = seed;
      specs.push_back(s);
    }
  auto rep = scaling_fit(run_many(specs, 2));
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_TRUE(rep.bounded) << rep.to_text();
}

TEST(GraphIo, InstanceRoundTrip) {
  auto inst = make_instance("ladder:n=5,density=0.7", 3);
  auto back = instance_from_json(instance_to_json(inst));
  EXPECT_EQ(back.graph, inst.graph);
  EXPECT_EQ(back.truth, inst.truth);
  EXPECT_EQ(back.n, inst.n);
}

TEST(GraphIo, EmbeddingRoundTrip) {
  EmbeddingFile e{{{1, {1, 1}}, {2, {1, 2}}, {3, {2, 1}}}, {{1, 3}}};
  auto back = embedding_from_json(embedding_to_json(e));
  EXPECT_EQ(back.phi, e.phi);
  EXPECT_EQ(back.spines, e.spines);
}

TEST(GraphIo, RejectsMalformed) {
  using nlohmann::json;
  for (const char* text : {R"([1,2])", R"({"edges":[]})", R"({"n":3,"edges":[[1,4]]})", R"({"n":3,"edges":[[1,1]]})",
                           R"({"n":3,"edges":[[1]]})", R"({"n":2,"edges":[],"ground_truth":[[1,3,1]]})"})
    expect_error(ErrorCode::ParseError, [&] { instance_from_json(json::parse(text)); });
  expect_error(ErrorCode::ParseError, [] { embedding_from_json(nlohmann::json::parse(R"({"embedding":[[1,1,1],[1,2,2]]})")); });
  expect_error(ErrorCode::ParseError, [] { read_instance("/nonexistent/instance.json"); });
}

TEST(GraphIo, FileRoundTrip) {
  auto path = (std::filesystem::temp_directory_path() / "ladder_io_test.json").string();
  auto inst = make_instance("cycle:n=7", 5);
  write_instance(inst, path);
  EXPECT_EQ(read_instance(path).graph, inst.graph);
  std::remove(path.c_str());
}
