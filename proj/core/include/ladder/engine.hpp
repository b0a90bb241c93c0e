#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ladder/core_model.hpp"
#include "ladder/invariants.hpp"
#include "ladder/static_embedder.hpp"
#include "ladder/types.hpp"

namespace ladder {

// Reasons a node may move, highest attribution priority first.
enum class Scenario {
  FirstTimeOnACycle = 0,
  CycleInTheFrame,
  InnerSimpleGraphReorienting,
  NoMoreAnExitGraph,
  NewDegreeThreeNode,
  ConnectivityComponentMovement,
};
inline constexpr int kScenarioCount = 6;
const char* scenario_name(Scenario s);

struct ScenarioCounters {
  std::map<NodeId, std::array<int, kScenarioCount>> per_node;
  std::array<std::int64_t, kScenarioCount> cost{};  // inversions charged to each scenario
  std::int64_t unattributed = 0;                    // inversions no scenario explains

  int count(NodeId v, Scenario s) const;
  int max_count(Scenario s) const;
  std::int64_t total_charged() const;
  // Scenario events over all nodes; each may move its node by O(n) positions,
  // so 2n * tags() bounds the migration cost of a run.
  std::int64_t tags() const;
};

struct StepReport {
  std::size_t index = 0;
  Edge request;
  bool known = false;
  std::string case_name;
  int serve_cost = 0;
  std::int64_t migration_cost = 0;
  std::vector<std::pair<NodeId, Scenario>> scenarios;  // nodes charged this step
  std::int64_t unattributed = 0;
  bool invariants_checked = false;
  bool invariants_ok = true;
  std::vector<std::string> violations;
  int max_revealed_stretch = 0;
  int max_maintained_stretch = 0;
};

struct EngineOptions {
  bool check_invariants = true;
  // Throw InvariantViolation (with the failure list) instead of only
  // reporting it.
  bool strict = false;
  // Testing aid: after this many processed requests, corrupt one embedding.
  std::optional<std::size_t> inject_fault_after;
};

// Online ladder engine. Nodes are 1..n and start as singletons in id order.
class LadderEngine {
 public:
  explicit LadderEngine(int n, EngineOptions opts = {});

  // Throws SelfLoop for u == v and UndefinedNode outside [1, n].
  StepReport process_request(NodeId u, NodeId v);

  // The two halves of process_request for a new edge, exposed for scripted
  // scenarios. Each throws InfeasibleConstraints when the edge is already
  // revealed or its endpoints are in the wrong number of components.
  StepReport process_edge_one_component(NodeId u, NodeId v);
  StepReport process_edge_two_components(NodeId u, NodeId v);
  // Two-component case where the joining component is a line graph hung on a
  // cycle node between two chain parts. Throws NotALineGraph otherwise.
  StepReport add_inner_whisker(NodeId cycle_node, NodeId whisker_node);

  int node_count() const { return n_; }
  const LineConfig& line() const { return line_; }
  const std::set<Edge>& revealed() const { return revealed_; }
  const std::set<Edge>& ignored() const { return ignored_; }
  const std::set<Edge>& phantom() const { return phantom_; }
  const ScenarioCounters& counters() const { return counters_; }
  std::size_t steps() const { return steps_; }

  int component_of(NodeId v) const;
  std::vector<int> component_labels() const;  // in line order
  const std::set<NodeId>& component_nodes(int label) const;
  const Graph& maintained(int label) const;
  const QuasiEmbedding& embedding(int label) const;
  const std::vector<TreeLayout>& tree_layouts(int label) const;

  InvariantReport check_invariants() const;

 private:
  struct Component {
    std::set<NodeId> nodes;
    Graph maintained;
    QuasiEmbedding phi;
    CycleTreeChain chain;
    std::vector<TreeLayout> trees;
  };

  struct Snapshot;
  StepReport finish(StepReport r, const Snapshot& before, const std::set<NodeId>& moved_small);
  void reembed(int label, const Graph& g, const std::set<Edge>& prefer_drop);
  void rebuild_line();
  void validate(NodeId u, NodeId v) const;
  const Component& comp(int label) const;

  int n_;
  EngineOptions opts_;
  std::set<Edge> revealed_, ignored_, phantom_;
  std::vector<int> label_of_;           // node -> component label
  std::map<int, Component> comps_;      // label -> component
  std::vector<int> blocks_;             // labels in line order
  LineConfig line_;
  ScenarioCounters counters_;
  std::set<NodeId> ever_on_cycle_;
  std::size_t steps_ = 0;
};

}  // namespace ladder
