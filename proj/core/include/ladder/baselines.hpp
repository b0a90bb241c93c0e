#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ladder/core_model.hpp"
#include "ladder/engine.hpp"
#include "ladder/graph.hpp"

namespace ladder {

// Something that lays a graph out on a line with stretch at most
// lambda * Bandwidth. `embed` returns an order of all nodes of its argument.
struct BandwidthOracle {
  std::string name;
  double lambda = 1.0;
  std::function<std::vector<NodeId>(const Graph&)> embed;
};

// Bandwidth-optimal orders by exhaustive search; embed throws TooLarge above
// `cap` nodes.
BandwidthOracle exact_oracle(int cap = kDefaultExactCap);

std::vector<std::string> oracle_names();
// Nullopt for unknown names.
std::optional<BandwidthOracle> make_oracle(const std::string& name);

// Common face of every online algorithm the harness can drive. Nodes are
// 1..n and start on the line in id order.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual StepReport step(NodeId u, NodeId v) = 0;
  virtual const LineConfig& line() const = 0;
  virtual std::string name() const = 0;
};

// Demand graph C_n. Path components are dragged together smaller-onto-larger
// until the closing edge arrives; then one reconfiguration to the fold
// i -> 2i-1 (i <= ceil(n/2)), i -> 2(n-i+1) along the cycle, after which every
// cycle edge has stretch <= 2. Throws NotACycleEdge for requests that cannot
// belong to a Hamiltonian cycle on 1..n.
class CycleAlgorithm : public OnlineAlgorithm {
 public:
  explicit CycleAlgorithm(int n);
  StepReport step(NodeId u, NodeId v) override;
  const LineConfig& line() const override { return line_; }
  std::string name() const override { return "cycle"; }
  bool closed() const { return closed_; }

 private:
  void rebuild();

  int n_;
  std::vector<std::vector<NodeId>> blocks_;  // paths in line order
  std::vector<int> block_of_;
  std::set<Edge> revealed_;
  bool closed_ = false;
  LineConfig line_;
  std::size_t steps_ = 0;
};

// Rotates each node of an n-cycle given in path order to its folded position.
// Returns the line order; fold_positions gives the 1-based position per path
// index.
std::vector<int> fold_positions(int n);
std::vector<NodeId> fold_order(const std::vector<NodeId>& path);

// Any demand graph: known edges are served in place, a new edge triggers a
// move to oracle(S_i) where S_i holds every node and the revealed edges.
class GeneralAlgorithm : public OnlineAlgorithm {
 public:
  GeneralAlgorithm(int n, BandwidthOracle oracle);
  StepReport step(NodeId u, NodeId v) override;
  const LineConfig& line() const override { return line_; }
  std::string name() const override { return "general"; }

 private:
  int n_;
  BandwidthOracle oracle_;
  Graph revealed_;
  LineConfig line_;
  std::size_t steps_ = 0;
};

// LadderEngine behind the common interface.
class LadderAlgorithm : public OnlineAlgorithm {
 public:
  LadderAlgorithm(int n, EngineOptions opts = {}) : engine_(n, opts) {}
  StepReport step(NodeId u, NodeId v) override { return engine_.process_request(u, v); }
  const LineConfig& line() const override { return engine_.line(); }
  std::string name() const override { return "ladder"; }
  const LadderEngine& engine() const { return engine_; }

 private:
  LadderEngine engine_;
};

// The edge of g with the largest stretch under `line` (smallest edge on
// ties). Throws EmptyGraph when g has no edges.
Edge adversary_next(const LineConfig& line, const Graph& g);

}  // namespace ladder
