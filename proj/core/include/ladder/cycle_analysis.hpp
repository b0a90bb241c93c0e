#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ladder/graph.hpp"
#include "ladder/types.hpp"

namespace ladder {

struct MaximalCycle {
  std::vector<NodeId> nodes;  // cyclic order, starting at the smallest id
  std::vector<Edge> chords;   // edges of g joining two non-consecutive cycle nodes

  std::size_t length() const { return nodes.size(); }
  bool contains(NodeId v) const;
  bool has_cycle_edge(const Edge& e) const;
  // Index of v in `nodes`, or -1.
  int index_of(NodeId v) const;
};

// Vertex sets of the 2-connected blocks with at least three nodes.
std::vector<std::vector<NodeId>> biconnected_blocks(const Graph& g);

// Boundary cycle of every nontrivial block. In a ladder subgraph a block is a
// 2 x k rectangle (possibly missing inner rungs), and its boundary is the
// unique vertex-maximal cycle; the present inner rungs are chords. Throws
// InvariantViolation for blocks that are not of this shape.
std::vector<MaximalCycle> maximal_cycles(const Graph& g);

// The maximal cycle through `through` when given (throws EdgeNotInComponent
// if that edge is not in g), else the one holding the smallest node.
std::optional<MaximalCycle> find_maximal_cycle(const Graph& component, std::optional<Edge> through = std::nullopt);

struct Whisker {
  NodeId foot = 0;
  std::vector<NodeId> nodes;  // from the node next to the foot outward
};

// Line-graph components of (component minus cycle) that meet the cycle in
// exactly one edge, each listed from the foot side.
std::vector<Whisker> whiskers_of(const MaximalCycle& cycle, const Graph& component);

struct Frame {
  MaximalCycle cycle;
  // For each pair of whiskers with adjacent feet, the matched prefixes.
  std::vector<std::pair<std::vector<NodeId>, std::vector<NodeId>>> paired;
  std::vector<Edge> completion;  // rungs (W1[i], W2[i])

  std::set<NodeId> nodes() const;
};

// Throws CycleTooShort for 4-cycles.
Frame frame_of(const MaximalCycle& cycle, const Graph& component);

// The completed frame as a cycle of g plus the completion edges.
MaximalCycle completed_cycle(const Frame& frame, const Graph& g);

struct PreprocessResult {
  Graph graph;               // maintained edges
  std::set<Edge> ignored;    // dropped 4-cycle edges
  std::set<Edge> phantom;    // added completion edges that were never revealed
  std::set<Edge> restored;   // completion edges taken back from `dormant`
};

// Drops one edge from every maximal 4-cycle (an edge in `prefer_drop` first,
// else the lexicographically smallest) and completes every frame, repeating
// until nothing changes. A completion edge found in `dormant` (previously
// ignored but revealed) is put back rather than invented.
PreprocessResult preprocess(const Graph& component, const std::set<Edge>& prefer_drop = {},
                            const std::set<Edge>& dormant = {});

// True iff some frame of a maximal cycle of length >= 6 still lacks a
// completion edge.
bool has_uncompleted_frame(const Graph& g);

struct ChainPart {
  enum class Kind { Tree, Cycle } kind = Kind::Tree;
  std::vector<NodeId> nodes;  // sorted
  MaximalCycle cycle;         // set for cycle parts

  bool is_cycle() const { return kind == Kind::Cycle; }
  bool contains(NodeId v) const;
};

struct CycleTreeChain {
  std::vector<ChainPart> parts;
  // links[i] = (node of parts[i], node of parts[i+1])
  std::vector<std::pair<NodeId, NodeId>> links;

  int part_of(NodeId v) const;  // -1 when absent
  void reverse();
};

// Throws UncompletedFrame when a frame is not completed, InvariantViolation
// when the parts do not line up into a chain.
CycleTreeChain cycle_tree_chain(const Graph& component);

}  // namespace ladder
