#pragma once

#include <set>
#include <string>
#include <vector>

#include "ladder/graph.hpp"
#include "ladder/types.hpp"

namespace ladder {

struct TrunkCore {
  std::vector<NodeId> path;      // may be empty or a single node
  std::set<NodeId> support;      // every support node lies on path
  // Paths from each supplied attachment node to the nearest core node (both
  // ends included). With an empty core the path leads to the other
  // attachment, or is just the attachment itself.
  std::vector<std::vector<NodeId>> extensions;
  // Core joined with its extensions into one path; equals `path` when no
  // attachments were supplied.
  std::vector<NodeId> extended;

  bool has_core() const { return path.size() >= 2; }
};

// Support node: a degree-3 node with no degree-3 neighbour, or a node lying
// strictly inside the tree path between two degree-3 nodes.
std::set<NodeId> support_nodes(const Graph& tree);

// Throws NotATree.
TrunkCore trunk_core(const Graph& tree, const std::vector<NodeId>& attachments = {});

enum class Handedness { Zero = 0, One = 1, Two = 2 };
enum class SimpleKind { Inner, Exit };

struct SimpleGraph {
  std::vector<NodeId> nodes;  // sorted
  NodeId head = 0;
  NodeId foot = 0;
  Handedness handedness = Handedness::Zero;
  // Each hand listed from the head outward (head excluded).
  std::vector<std::vector<NodeId>> hands;
  SimpleKind kind = SimpleKind::Inner;
  bool line = true;  // component is a path

  Edge leg() const { return Edge(foot, head); }
};

// Components of tree minus `spine`, attached to spine nodes. Feet at the two
// spine ends give exit graphs, all others are inner. Throws EmptyCore for an
// empty spine.
std::vector<SimpleGraph> classify_attached(const Graph& tree, const std::vector<NodeId>& spine);
std::vector<SimpleGraph> classify_simple_graphs(const Graph& tree, const TrunkCore& core);

// No two path nodes that are not consecutive share a level.
bool is_monotone_embedding(const std::vector<NodeId>& path, const QuasiEmbedding& phi);

// Septum check for line graphs hanging off inner spine nodes: the head sits on
// its foot's level, and besides foot and head that level may only hold the
// first hand node of a graph whose foot is a spine neighbour (two adjacent
// one-handed graphs whose hands cross). Every node placed in `phi` counts,
// so passing a whole component embedding also catches intruders from other
// chain parts. Returns readable violations, empty when the invariant holds.
std::vector<std::string> septum_violations(const Graph& tree, const std::vector<NodeId>& spine,
                                           const QuasiEmbedding& phi);

}  // namespace ladder
