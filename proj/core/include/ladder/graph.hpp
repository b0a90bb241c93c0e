#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ladder/types.hpp"

namespace ladder {

// Small undirected simple graph with ordered adjacency, so every traversal is
// deterministic. Node ids need not be contiguous.
class Graph {
 public:
  Graph() = default;
  Graph(const std::vector<NodeId>& nodes, const std::vector<Edge>& edges);

  void add_node(NodeId v);
  // Adds both endpoints if missing. Throws SelfLoop on u == v.
  void add_edge(NodeId u, NodeId v);
  void add_edge(const Edge& e) { add_edge(e.a, e.b); }
  void remove_edge(NodeId u, NodeId v);
  void remove_node(NodeId v);

  bool has_node(NodeId v) const { return adj_.count(v) != 0; }
  bool has_edge(NodeId u, NodeId v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

  const std::set<NodeId>& neighbors(NodeId v) const;
  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<NodeId> nodes() const;
  std::vector<Edge> edges() const;
  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  NodeId min_node() const { return adj_.begin()->first; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::map<NodeId, std::set<NodeId>> adj_;
  std::size_t edge_count_ = 0;
};

Graph induced_subgraph(const Graph& g, const std::set<NodeId>& keep);
Graph without_nodes(const Graph& g, const std::set<NodeId>& drop);

// Components sorted by their smallest node; nodes inside sorted ascending.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// A "line graph" in the ladder sense: a simple path (a single node counts).
bool is_line_graph(const Graph& g);
// Nodes of a line graph listed from `start` (must be an end), or from the
// smaller end when start is absent.
std::vector<NodeId> line_order(const Graph& g, std::optional<NodeId> start = std::nullopt);

std::map<NodeId, int> bfs_distances(const Graph& g, NodeId src);
// Unique path in a tree (or a shortest path in general), both ends included.
std::vector<NodeId> shortest_path(const Graph& g, NodeId from, NodeId to);

// Canonical fixtures. Ladder node (side s, level l) gets id 2*(l-1)+s.
Graph make_ladder(int levels);
NodeId ladder_id(int side, int level);
LadderCoord ladder_coord_of(NodeId id);
Graph make_path(int k, NodeId first = 1);
Graph make_cycle(int k, NodeId first = 1);
Graph make_complete(int k, NodeId first = 1);
Graph make_star(int leaves, NodeId center = 1);

}  // namespace ladder
