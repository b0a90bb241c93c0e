#include "ladder/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ladder {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UndefinedNode: return "UNDEFINED_NODE";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::EmptyGraph: return "EMPTY_GRAPH";
    case ErrorCode::NotATree: return "NOT_A_TREE";
    case ErrorCode::EmptyCore: return "EMPTY_CORE";
    case ErrorCode::CycleTooShort: return "CYCLE_TOO_SHORT";
    case ErrorCode::UncompletedFrame: return "UNCOMPLETED_FRAME";
    case ErrorCode::EdgeNotInComponent: return "EDGE_NOT_IN_COMPONENT";
    case ErrorCode::NoValidOrientation: return "NO_VALID_ORIENTATION";
    case ErrorCode::InfeasibleConstraints: return "INFEASIBLE_CONSTRAINTS";
    case ErrorCode::EnsureFailed: return "ENSURE_FAILED";
    case ErrorCode::SelfLoop: return "SELF_LOOP";
    case ErrorCode::InvariantViolation: return "INVARIANT_VIOLATION";
    case ErrorCode::NodeSetMismatch: return "NODE_SET_MISMATCH";
    case ErrorCode::UnplacedNode: return "UNPLACED_NODE";
    case ErrorCode::NotACycleEdge: return "NOT_A_CYCLE_EDGE";
    case ErrorCode::InsufficientData: return "INSUFFICIENT_DATA";
    case ErrorCode::NotALineGraph: return "NOT_A_LINE_GRAPH";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

LadderError::LadderError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

std::string to_string(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.a << "," << e.b << ")";
  return os.str();
}

std::string to_string(const LadderCoord& c) {
  std::ostringstream os;
  os << "(level " << c.level << ", side " << c.side << ")";
  return os.str();
}

Graph::Graph(const std::vector<NodeId>& nodes, const std::vector<Edge>& edges) {
  for (NodeId v : nodes) add_node(v);
  for (const Edge& e : edges) add_edge(e);
}

void Graph::add_node(NodeId v) { adj_[v]; }

void Graph::add_edge(NodeId u, NodeId v) {
  if (u == v) throw LadderError(ErrorCode::SelfLoop, "self loop at node " + std::to_string(u));
  auto& nu = adj_[u];
  auto& nv = adj_[v];
  if (nu.insert(v).second) {
    nv.insert(u);
    ++edge_count_;
  }
}

void Graph::remove_edge(NodeId u, NodeId v) {
  auto it = adj_.find(u);
  if (it == adj_.end()) return;
  if (it->second.erase(v)) {
    adj_[v].erase(u);
    --edge_count_;
  }
}

void Graph::remove_node(NodeId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (NodeId w : it->second) adj_[w].erase(v);
  edge_count_ -= it->second.size();
  adj_.erase(it);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<NodeId>& Graph::neighbors(NodeId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw LadderError(ErrorCode::UndefinedNode, "node " + std::to_string(v));
  return it->second;
}

std::vector<NodeId> Graph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, ns] : adj_)
    for (NodeId w : ns)
      if (v < w) out.emplace_back(v, w);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::set<NodeId>& keep) {
  Graph out;
  for (NodeId v : keep) {
    if (!g.has_node(v)) continue;
    out.add_node(v);
    for (NodeId w : g.neighbors(v))
      if (v < w && keep.count(w)) out.add_edge(v, w);
  }
  return out;
}

Graph without_nodes(const Graph& g, const std::set<NodeId>& drop) {
  std::set<NodeId> keep;
  for (NodeId v : g.nodes())
    if (!drop.count(v)) keep.insert(v);
  return induced_subgraph(g, keep);
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> out;
  std::set<NodeId> seen;
  for (NodeId s : g.nodes()) {
    if (seen.count(s)) continue;
    std::vector<NodeId> comp;
    std::deque<NodeId> q{s};
    seen.insert(s);
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (NodeId w : g.neighbors(v))
        if (seen.insert(w).second) q.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return !g.empty() && is_connected(g) && g.edge_count() + 1 == g.node_count();
}

bool is_line_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (NodeId v : g.nodes())
    if (g.degree(v) > 2) return false;
  return true;
}

std::vector<NodeId> line_order(const Graph& g, std::optional<NodeId> start) {
  if (!is_line_graph(g)) throw LadderError(ErrorCode::NotALineGraph, "line_order on a non-path");
  NodeId s = 0;
  if (start) {
    s = *start;
    if (g.degree(s) > 1) throw LadderError(ErrorCode::NotALineGraph, "line_order start is not an end");
  } else {
    bool found = false;
    for (NodeId v : g.nodes())
      if (g.degree(v) <= 1) {
        s = v;
        found = true;
        break;
      }
    if (!found) s = g.min_node();
  }
  std::vector<NodeId> out{s};
  NodeId prev = s;
  NodeId cur = s;
  while (true) {
    NodeId next = 0;
    bool moved = false;
    for (NodeId w : g.neighbors(cur))
      if (w != prev) {
        next = w;
        moved = true;
      }
    if (!moved || (out.size() > 1 && next == prev)) break;
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

std::map<NodeId, int> bfs_distances(const Graph& g, NodeId src) {
  std::map<NodeId, int> dist;
  if (!g.has_node(src)) throw LadderError(ErrorCode::UndefinedNode, "bfs source " + std::to_string(src));
  std::deque<NodeId> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop_front();
    for (NodeId w : g.neighbors(v))
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

std::vector<NodeId> shortest_path(const Graph& g, NodeId from, NodeId to) {
  std::map<NodeId, NodeId> parent;
  std::deque<NodeId> q{from};
  parent[from] = from;
  while (!q.empty() && !parent.count(to)) {
    NodeId v = q.front();
    q.pop_front();
    for (NodeId w : g.neighbors(v))
      if (!parent.count(w)) {
        parent[w] = v;
        q.push_back(w);
      }
  }
  if (!parent.count(to)) return {};
  std::vector<NodeId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

NodeId ladder_id(int side, int level) { return 2 * (level - 1) + side; }

LadderCoord ladder_coord_of(NodeId id) { return {(id - 1) / 2 + 1, (id - 1) % 2 + 1}; }

Graph make_ladder(int levels) {
  Graph g;
  for (int l = 1; l <= levels; ++l) {
    g.add_edge(ladder_id(1, l), ladder_id(2, l));
    if (l > 1) {
      g.add_edge(ladder_id(1, l - 1), ladder_id(1, l));
      g.add_edge(ladder_id(2, l - 1), ladder_id(2, l));
    }
  }
  return g;
}

Graph make_path(int k, NodeId first) {
  Graph g;
  for (int i = 0; i < k; ++i) g.add_node(first + i);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(first + i, first + i + 1);
  return g;
}

Graph make_cycle(int k, NodeId first) {
  Graph g = make_path(k, first);
  if (k >= 3) g.add_edge(first, first + k - 1);
  return g;
}

Graph make_complete(int k, NodeId first) {
  Graph g;
  for (int i = 0; i < k; ++i) g.add_node(first + i);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(first + i, first + j);
  return g;
}

Graph make_star(int leaves, NodeId center) {
  Graph g;
  g.add_node(center);
  for (int i = 1; i <= leaves; ++i) g.add_edge(center, center + i);
  return g;
}

}  // namespace ladder
