#include "ladder/tree_analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace ladder {

std::set<NodeId> support_nodes(const Graph& tree) {
  std::set<NodeId> out;
  if (tree.empty()) return out;
  std::set<NodeId> deg3;
  for (NodeId v : tree.nodes())
    if (tree.degree(v) >= 3) deg3.insert(v);
  if (deg3.empty()) return out;

  for (NodeId v : deg3) {
    bool lonely = true;
    for (NodeId w : tree.neighbors(v))
      if (deg3.count(w)) lonely = false;
    if (lonely) out.insert(v);
  }

  // subtree counts of degree-3 nodes from an arbitrary root
  NodeId root = tree.min_node();
  std::map<NodeId, NodeId> parent{{root, root}};
  std::vector<NodeId> order{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (NodeId w : tree.neighbors(order[i]))
      if (!parent.count(w)) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::map<NodeId, int> cnt;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    cnt[v] += deg3.count(v) ? 1 : 0;
    if (v != root) cnt[parent[v]] += cnt[v];
  }
  int total = static_cast<int>(deg3.size());
  for (NodeId v : order) {
    int branches = 0;
    for (NodeId w : tree.neighbors(v)) {
      int c = (w != root && parent[w] == v) ? cnt[w] : total - cnt[v];
      if (c > 0) ++branches;
    }
    if (branches >= 2) out.insert(v);
  }
  return out;
}

namespace {

NodeId farthest_in(const Graph& tree, NodeId from, const std::set<NodeId>& among) {
  auto dist = bfs_distances(tree, from);
  NodeId best = from;
  int bd = -1;
  for (NodeId v : among)
    if (dist[v] > bd) {
      bd = dist[v];
      best = v;
    }
  return best;
}

}  // namespace

TrunkCore trunk_core(const Graph& tree, const std::vector<NodeId>& attachments) {
  if (!is_tree(tree)) throw LadderError(ErrorCode::NotATree, "trunk_core needs a tree");
  TrunkCore tc;
  tc.support = support_nodes(tree);
  if (tc.support.size() == 1) {
    tc.path = {*tc.support.begin()};
  } else if (tc.support.size() >= 2) {
    NodeId a = farthest_in(tree, *tc.support.begin(), tc.support);
    NodeId b = farthest_in(tree, a, tc.support);
    tc.path = shortest_path(tree, a, b);
  }

  std::set<NodeId> core_set(tc.path.begin(), tc.path.end());
  for (NodeId x : attachments) {
    if (!tree.has_node(x)) throw LadderError(ErrorCode::UndefinedNode, "attachment " + std::to_string(x));
    if (core_set.empty()) {
      tc.extensions.push_back({x});
      continue;
    }
    NodeId c = tc.path.front();
    auto dist = bfs_distances(tree, x);
    int bd = 1 << 30;
    for (NodeId v : tc.path)
      if (dist[v] < bd) {
        bd = dist[v];
        c = v;
      }
    tc.extensions.push_back(shortest_path(tree, x, c));
  }

  if (attachments.empty()) {
    tc.extended = tc.path;
  } else if (attachments.size() >= 2) {
    tc.extended = shortest_path(tree, attachments[0], attachments[1]);
  } else if (tc.path.empty()) {
    tc.extended = {attachments[0]};
  } else {
    auto dist = bfs_distances(tree, attachments[0]);
    NodeId far = dist[tc.path.front()] >= dist[tc.path.back()] ? tc.path.front() : tc.path.back();
    tc.extended = shortest_path(tree, attachments[0], far);
  }
  return tc;
}

std::vector<SimpleGraph> classify_attached(const Graph& tree, const std::vector<NodeId>& spine) {
  if (spine.empty()) throw LadderError(ErrorCode::EmptyCore, "no spine to classify against");
  std::map<NodeId, int> spine_pos;
  for (std::size_t i = 0; i < spine.size(); ++i) spine_pos[spine[i]] = static_cast<int>(i);
  std::set<NodeId> spine_set(spine.begin(), spine.end());
  Graph rest = without_nodes(tree, spine_set);

  std::vector<SimpleGraph> out;
  for (const auto& comp : connected_components(rest)) {
    SimpleGraph sg;
    sg.nodes = comp;
    bool found = false;
    for (NodeId v : comp) {
      for (NodeId w : tree.neighbors(v))
        if (spine_set.count(w)) {
          sg.head = v;
          sg.foot = w;
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) continue;  // detached from the spine; not part of this tree
    Graph piece = induced_subgraph(rest, std::set<NodeId>(comp.begin(), comp.end()));
    sg.line = is_line_graph(piece);
    int hd = piece.degree(sg.head);
    sg.handedness = hd == 0 ? Handedness::Zero : hd == 1 ? Handedness::One : Handedness::Two;
    Graph arms = without_nodes(piece, {sg.head});
    for (NodeId w : piece.neighbors(sg.head)) {
      std::set<NodeId> part;
      for (const auto& [x, d] : bfs_distances(arms, w)) part.insert(x);
      Graph hand = induced_subgraph(arms, part);
      if (is_line_graph(hand) && hand.degree(w) <= 1) {
        sg.hands.push_back(line_order(hand, w));
      } else {
        sg.line = false;
        sg.hands.emplace_back(part.begin(), part.end());
      }
    }
    int fp = spine_pos[sg.foot];
    sg.kind = (fp == 0 || fp == static_cast<int>(spine.size()) - 1) ? SimpleKind::Exit : SimpleKind::Inner;
    out.push_back(std::move(sg));
  }
  std::sort(out.begin(), out.end(), [&](const SimpleGraph& x, const SimpleGraph& y) {
    int px = spine_pos[x.foot], py = spine_pos[y.foot];
    return px != py ? px < py : x.head < y.head;
  });
  return out;
}

std::vector<SimpleGraph> classify_simple_graphs(const Graph& tree, const TrunkCore& core) {
  if (core.path.empty()) throw LadderError(ErrorCode::EmptyCore, "tree has no trunk core");
  return classify_attached(tree, core.path);
}

bool is_monotone_embedding(const std::vector<NodeId>& path, const QuasiEmbedding& phi) {
  std::map<int, std::vector<int>> by_level;
  for (std::size_t i = 0; i < path.size(); ++i) {
    auto it = phi.find(path[i]);
    if (it == phi.end()) throw LadderError(ErrorCode::UndefinedNode, "path node " + std::to_string(path[i]));
    by_level[it->second.level].push_back(static_cast<int>(i));
  }
  for (const auto& [lvl, idx] : by_level)
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (std::abs(idx[a] - idx[b]) > 1) return false;
  return true;
}

std::vector<std::string> septum_violations(const Graph& tree, const std::vector<NodeId>& spine,
                                           const QuasiEmbedding& phi) {
  std::vector<std::string> out;
  if (spine.size() < 3) return out;
  std::map<NodeId, int> spine_pos;
  for (std::size_t i = 0; i < spine.size(); ++i) spine_pos[spine[i]] = static_cast<int>(i);

  auto graphs = classify_attached(tree, spine);
  std::multimap<int, NodeId> by_level;
  for (const auto& [v, c] : phi) by_level.emplace(c.level, v);

  for (const auto& g : graphs) {
    if (g.kind != SimpleKind::Inner) continue;
    const LadderCoord& fc = phi.at(g.foot);
    const LadderCoord& hc = phi.at(g.head);
    std::ostringstream os;
    if (hc.level != fc.level || hc.side == fc.side) {
      os << "head " << g.head << " not opposite its foot " << g.foot;
      out.push_back(os.str());
      continue;
    }
    std::set<NodeId> allowed{g.foot, g.head};
    for (const auto& h : graphs) {
      if (h.kind != SimpleKind::Inner || h.hands.empty()) continue;
      if (std::abs(spine_pos[h.foot] - spine_pos[g.foot]) != 1) continue;
      for (const auto& hand : h.hands)
        if (!hand.empty()) allowed.insert(hand.front());
    }
    auto [lo, hi] = by_level.equal_range(fc.level);
    for (auto it = lo; it != hi; ++it)
      if (!allowed.count(it->second)) {
        std::ostringstream msg;
        msg << "node " << it->second << " on septum level " << fc.level << " of foot " << g.foot;
        out.push_back(msg.str());
      }
  }
  return out;
}

}  // namespace ladder
