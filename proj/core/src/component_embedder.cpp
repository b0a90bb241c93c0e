#include <algorithm>

#include "ladder/static_embedder.hpp"

namespace ladder {

namespace {

double mean_rank(const std::vector<NodeId>& nodes, const Hint& hint) {
  double sum = 0;
  int cnt = 0;
  for (NodeId v : nodes) {
    auto it = hint.find(v);
    if (it == hint.end()) continue;
    sum += it->second;
    ++cnt;
  }
  return cnt ? sum / cnt : 0.0;
}

void orient_chain(CycleTreeChain& chain, std::optional<NodeId> left, std::optional<NodeId> right,
                  const Hint* hint) {
  int last = static_cast<int>(chain.parts.size()) - 1;
  if (left) {
    int p = chain.part_of(*left);
    if (p == last && last > 0) chain.reverse();
    if (chain.part_of(*left) != 0)
      throw LadderError(ErrorCode::InfeasibleConstraints, "left node " + std::to_string(*left) + " is inside the chain");
  }
  if (right) {
    int p = chain.part_of(*right);
    if (p == 0 && last > 0 && !left) chain.reverse();
    if (chain.part_of(*right) != last)
      throw LadderError(ErrorCode::InfeasibleConstraints,
                        "right node " + std::to_string(*right) + " is not in the last chain part");
  }
  if (!left && !right && hint && last > 0 &&
      mean_rank(chain.parts.front().nodes, *hint) > mean_rank(chain.parts.back().nodes, *hint))
    chain.reverse();
}

}  // namespace

ComponentEmbedding component_embedding_left_fixed(const Graph& s, std::optional<NodeId> left,
                                                  std::optional<NodeId> right, std::optional<LadderCoord> leftImage,
                                                  const Hint* hint, const std::set<Edge>& prefer_drop,
                                                  const std::set<Edge>& dormant) {
  if (s.empty()) throw LadderError(ErrorCode::EmptyGraph, "component has no nodes");
  for (auto x : {left, right})
    if (x && !s.has_node(*x)) throw LadderError(ErrorCode::UndefinedNode, "end node " + std::to_string(*x));
  if (!is_connected(s)) throw LadderError(ErrorCode::InfeasibleConstraints, "component is not connected");
  LadderCoord base = leftImage.value_or(LadderCoord{1, 1});

  ComponentEmbedding out;
  out.prep = preprocess(s, prefer_drop, dormant);
  const Graph& g = out.prep.graph;
  out.chain = cycle_tree_chain(g);
  orient_chain(out.chain, left, right, hint);

  const auto& parts = out.chain.parts;
  const auto& links = out.chain.links;
  std::size_t last = parts.size() - 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::optional<NodeId> lo = i == 0 ? left : std::optional<NodeId>(links[i - 1].second);
    LadderCoord img = base;
    if (i > 0) {
      const LadderCoord& u = out.phi.at(links[i - 1].first);
      img = {u.level + 1, u.side};
    }
    const ChainPart& part = parts[i];
    if (part.is_cycle()) {
      std::optional<NodeId> hi = i == last ? right : std::optional<NodeId>(links[i].first);
      for (const auto& [v, c] : cycle_embedding(part.cycle, lo, hi, img, hint)) out.phi[v] = c;
      continue;
    }
    Graph cur = induced_subgraph(g, std::set<NodeId>(part.nodes.begin(), part.nodes.end()));
    std::optional<NodeId> hi = right;
    if (i != last) {
      cur.add_edge(links[i].first, links[i].second);
      hi = links[i].second;
    }
    TreeEmbedding te = tree_layout(cur, lo, hi, img, hint);
    for (const auto& [v, c] : te.phi)
      if (part.contains(v)) out.phi[v] = c;
    out.trees.push_back(std::move(te.layout));
  }
  if (out.phi.size() != g.node_count())
    throw LadderError(ErrorCode::InvariantViolation, "component embedding left nodes unplaced");
  return out;
}

ComponentEmbedding component_embedding_right_fixed(const Graph& s, std::optional<NodeId> left,
                                                   std::optional<NodeId> right,
                                                   std::optional<LadderCoord> rightImage, const Hint* hint) {
  LadderCoord img = rightImage.value_or(LadderCoord{1, 1});
  Hint flipped;
  if (hint)
    for (const auto& [v, r] : *hint) flipped[v] = -r;
  ComponentEmbedding out = component_embedding_left_fixed(s, right, left, img, hint ? &flipped : nullptr);
  for (auto& [v, c] : out.phi) c.level = 2 * img.level - c.level;
  out.chain.reverse();
  std::reverse(out.trees.begin(), out.trees.end());
  for (auto& t : out.trees) {
    std::reverse(t.spine.begin(), t.spine.end());
    std::reverse(t.attached.begin(), t.attached.end());
    std::reverse(t.first_hand_dir.begin(), t.first_hand_dir.end());
    for (int& d : t.first_hand_dir) d = -d;
  }
  return out;
}

}  // namespace ladder
