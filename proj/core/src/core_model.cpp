#include "ladder/core_model.hpp"

#include <algorithm>
#include <cstdlib>

namespace ladder {

namespace {

const LadderCoord& image_of(const QuasiEmbedding& phi, NodeId v) {
  auto it = phi.find(v);
  if (it == phi.end()) throw LadderError(ErrorCode::UndefinedNode, "no image for node " + std::to_string(v));
  return it->second;
}

bool edges_preserved(const Graph& g, const QuasiEmbedding& phi) {
  for (NodeId v : g.nodes()) image_of(phi, v);
  for (const Edge& e : g.edges())
    if (!ladder_adjacent(image_of(phi, e.a), image_of(phi, e.b))) return false;
  return true;
}

}  // namespace

bool is_correct_embedding(const Graph& g, const QuasiEmbedding& phi) {
  if (!edges_preserved(g, phi)) return false;
  std::set<LadderCoord> used;
  for (NodeId v : g.nodes()) {
    const LadderCoord& c = image_of(phi, v);
    if (c.side != 1 && c.side != 2) return false;
    if (!used.insert(c).second) return false;
  }
  return true;
}

std::map<int, int> level_loads(const QuasiEmbedding& phi) {
  std::map<int, int> load;
  for (const auto& [v, c] : phi) ++load[c.level];
  return load;
}

bool is_quasi_correct(const Graph& g, const QuasiEmbedding& phi) {
  if (!edges_preserved(g, phi)) return false;
  std::map<int, int> load;
  for (NodeId v : g.nodes()) {
    const LadderCoord& c = image_of(phi, v);
    if (c.side != 1 && c.side != 2) return false;
    if (++load[c.level] > 3) return false;
  }
  return true;
}

QuasiEmbedding normalize_levels(const QuasiEmbedding& phi, int base) {
  if (phi.empty()) return phi;
  int lo = phi.begin()->second.level;
  for (const auto& [v, c] : phi) lo = std::min(lo, c.level);
  QuasiEmbedding out;
  for (const auto& [v, c] : phi) out[v] = {c.level - lo + base, c.side};
  return out;
}

LineConfig::LineConfig(std::vector<NodeId> order) : order_(std::move(order)) {
  for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = static_cast<int>(i) + 1;
}

int LineConfig::position(NodeId v) const {
  auto it = pos_.find(v);
  if (it == pos_.end()) throw LadderError(ErrorCode::UnplacedNode, "node " + std::to_string(v) + " is not on the line");
  return it->second;
}

void LineConfig::set_spans(std::map<int, std::pair<int, int>> spans) { spans_ = std::move(spans); }

bool LineConfig::valid(std::optional<int> n) const {
  if (pos_.size() != order_.size()) return false;
  if (n) {
    if (static_cast<int>(order_.size()) != *n) return false;
    for (NodeId v : order_)
      if (v < 1 || v > *n) return false;
  }
  if (spans_.empty()) return true;
  std::vector<std::pair<int, int>> iv;
  for (const auto& [k, s] : spans_) iv.push_back(s);
  std::sort(iv.begin(), iv.end());
  int next = 1;
  for (const auto& [a, b] : iv) {
    if (a != next || b < a) return false;
    next = b + 1;
  }
  return next == static_cast<int>(order_.size()) + 1;
}

int bandwidth_of_config(const Graph& g, const LineConfig& c) {
  int best = 0;
  for (const Edge& e : g.edges()) best = std::max(best, std::abs(c.position(e.a) - c.position(e.b)));
  return best;
}

int bandwidth_of_order(const Graph& g, const std::vector<NodeId>& order) {
  return bandwidth_of_config(g, LineConfig(order));
}

bool subgraph_bandwidth_monotone_check(const Graph& g, const Graph& s, int cap) {
  return bandwidth_exact(s, cap) <= bandwidth_exact(g, cap);
}

}  // namespace ladder
