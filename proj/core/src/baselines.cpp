#include "ladder/baselines.hpp"

#include <algorithm>
#include <cstdlib>

#include "ladder/line_projection.hpp"

namespace ladder {

BandwidthOracle exact_oracle(int cap) {
  BandwidthOracle o;
  o.name = "exact";
  o.lambda = 1.0;
  o.embed = [cap](const Graph& g) { return bandwidth_exact_witness(g, cap).order; };
  return o;
}

std::vector<std::string> oracle_names() { return {"exact"}; }

std::optional<BandwidthOracle> make_oracle(const std::string& name) {
  if (name == "exact") return exact_oracle();
  return std::nullopt;
}

std::vector<int> fold_positions(int n) {
  std::vector<int> pos(n);
  int half = (n + 1) / 2;
  for (int i = 1; i <= n; ++i) pos[i - 1] = i <= half ? 2 * i - 1 : 2 * (n - i + 1);
  return pos;
}

std::vector<NodeId> fold_order(const std::vector<NodeId>& path) {
  auto pos = fold_positions(static_cast<int>(path.size()));
  std::vector<NodeId> out(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) out[pos[i] - 1] = path[i];
  return out;
}

CycleAlgorithm::CycleAlgorithm(int n) : n_(n), block_of_(n + 1, 0) {
  if (n < 3) throw LadderError(ErrorCode::CycleTooShort, "a cycle needs at least 3 nodes");
  for (NodeId v = 1; v <= n; ++v) {
    blocks_.push_back({v});
    block_of_[v] = v - 1;
  }
  rebuild();
}

void CycleAlgorithm::rebuild() {
  std::vector<NodeId> order;
  std::map<int, std::pair<int, int>> spans;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    int first = static_cast<int>(order.size()) + 1;
    for (NodeId v : blocks_[b]) {
      order.push_back(v);
      block_of_[v] = static_cast<int>(b);
    }
    spans[static_cast<int>(b)] = {first, static_cast<int>(order.size())};
  }
  line_ = LineConfig(std::move(order));
  line_.set_spans(std::move(spans));
}

StepReport CycleAlgorithm::step(NodeId u, NodeId v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw LadderError(ErrorCode::UndefinedNode, "request outside 1..n");
  if (u == v) throw LadderError(ErrorCode::SelfLoop, "request (" + std::to_string(u) + ", " + std::to_string(u) + ")");
  StepReport r;
  r.index = steps_++;
  r.request = Edge(u, v);
  if (revealed_.count(r.request)) {
    r.known = true;
    r.case_name = "known";
    r.serve_cost = serve_cost(line_, u, v);
    return r;
  }
  auto not_cycle = [&] {
    return LadderError(ErrorCode::NotACycleEdge, "edge " + to_string(r.request) + " cannot lie on the cycle");
  };
  if (closed_) throw not_cycle();
  int bu = block_of_[u], bv = block_of_[v];
  auto is_end = [&](NodeId x, int b) { return blocks_[b].front() == x || blocks_[b].back() == x; };
  if (!is_end(u, bu) || !is_end(v, bv)) throw not_cycle();

  std::vector<NodeId> before = line_.order();
  if (bu == bv) {
    if (static_cast<int>(blocks_[bu].size()) != n_) throw not_cycle();
    blocks_ = {fold_order(blocks_[bu])};
    closed_ = true;
    r.case_name = "close";
  } else {
    const auto& a = blocks_[bu];
    const auto& b = blocks_[bv];
    bool a_big = a.size() != b.size() ? a.size() > b.size() : *std::min_element(a.begin(), a.end()) <
                                                                  *std::min_element(b.begin(), b.end());
    int big = a_big ? bu : bv, small = a_big ? bv : bu;
    NodeId p = a_big ? u : v, q = a_big ? v : u;
    std::vector<NodeId> s = blocks_[small];
    std::vector<NodeId> merged = blocks_[big];
    if (merged.back() == p) {
      if (s.front() != q) std::reverse(s.begin(), s.end());
      merged.insert(merged.end(), s.begin(), s.end());
    } else {
      if (s.back() != q) std::reverse(s.begin(), s.end());
      merged.insert(merged.begin(), s.begin(), s.end());
    }
    blocks_[big] = std::move(merged);
    blocks_.erase(blocks_.begin() + small);
    r.case_name = "merge";
  }
  revealed_.insert(r.request);
  rebuild();
  r.migration_cost = inversion_cost(before, line_.order());
  r.serve_cost = serve_cost(line_, u, v);
  return r;
}

GeneralAlgorithm::GeneralAlgorithm(int n, BandwidthOracle oracle) : n_(n), oracle_(std::move(oracle)) {
  std::vector<NodeId> order;
  for (NodeId v = 1; v <= n; ++v) {
    revealed_.add_node(v);
    order.push_back(v);
  }
  line_ = LineConfig(std::move(order));
  line_.set_spans({{0, {1, n}}});
}

StepReport GeneralAlgorithm::step(NodeId u, NodeId v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw LadderError(ErrorCode::UndefinedNode, "request outside 1..n");
  if (u == v) throw LadderError(ErrorCode::SelfLoop, "request (" + std::to_string(u) + ", " + std::to_string(u) + ")");
  StepReport r;
  r.index = steps_++;
  r.request = Edge(u, v);
  r.known = revealed_.has_edge(u, v);
  if (r.known) {
    r.case_name = "known";
  } else {
    r.case_name = "reconfigure";
    revealed_.add_edge(u, v);
    std::vector<NodeId> next = oracle_.embed(revealed_);
    std::vector<NodeId> before = line_.order();
    r.migration_cost = inversion_cost(before, next);
    line_ = LineConfig(std::move(next));
    line_.set_spans({{0, {1, n_}}});
  }
  r.serve_cost = serve_cost(line_, u, v);
  return r;
}

Edge adversary_next(const LineConfig& line, const Graph& g) {
  if (g.edge_count() == 0) throw LadderError(ErrorCode::EmptyGraph, "adversary needs at least one edge");
  Edge best;
  int stretch = -1;
  for (const Edge& e : g.edges()) {
    int s = std::abs(line.position(e.a) - line.position(e.b));
    if (s > stretch) {
      stretch = s;
      best = e;
    }
  }
  return best;
}

}  // namespace ladder
