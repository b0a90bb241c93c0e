#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "ladder/core_model.hpp"

namespace ladder {

namespace {

// Decides whether a connected graph (dense local indices) has a layout with
// stretch <= k. Nodes are placed left to right; a placed node whose unplaced
// neighbours no longer fit inside its window kills the branch.
class LayoutSearch {
 public:
  LayoutSearch(const std::vector<std::vector<int>>& adj, int k) : adj_(adj), k_(k), m_(static_cast<int>(adj.size())) {
    pos_.assign(m_, -1);
    pending_.resize(m_);
    for (int v = 0; v < m_; ++v) pending_[v] = static_cast<int>(adj_[v].size());
  }

  bool run(std::vector<int>& order) {
    order_.clear();
    if (!extend(0)) return false;
    order = order_;
    return true;
  }

 private:
  std::string key(std::uint64_t mask) const {
    std::string s(reinterpret_cast<const char*>(&mask), sizeof(mask));
    int p = static_cast<int>(order_.size());
    for (int i = std::max(0, p - k_); i < p; ++i) s.push_back(static_cast<char>(order_[i]));
    return s;
  }

  bool fits_after_placing(int p) const {
    // positions p+1 .. pos(y)+k remain for y's unplaced neighbours
    for (int i = std::max(0, p - k_); i <= p; ++i) {
      int y = order_[i];
      if (pending_[y] > i + k_ - p) return false;
    }
    return true;
  }

  bool extend(std::uint64_t mask) {
    int p = static_cast<int>(order_.size());
    if (p == m_) return true;
    std::string memo = key(mask);
    if (dead_.count(memo)) return false;

    // A node whose window closes at p forces the candidate set.
    int urgent = -1;
    for (int i = std::max(0, p - k_); i < p; ++i)
      if (pending_[order_[i]] > 0 && i + k_ == p) {
        urgent = order_[i];
        break;
      }

    for (int x = 0; x < m_; ++x) {
      if (pos_[x] >= 0) continue;
      if (urgent >= 0 && std::find(adj_[urgent].begin(), adj_[urgent].end(), x) == adj_[urgent].end()) continue;
      bool ok = true;
      for (int y : adj_[x])
        if (pos_[y] >= 0 && p - pos_[y] > k_) {
          ok = false;
          break;
        }
      if (!ok) continue;
      place(x, p);
      bool good = fits_after_placing(p) && extend(mask | (std::uint64_t{1} << x));
      if (good) return true;
      unplace(x);
    }
    dead_.insert(memo);
    return false;
  }

  void place(int x, int p) {
    pos_[x] = p;
    order_.push_back(x);
    for (int y : adj_[x]) --pending_[y];
  }

  void unplace(int x) {
    pos_[x] = -1;
    order_.pop_back();
    for (int y : adj_[x]) ++pending_[y];
  }

  const std::vector<std::vector<int>>& adj_;
  int k_;
  int m_;
  std::vector<int> pos_;
  std::vector<int> pending_;
  std::vector<int> order_;
  std::unordered_set<std::string> dead_;
};

BandwidthResult solve_component(const Graph& g, const std::vector<NodeId>& comp) {
  int m = static_cast<int>(comp.size());
  if (m == 1) return {0, comp};
  std::map<NodeId, int> idx;
  for (int i = 0; i < m; ++i) idx[comp[i]] = i;
  std::vector<std::vector<int>> adj(m);
  int max_deg = 0;
  for (int i = 0; i < m; ++i) {
    for (NodeId w : g.neighbors(comp[i])) adj[i].push_back(idx[w]);
    max_deg = std::max(max_deg, static_cast<int>(adj[i].size()));
  }
  int diam = 0;
  for (NodeId v : comp)
    for (const auto& [w, d] : bfs_distances(g, v)) diam = std::max(diam, d);
  int lb = std::max((max_deg + 1) / 2, (m - 1 + diam - 1) / diam);
  lb = std::max(lb, 1);
  for (int k = lb; k < m; ++k) {
    LayoutSearch search(adj, k);
    std::vector<int> order;
    if (search.run(order)) {
      BandwidthResult r{k, {}};
      for (int i : order) r.order.push_back(comp[i]);
      return r;
    }
  }
  // unreachable: any ordering has stretch <= m-1
  return {m - 1, comp};
}

}  // namespace

BandwidthResult bandwidth_exact_witness(const Graph& g, int cap) {
  cap = std::min(cap, 64);  // search state is a 64-bit mask
  if (static_cast<int>(g.node_count()) > cap)
    throw LadderError(ErrorCode::TooLarge,
                      std::to_string(g.node_count()) + " nodes exceed exact cap " + std::to_string(cap));
  BandwidthResult out;
  for (const auto& comp : connected_components(g)) {
    BandwidthResult r = solve_component(g, comp);
    out.bandwidth = std::max(out.bandwidth, r.bandwidth);
    out.order.insert(out.order.end(), r.order.begin(), r.order.end());
  }
  return out;
}

int bandwidth_exact(const Graph& g, int cap) { return bandwidth_exact_witness(g, cap).bandwidth; }

}  // namespace ladder
