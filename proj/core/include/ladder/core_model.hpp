#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ladder/graph.hpp"
#include "ladder/types.hpp"

namespace ladder {

inline constexpr int kDefaultExactCap = 12;

// Injective and edge-preserving into the ladder. Throws UndefinedNode when a
// vertex of g has no image.
bool is_correct_embedding(const Graph& g, const QuasiEmbedding& phi);

// Edge-preserving with at most three images per level.
bool is_quasi_correct(const Graph& g, const QuasiEmbedding& phi);

// Per-level image counts, keyed by level.
std::map<int, int> level_loads(const QuasiEmbedding& phi);

// Shift all levels so that the lowest occupied level becomes `base`.
QuasiEmbedding normalize_levels(const QuasiEmbedding& phi, int base = 1);

struct BandwidthResult {
  int bandwidth = 0;
  std::vector<NodeId> order;  // witness ordering achieving `bandwidth`
};

// Exact bandwidth by branch and bound. Empty graph gives 0. Throws TooLarge
// when g has more than `cap` nodes.
BandwidthResult bandwidth_exact_witness(const Graph& g, int cap = kDefaultExactCap);
int bandwidth_exact(const Graph& g, int cap = kDefaultExactCap);

// Total order of nodes on the line; positions are 1-based.
class LineConfig {
 public:
  LineConfig() = default;
  explicit LineConfig(std::vector<NodeId> order);

  const std::vector<NodeId>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool contains(NodeId v) const { return pos_.count(v) != 0; }
  // Throws UnplacedNode.
  int position(NodeId v) const;

  // Contiguous [first, last] 1-based spans per component label.
  const std::map<int, std::pair<int, int>>& spans() const { return spans_; }
  void set_spans(std::map<int, std::pair<int, int>> spans);
  // True iff the order is a permutation of [1..n] ids when `n` is given, and
  // the spans are disjoint and cover every position.
  bool valid(std::optional<int> n = std::nullopt) const;

 private:
  std::vector<NodeId> order_;
  std::map<NodeId, int> pos_;
  std::map<int, std::pair<int, int>> spans_;
};

// Maximum edge stretch of g under c. Edges with an unplaced endpoint throw.
int bandwidth_of_config(const Graph& g, const LineConfig& c);
int bandwidth_of_order(const Graph& g, const std::vector<NodeId>& order);

// Bandwidth(s) <= Bandwidth(g), both computed exactly.
bool subgraph_bandwidth_monotone_check(const Graph& g, const Graph& s, int cap = kDefaultExactCap);

}  // namespace ladder
