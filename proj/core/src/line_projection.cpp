#include "ladder/line_projection.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

namespace ladder {

std::vector<NodeId> project(const QuasiEmbedding& phi) {
  std::vector<std::tuple<int, int, NodeId>> keyed;
  keyed.reserve(phi.size());
  for (const auto& [v, c] : phi) keyed.emplace_back(c.level, c.side, v);
  std::sort(keyed.begin(), keyed.end());
  std::vector<NodeId> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.push_back(std::get<2>(k));
  return out;
}

namespace {

std::vector<int> relabel(const std::vector<NodeId>& from, const std::vector<NodeId>& to) {
  if (from.size() != to.size()) throw LadderError(ErrorCode::NodeSetMismatch, "orders differ in length");
  std::map<NodeId, int> target;
  for (std::size_t i = 0; i < to.size(); ++i)
    if (!target.emplace(to[i], static_cast<int>(i)).second)
      throw LadderError(ErrorCode::NodeSetMismatch, "duplicate node " + std::to_string(to[i]));
  std::vector<int> perm;
  perm.reserve(from.size());
  std::vector<bool> seen(from.size(), false);
  for (NodeId v : from) {
    auto it = target.find(v);
    if (it == target.end()) throw LadderError(ErrorCode::NodeSetMismatch, "node " + std::to_string(v) + " missing");
    if (seen[it->second]) throw LadderError(ErrorCode::NodeSetMismatch, "duplicate node " + std::to_string(v));
    seen[it->second] = true;
    perm.push_back(it->second);
  }
  return perm;
}

std::int64_t count_inversions(std::vector<int>& a, std::vector<int>& tmp, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t inv = count_inversions(a, tmp, lo, mid) + count_inversions(a, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      tmp[k++] = a[i++];
    } else {
      inv += static_cast<std::int64_t>(mid - i);
      tmp[k++] = a[j++];
    }
  }
  while (i < mid) tmp[k++] = a[i++];
  while (j < hi) tmp[k++] = a[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
  return inv;
}

}  // namespace

std::int64_t inversion_cost(const std::vector<NodeId>& from, const std::vector<NodeId>& to) {
  std::vector<int> perm = relabel(from, to);
  std::vector<int> tmp(perm.size());
  return count_inversions(perm, tmp, 0, perm.size());
}

SwapSchedule swap_schedule(const std::vector<NodeId>& from, const std::vector<NodeId>& to) {
  std::vector<int> perm = relabel(from, to);
  SwapSchedule s;
  // insertion sort; every swap removes exactly one inversion
  for (std::size_t i = 1; i < perm.size(); ++i)
    for (std::size_t j = i; j > 0 && perm[j - 1] > perm[j]; --j) {
      std::swap(perm[j - 1], perm[j]);
      s.swaps.push_back(static_cast<int>(j));  // positions j and j+1, 1-based
    }
  return s;
}

std::vector<NodeId> apply_schedule(std::vector<NodeId> order, const SwapSchedule& s) {
  for (int p : s.swaps) std::swap(order[p - 1], order[p]);
  return order;
}

int serve_cost(const LineConfig& line, NodeId u, NodeId v) {
  if (u == v) throw LadderError(ErrorCode::UnplacedNode, "request endpoints coincide at " + std::to_string(u));
  return std::abs(line.position(u) - line.position(v));
}

}  // namespace ladder
