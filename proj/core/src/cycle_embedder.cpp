#include <algorithm>
#include <optional>

#include "ladder/static_embedder.hpp"

namespace ladder {

int cycle_number(const MaximalCycle& c, NodeId from, NodeId u) {
  int i = c.index_of(from), j = c.index_of(u);
  if (i < 0) throw LadderError(ErrorCode::UndefinedNode, "node " + std::to_string(from) + " is not on the cycle");
  if (j < 0) throw LadderError(ErrorCode::UndefinedNode, "node " + std::to_string(u) + " is not on the cycle");
  int n = static_cast<int>(c.length());
  return ((j - i) % n + n) % n + 1;
}

namespace {

// C_v[i] with i counted from 1.
NodeId at(const MaximalCycle& c, NodeId v, int i) {
  int n = static_cast<int>(c.length());
  return c.nodes[((c.index_of(v) + i - 1) % n + n) % n];
}

void check_length(const MaximalCycle& c) {
  if (c.length() < 6 || c.length() % 2)
    throw LadderError(ErrorCode::CycleTooShort, "cycle embedding needs an even cycle of length at least 6");
}

bool chords_are_rungs(const MaximalCycle& c, const QuasiEmbedding& phi) {
  for (const Edge& e : c.chords) {
    const auto& x = phi.at(e.a);
    const auto& y = phi.at(e.b);
    if (x.level != y.level) return false;
  }
  return true;
}

// Left's successor climbs on left's side.
QuasiEmbedding climb_same_side(const MaximalCycle& c, NodeId left, LadderCoord img) {
  int h = static_cast<int>(c.length()) / 2;
  QuasiEmbedding phi;
  for (int i = 1; i <= h; ++i) phi[at(c, left, i)] = {img.level + i - 1, img.side};
  for (int i = 1; i <= h; ++i) phi[at(c, left, h + i)] = {img.level + h - i, other_side(img.side)};
  return phi;
}

// Left's successor sits across the bottom rung.
QuasiEmbedding climb_other_side(const MaximalCycle& c, NodeId left, LadderCoord img) {
  int h = static_cast<int>(c.length()) / 2;
  QuasiEmbedding phi;
  phi[left] = img;
  for (int i = 1; i <= h; ++i) phi[at(c, left, i + 1)] = {img.level + i - 1, other_side(img.side)};
  for (int i = 1; i <= h - 1; ++i) phi[at(c, left, h + 1 + i)] = {img.level + h - i, img.side};
  return phi;
}

}  // namespace

QuasiEmbedding left_right_cycle_embedding(const MaximalCycle& c, NodeId left, NodeId right, LadderCoord leftImage) {
  check_length(c);
  int h = static_cast<int>(c.length()) / 2;
  int num = cycle_number(c, left, right);
  if (num < h || num > h + 2)
    throw LadderError(ErrorCode::EnsureFailed, "number of " + std::to_string(right) + " from " + std::to_string(left) +
                                                   " is " + std::to_string(num) + ", outside [h, h+2]");
  if (num == h) return climb_same_side(c, left, leftImage);
  if (num == h + 2) return climb_other_side(c, left, leftImage);
  // Right is the far corner; both turns keep it on top, so let the chords pick.
  QuasiEmbedding a = climb_same_side(c, left, leftImage);
  if (chords_are_rungs(c, a)) return a;
  QuasiEmbedding b = climb_other_side(c, left, leftImage);
  return chords_are_rungs(c, b) ? b : a;
}

QuasiEmbedding cycle_embedding(const MaximalCycle& c, std::optional<NodeId> left, std::optional<NodeId> right,
                               std::optional<LadderCoord> leftImage, const Hint* hint) {
  check_length(c);
  int h = static_cast<int>(c.length()) / 2;
  LadderCoord img = leftImage.value_or(LadderCoord{1, 1});
  if (left && right) return left_right_cycle_embedding(c, *left, *right, img);

  std::vector<std::pair<NodeId, NodeId>> candidates;
  if (left) {
    for (int k : {h, h + 2}) candidates.emplace_back(*left, at(c, *left, k));
  } else if (right) {
    // Mirror of the rule for a missing right end.
    for (int k : {h, h + 2}) candidates.emplace_back(at(c, *right, k), *right);
  } else {
    std::vector<NodeId> order = c.nodes;
    std::sort(order.begin(), order.end());
    for (NodeId l : order)
      for (int k : {h, h + 2}) candidates.emplace_back(l, at(c, l, k));
  }

  std::optional<QuasiEmbedding> best;
  long long best_cost = 0;
  for (const auto& [l, r] : candidates) {
    QuasiEmbedding phi = left_right_cycle_embedding(c, l, r, img);
    if (!chords_are_rungs(c, phi)) continue;
    long long cost = hint_disagreement(phi, hint);
    if (!best || cost < best_cost) {
      best = std::move(phi);
      best_cost = cost;
    }
    if (!hint) break;
  }
  if (!best) {
    const auto& [l, r] = candidates.front();
    return left_right_cycle_embedding(c, l, r, img);
  }
  return *best;
}

}  // namespace ladder
