#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ladder/cycle_analysis.hpp"
#include "ladder/graph.hpp"
#include "ladder/tree_analysis.hpp"
#include "ladder/types.hpp"

namespace ladder {

// Previous line positions of (some) nodes. When given, every free choice the
// embedder makes goes the way that disagrees least with this order.
using Hint = std::map<NodeId, int>;

// How a tree was laid out: the vertical spine, the line graphs placed against
// it, and the exit graphs stacked past its ends.
struct TreeLayout {
  Graph tree;
  std::vector<NodeId> spine;  // bottom to top
  std::vector<SimpleGraph> attached;
  std::vector<int> first_hand_dir;  // per attached graph: +1 up, -1 down, 0 without hands
  std::set<NodeId> exit_nodes;
};

struct TreeEmbedding {
  QuasiEmbedding phi;
  TreeLayout layout;
};

// Left-right path vertical on leftImage's side, attached line graphs with
// their heads opposite their feet and hands oriented off every septum level.
// Throws NoValidOrientation when no orientation exists.
TreeEmbedding left_right_tree_layout(const Graph& t, NodeId left, NodeId right, LadderCoord leftImage,
                                     const Hint* hint = nullptr);
QuasiEmbedding left_right_tree_embedding(const Graph& t, NodeId left, NodeId right, LadderCoord leftImage);

// Full case analysis for trees with optional end constraints. Without `left`
// the lowest occupied level is leftImage's level. Throws InfeasibleConstraints.
TreeEmbedding tree_layout(const Graph& t, std::optional<NodeId> left, std::optional<NodeId> right,
                          std::optional<LadderCoord> leftImage, const Hint* hint = nullptr);
QuasiEmbedding tree_quasi_correct_embedding(const Graph& t, std::optional<NodeId> left = std::nullopt,
                                            std::optional<NodeId> right = std::nullopt,
                                            std::optional<LadderCoord> leftImage = std::nullopt);

// Position of `u` in the cyclic numeration that starts at `from` (which has
// number 1) and follows the stored node order.
int cycle_number(const MaximalCycle& c, NodeId from, NodeId u);

// Throws EnsureFailed unless number_left(right) is h, h+1 or h+2 for a cycle
// of length 2h >= 6.
QuasiEmbedding left_right_cycle_embedding(const MaximalCycle& c, NodeId left, NodeId right, LadderCoord leftImage);

// Fills in a missing end so that chords come out as rungs.
QuasiEmbedding cycle_embedding(const MaximalCycle& c, std::optional<NodeId> left = std::nullopt,
                               std::optional<NodeId> right = std::nullopt,
                               std::optional<LadderCoord> leftImage = std::nullopt, const Hint* hint = nullptr);

struct ComponentEmbedding {
  QuasiEmbedding phi;
  PreprocessResult prep;  // prep.graph is the graph that was embedded
  CycleTreeChain chain;
  std::vector<TreeLayout> trees;  // one per tree part, in chain order
};

ComponentEmbedding component_embedding_left_fixed(const Graph& s, std::optional<NodeId> left = std::nullopt,
                                                  std::optional<NodeId> right = std::nullopt,
                                                  std::optional<LadderCoord> leftImage = std::nullopt,
                                                  const Hint* hint = nullptr,
                                                  const std::set<Edge>& prefer_drop = {},
                                                  const std::set<Edge>& dormant = {});

// The left-fixed embedding with the roles of the ends swapped, reflected so
// that `right` lands on rightImage.
ComponentEmbedding component_embedding_right_fixed(const Graph& s, std::optional<NodeId> left = std::nullopt,
                                                   std::optional<NodeId> right = std::nullopt,
                                                   std::optional<LadderCoord> rightImage = std::nullopt,
                                                   const Hint* hint = nullptr);

// Inversions between the projection of phi (restricted to hinted nodes) and
// the hint order. Zero without a hint.
long long hint_disagreement(const QuasiEmbedding& phi, const Hint* hint);

}  // namespace ladder
