#pragma once

#include <string>
#include <vector>

#include "ladder/cycle_analysis.hpp"
#include "ladder/graph.hpp"
#include "ladder/static_embedder.hpp"
#include "ladder/types.hpp"

namespace ladder {

struct InvariantReport {
  bool quasi_correct = true;
  bool septum = true;
  bool no_four_cycles = true;
  bool frames_completed = true;
  bool cycle_conflict_free = true;
  std::vector<std::string> failures;

  bool ok() const { return quasi_correct && septum && no_four_cycles && frames_completed && cycle_conflict_free; }
  void merge(const InvariantReport& other);
};

// Cycle nodes that share their slot with any other node of phi.
std::vector<std::string> cycle_conflicts(const Graph& g, const QuasiEmbedding& phi);

// The five maintained invariants for one component: quasi-correctness of the
// maintained graph, the septum rule for every laid-out tree, no maximal
// 4-cycles, completed frames, and lone cycle nodes.
InvariantReport check_component(const Graph& maintained, const QuasiEmbedding& phi,
                                const std::vector<TreeLayout>& trees);

// Nodes outside the cycle adjacent to one of its nodes.
std::vector<NodeId> frame_attachments(const Graph& g, const MaximalCycle& completed);

}  // namespace ladder
