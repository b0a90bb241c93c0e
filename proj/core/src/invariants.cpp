#include "ladder/invariants.hpp"

#include <map>

#include "ladder/core_model.hpp"
#include "ladder/tree_analysis.hpp"

namespace ladder {

void InvariantReport::merge(const InvariantReport& other) {
  quasi_correct = quasi_correct && other.quasi_correct;
  septum = septum && other.septum;
  no_four_cycles = no_four_cycles && other.no_four_cycles;
  frames_completed = frames_completed && other.frames_completed;
  cycle_conflict_free = cycle_conflict_free && other.cycle_conflict_free;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<std::string> cycle_conflicts(const Graph& g, const QuasiEmbedding& phi) {
  std::multimap<LadderCoord, NodeId> slots;
  for (const auto& [v, c] : phi) slots.emplace(c, v);
  std::vector<std::string> out;
  for (const auto& c : maximal_cycles(g))
    for (NodeId v : c.nodes) {
      auto it = phi.find(v);
      if (it == phi.end()) continue;
      if (slots.count(it->second) > 1)
        out.push_back("cycle node " + std::to_string(v) + " shares slot " + to_string(it->second));
    }
  return out;
}

InvariantReport check_component(const Graph& maintained, const QuasiEmbedding& phi,
                                const std::vector<TreeLayout>& trees) {
  InvariantReport r;
  bool covered = true;
  for (NodeId v : maintained.nodes())
    if (!phi.count(v)) {
      covered = false;
      r.failures.push_back("node " + std::to_string(v) + " has no image");
    }
  if (!covered || !is_quasi_correct(maintained, phi)) {
    r.quasi_correct = false;
    if (covered) {
      for (const Edge& e : maintained.edges())
        if (!ladder_adjacent(phi.at(e.a), phi.at(e.b)))
          r.failures.push_back("edge " + to_string(e) + " maps to " + to_string(phi.at(e.a)) + " and " +
                               to_string(phi.at(e.b)));
      for (const auto& [lvl, load] : level_loads(phi))
        if (load > 3) r.failures.push_back("level " + std::to_string(lvl) + " holds " + std::to_string(load));
    }
  }
  for (const auto& t : trees) {
    bool placed = true;
    for (NodeId v : t.tree.nodes()) placed = placed && phi.count(v);
    if (!placed) continue;
    for (auto& msg : septum_violations(t.tree, t.spine, phi)) {
      r.septum = false;
      r.failures.push_back("septum: " + msg);
    }
  }
  std::vector<MaximalCycle> cycles;
  try {
    cycles = maximal_cycles(maintained);
  } catch (const LadderError& e) {
    r.no_four_cycles = false;
    r.failures.push_back(e.what());
  }
  for (const auto& c : cycles) {
    if (c.length() == 4) {
      r.no_four_cycles = false;
      r.failures.push_back("maximal 4-cycle at node " + std::to_string(c.nodes.front()));
    } else {
      for (const Edge& e : frame_of(c, maintained).completion)
        if (!maintained.has_edge(e)) {
          r.frames_completed = false;
          r.failures.push_back("frame edge " + to_string(e) + " missing");
        }
    }
  }
  if (covered)
    for (auto& msg : cycle_conflicts(maintained, phi)) {
      r.cycle_conflict_free = false;
      r.failures.push_back(msg);
    }
  return r;
}

std::vector<NodeId> frame_attachments(const Graph& g, const MaximalCycle& completed) {
  std::set<NodeId> out;
  for (NodeId v : completed.nodes)
    for (NodeId w : g.neighbors(v))
      if (!completed.contains(w)) out.insert(w);
  return {out.begin(), out.end()};
}

}  // namespace ladder
