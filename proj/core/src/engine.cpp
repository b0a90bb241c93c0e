#include "ladder/engine.hpp"

#include <algorithm>
#include <cstdlib>

#include "ladder/cycle_analysis.hpp"
#include "ladder/line_projection.hpp"

namespace ladder {

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::FirstTimeOnACycle: return "first_time_on_a_cycle";
    case Scenario::CycleInTheFrame: return "cycle_in_the_frame";
    case Scenario::InnerSimpleGraphReorienting: return "inner_simple_graph_reorienting";
    case Scenario::NoMoreAnExitGraph: return "no_more_an_exit_graph";
    case Scenario::NewDegreeThreeNode: return "new_degree_three_node";
    case Scenario::ConnectivityComponentMovement: return "connectivity_component_movement";
  }
  return "?";
}

int ScenarioCounters::count(NodeId v, Scenario s) const {
  auto it = per_node.find(v);
  return it == per_node.end() ? 0 : it->second[static_cast<int>(s)];
}

int ScenarioCounters::max_count(Scenario s) const {
  int best = 0;
  for (const auto& [v, c] : per_node) best = std::max(best, c[static_cast<int>(s)]);
  return best;
}

std::int64_t ScenarioCounters::total_charged() const {
  std::int64_t t = 0;
  for (auto c : cost) t += c;
  return t;
}

std::int64_t ScenarioCounters::tags() const {
  std::int64_t t = 0;
  for (const auto& [v, c] : per_node)
    for (int k : c) t += k;
  return t;
}

namespace {

std::set<NodeId> cycle_nodes(const Graph& g) {
  std::set<NodeId> out;
  for (const auto& c : maximal_cycles(g)) out.insert(c.nodes.begin(), c.nodes.end());
  return out;
}

int degree_three_count(const Graph& g) {
  int k = 0;
  for (NodeId v : g.nodes()) k += g.degree(v) >= 3;
  return k;
}

Graph union_graph(const Graph& a, const Graph& b) {
  Graph g = a;
  for (NodeId v : b.nodes()) g.add_node(v);
  for (const Edge& e : b.edges()) g.add_edge(e);
  return g;
}

int sign(int x) { return (x > 0) - (x < 0); }

// For every hand node of an inner simple graph, its foot and the spine
// neighbour of the foot that the hand points towards. Mirroring or flipping a
// whole component leaves this unchanged, so only a real turn of the hands
// shows up.
std::map<NodeId, std::pair<NodeId, NodeId>> hand_orientation(const std::vector<TreeLayout>& trees, const QuasiEmbedding& phi) {
  std::map<NodeId, std::pair<NodeId, NodeId>> out;
  for (const auto& t : trees) {
    for (const auto& sg : t.attached) {
      if (sg.kind != SimpleKind::Inner) continue;
      auto at = std::find(t.spine.begin(), t.spine.end(), sg.foot);
      if (at == t.spine.end()) continue;
      std::size_t i = static_cast<std::size_t>(at - t.spine.begin());
      int fl = phi.at(sg.foot).level;
      for (const auto& hand : sg.hands)
        for (NodeId x : hand) {
          int dir = sign(phi.at(x).level - fl);
          for (std::size_t j : {i - 1, i + 1})
            if (j < t.spine.size() && sign(phi.at(t.spine[j]).level - fl) == dir) out[x] = {sg.foot, t.spine[j]};
        }
    }
  }
  return out;
}

// Exit-graph nodes: off every cycle, degree at most two, and with degree-3
// nodes on one side only. Degrees and cycles only grow, so a node that loses
// this status never regains it.
std::set<NodeId> exit_nodes_of(const Graph& g, const std::set<NodeId>& on_cycle) {
  int total = degree_three_count(g);
  std::set<NodeId> out;
  if (total == 0) return out;
  for (NodeId x : g.nodes()) {
    int d = g.degree(x);
    if (d == 0 || d >= 3 || on_cycle.count(x)) continue;
    if (d == 1) {
      out.insert(x);
      continue;
    }
    // x is a cut node; count degree-3 nodes on the side of one neighbour
    NodeId a = *g.neighbors(x).begin();
    std::set<NodeId> seen{x, a};
    std::vector<NodeId> stack{a};
    int side = 0;
    while (!stack.empty()) {
      NodeId y = stack.back();
      stack.pop_back();
      side += g.degree(y) >= 3;
      for (NodeId z : g.neighbors(y))
        if (seen.insert(z).second) stack.push_back(z);
    }
    if (side == 0 || side == total) out.insert(x);
  }
  return out;
}

}  // namespace

// State of the components a step is about to touch, taken before the change.
struct LadderEngine::Snapshot {
  std::vector<NodeId> order;
  std::vector<int> pos;  // node -> 1-based position
  std::set<NodeId> on_cycle;
  std::set<NodeId> exits;
  std::map<NodeId, std::pair<NodeId, NodeId>> toward;  // see hand_orientation
  int degree_three = 0;
};

LadderEngine::LadderEngine(int n, EngineOptions opts) : n_(n), opts_(opts), label_of_(n + 1, 0) {
  if (n < 1) throw LadderError(ErrorCode::EmptyGraph, "engine needs at least one node");
  for (NodeId v = 1; v <= n; ++v) {
    Component c;
    c.nodes = {v};
    c.maintained.add_node(v);
    c.phi[v] = {1, 1};
    c.chain = cycle_tree_chain(c.maintained);
    comps_.emplace(v, std::move(c));
    label_of_[v] = v;
    blocks_.push_back(v);
  }
  rebuild_line();
}

void LadderEngine::validate(NodeId u, NodeId v) const {
  if (u < 1 || u > n_) throw LadderError(ErrorCode::UndefinedNode, "node " + std::to_string(u) + " out of range");
  if (v < 1 || v > n_) throw LadderError(ErrorCode::UndefinedNode, "node " + std::to_string(v) + " out of range");
  if (u == v) throw LadderError(ErrorCode::SelfLoop, "request (" + std::to_string(u) + ", " + std::to_string(u) + ")");
}

const LadderEngine::Component& LadderEngine::comp(int label) const {
  auto it = comps_.find(label);
  if (it == comps_.end()) throw LadderError(ErrorCode::UndefinedNode, "no component " + std::to_string(label));
  return it->second;
}

int LadderEngine::component_of(NodeId v) const {
  if (v < 1 || v > n_) throw LadderError(ErrorCode::UndefinedNode, "node " + std::to_string(v) + " out of range");
  return label_of_[v];
}

std::vector<int> LadderEngine::component_labels() const { return blocks_; }
const std::set<NodeId>& LadderEngine::component_nodes(int label) const { return comp(label).nodes; }
const Graph& LadderEngine::maintained(int label) const { return comp(label).maintained; }
const QuasiEmbedding& LadderEngine::embedding(int label) const { return comp(label).phi; }
const std::vector<TreeLayout>& LadderEngine::tree_layouts(int label) const { return comp(label).trees; }

void LadderEngine::rebuild_line() {
  std::vector<NodeId> order;
  order.reserve(n_);
  std::map<int, std::pair<int, int>> spans;
  for (int label : blocks_) {
    int first = static_cast<int>(order.size()) + 1;
    for (NodeId v : project(comps_.at(label).phi)) order.push_back(v);
    spans[label] = {first, static_cast<int>(order.size())};
  }
  line_ = LineConfig(std::move(order));
  line_.set_spans(std::move(spans));
}

InvariantReport LadderEngine::check_invariants() const {
  InvariantReport r;
  for (const auto& [label, c] : comps_) r.merge(check_component(c.maintained, c.phi, c.trees));
  if (!line_.valid(n_)) {
    r.quasi_correct = false;
    r.failures.push_back("line configuration is not a partition into component blocks");
  }
  for (const Edge& e : ignored_) {
    // an ignored edge must close a 4-cycle with maintained edges
    const Graph& g = comp(label_of_[e.a]).maintained;
    bool closes = false;
    for (NodeId x : g.neighbors(e.a))
      for (NodeId y : g.neighbors(e.b))
        closes = closes || (x != e.b && y != e.a && g.has_edge(x, y));
    if (!closes) {
      r.no_four_cycles = false;
      r.failures.push_back("ignored edge " + to_string(e) + " closes no 4-cycle");
    }
  }
  return r;
}

// Whole-component re-embedding. The four orientations (flip, mirror) are
// tried with the current order as hint and the valid one that moves the
// fewest pairs wins.
void LadderEngine::reembed(int label, const Graph& g, const std::set<Edge>& prefer_drop) {
  std::set<Edge> dormant;
  for (const Edge& e : ignored_)
    if (g.has_node(e.a) && g.has_node(e.b)) dormant.insert(e);

  Hint old_pos, flipped;
  for (NodeId v : g.nodes()) {
    old_pos[v] = line_.position(v);
    flipped[v] = -old_pos[v];
  }
  std::vector<NodeId> old_rel = g.nodes();
  std::sort(old_rel.begin(), old_rel.end(), [&](NodeId a, NodeId b) { return old_pos[a] < old_pos[b]; });

  struct Candidate {
    ComponentEmbedding ce;
    std::int64_t cost = 0;
  };
  auto attempt = [&](bool hinted) {
    std::vector<Candidate> out;
    for (int flip = 0; flip < 2; ++flip)
      for (int mirror = 0; mirror < 2; ++mirror) {
        Candidate c;
        try {
          const Hint* h = hinted ? (flip ? &flipped : &old_pos) : nullptr;
          c.ce = component_embedding_left_fixed(g, std::nullopt, std::nullopt, LadderCoord{1, mirror ? 2 : 1}, h,
                                                prefer_drop, dormant);
        } catch (const LadderError&) {
          continue;
        }
        if (flip) {
          for (auto& [v, coord] : c.ce.phi) coord.level = -coord.level;
          c.ce.phi = normalize_levels(c.ce.phi, 1);
          for (auto& t : c.ce.trees) std::reverse(t.spine.begin(), t.spine.end());
        }
        c.cost = inversion_cost(old_rel, project(c.ce.phi));
        out.push_back(std::move(c));
      }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.cost < b.cost; });
    return out;
  };

  std::vector<Candidate> cands = attempt(true);
  const Candidate* pick = nullptr;
  for (const auto& c : cands)
    if (check_component(c.ce.prep.graph, c.ce.phi, c.ce.trees).ok()) {
      pick = &c;
      break;
    }
  std::vector<Candidate> plain;
  if (!pick) {
    plain = attempt(false);
    for (const auto& c : plain)
      if (check_component(c.ce.prep.graph, c.ce.phi, c.ce.trees).ok()) {
        pick = &c;
        break;
      }
  }
  if (!pick) pick = !cands.empty() ? &cands.front() : (!plain.empty() ? &plain.front() : nullptr);
  if (!pick) throw LadderError(ErrorCode::InvariantViolation, "no embedding found for component " + std::to_string(label));

  const ComponentEmbedding& ce = pick->ce;
  for (const Edge& e : ce.prep.ignored) {
    if (phantom_.erase(e)) continue;
    if (revealed_.count(e)) ignored_.insert(e);
  }
  for (const Edge& e : ce.prep.restored) ignored_.erase(e);
  for (const Edge& e : ce.prep.phantom) phantom_.insert(e);

  Component& c = comps_.at(label);
  c.maintained = ce.prep.graph;
  c.phi = normalize_levels(ce.phi, 1);
  c.chain = ce.chain;
  c.trees = ce.trees;
}

StepReport LadderEngine::process_request(NodeId u, NodeId v) {
  validate(u, v);
  Edge e(u, v);
  if (revealed_.count(e) || phantom_.count(e)) {
    StepReport r;
    r.index = steps_++;
    r.request = e;
    r.known = revealed_.count(e) > 0;
    r.case_name = r.known ? "known" : "phantom";
    revealed_.insert(e);
    phantom_.erase(e);
    Snapshot none;
    return finish(std::move(r), none, {});
  }
  if (label_of_[u] == label_of_[v]) return process_edge_one_component(u, v);
  return process_edge_two_components(u, v);
}

StepReport LadderEngine::process_edge_one_component(NodeId u, NodeId v) {
  validate(u, v);
  Edge e(u, v);
  if (revealed_.count(e) || label_of_[u] != label_of_[v])
    throw LadderError(ErrorCode::InfeasibleConstraints, "edge " + to_string(e) + " is not new inside one component");
  int label = label_of_[u];
  const Component& c = comps_.at(label);

  Snapshot before;
  before.order = line_.order();
  before.pos.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < before.order.size(); ++i) before.pos[before.order[i]] = static_cast<int>(i) + 1;
  before.on_cycle = cycle_nodes(c.maintained);
  before.exits = exit_nodes_of(c.maintained, before.on_cycle);
  before.toward = hand_orientation(c.trees, c.phi);
  before.degree_three = degree_three_count(c.maintained);

  StepReport r;
  r.index = steps_++;
  r.request = e;
  revealed_.insert(e);
  phantom_.erase(e);

  Graph g = c.maintained;
  g.add_edge(e);
  auto cyc = find_maximal_cycle(g, e);
  if (cyc && cyc->length() == 4) {
    ignored_.insert(e);
    r.case_name = "four_cycle";
    Snapshot none;
    return finish(std::move(r), none, {});
  }
  r.case_name = "frame";
  reembed(label, g, {e});
  return finish(std::move(r), before, {});
}

StepReport LadderEngine::process_edge_two_components(NodeId u, NodeId v) {
  validate(u, v);
  Edge e(u, v);
  if (revealed_.count(e) || label_of_[u] == label_of_[v])
    throw LadderError(ErrorCode::InfeasibleConstraints, "edge " + to_string(e) + " does not join two components");
  int la = label_of_[u], lb = label_of_[v];
  const Component& ca = comps_.at(la);
  const Component& cb = comps_.at(lb);
  bool a_big = ca.nodes.size() != cb.nodes.size() ? ca.nodes.size() > cb.nodes.size()
                                                    : *ca.nodes.begin() < *cb.nodes.begin();
  int big = a_big ? la : lb, small = a_big ? lb : la;
  NodeId p = a_big ? u : v;  // attachment node in the big component
  const Component& cbig = comps_.at(big);
  const Component& csmall = comps_.at(small);

  StepReport r;
  r.request = e;
  // name the sub-case by where the small component lands
  if (cbig.nodes.size() == 1) {
    r.case_name = "singletons";
  } else {
    int part = cbig.chain.part_of(p);
    const ChainPart& cp = cbig.chain.parts.at(part);
    if (cp.is_cycle()) {
      bool end = part == 0 || part + 1 == static_cast<int>(cbig.chain.parts.size());
      r.case_name = end ? "cycle_end" : "inner_whisker";
    } else {
      r.case_name = "inner_graph";
      for (const auto& t : cbig.trees) {
        if (!t.tree.has_node(p)) continue;
        if (std::find(t.spine.begin(), t.spine.end(), p) != t.spine.end())
          r.case_name = "trunk";
        else if (t.exit_nodes.count(p))
          r.case_name = "exit_graph";
      }
    }
  }

  Snapshot before;
  before.order = line_.order();
  before.pos.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < before.order.size(); ++i) before.pos[before.order[i]] = static_cast<int>(i) + 1;
  for (const Component* c : {&cbig, &csmall}) {
    auto oc = cycle_nodes(c->maintained);
    before.on_cycle.insert(oc.begin(), oc.end());
    auto ex = exit_nodes_of(c->maintained, oc);
    before.exits.insert(ex.begin(), ex.end());
    auto toward = hand_orientation(c->trees, c->phi);
    before.toward.insert(toward.begin(), toward.end());
    before.degree_three += degree_three_count(c->maintained);
  }

  r.index = steps_++;
  revealed_.insert(e);
  Graph g = union_graph(cbig.maintained, csmall.maintained);
  g.add_edge(e);
  std::set<NodeId> moved = csmall.nodes;

  // the small block leaves its place; the big block keeps its own
  comps_.at(big).nodes.insert(moved.begin(), moved.end());
  for (NodeId x : moved) label_of_[x] = big;
  comps_.erase(small);
  blocks_.erase(std::find(blocks_.begin(), blocks_.end(), small));
  reembed(big, g, {});
  return finish(std::move(r), before, moved);
}

StepReport LadderEngine::add_inner_whisker(NodeId cycle_node, NodeId whisker_node) {
  validate(cycle_node, whisker_node);
  const Component& cc = comp(label_of_[cycle_node]);
  int part = cc.chain.part_of(cycle_node);
  if (part < 0 || !cc.chain.parts[part].is_cycle())
    throw LadderError(ErrorCode::InfeasibleConstraints, "node " + std::to_string(cycle_node) + " is not on a cycle");
  const Component& cw = comp(label_of_[whisker_node]);
  if (!is_line_graph(cw.maintained))
    throw LadderError(ErrorCode::NotALineGraph, "component of " + std::to_string(whisker_node) + " is not a path");
  return process_edge_two_components(cycle_node, whisker_node);
}

StepReport LadderEngine::finish(StepReport r, const Snapshot& before, const std::set<NodeId>& moved_small) {
  int label = label_of_[r.request.a];
  Component& c = comps_.at(label);

  if (opts_.inject_fault_after && steps_ == *opts_.inject_fault_after && c.phi.size() > 1) {
    // push one node far away from its neighbours
    c.phi.begin()->second.level += 7;
  }
  rebuild_line();

  if (!before.order.empty()) {
    const auto& now = line_.order();
    r.migration_cost = inversion_cost(before.order, now);

    // the reason (lowest scenario index) each node of the component may move
    std::set<NodeId> on_cycle = cycle_nodes(c.maintained);
    std::set<NodeId> exits = exit_nodes_of(c.maintained, on_cycle);
    auto toward = hand_orientation(c.trees, c.phi);
    int deg3 = degree_three_count(c.maintained);
    bool new_deg3 = deg3 > before.degree_three && deg3 <= 3;

    std::vector<int> reason(n_ + 1, kScenarioCount);
    for (NodeId x : c.nodes) {
      int s = kScenarioCount;
      auto set = [&](Scenario sc) { s = std::min(s, static_cast<int>(sc)); };
      if (on_cycle.count(x) && !ever_on_cycle_.count(x)) set(Scenario::FirstTimeOnACycle);
      if (on_cycle.count(x) && before.on_cycle.count(x)) set(Scenario::CycleInTheFrame);
      auto now_it = toward.find(x);
      auto was_it = before.toward.find(x);
      if (now_it != toward.end() && was_it != before.toward.end() && now_it->second.first == was_it->second.first &&
          now_it->second.second != was_it->second.second)
        set(Scenario::InnerSimpleGraphReorienting);
      if (before.exits.count(x) && !exits.count(x)) set(Scenario::NoMoreAnExitGraph);
      if (new_deg3) set(Scenario::NewDegreeThreeNode);
      if (moved_small.count(x)) set(Scenario::ConnectivityComponentMovement);
      reason[x] = s;
    }

    // charge every inverted pair to its better-explained endpoint
    std::vector<int> new_pos(n_ + 1, 0);
    for (std::size_t i = 0; i < now.size(); ++i) new_pos[now[i]] = static_cast<int>(i) + 1;
    std::map<NodeId, int> charged;
    const auto& old = before.order;
    for (std::size_t i = 0; i < old.size(); ++i)
      for (std::size_t j = i + 1; j < old.size(); ++j) {
        NodeId x = old[i], y = old[j];
        if (new_pos[x] < new_pos[y]) continue;
        int sx = reason[x], sy = reason[y];
        if (std::min(sx, sy) == kScenarioCount) {
          ++r.unattributed;
          continue;
        }
        NodeId who = sx <= sy ? x : y;
        int s = std::min(sx, sy);
        ++counters_.cost[s];
        charged[who] = s;
      }
    counters_.unattributed += r.unattributed;
    for (const auto& [x, s] : charged) {
      auto& row = counters_.per_node[x];
      ++row[s];
      r.scenarios.emplace_back(x, static_cast<Scenario>(s));
    }
    ever_on_cycle_.insert(on_cycle.begin(), on_cycle.end());
  }

  r.serve_cost = serve_cost(line_, r.request.a, r.request.b);
  for (const Edge& e : revealed_)
    r.max_revealed_stretch = std::max(r.max_revealed_stretch, std::abs(line_.position(e.a) - line_.position(e.b)));
  for (const Edge& e : c.maintained.edges())
    r.max_maintained_stretch = std::max(r.max_maintained_stretch, std::abs(line_.position(e.a) - line_.position(e.b)));

  if (opts_.check_invariants) {
    r.invariants_checked = true;
    InvariantReport rep = check_component(c.maintained, c.phi, c.trees);
    if (!line_.valid(n_)) rep.failures.push_back("line configuration is not a partition into component blocks");
    r.invariants_ok = rep.ok() && line_.valid(n_);
    r.violations = rep.failures;
    if (!r.invariants_ok && opts_.strict) {
      std::string msg = "after request " + std::to_string(r.index) + ":";
      for (const auto& f : r.violations) msg += " " + f + ";";
      throw LadderError(ErrorCode::InvariantViolation, msg);
    }
  }
  return r;
}

}  // namespace ladder
