#include "ladder/cycle_analysis.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

namespace ladder {

bool MaximalCycle::contains(NodeId v) const { return index_of(v) >= 0; }

int MaximalCycle::index_of(NodeId v) const {
  auto it = std::find(nodes.begin(), nodes.end(), v);
  return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

bool MaximalCycle::has_cycle_edge(const Edge& e) const {
  int i = index_of(e.a), j = index_of(e.b);
  if (i < 0 || j < 0) return false;
  int n = static_cast<int>(nodes.size());
  int d = std::abs(i - j);
  return d == 1 || d == n - 1;
}

std::set<NodeId> Frame::nodes() const {
  std::set<NodeId> out(cycle.nodes.begin(), cycle.nodes.end());
  for (const auto& [w1, w2] : paired) {
    out.insert(w1.begin(), w1.end());
    out.insert(w2.begin(), w2.end());
  }
  return out;
}

bool ChainPart::contains(NodeId v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

int CycleTreeChain::part_of(NodeId v) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].contains(v)) return static_cast<int>(i);
  return -1;
}

void CycleTreeChain::reverse() {
  std::reverse(parts.begin(), parts.end());
  std::reverse(links.begin(), links.end());
  for (auto& l : links) std::swap(l.first, l.second);
}

std::vector<std::vector<NodeId>> biconnected_blocks(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property, std::size_t>;
  std::vector<NodeId> ids = g.nodes();
  std::map<NodeId, std::size_t> idx;
  for (std::size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = i;
  BG bg(ids.size());
  for (const Edge& e : g.edges()) boost::add_edge(idx[e.a], idx[e.b], bg);
  if (boost::num_edges(bg) == 0) return {};
  auto comp = boost::get(boost::edge_bundle, bg);
  std::size_t count = boost::biconnected_components(bg, comp);
  std::vector<std::set<NodeId>> blocks(count);
  for (auto [it, end] = boost::edges(bg); it != end; ++it) {
    std::size_t c = comp[*it];
    blocks[c].insert(ids[boost::source(*it, bg)]);
    blocks[c].insert(ids[boost::target(*it, bg)]);
  }
  std::vector<std::vector<NodeId>> out;
  for (const auto& b : blocks)
    if (b.size() >= 3) out.emplace_back(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<NodeId> walk_cycle(const Graph& ring) {
  NodeId start = ring.min_node();
  std::vector<NodeId> order{start};
  NodeId prev = start;
  NodeId cur = *ring.neighbors(start).begin();
  while (cur != start) {
    order.push_back(cur);
    NodeId next = 0;
    for (NodeId w : ring.neighbors(cur))
      if (w != prev) {
        next = w;
        break;
      }
    prev = cur;
    cur = next;
  }
  return order;
}

std::vector<Edge> chords_of(const std::vector<NodeId>& ring, const Graph& g) {
  MaximalCycle probe{ring, {}};
  std::set<NodeId> on(ring.begin(), ring.end());
  std::vector<Edge> out;
  for (NodeId v : ring)
    for (NodeId w : g.neighbors(v))
      if (v < w && on.count(w) && !probe.has_cycle_edge(Edge(v, w))) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

MaximalCycle boundary_of_block(const Graph& g, const std::vector<NodeId>& block) {
  Graph blk = induced_subgraph(g, std::set<NodeId>(block.begin(), block.end()));
  Graph ring = blk;
  if (blk.edge_count() != blk.node_count()) {
    for (const Edge& e : blk.edges()) {
      if (blk.degree(e.a) < 3 || blk.degree(e.b) < 3) continue;
      if (!is_connected(without_nodes(blk, {e.a, e.b}))) ring.remove_edge(e.a, e.b);
    }
  }
  for (NodeId v : ring.nodes())
    if (ring.degree(v) != 2)
      throw LadderError(ErrorCode::InvariantViolation, "block around node " + std::to_string(block.front()) +
                                                           " is not a ladder rectangle");
  if (!is_connected(ring))
    throw LadderError(ErrorCode::InvariantViolation, "block boundary is not a single cycle");
  MaximalCycle c;
  c.nodes = walk_cycle(ring);
  c.chords = chords_of(c.nodes, g);
  return c;
}

}  // namespace

std::vector<MaximalCycle> maximal_cycles(const Graph& g) {
  std::vector<MaximalCycle> out;
  for (const auto& b : biconnected_blocks(g)) out.push_back(boundary_of_block(g, b));
  return out;
}

std::optional<MaximalCycle> find_maximal_cycle(const Graph& component, std::optional<Edge> through) {
  if (through && !component.has_edge(*through))
    throw LadderError(ErrorCode::EdgeNotInComponent, "edge " + to_string(*through));
  for (const auto& b : biconnected_blocks(component)) {
    if (through && !(std::binary_search(b.begin(), b.end(), through->a) &&
                     std::binary_search(b.begin(), b.end(), through->b)))
      continue;
    return boundary_of_block(component, b);
  }
  return std::nullopt;
}

std::vector<Whisker> whiskers_of(const MaximalCycle& cycle, const Graph& component) {
  std::set<NodeId> on(cycle.nodes.begin(), cycle.nodes.end());
  Graph rest = without_nodes(component, on);
  std::vector<Whisker> out;
  for (const auto& comp : connected_components(rest)) {
    int links = 0;
    NodeId w = 0, foot = 0;
    for (NodeId v : comp)
      for (NodeId x : component.neighbors(v))
        if (on.count(x)) {
          ++links;
          w = v;
          foot = x;
        }
    if (links != 1) continue;
    Graph piece = induced_subgraph(rest, std::set<NodeId>(comp.begin(), comp.end()));
    if (!is_line_graph(piece) || piece.degree(w) > 1) continue;
    out.push_back({foot, line_order(piece, w)});
  }
  std::sort(out.begin(), out.end(), [](const Whisker& a, const Whisker& b) { return a.foot < b.foot; });
  return out;
}

namespace {

// The single neighbour of v outside `blocked`, or 0 when there is none or
// more than one.
NodeId lone_step(const Graph& g, NodeId v, const std::set<NodeId>& blocked) {
  NodeId found = 0;
  int count = 0;
  for (NodeId w : g.neighbors(v))
    if (!blocked.count(w)) {
      found = w;
      ++count;
    }
  return count == 1 ? found : 0;
}

}  // namespace

Frame frame_of(const MaximalCycle& cycle, const Graph& component) {
  if (cycle.length() < 6)
    throw LadderError(ErrorCode::CycleTooShort, "frames need a cycle of length at least 6");
  Frame f;
  f.cycle = cycle;
  std::set<NodeId> used(cycle.nodes.begin(), cycle.nodes.end());
  int n = static_cast<int>(cycle.length());
  for (int i = 0; i < n; ++i) {
    NodeId c1 = cycle.nodes[i];
    NodeId c2 = cycle.nodes[(i + 1) % n];
    NodeId p = lone_step(component, c1, used);
    NodeId q = lone_step(component, c2, used);
    if (!p || !q || p == q) continue;
    std::vector<NodeId> w1, w2;
    std::set<NodeId> blocked = used;
    while (p && q && p != q) {
      w1.push_back(p);
      w2.push_back(q);
      blocked.insert(p);
      blocked.insert(q);
      f.completion.emplace_back(p, q);
      NodeId np = lone_step(component, p, blocked);
      NodeId nq = lone_step(component, q, blocked);
      p = np;
      q = nq;
    }
    used = blocked;
    f.paired.emplace_back(std::move(w1), std::move(w2));
  }
  return f;
}

MaximalCycle completed_cycle(const Frame& frame, const Graph& g) {
  const auto& base = frame.cycle.nodes;
  int n = static_cast<int>(base.size());
  std::map<std::pair<NodeId, NodeId>, const std::pair<std::vector<NodeId>, std::vector<NodeId>>*> at;
  for (const auto& pr : frame.paired) {
    // the pair hangs off the cycle edge between the two feet
    NodeId f1 = 0, f2 = 0;
    for (NodeId c : base) {
      if (g.has_edge(c, pr.first.front())) f1 = c;
      if (g.has_edge(c, pr.second.front())) f2 = c;
    }
    at[{f1, f2}] = &pr;
  }
  std::vector<NodeId> ring;
  for (int i = 0; i < n; ++i) {
    NodeId c1 = base[i], c2 = base[(i + 1) % n];
    ring.push_back(c1);
    auto it = at.find({c1, c2});
    if (it != at.end()) {
      ring.insert(ring.end(), it->second->first.begin(), it->second->first.end());
      ring.insert(ring.end(), it->second->second.rbegin(), it->second->second.rend());
      continue;
    }
    it = at.find({c2, c1});
    if (it != at.end()) {
      ring.insert(ring.end(), it->second->second.begin(), it->second->second.end());
      ring.insert(ring.end(), it->second->first.rbegin(), it->second->first.rend());
    }
  }
  Graph full = g;
  for (const Edge& e : frame.completion) full.add_edge(e);
  auto low = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), low, ring.end());
  if (ring.size() > 2 && ring.back() < ring[1]) std::reverse(ring.begin() + 1, ring.end());
  MaximalCycle out;
  out.nodes = ring;
  out.chords = chords_of(ring, full);
  return out;
}

PreprocessResult preprocess(const Graph& component, const std::set<Edge>& prefer_drop, const std::set<Edge>& dormant) {
  PreprocessResult r;
  r.graph = component;
  while (true) {
    auto cycles = maximal_cycles(r.graph);
    bool changed = false;
    for (const auto& c : cycles) {
      if (c.length() != 4) continue;
      std::vector<Edge> ring;
      for (int i = 0; i < 4; ++i) ring.emplace_back(c.nodes[i], c.nodes[(i + 1) % 4]);
      std::sort(ring.begin(), ring.end());
      Edge drop = ring.front();
      for (const Edge& e : ring)
        if (prefer_drop.count(e)) {
          drop = e;
          break;
        }
      r.graph.remove_edge(drop.a, drop.b);
      if (r.phantom.erase(drop) == 0) r.ignored.insert(drop);
      changed = true;
      break;
    }
    if (changed) continue;
    for (const auto& c : cycles) {
      if (c.length() < 6) continue;
      Frame f = frame_of(c, r.graph);
      for (const Edge& e : f.completion) {
        if (r.graph.has_edge(e)) continue;
        r.graph.add_edge(e);
        if (dormant.count(e))
          r.restored.insert(e);
        else
          r.phantom.insert(e);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return r;
}

bool has_uncompleted_frame(const Graph& g) {
  for (const auto& c : maximal_cycles(g)) {
    if (c.length() < 6) continue;
    for (const Edge& e : frame_of(c, g).completion)
      if (!g.has_edge(e)) return true;
  }
  return false;
}

namespace {

bool touches(const Graph& g, const std::vector<NodeId>& a, const std::set<NodeId>& b) {
  for (NodeId v : a)
    for (NodeId w : g.neighbors(v))
      if (b.count(w)) return true;
  return false;
}

std::vector<ChainPart> build_chain(const Graph& g, const std::set<NodeId>& s) {
  if (s.empty()) return {};
  Graph sub = induced_subgraph(g, s);
  auto cycles = maximal_cycles(sub);
  if (cycles.empty()) {
    ChainPart t;
    t.kind = ChainPart::Kind::Tree;
    t.nodes.assign(s.begin(), s.end());
    return {t};
  }
  const MaximalCycle& c = cycles.front();
  std::set<NodeId> on(c.nodes.begin(), c.nodes.end());
  Graph rest = without_nodes(sub, on);
  auto comps = connected_components(rest);
  if (comps.size() > 2)
    throw LadderError(ErrorCode::InvariantViolation,
                      "maximal cycle at node " + std::to_string(c.nodes.front()) + " splits into " +
                          std::to_string(comps.size()) + " sides");
  std::vector<ChainPart> before, after;
  if (!comps.empty()) before = build_chain(g, std::set<NodeId>(comps[0].begin(), comps[0].end()));
  if (comps.size() > 1) after = build_chain(g, std::set<NodeId>(comps[1].begin(), comps[1].end()));

  auto orient = [&](std::vector<ChainPart>& side, bool cycle_after) {
    if (side.size() < 2) return;
    bool first = touches(g, side.front().nodes, on);
    bool last = touches(g, side.back().nodes, on);
    if (cycle_after ? (first && !last) : (last && !first)) std::reverse(side.begin(), side.end());
    bool ok = cycle_after ? touches(g, side.back().nodes, on) : touches(g, side.front().nodes, on);
    if (!ok) throw LadderError(ErrorCode::InvariantViolation, "side chain does not end at its cycle");
  };
  orient(before, true);
  orient(after, false);

  ChainPart cp;
  cp.kind = ChainPart::Kind::Cycle;
  cp.nodes.assign(on.begin(), on.end());
  cp.cycle = c;
  std::vector<ChainPart> out = std::move(before);
  out.push_back(std::move(cp));
  out.insert(out.end(), after.begin(), after.end());
  return out;
}

}  // namespace

CycleTreeChain cycle_tree_chain(const Graph& component) {
  if (has_uncompleted_frame(component))
    throw LadderError(ErrorCode::UncompletedFrame, "component has an uncompleted frame");
  CycleTreeChain chain;
  auto nodes = component.nodes();
  chain.parts = build_chain(component, std::set<NodeId>(nodes.begin(), nodes.end()));
  for (std::size_t i = 0; i + 1 < chain.parts.size(); ++i) {
    std::set<NodeId> next(chain.parts[i + 1].nodes.begin(), chain.parts[i + 1].nodes.end());
    std::vector<std::pair<NodeId, NodeId>> found;
    for (NodeId v : chain.parts[i].nodes)
      for (NodeId w : component.neighbors(v))
        if (next.count(w)) found.emplace_back(v, w);
    if (found.size() != 1)
      throw LadderError(ErrorCode::InvariantViolation,
                        "chain parts " + std::to_string(i) + " and " + std::to_string(i + 1) + " joined by " +
                            std::to_string(found.size()) + " edges");
    chain.links.push_back(found.front());
  }
  return chain;
}

}  // namespace ladder
