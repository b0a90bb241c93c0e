#include "ladder/generators.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ladder {

namespace {

using Rng = std::mt19937_64;

// rng() % k is biased by at most 2^-50 for our sizes and, unlike the standard
// distributions, gives the same stream on every standard library.
std::size_t draw(Rng& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

std::vector<Edge> ladder_edges(int levels) {
  std::vector<Edge> out;
  for (int l = 1; l <= levels; ++l) {
    out.emplace_back(ladder_id(1, l), ladder_id(2, l));
    if (l < levels) {
      out.emplace_back(ladder_id(1, l), ladder_id(1, l + 1));
      out.emplace_back(ladder_id(2, l), ladder_id(2, l + 1));
    }
  }
  return out;
}

LadderInstance relabelled(int levels, const std::vector<Edge>& edges, Rng& rng, bool relabel) {
  int n = 2 * levels;
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  if (relabel) shuffle(perm, rng);
  LadderInstance inst;
  inst.levels = levels;
  for (NodeId id = 1; id <= n; ++id) {
    inst.graph.add_node(perm[id - 1]);
    inst.truth[perm[id - 1]] = ladder_coord_of(id);
  }
  for (const Edge& e : edges) inst.graph.add_edge(perm[e.a - 1], perm[e.b - 1]);
  return inst;
}

}  // namespace

LadderInstance gen_ladder_subgraph(int levels, double density, std::uint64_t seed, bool relabel) {
  Rng rng(seed);
  std::vector<Edge> kept;
  for (const Edge& e : ladder_edges(levels))
    if (unit(rng) < density) kept.push_back(e);
  return relabelled(levels, kept, rng, relabel);
}

LadderInstance gen_ladder_component(int levels, double density, std::uint64_t seed) {
  LadderInstance inst = gen_ladder_subgraph(levels, density, seed);
  auto comps = connected_components(inst.graph);
  auto biggest = std::max_element(comps.begin(), comps.end(),
                                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::set<NodeId> keep(biggest->begin(), biggest->end());
  LadderInstance out;
  out.levels = levels;
  out.graph = induced_subgraph(inst.graph, keep);
  for (NodeId v : keep) out.truth[v] = inst.truth[v];
  return out;
}

LadderInstance gen_ladder_tree(int levels, std::uint64_t seed) {
  Rng rng(seed);
  // random spanning tree by randomized Kruskal over the ladder edges
  std::vector<Edge> edges = ladder_edges(levels);
  shuffle(edges, rng);
  std::vector<NodeId> parent(2 * levels + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> kept;
  for (const Edge& e : edges) {
    NodeId a = find(e.a), b = find(e.b);
    if (a == b) continue;
    parent[a] = b;
    kept.push_back(e);
  }
  return relabelled(levels, kept, rng, true);
}

std::optional<SequenceMode> parse_sequence_mode(const std::string& s) {
  if (s == "random") return SequenceMode::Random;
  if (s == "reveal") return SequenceMode::Reveal;
  if (s == "bfs_reveal") return SequenceMode::BfsReveal;
  if (s == "replay-heavy" || s == "replay_heavy") return SequenceMode::ReplayHeavy;
  if (s == "adversarial") return SequenceMode::Adversarial;
  return std::nullopt;
}

const char* sequence_mode_name(SequenceMode m) {
  switch (m) {
    case SequenceMode::Random: return "random";
    case SequenceMode::Reveal: return "reveal";
    case SequenceMode::BfsReveal: return "bfs_reveal";
    case SequenceMode::ReplayHeavy: return "replay-heavy";
    case SequenceMode::Adversarial: return "adversarial";
  }
  return "?";
}

std::vector<Edge> gen_request_sequence(const Graph& g, SequenceMode mode, int length, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges = g.edges();
  std::vector<Edge> out;
  if (edges.empty()) return out;
  std::size_t m = edges.size();

  std::vector<Edge> reveal;
  if (mode == SequenceMode::BfsReveal) {
    // edges in the order a BFS from a random node discovers them, component
    // after component
    std::set<Edge> seen;
    std::set<NodeId> visited;
    auto nodes = g.nodes();
    shuffle(nodes, rng);
    for (NodeId s : nodes) {
      if (visited.count(s)) continue;
      std::deque<NodeId> q{s};
      visited.insert(s);
      while (!q.empty()) {
        NodeId x = q.front();
        q.pop_front();
        for (NodeId y : g.neighbors(x)) {
          if (seen.insert(Edge(x, y)).second) reveal.emplace_back(x, y);
          if (visited.insert(y).second) q.push_back(y);
        }
      }
    }
  } else if (mode != SequenceMode::Random) {
    reveal = edges;
    shuffle(reveal, rng);
  }

  std::size_t want = length > 0 ? static_cast<std::size_t>(length) : m;
  if (mode == SequenceMode::Random) {
    for (std::size_t i = 0; i < want; ++i) out.push_back(edges[draw(rng, m)]);
    return out;
  }
  if (mode == SequenceMode::ReplayHeavy && length <= 0) want = 10 * m;
  out = reveal;
  if (out.size() > want) out.resize(want);
  while (out.size() < want) out.push_back(edges[draw(rng, m)]);
  return out;
}

Graph gen_connected_graph(int k, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g;
  for (NodeId v = 1; v <= k; ++v) g.add_node(v);
  std::vector<NodeId> order(k);
  std::iota(order.begin(), order.end(), 1);
  shuffle(order, rng);
  for (int i = 1; i < k; ++i) g.add_edge(order[i], order[draw(rng, i)]);
  for (NodeId a = 1; a <= k; ++a)
    for (NodeId b = a + 1; b <= k; ++b)
      if (unit(rng) < p) g.add_edge(a, b);
  return g;
}

}  // namespace ladder
