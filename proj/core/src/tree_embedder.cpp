#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <set>

#include "ladder/core_model.hpp"
#include "ladder/line_projection.hpp"
#include "ladder/static_embedder.hpp"

namespace ladder {

long long hint_disagreement(const QuasiEmbedding& phi, const Hint* hint) {
  if (!hint || hint->empty()) return 0;
  QuasiEmbedding known;
  for (const auto& [v, c] : phi)
    if (hint->count(v)) known.emplace(v, c);
  std::vector<NodeId> order = project(known);
  std::vector<NodeId> target = order;
  std::sort(target.begin(), target.end(), [&](NodeId x, NodeId y) { return hint->at(x) < hint->at(y); });
  return inversion_cost(order, target);
}

namespace {

struct Against {
  int foot_level = 0;
  int spine_pos = 0;
  std::vector<std::vector<NodeId>> hands;
  std::vector<std::vector<int>> options;  // one direction per hand, most preferred first
};

// Chooses a direction for every hand so that hands stay within [low, high),
// never share a slot, and never touch another foot level, except that the
// first node of a hand may take the head slot of a graph whose foot is the
// next spine node. Callers exclude the top level when a right end is given,
// since the next chain part starts there; the bottom level is free, as the
// previous part ends one level lower.
class HandSearch {
 public:
  HandSearch(std::vector<Against> graphs, int low, int high)
      : g_(std::move(graphs)), low_(low), high_(high), choice_(g_.size(), 0) {
    for (std::size_t i = 0; i < g_.size(); ++i) foot_at_[g_[i].foot_level] = static_cast<int>(i);
  }

  std::optional<std::vector<int>> solve() {
    if (!dfs(0)) return std::nullopt;
    return choice_;
  }

 private:
  bool place(std::size_t i, const std::vector<int>& dirs, std::vector<int>& used, std::vector<int>& crossed) {
    const Against& a = g_[i];
    for (std::size_t h = 0; h < a.hands.size(); ++h) {
      for (std::size_t k = 0; k < a.hands[h].size(); ++k) {
        int lvl = a.foot_level + dirs[h] * static_cast<int>(k + 1);
        if (lvl < low_ || lvl >= high_) return false;
        auto f = foot_at_.find(lvl);
        if (f != foot_at_.end()) {
          if (k != 0 || std::abs(g_[f->second].spine_pos - a.spine_pos) != 1 || crossed_.count(lvl)) return false;
          crossed_.insert(lvl);
          crossed.push_back(lvl);
        } else {
          if (used_.count(lvl)) return false;
          used_.insert(lvl);
          used.push_back(lvl);
        }
      }
    }
    return true;
  }

  std::vector<int> key(std::size_t i) const {
    int floor = i >= 2 ? g_[i - 2].foot_level : INT_MIN;
    std::vector<int> k{static_cast<int>(i)};
    for (int l : used_)
      if (l > floor) k.push_back(l);
    k.push_back(INT_MIN);
    for (int l : crossed_)
      if (l > floor) k.push_back(l);
    return k;
  }

  bool dfs(std::size_t i) {
    if (i == g_.size()) return true;
    auto k = key(i);
    if (dead_.count(k)) return false;
    for (std::size_t o = 0; o < g_[i].options.size(); ++o) {
      std::vector<int> used, crossed;
      bool ok = place(i, g_[i].options[o], used, crossed);
      if (ok) {
        choice_[i] = static_cast<int>(o);
        if (dfs(i + 1)) return true;
      }
      for (int l : used) used_.erase(l);
      for (int l : crossed) crossed_.erase(l);
    }
    dead_.insert(std::move(k));
    return false;
  }

  std::vector<Against> g_;
  int low_, high_;
  std::map<int, int> foot_at_;
  std::set<int> used_, crossed_;
  std::set<std::vector<int>> dead_;
  std::vector<int> choice_;
};

int sign_of(long long x) { return (x > 0) - (x < 0); }

// The direction that keeps a hand pointing at the same spine neighbour of its
// foot as in the hinted order, so that reversing a whole spine carries its
// hands along. The hinted hand node closest to the head decides; nodes further
// out may have just arrived from a far away component.
int preferred_dir(const std::vector<NodeId>& hand, const std::vector<NodeId>& spine, std::size_t foot_pos,
                  const Hint* hint) {
  NodeId foot = spine[foot_pos];
  if (!hint || !hint->count(foot)) return 0;
  int s = 0;
  for (NodeId v : hand) {
    auto it = hint->find(v);
    if (it == hint->end()) continue;
    s = sign_of(static_cast<long long>(it->second) - hint->at(foot));
    break;
  }
  if (s == 0) return 0;
  auto rel = [&](std::size_t j) { return sign_of(static_cast<long long>(hint->at(spine[j])) - hint->at(foot)); };
  if (foot_pos + 1 < spine.size() && hint->count(spine[foot_pos + 1])) return rel(foot_pos + 1) == s ? 1 : -1;
  if (foot_pos > 0 && hint->count(spine[foot_pos - 1])) return rel(foot_pos - 1) == s ? -1 : 1;
  return s;
}

std::optional<TreeEmbedding> embed_on_spine(const Graph& tree, const std::vector<NodeId>& spine, LadderCoord base,
                                            bool top_open, const Hint* hint) {
  TreeEmbedding out;
  out.layout.spine = spine;
  for (std::size_t i = 0; i < spine.size(); ++i)
    out.phi[spine[i]] = {base.level + static_cast<int>(i), base.side};
  if (spine.size() == tree.node_count()) return out;

  auto graphs = classify_attached(tree, spine);
  std::map<NodeId, int> pos;
  for (std::size_t i = 0; i < spine.size(); ++i) pos[spine[i]] = static_cast<int>(i);
  std::set<NodeId> feet;
  std::vector<Against> against;
  for (const auto& g : graphs) {
    if (!g.line || g.hands.size() > 2 || !feet.insert(g.foot).second) return std::nullopt;
    Against a;
    a.foot_level = out.phi[g.foot].level;
    a.spine_pos = pos[g.foot];
    a.hands = g.hands;
    if (g.hands.empty()) {
      a.options = {{}};
    } else if (g.hands.size() == 1) {
      a.options = {{1}, {-1}};
    } else {
      a.options = {{1, -1}, {-1, 1}};
    }
    std::vector<int> pref;
    for (const auto& h : g.hands) pref.push_back(preferred_dir(h, spine, pos[g.foot], hint));
    std::stable_sort(a.options.begin(), a.options.end(), [&](const auto& x, const auto& y) {
      int sx = 0, sy = 0;
      for (std::size_t h = 0; h < pref.size(); ++h) {
        sx += pref[h] != 0 && x[h] != pref[h];
        sy += pref[h] != 0 && y[h] != pref[h];
      }
      return sx < sy;
    });
    against.push_back(std::move(a));
  }

  int low = base.level;
  int high = base.level + static_cast<int>(spine.size()) - (top_open ? 0 : 1);
  HandSearch search(against, low, high);
  auto choice = search.solve();
  if (!choice) return std::nullopt;

  int other = other_side(base.side);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const auto& dirs = against[i].options[(*choice)[i]];
    int fl = against[i].foot_level;
    out.phi[g.head] = {fl, other};
    for (std::size_t h = 0; h < g.hands.size(); ++h)
      for (std::size_t k = 0; k < g.hands[h].size(); ++k)
        out.phi[g.hands[h][k]] = {fl + dirs[h] * static_cast<int>(k + 1), other};
    out.layout.first_hand_dir.push_back(dirs.empty() ? 0 : dirs[0]);
  }
  out.layout.attached = std::move(graphs);
  return out;
}

void stack_exit(const SimpleGraph& e, int end_level, int side, int dir, TreeEmbedding& emb) {
  emb.phi[e.head] = {end_level + dir, side};
  emb.layout.exit_nodes.insert(e.head);
  for (const auto& h : e.hands)
    for (std::size_t k = 0; k < h.size(); ++k) {
      emb.phi[h[k]] = {end_level + dir * static_cast<int>(k + 2), side};
      emb.layout.exit_nodes.insert(h[k]);
    }
}

// Hand nodes whose direction differs from the one the hint asks for.
long long turned_hands(const TreeEmbedding& emb, const Hint* hint) {
  if (!hint) return 0;
  const auto& spine = emb.layout.spine;
  long long turned = 0;
  for (const auto& g : emb.layout.attached) {
    if (g.kind != SimpleKind::Inner) continue;
    auto at = std::find(spine.begin(), spine.end(), g.foot);
    if (at == spine.end()) continue;
    int fl = emb.phi.at(g.foot).level;
    for (const auto& h : g.hands) {
      int want = preferred_dir(h, spine, static_cast<std::size_t>(at - spine.begin()), hint);
      int got = sign_of(emb.phi.at(h.front()).level - fl);
      if (want != 0 && got != want) turned += static_cast<long long>(h.size());
    }
  }
  return turned;
}

struct Plan {
  std::vector<NodeId> spine;
  bool exits_low = false;
  bool exits_high = false;
};

std::optional<TreeEmbedding> run_plan(const Graph& t, const TrunkCore& tc, const Plan& p, LadderCoord base,
                                      bool anchored, bool top_open, const Hint* hint) {
  std::vector<SimpleGraph> low_exits, high_exits;
  std::set<NodeId> drop;
  if (p.exits_low || p.exits_high) {
    for (const auto& g : classify_simple_graphs(t, tc)) {
      if (g.kind != SimpleKind::Exit) continue;
      bool at_low = p.exits_low && g.foot == p.spine.front();
      bool at_high = p.exits_high && g.foot == p.spine.back();
      if (!at_low && !at_high) continue;
      if (!g.line) return std::nullopt;
      (at_low ? low_exits : high_exits).push_back(g);
      drop.insert(g.nodes.begin(), g.nodes.end());
    }
  }
  Graph rest = drop.empty() ? t : without_nodes(t, drop);
  auto emb = embed_on_spine(rest, p.spine, base, top_open, hint);
  if (!emb) return std::nullopt;
  for (const auto& e : low_exits) stack_exit(e, emb->phi[p.spine.front()].level, base.side, -1, *emb);
  for (const auto& e : high_exits) stack_exit(e, emb->phi[p.spine.back()].level, base.side, +1, *emb);
  if (emb->phi.size() != t.node_count() || !is_quasi_correct(t, emb->phi)) return std::nullopt;
  if (!anchored) emb->phi = normalize_levels(emb->phi, base.level);
  emb->layout.tree = t;
  return emb;
}

std::vector<NodeId> leaves_of(const Graph& t) {
  std::vector<NodeId> out;
  for (NodeId v : t.nodes())
    if (t.degree(v) <= 1) out.push_back(v);
  return out;
}

// Spines between leaves (or the given ends), longest first.
std::vector<Plan> leaf_plans(const Graph& t, std::optional<NodeId> left, std::optional<NodeId> right) {
  std::vector<Plan> out;
  auto leaves = leaves_of(t);
  auto by_distance = [&](NodeId from, bool from_is_left) {
    auto dist = bfs_distances(t, from);
    std::vector<NodeId> others;
    for (NodeId x : leaves)
      if (x != from) others.push_back(x);
    std::stable_sort(others.begin(), others.end(), [&](NodeId a, NodeId b) { return dist[a] > dist[b]; });
    for (NodeId x : others)
      out.push_back({from_is_left ? shortest_path(t, from, x) : shortest_path(t, x, from)});
  };
  if (left) {
    by_distance(*left, true);
  } else if (right) {
    by_distance(*right, false);
  } else {
    std::vector<std::tuple<int, NodeId, NodeId>> pairs;
    for (NodeId a : leaves) {
      auto dist = bfs_distances(t, a);
      for (NodeId b : leaves)
        if (a != b) pairs.emplace_back(-dist[b], a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [d, a, b] : pairs) out.push_back({shortest_path(t, a, b)});
  }
  return out;
}

NodeId farther_end(const Graph& t, const std::vector<NodeId>& core, NodeId from) {
  auto dist = bfs_distances(t, from);
  return dist[core.back()] >= dist[core.front()] ? core.back() : core.front();
}

}  // namespace

TreeEmbedding left_right_tree_layout(const Graph& t, NodeId left, NodeId right, LadderCoord leftImage,
                                     const Hint* hint) {
  if (!is_tree(t)) throw LadderError(ErrorCode::NotATree, "left-right embedding needs a tree");
  if (!t.has_node(left)) throw LadderError(ErrorCode::UndefinedNode, "left " + std::to_string(left));
  if (!t.has_node(right)) throw LadderError(ErrorCode::UndefinedNode, "right " + std::to_string(right));
  auto emb = embed_on_spine(t, shortest_path(t, left, right), leftImage, false, hint);
  if (!emb)
    throw LadderError(ErrorCode::NoValidOrientation,
                      "no orientation between " + std::to_string(left) + " and " + std::to_string(right));
  emb->layout.tree = t;
  return *emb;
}

QuasiEmbedding left_right_tree_embedding(const Graph& t, NodeId left, NodeId right, LadderCoord leftImage) {
  return left_right_tree_layout(t, left, right, leftImage).phi;
}

TreeEmbedding tree_layout(const Graph& t, std::optional<NodeId> left, std::optional<NodeId> right,
                          std::optional<LadderCoord> leftImage, const Hint* hint) {
  if (t.empty()) throw LadderError(ErrorCode::EmptyGraph, "tree has no nodes");
  if (!is_tree(t)) throw LadderError(ErrorCode::NotATree, "tree embedding needs a tree");
  for (auto x : {left, right})
    if (x && !t.has_node(*x)) throw LadderError(ErrorCode::UndefinedNode, "end node " + std::to_string(*x));
  LadderCoord base = leftImage.value_or(LadderCoord{1, 1});

  if (t.node_count() == 1) {
    TreeEmbedding out;
    out.phi[t.min_node()] = base;
    out.layout.tree = t;
    out.layout.spine = {t.min_node()};
    return out;
  }

  if (left && right) {
    auto emb = embed_on_spine(t, shortest_path(t, *left, *right), base, false, hint);
    if (!emb)
      throw LadderError(ErrorCode::InfeasibleConstraints,
                        "no embedding between " + std::to_string(*left) + " and " + std::to_string(*right));
    emb->layout.tree = t;
    return *emb;
  }

  TrunkCore tc = trunk_core(t);
  std::vector<Plan> primary;
  if (tc.has_core()) {
    if (left) {
      primary.push_back({shortest_path(t, *left, farther_end(t, tc.path, *left)), false, true});
    } else if (right) {
      primary.push_back({shortest_path(t, farther_end(t, tc.path, *right), *right), true, false});
    } else {
      primary.push_back({tc.path, true, true});
      primary.push_back({std::vector<NodeId>(tc.path.rbegin(), tc.path.rend()), true, true});
    }
  } else {
    primary = leaf_plans(t, left, right);
  }

  bool anchored = left.has_value();
  std::optional<TreeEmbedding> best;
  long long best_cost = 0, best_turned = 0;
  // With a hint, a plan that turns hands around loses to any that does not;
  // among equals the smaller disagreement wins.
  auto consider = [&](const std::vector<Plan>& plans) {
    for (const auto& p : plans) {
      auto emb = run_plan(t, tc, p, base, anchored, !right, hint);
      if (!emb) continue;
      long long turned = turned_hands(*emb, hint);
      long long cost = hint_disagreement(emb->phi, hint);
      if (!best || turned < best_turned || (turned == best_turned && cost < best_cost)) {
        best = std::move(emb);
        best_cost = cost;
        best_turned = turned;
      }
      if (!hint) break;
    }
  };
  consider(primary);
  // Not expected to be needed for a ladder subgraph without a hint; with one,
  // a leaf-to-leaf spine can keep hands that the trunk core would turn.
  if (tc.has_core() && (!best || best_turned > 0)) consider(leaf_plans(t, left, right));
  if (!best) throw LadderError(ErrorCode::InfeasibleConstraints, "no tree layout satisfies the end constraints");
  return *best;
}

QuasiEmbedding tree_quasi_correct_embedding(const Graph& t, std::optional<NodeId> left, std::optional<NodeId> right,
                                            std::optional<LadderCoord> leftImage) {
  return tree_layout(t, left, right, leftImage).phi;
}

}  // namespace ladder
