// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "ladder/baselines.hpp"
#include "ladder/generators.hpp"
#include "ladder/harness.hpp"
#include "ladder/invariants.hpp"
#include "ladder/line_projection.hpp"
#include "ladder/static_embedder.hpp"
#include "ladder/tree_analysis.hpp"

using namespace ladder;

namespace {

// pinned tolerances
constexpr int kRevealedStretchMax = 12;
constexpr int kMaintainedStretchMax = 5;
constexpr int kProximityRuns = 300;
constexpr int kProximityMaxLevels = 64;
constexpr double kScalingSpreadMax = 3.0;
constexpr int kScalingSeeds = 10;
constexpr int kCycleBaselineSeeds = 10;
constexpr int kGeneralGraphs = 100;
constexpr int kGeneralMaxNodes = 8;
constexpr int kStructuralSamples = 500;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s: %s (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), sec);
  std::fflush(stdout);
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome bandwidth_ground_truth() {
  for (int levels = 2; levels <= 5; ++levels) {
    Graph g = make_ladder(levels);
    int bw = bandwidth_exact(g);
    std::vector<NodeId> level_order(2 * levels);
    std::iota(level_order.begin(), level_order.end(), 1);  // ids are 2(level-1)+side
    int st = bandwidth_of_order(g, level_order);
    if (bw != 2 || st != 2) return {false, fmt("Ladder_%d: bandwidth %d, level order stretch %d", levels, bw, st)};
  }
  return {true, "Bandwidth(Ladder_n) = 2 and level order stretch = 2 for n = 2..5"};
}

// Criteria 2, 3 and 5 share one batch of runs.
struct ProximityStats {
  int runs = 0, steps = 0;
  int worst_revealed = 0, worst_maintained = 0;
  int stretch_violations = 0, invariant_violations = 0;
  std::string first_invariant_failure;
  std::array<int, kScenarioCount> worst_count{};
  int cap_violations = 0;
  std::string first_cap_failure;
  int accounting_violations = 0;
  std::int64_t migration = 0, unattributed = 0;
};

ProximityStats proximity_batch() {
  ProximityStats st;
  for (int s = 0; s < kProximityRuns; ++s) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(s));
    int levels = 2 + static_cast<int>(rng() % (kProximityMaxLevels - 1));
    double density = 0.5 + 0.5 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto inst = gen_ladder_subgraph(levels, density, static_cast<std::uint64_t>(s));
    auto seq = gen_request_sequence(inst.graph, SequenceMode::Reveal, 0, static_cast<std::uint64_t>(s) + 7);
    LadderEngine eng(inst.node_count());
    std::int64_t migration = 0;
    for (const Edge& e : seq) {
      auto r = eng.process_request(e.a, e.b);
      ++st.steps;
      migration += r.migration_cost;
      st.worst_revealed = std::max(st.worst_revealed, r.max_revealed_stretch);
      st.worst_maintained = std::max(st.worst_maintained, r.max_maintained_stretch);
      if (r.max_revealed_stretch > kRevealedStretchMax || r.max_maintained_stretch > kMaintainedStretchMax)
        ++st.stretch_violations;
      if (!r.invariants_checked || !r.invariants_ok) {
        if (st.first_invariant_failure.empty())
          st.first_invariant_failure = fmt("seed %d step %zu: %s", s, r.index,
                                           r.violations.empty() ? "not checked" : r.violations[0].c_str());
        ++st.invariant_violations;
      }
    }
    const auto& c = eng.counters();
    int n = inst.node_count();
    // each tagged move displaces its node by fewer than 2n positions
    if (migration > 2 * static_cast<std::int64_t>(n) * c.tags() || c.total_charged() + c.unattributed != migration) {
      if (st.first_cap_failure.empty())
        st.first_cap_failure = fmt("seed %d: migration %lld not covered by %lld tags", s,
                                   static_cast<long long>(migration), static_cast<long long>(c.tags()));
      ++st.accounting_violations;
    }
    st.migration += migration;
    st.unattributed += c.unattributed;
    std::array<int, kScenarioCount> cap;
    cap.fill(-1);
    cap[static_cast<int>(Scenario::FirstTimeOnACycle)] = 1;
    cap[static_cast<int>(Scenario::InnerSimpleGraphReorienting)] = 1;
    cap[static_cast<int>(Scenario::NoMoreAnExitGraph)] = 1;
    cap[static_cast<int>(Scenario::ConnectivityComponentMovement)] = static_cast<int>(std::ceil(std::log2(n)));
    for (int k = 0; k < kScenarioCount; ++k) {
      int m = c.max_count(static_cast<Scenario>(k));
      st.worst_count[k] = std::max(st.worst_count[k], m);
      if (cap[k] >= 0 && m > cap[k]) {
        if (st.first_cap_failure.empty())
          st.first_cap_failure = fmt("seed %d: %s count %d > %d", s, scenario_name(static_cast<Scenario>(k)), m, cap[k]);
        ++st.cap_violations;
      }
    }
    ++st.runs;
  }
  return st;
}

Outcome migration_scaling() {
  std::vector<RunSpec> specs;
  for (int levels : {8, 16, 32, 64})
    for (int s = 1; s <= kScalingSeeds; ++s) {
      RunSpec r;
      r.gen = "ladder:n=" + std::to_string(levels) + ",density=1";
      r.mode = SequenceMode::Reveal;
      r.seed = static_cast<std::uint64_t>(s);
      r.options.check_invariants = false;
      specs.push_back(r);
    }
  auto rep = scaling_fit(run_many(specs, 1), 0.15, kScalingSpreadMax);
  std::ostringstream os;
  os << "migration/(n^2 log2 n) =";
  for (const auto& row : rep.rows) os << fmt(" %.3f", row.ratio) << "@" << row.n;
  os << fmt(", spread %.2f <= %.1f", rep.spread, kScalingSpreadMax);
  return {rep.spread <= kScalingSpreadMax, os.str()};
}

Outcome cycle_baseline() {
  if (fold_positions(6) != std::vector<int>{1, 3, 5, 6, 4, 2}) return {false, "n=6 fold differs from [1,3,5,6,4,2]"};
  int runs = 0;
  for (int n : {6, 8, 12, 16})
    for (int s = 0; s < kCycleBaselineSeeds; ++s) {
      Instance inst = make_instance("cycle:n=" + std::to_string(n), derive_seed(static_cast<std::uint64_t>(s), 1));
      auto seq = gen_request_sequence(inst.graph, SequenceMode::Reveal, 0, derive_seed(static_cast<std::uint64_t>(s), 2));
      CycleAlgorithm alg(n);
      for (const Edge& e : seq) alg.step(e.a, e.b);
      if (!alg.closed()) return {false, fmt("n=%d seed %d: not closed after full reveal", n, s)};
      int bw = bandwidth_of_config(inst.graph, alg.line());
      if (bw > 2) return {false, fmt("n=%d seed %d: stretch %d after closing", n, s, bw)};
      for (const Edge& e : gen_request_sequence(inst.graph, SequenceMode::Random, 3 * n, static_cast<std::uint64_t>(s)))
        if (alg.step(e.a, e.b).migration_cost != 0) return {false, fmt("n=%d seed %d: migration after close", n, s)};
      ++runs;
    }
  return {true, fmt("%d runs: stretch <= 2 after closing, no later migration; n=6 fold [1,3,5,6,4,2]", runs)};
}

Outcome general_algorithm() {
  int served = 0;
  for (int i = 0; i < kGeneralGraphs; ++i) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(i) + 1000);
    int k = 2 + static_cast<int>(rng() % (kGeneralMaxNodes - 1));
    double p = 0.15 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = gen_connected_graph(k, p, rng());
    int bw = bandwidth_exact(g);
    long long m = static_cast<long long>(g.edge_count());
    GeneralAlgorithm alg(k, exact_oracle());
    std::int64_t migration = 0;
    for (const Edge& e : gen_request_sequence(g, SequenceMode::Random, static_cast<int>(4 * m), rng())) {
      auto r = alg.step(e.a, e.b);
      migration += r.migration_cost;
      ++served;
      if (r.serve_cost > bw) return {false, fmt("graph %d: serve %d > Bandwidth %d", i, r.serve_cost, bw)};
    }
    if (migration > m * k * k) return {false, fmt("graph %d: migration %lld > |E||V|^2", i, static_cast<long long>(migration))};
  }
  return {true, fmt("%d graphs, %d requests: serve <= Bandwidth(G), migration <= |E||V|^2", kGeneralGraphs, served)};
}

Outcome adversary_floor() {
  int requests = 0;
  auto run = [&](const std::string& alg, const Instance& inst) -> std::optional<std::string> {
    int bw = bandwidth_exact(inst.graph);
    auto t = run_adversarial(alg, inst, 4 * inst.graph.edge_count());
    for (const auto& r : t.rows) {
      ++requests;
      if (r.serve + r.migrate < bw)
        return fmt("%s on %s: request %zu cost %lld < %d", alg.c_str(), inst.generator.c_str(), r.index,
                   static_cast<long long>(r.serve + r.migrate), bw);
    }
    return std::nullopt;
  };
  for (std::uint64_t s = 0; s < 20; ++s) {
    Instance lad = make_instance("ladder:n=4,density=0.8", s);
    if (lad.graph.edge_count() == 0) continue;
    for (const char* alg : {"ladder", "general"})
      if (auto err = run(alg, lad)) return {false, *err};
    Instance rnd = make_instance("random:k=" + std::to_string(3 + s % 6) + ",p=0.4", s);
    if (auto err = run("general", rnd)) return {false, *err};
  }
  for (int n = 3; n <= 8; ++n)
    if (auto err = run("cycle", make_instance("cycle:n=" + std::to_string(n), n))) return {false, *err};
  return {true, fmt("%d adversarial requests over ladder, cycle and general: every cost >= Bandwidth(G)", requests)};
}

Outcome swap_equivalence() {
  long long pairs = 0;
  for (int k = 1; k <= 6; ++k) {
    std::vector<NodeId> base(k);
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<NodeId>> perms;
    std::map<std::vector<NodeId>, int> index;
    auto p = base;
    do {
      index[p] = static_cast<int>(perms.size());
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto& from : perms) {
      // BFS in the adjacent-transposition graph
      std::vector<int> dist(perms.size(), -1);
      std::deque<int> q{index[from]};
      dist[index[from]] = 0;
      while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        auto v = perms[cur];
        for (int i = 0; i + 1 < k; ++i) {
          std::swap(v[i], v[i + 1]);
          int nx = index[v];
          if (dist[nx] < 0) {
            dist[nx] = dist[cur] + 1;
            q.push_back(nx);
          }
          std::swap(v[i], v[i + 1]);
        }
      }
      for (std::size_t j = 0; j < perms.size(); ++j) {
        const auto& to = perms[j];
        auto sched = swap_schedule(from, to);
        if (inversion_cost(from, to) != dist[j] || sched.cost() != dist[j] || apply_schedule(from, sched) != to)
          return {false, "mismatch on a permutation pair of size " + std::to_string(k)};
        ++pairs;
      }
    }
  }
  return {true, fmt("%lld permutation pairs (sizes 1..6): inversion_cost = BFS distance, schedules replay", pairs)};
}

Outcome structural_lemmas() {
  int trees = 0, comps = 0, simple = 0, frames = 0;
  for (int i = 0; i < kStructuralSamples; ++i) {
    std::uint64_t seed = static_cast<std::uint64_t>(i) + 5000;
    int levels = 2 + i % 40;
    if (i % 2 == 0) {
      auto inst = gen_ladder_tree(levels, seed);
      const Graph& t = inst.graph;
      auto core = trunk_core(t);
      if (core.path.empty()) {
        ++trees;
        continue;
      }
      for (const auto& sg : classify_simple_graphs(t, core)) {
        Graph sub = induced_subgraph(t, {sg.nodes.begin(), sg.nodes.end()});
        if (!is_line_graph(sub) || !sg.line) return {false, fmt("tree seed %llu: simple graph is not a line graph", (unsigned long long)seed)};
        ++simple;
      }
      auto phi = tree_quasi_correct_embedding(t);
      if (!is_monotone_embedding(core.path, phi))
        return {false, fmt("tree seed %llu: trunk core not monotone", (unsigned long long)seed)};
      ++trees;
    } else {
      auto inst = gen_ladder_component(levels, 0.55 + 0.45 * (i % 10) / 10.0, seed);
      auto prep = preprocess(inst.graph);
      for (const auto& c : maximal_cycles(prep.graph)) {
        if (c.length() < 6) continue;
        auto att = frame_attachments(prep.graph, c);
        if (att.size() > 2 || (att.size() == 2 && prep.graph.has_edge(att[0], att[1])))
          return {false, fmt("component seed %llu: frame with %zu attachments", (unsigned long long)seed, att.size())};
        ++frames;
      }
      ++comps;
    }
  }
  return {true, fmt("%d trees (%d simple graphs, all line graphs; cores monotone), %d components (%d frames, <= 2 "
                    "non-adjacent attachments)",
                    trees, simple, comps, frames)};
}

}  // namespace

int main() {
  report(1, "bandwidth ground truth", bandwidth_ground_truth);

  ProximityStats prox;
  auto t0 = std::chrono::steady_clock::now();
  prox = proximity_batch();
  double batch_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(2, "proximity", [&] {
    return Outcome{prox.stretch_violations == 0,
                   fmt("%d runs, %d steps in %.1fs: max revealed stretch %d <= %d, max maintained %d <= %d", prox.runs,
                       prox.steps, batch_sec, prox.worst_revealed, kRevealedStretchMax, prox.worst_maintained,
                       kMaintainedStretchMax)};
  });
  report(3, "invariant suite", [&] {
    return Outcome{prox.invariant_violations == 0,
                   prox.invariant_violations == 0
                       ? fmt("all five invariants and the septum rule held after %d steps", prox.steps)
                       : fmt("%d violating steps, first %s", prox.invariant_violations, prox.first_invariant_failure.c_str())};
  });
  report(4, "migration scaling", migration_scaling);
  report(5, "scenario caps", [&] {
    auto w = [&](Scenario s) { return prox.worst_count[static_cast<int>(s)]; };
    std::string d = fmt("worst per-node counts FTOC %d, ISGR %d, NMEG %d, CCM %d (cap ceil(log2 n))",
                        w(Scenario::FirstTimeOnACycle), w(Scenario::InnerSimpleGraphReorienting),
                        w(Scenario::NoMoreAnExitGraph), w(Scenario::ConnectivityComponentMovement));
    d += fmt("; 2n*tags covers migration in every run, %lld of %lld inversions unattributed",
             static_cast<long long>(prox.unattributed), static_cast<long long>(prox.migration));
    if (prox.cap_violations || prox.accounting_violations) d += "; first violation " + prox.first_cap_failure;
    return Outcome{prox.cap_violations == 0 && prox.accounting_violations == 0, d};
  });
  report(6, "cycle baseline", cycle_baseline);
  report(7, "general algorithm", general_algorithm);
  report(8, "adversary floor", adversary_floor);
  report(9, "swap-cost equivalence", swap_equivalence);
  report(10, "structural lemmas", structural_lemmas);

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
