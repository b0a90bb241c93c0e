// ladderctl: simulate online ladder embeddings, verify embeddings, query the
// bandwidth oracle, run scaling benches and write generated instances.

#include <filesystem>
#include <iostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "ladder/graph_io.hpp"
#include "ladder/harness.hpp"
#include "ladder/invariants.hpp"
#include "ladder/tree_analysis.hpp"

namespace fs = std::filesystem;
using namespace ladder;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitCheckFailed = 3;

struct Source {
  std::string gen;
  std::string graph;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* g = cmd->add_option("--gen", src.gen, "generator, e.g. ladder:n=16,density=1 | tree:n=8 | cycle:n=12 | random:k=8,p=0.3");
  auto* f = cmd->add_option("--graph", src.graph, "instance JSON file")->check(CLI::ExistingFile);
  g->excludes(f);
  f->excludes(g);
}

Instance load(const Source& src, std::uint64_t seed) {
  if (!src.graph.empty()) return read_instance(src.graph);
  if (src.gen.empty()) throw LadderError(ErrorCode::ParseError, "give exactly one of --gen or --graph");
  return make_instance(src.gen, derive_seed(seed, 1));
}

SequenceMode mode_of(const std::string& s) {
  auto m = parse_sequence_mode(s);
  if (!m) throw LadderError(ErrorCode::ParseError, "unknown sequence mode '" + s + "'");
  return *m;
}

std::string join(const std::vector<NodeId>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

struct SimulateArgs {
  Source src;
  std::string alg = "ladder";
  std::string oracle = "exact";
  std::string seq = "reveal";
  int length = 0;
  std::uint64_t seed = 1;
  std::string out = ".";
  bool check = true;
  bool debug_dump = false;
  bool strict = false;
  std::size_t fault_after = 0;
  bool fault = false;
};

int cmd_simulate(const SimulateArgs& a) {
  RunSpec spec;
  spec.algorithm = a.alg;
  spec.seed = a.seed;
  spec.mode = mode_of(a.seq);
  spec.length = a.length;
  spec.instance = load(a.src, a.seed);
  spec.options.check_invariants = a.check;
  spec.options.strict = a.strict;
  spec.options.oracle = a.oracle;
  if (a.fault) spec.options.inject_fault_after = a.fault_after;

  CostTrace t;
  try {
    t = run_spec(spec);
  } catch (const LadderError& e) {
    if (e.code() == ErrorCode::InvariantViolation) {
      std::cerr << "invariant violation: " << e.what() << '\n';
      return kExitInvariant;
    }
    throw;
  }

  fs::create_directories(a.out);
  write_text_file((fs::path(a.out) / "trace.csv").string(), t.to_csv());
  write_text_file((fs::path(a.out) / "summary.json").string(), t.summary().dump(2) + '\n');
  write_text_file((fs::path(a.out) / "events.jsonl").string(), t.event_log());
  if (a.debug_dump) {
    write_text_file((fs::path(a.out) / "instance.json").string(), instance_to_json(*spec.instance).dump(1) + '\n');
    for (const auto& r : t.rows)
      for (const auto& v : r.violations) std::cerr << "step " << r.index << ": " << v << '\n';
  }

  std::cout << "requests " << t.rows.size() << "  serve " << t.total_serve() << "  migration "
            << t.total_migration() << "  max stretch " << t.max_revealed_stretch() << '\n';
  if (!t.invariants_ok()) {
    std::size_t bad = 0;
    for (const auto& r : t.rows) bad += r.invariants_ok ? 0 : 1;
    std::cerr << "invariant violations in " << bad << " step(s)\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_verify(const std::string& graph_file, const std::string& emb_file) {
  Instance inst = read_instance(graph_file);
  EmbeddingFile emb = read_embedding(emb_file);
  const Graph& g = inst.graph;
  std::vector<std::pair<std::string, std::vector<std::string>>> checks;

  std::vector<std::string> placed, edges, load, septum, frames, conflicts;
  for (NodeId v : g.nodes())
    if (!emb.phi.count(v)) placed.push_back("node " + std::to_string(v) + " has no image");
  if (placed.empty()) {
    for (const Edge& e : g.edges())
      if (!ladder_adjacent(emb.phi.at(e.a), emb.phi.at(e.b)))
        edges.push_back("edge " + to_string(e) + " maps to " + to_string(emb.phi.at(e.a)) + ", " +
                        to_string(emb.phi.at(e.b)));
    for (const auto& [level, count] : level_loads(emb.phi))
      if (count > 3) load.push_back("level " + std::to_string(level) + " holds " + std::to_string(count) + " nodes");
    for (const auto& spine : emb.spines) {
      if (spine.empty() || !g.has_node(spine.front())) {
        septum.push_back("spine does not start at a graph node");
        continue;
      }
      for (const auto& comp : connected_components(g)) {
        if (std::find(comp.begin(), comp.end(), spine.front()) == comp.end()) continue;
        Graph tree = induced_subgraph(g, std::set<NodeId>(comp.begin(), comp.end()));
        if (!is_tree(tree)) {
          std::cout << "note: septum check skipped for the spine at " << spine.front() << " (component has a cycle)\n";
          break;
        }
        for (auto& s : septum_violations(tree, spine, emb.phi)) septum.push_back(std::move(s));
      }
    }
    if (has_uncompleted_frame(g)) frames.push_back("graph has an uncompleted frame");
    conflicts = cycle_conflicts(g, emb.phi);
  }
  checks = {{"placed", placed},   {"edges_preserved", edges},       {"level_load", load},
            {"septum", septum},   {"frames_completed", frames},     {"cycle_conflict_free", conflicts}};

  bool ok = true;
  for (const auto& [name, fails] : checks) {
    std::cout << (fails.empty() ? "PASS " : "FAIL ") << name << '\n';
    for (const auto& f : fails) std::cout << "  " << f << '\n';
    ok = ok && fails.empty();
  }
  return ok ? kExitOk : kExitInvariant;
}

int cmd_oracle(const Source& src, std::uint64_t seed, int cap) {
  Instance inst = load(src, seed);
  auto res = bandwidth_exact_witness(inst.graph, cap);
  std::cout << "bandwidth " << res.bandwidth << '\n' << "order " << join(res.order) << '\n';
  return kExitOk;
}

struct BenchArgs {
  std::string alg = "ladder";
  std::string family;
  double density = 1.0;
  std::vector<int> ns{8, 16, 32, 64};
  int seeds = 10;
  std::uint64_t seed = 1;
  std::string seq = "reveal";
  int jobs = 1;
  std::string json;
};

int cmd_bench(const BenchArgs& a) {
  std::string family = a.family.empty() ? (a.alg == "cycle" ? "cycle" : "ladder") : a.family;
  std::vector<RunSpec> specs;
  for (int n : a.ns)
    for (int s = 0; s < a.seeds; ++s) {
      RunSpec r;
      r.algorithm = a.alg;
      if (family == "ladder") {
        std::ostringstream g;
        g << "ladder:n=" << n << ",density=" << a.density;
        r.gen = g.str();
      } else if (family == "cycle") {
        r.gen = "cycle:n=" + std::to_string(n);
      } else {
        throw LadderError(ErrorCode::ParseError, "unknown family '" + family + "' (ladder, cycle)");
      }
      r.mode = mode_of(a.seq);
      r.seed = a.seed + static_cast<std::uint64_t>(s);
      r.options.check_invariants = false;
      specs.push_back(std::move(r));
    }
  std::set<int> distinct(a.ns.begin(), a.ns.end());
  if (distinct.size() < 3)
    throw LadderError(ErrorCode::InsufficientData, "bench needs at least 3 distinct --ns values");
  auto report = scaling_fit(run_many(specs, a.jobs));
  std::cout << report.to_text();
  if (!a.json.empty()) write_text_file(a.json, report.to_json().dump(2) + '\n');
  return report.bounded ? kExitOk : kExitCheckFailed;
}

int cmd_gen(const std::string& spec, std::uint64_t seed, const std::string& out, const std::string& truth_out) {
  Instance inst = make_instance(spec, derive_seed(seed, 1));
  std::string text = instance_to_json(inst).dump(1) + '\n';
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
  if (!truth_out.empty()) {
    if (!inst.truth) throw LadderError(ErrorCode::ParseError, "generator '" + spec + "' has no ground truth");
    write_embedding(EmbeddingFile{*inst.truth, {}}, truth_out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online ladder embedding simulator"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "run an online algorithm and write trace.csv, summary.json, events.jsonl");
  add_source(simulate, sim.src);
  simulate->add_option("--alg", sim.alg, "ladder | cycle | general")->capture_default_str();
  simulate->add_option("--oracle", sim.oracle, "bandwidth oracle for --alg general")->capture_default_str();
  simulate->add_option("--seq", sim.seq, "random | reveal | bfs_reveal | replay-heavy | adversarial")->capture_default_str();
  simulate->add_option("--length", sim.length, "request count; 0 reveals every edge once")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "single source of randomness")->capture_default_str();
  simulate->add_option("-o,--out", sim.out, "output directory")->capture_default_str();
  simulate->add_flag("--check-invariants,!--no-check-invariants", sim.check, "check invariants after every step (default on)");
  simulate->add_flag("--debug-dump", sim.debug_dump, "also write instance.json and print violations");
  simulate->add_flag("--strict", sim.strict, "abort on the first invariant violation");
  simulate->add_option("--inject-fault-after", sim.fault_after, "testing aid: corrupt the embedding after this many steps")
      ->each([&](const std::string&) { sim.fault = true; });

  std::string vgraph, vemb;
  auto* verify = app.add_subcommand("verify", "check an embedding file against an instance file");
  verify->add_option("--graph", vgraph, "instance JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--embedding", vemb, "embedding JSON")->required()->check(CLI::ExistingFile);

  Source osrc;
  std::uint64_t oseed = 1;
  int ocap = kDefaultExactCap;
  auto* oracle = app.add_subcommand("oracle", "print the exact bandwidth and a witness order");
  add_source(oracle, osrc);
  oracle->add_option("--seed", oseed, "seed for --gen")->capture_default_str();
  oracle->add_option("--cap", ocap, "largest node count searched")->capture_default_str();

  BenchArgs bench;
  auto* bcmd = app.add_subcommand("bench", "migration scaling over several sizes");
  bcmd->add_option("--alg", bench.alg, "ladder | cycle | general")->capture_default_str();
  bcmd->add_option("--family", bench.family, "instance family: ladder | cycle (default follows --alg)");
  bcmd->add_option("--density", bench.density, "ladder edge density")->capture_default_str();
  bcmd->add_option("--ns", bench.ns, "sizes (ladder levels or cycle lengths)")->delimiter(',')->capture_default_str();
  bcmd->add_option("--seeds", bench.seeds, "runs per size")->capture_default_str();
  bcmd->add_option("--seed", bench.seed, "first seed")->capture_default_str();
  bcmd->add_option("--seq", bench.seq, "sequence mode")->capture_default_str();
  bcmd->add_option("--jobs", bench.jobs, "worker threads")->capture_default_str();
  bcmd->add_option("--json", bench.json, "also write the report as JSON");

  std::string gspec, gout, gtruth;
  std::uint64_t gseed = 1;
  auto* gen = app.add_subcommand("gen", "write a generated instance as JSON");
  gen->add_option("--gen", gspec, "generator spec")->required();
  gen->add_option("--seed", gseed, "seed")->capture_default_str();
  gen->add_option("-o,--out", gout, "output file (default stdout)");
  gen->add_option("--truth", gtruth, "also write the ground-truth embedding here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim);
    if (*verify) return cmd_verify(vgraph, vemb);
    if (*oracle) return cmd_oracle(osrc, oseed, ocap);
    if (*bcmd) return cmd_bench(bench);
    if (*gen) return cmd_gen(gspec, gseed, gout, gtruth);
  } catch (const LadderError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvariantViolation ? kExitInvariant : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
