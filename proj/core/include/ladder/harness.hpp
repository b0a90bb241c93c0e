#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ladder/baselines.hpp"
#include "ladder/engine.hpp"
#include "ladder/generators.hpp"

namespace ladder {

// A demand graph on nodes 1..n, optionally with a ladder ground truth.
struct Instance {
  int n = 0;
  Graph graph;  // holds every node 1..n
  std::optional<QuasiEmbedding> truth;
  std::string generator;  // how it was made, for trace metadata
  int size_param = 0;     // the generator's n: ladder levels, cycle length, ...
};

// Parses "kind:key=value,..." and builds the instance. Kinds:
//   ladder:n=L,density=d   subgraph of Ladder_L (2L nodes)
//   tree:n=L               random spanning tree of Ladder_L
//   cycle:n=k              C_k with shuffled ids
//   random:k=K,p=p         connected random graph on K nodes
// Throws ParseError on malformed specs.
Instance make_instance(const std::string& spec, std::uint64_t seed);
Instance instance_from_ladder(const LadderInstance& li, const std::string& generator);

// Per-purpose seeds derived from the single user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct TraceRow {
  std::size_t index = 0;
  Edge request;
  bool known = false;
  std::string case_name;
  int serve = 0;
  std::int64_t migrate = 0;
  std::vector<std::pair<NodeId, Scenario>> scenarios;
  std::int64_t cumulative = 0;  // serve + migrate summed over rows 0..index
  bool invariants_ok = true;
  std::vector<std::string> violations;
  int max_revealed_stretch = 0;
  int max_maintained_stretch = 0;
};

struct CostTrace {
  int n = 0;  // node count
  int size_param = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::string algorithm;
  std::string sequence;
  std::vector<TraceRow> rows;
  std::optional<ScenarioCounters> counters;  // ladder engine only

  std::int64_t total_serve() const;
  std::int64_t total_migration() const;
  bool invariants_ok() const;
  int max_revealed_stretch() const;
  int max_maintained_stretch() const;

  std::string to_csv() const;
  nlohmann::json summary() const;  // carries "schema": 1
  // One JSON object per line: {req, known, case, serve_cost, migration_cost,
  // scenarios, invariants_ok}.
  std::string event_log() const;
};

struct ExperimentOptions {
  bool check_invariants = true;
  bool strict = false;
  std::optional<std::size_t> inject_fault_after;
  std::string oracle = "exact";
};

std::vector<std::string> algorithm_names();
// Throws ParseError for unknown algorithm or oracle names.
std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, int n, const ExperimentOptions& opts);

// Replays `sequence` against a fresh algorithm.
CostTrace run_experiment(const std::string& algorithm, const Instance& inst, const std::vector<Edge>& sequence,
                         const ExperimentOptions& opts = {});

// Closed loop: every request is adversary_next on the algorithm's current
// line over the whole instance graph.
CostTrace run_adversarial(const std::string& algorithm, const Instance& inst, std::size_t length,
                          const ExperimentOptions& opts = {});

// A whole run from user-facing parameters: instance from `gen`, sequence per
// `mode` (length <= 0 means full reveal), all randomness from `seed`.
struct RunSpec {
  std::string algorithm = "ladder";
  std::string gen;
  std::optional<Instance> instance;  // used instead of gen when set
  SequenceMode mode = SequenceMode::Reveal;
  int length = 0;
  std::uint64_t seed = 1;
  ExperimentOptions options;
};
CostTrace run_spec(const RunSpec& spec);

// Runs independent specs on up to `jobs` threads; results keep input order.
std::vector<CostTrace> run_many(const std::vector<RunSpec>& specs, int jobs);

struct ScalingRow {
  int n = 0;
  int runs = 0;
  double mean_migration = 0;
  double ratio = 0;  // mean_migration / (n^2 log2 n)
};

struct ScalingReport {
  std::vector<ScalingRow> rows;  // by increasing n
  double spread = 0;             // max ratio / min ratio
  bool trend_ok = true;          // no ratio exceeds its predecessor by more than the tolerance
  bool bounded = false;          // trend_ok and spread within the limit

  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Traces are grouped by size_param. Throws InsufficientData with fewer than
// three distinct sizes.
ScalingReport scaling_fit(const std::vector<CostTrace>& traces, double trend_tolerance = 0.15,
                          double max_spread = 3.0);

}  // namespace ladder
