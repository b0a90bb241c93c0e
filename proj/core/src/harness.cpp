#include "ladder/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace ladder {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over (seed, stream)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

[[noreturn]] void bad_spec(const std::string& spec, const std::string& why) {
  throw LadderError(ErrorCode::ParseError, "generator '" + spec + "': " + why);
}

std::map<std::string, std::string> parse_params(const std::string& spec, const std::string& body) {
  std::map<std::string, std::string> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) bad_spec(spec, "expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

double number(const std::string& spec, const std::map<std::string, std::string>& params, const std::string& key,
              std::optional<double> fallback) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (!fallback) bad_spec(spec, "missing '" + key + "'");
    return *fallback;
  }
  try {
    std::size_t used = 0;
    double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    bad_spec(spec, "'" + key + "' is not a number");
  }
}

int whole(const std::string& spec, const std::map<std::string, std::string>& params, const std::string& key,
          std::optional<int> fallback, int min_value) {
  double v = number(spec, params, key, fallback ? std::optional<double>(*fallback) : std::nullopt);
  if (v != std::floor(v) || v < min_value) bad_spec(spec, "'" + key + "' must be an integer >= " + std::to_string(min_value));
  return static_cast<int>(v);
}

std::string csv_scenarios(const std::vector<std::pair<NodeId, Scenario>>& s) {
  std::string out;
  for (const auto& [v, sc] : s) {
    if (!out.empty()) out += ';';
    out += std::to_string(v) + ':' + scenario_name(sc);
  }
  return out;
}

}  // namespace

Instance instance_from_ladder(const LadderInstance& li, const std::string& generator) {
  Instance inst;
  inst.n = li.node_count();
  inst.graph = li.graph;
  for (NodeId v = 1; v <= inst.n; ++v) inst.graph.add_node(v);
  inst.truth = li.truth;
  inst.generator = generator;
  inst.size_param = li.levels;
  return inst;
}

Instance make_instance(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  auto params = parse_params(spec, colon == std::string::npos ? "" : spec.substr(colon + 1));
  auto allow = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params)
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        bad_spec(spec, "unknown parameter '" + k + "'");
  };

  if (kind == "ladder") {
    allow({"n", "density"});
    int levels = whole(spec, params, "n", std::nullopt, 1);
    double density = number(spec, params, "density", 1.0);
    if (density < 0 || density > 1) bad_spec(spec, "density must lie in [0, 1]");
    return instance_from_ladder(gen_ladder_subgraph(levels, density, seed), spec);
  }
  if (kind == "tree") {
    allow({"n"});
    return instance_from_ladder(gen_ladder_tree(whole(spec, params, "n", std::nullopt, 1), seed), spec);
  }
  if (kind == "cycle") {
    allow({"n"});
    int k = whole(spec, params, "n", std::nullopt, 3);
    std::vector<NodeId> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    std::mt19937_64 rng(seed);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    Instance inst;
    inst.n = k;
    for (NodeId v = 1; v <= k; ++v) inst.graph.add_node(v);
    for (int i = 0; i < k; ++i) inst.graph.add_edge(perm[i], perm[(i + 1) % k]);
    inst.generator = spec;
    inst.size_param = k;
    return inst;
  }
  if (kind == "random") {
    allow({"k", "p"});
    int k = whole(spec, params, "k", std::nullopt, 1);
    double p = number(spec, params, "p", 0.3);
    if (p < 0 || p > 1) bad_spec(spec, "p must lie in [0, 1]");
    Instance inst;
    inst.n = k;
    inst.graph = gen_connected_graph(k, p, seed);
    inst.generator = spec;
    inst.size_param = k;
    return inst;
  }
  bad_spec(spec, "unknown kind '" + kind + "' (ladder, tree, cycle, random)");
}

std::int64_t CostTrace::total_serve() const {
  std::int64_t t = 0;
  for (const auto& r : rows) t += r.serve;
  return t;
}

std::int64_t CostTrace::total_migration() const {
  std::int64_t t = 0;
  for (const auto& r : rows) t += r.migrate;
  return t;
}

bool CostTrace::invariants_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const TraceRow& r) { return r.invariants_ok; });
}

int CostTrace::max_revealed_stretch() const {
  int m = 0;
  for (const auto& r : rows) m = std::max(m, r.max_revealed_stretch);
  return m;
}

int CostTrace::max_maintained_stretch() const {
  int m = 0;
  for (const auto& r : rows) m = std::max(m, r.max_maintained_stretch);
  return m;
}

std::string CostTrace::to_csv() const {
  std::ostringstream os;
  os << "index,u,v,known,case,serve,migrate,scenarios,cumulative,invariants_ok\n";
  for (const auto& r : rows)
    os << r.index << ',' << r.request.a << ',' << r.request.b << ',' << (r.known ? 1 : 0) << ',' << r.case_name << ','
       << r.serve << ',' << r.migrate << ',' << csv_scenarios(r.scenarios) << ',' << r.cumulative << ','
       << (r.invariants_ok ? 1 : 0) << '\n';
  return os.str();
}

nlohmann::json CostTrace::summary() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = n;
  j["size_param"] = size_param;
  j["seed"] = seed;
  j["generator"] = generator;
  j["algorithm"] = algorithm;
  j["sequence"] = sequence;
  j["requests"] = rows.size();
  j["total_serve"] = total_serve();
  j["total_migration"] = total_migration();
  j["total_cost"] = total_serve() + total_migration();
  j["invariants_ok"] = invariants_ok();
  j["max_revealed_stretch"] = max_revealed_stretch();
  j["max_maintained_stretch"] = max_maintained_stretch();
  if (counters) {
    nlohmann::json cost = nlohmann::json::object(), peak = nlohmann::json::object();
    for (int k = 0; k < kScenarioCount; ++k) {
      auto s = static_cast<Scenario>(k);
      cost[scenario_name(s)] = counters->cost[k];
      peak[scenario_name(s)] = counters->max_count(s);
    }
    j["scenario_cost"] = cost;
    j["scenario_max_count"] = peak;
    j["unattributed"] = counters->unattributed;
    j["accounted_bound"] = 2 * static_cast<std::int64_t>(n) * counters->tags();
  }
  return j;
}

std::string CostTrace::event_log() const {
  std::string out;
  for (const auto& r : rows) {
    nlohmann::json j;
    j["index"] = r.index;
    j["req"] = {r.request.a, r.request.b};
    j["known"] = r.known;
    j["case"] = r.case_name;
    j["serve_cost"] = r.serve;
    j["migration_cost"] = r.migrate;
    nlohmann::json sc = nlohmann::json::array();
    for (const auto& [v, s] : r.scenarios) sc.push_back({{"node", v}, {"scenario", scenario_name(s)}});
    j["scenarios"] = sc;
    j["invariants_ok"] = r.invariants_ok;
    if (!r.violations.empty()) j["violations"] = r.violations;
    out += j.dump() + '\n';
  }
  return out;
}

std::vector<std::string> algorithm_names() { return {"ladder", "cycle", "general"}; }

std::unique_ptr<OnlineAlgorithm> make_algorithm(const std::string& name, int n, const ExperimentOptions& opts) {
  if (name == "ladder") {
    EngineOptions eo;
    eo.check_invariants = opts.check_invariants;
    eo.strict = opts.strict;
    eo.inject_fault_after = opts.inject_fault_after;
    return std::make_unique<LadderAlgorithm>(n, eo);
  }
  if (name == "cycle") return std::make_unique<CycleAlgorithm>(n);
  if (name == "general") {
    auto oracle = make_oracle(opts.oracle);
    if (!oracle) throw LadderError(ErrorCode::ParseError, "unknown oracle '" + opts.oracle + "'");
    return std::make_unique<GeneralAlgorithm>(n, *oracle);
  }
  throw LadderError(ErrorCode::ParseError, "unknown algorithm '" + name + "' (ladder, cycle, general)");
}

namespace {

class TraceBuilder {
 public:
  TraceBuilder(const std::string& algorithm, const Instance& inst) {
    trace_.n = inst.n;
    trace_.size_param = inst.size_param;
    trace_.generator = inst.generator;
    trace_.algorithm = algorithm;
  }

  void add(const StepReport& rep) {
    TraceRow row;
    row.index = rep.index;
    row.request = rep.request;
    row.known = rep.known;
    row.case_name = rep.case_name;
    row.serve = rep.serve_cost;
    row.migrate = rep.migration_cost;
    row.scenarios = rep.scenarios;
    total_ += rep.serve_cost + rep.migration_cost;
    row.cumulative = total_;
    row.invariants_ok = rep.invariants_ok;
    row.violations = rep.violations;
    row.max_revealed_stretch = rep.max_revealed_stretch;
    row.max_maintained_stretch = rep.max_maintained_stretch;
    trace_.rows.push_back(std::move(row));
  }

  CostTrace finish(const OnlineAlgorithm& alg) {
    if (auto* la = dynamic_cast<const LadderAlgorithm*>(&alg)) trace_.counters = la->engine().counters();
    return std::move(trace_);
  }

 private:
  CostTrace trace_;
  std::int64_t total_ = 0;
};

}  // namespace

CostTrace run_experiment(const std::string& algorithm, const Instance& inst, const std::vector<Edge>& sequence,
                         const ExperimentOptions& opts) {
  auto alg = make_algorithm(algorithm, inst.n, opts);
  TraceBuilder tb(algorithm, inst);
  for (const Edge& e : sequence) tb.add(alg->step(e.a, e.b));
  return tb.finish(*alg);
}

CostTrace run_adversarial(const std::string& algorithm, const Instance& inst, std::size_t length,
                          const ExperimentOptions& opts) {
  auto alg = make_algorithm(algorithm, inst.n, opts);
  TraceBuilder tb(algorithm, inst);
  for (std::size_t i = 0; i < length; ++i) {
    Edge e = adversary_next(alg->line(), inst.graph);
    tb.add(alg->step(e.a, e.b));
  }
  CostTrace t = tb.finish(*alg);
  t.sequence = sequence_mode_name(SequenceMode::Adversarial);
  return t;
}

CostTrace run_spec(const RunSpec& spec) {
  Instance inst = spec.instance ? *spec.instance : make_instance(spec.gen, derive_seed(spec.seed, 1));
  CostTrace t;
  if (spec.mode == SequenceMode::Adversarial) {
    std::size_t len = spec.length > 0 ? static_cast<std::size_t>(spec.length) : inst.graph.edge_count();
    t = run_adversarial(spec.algorithm, inst, len, spec.options);
  } else {
    auto seq = gen_request_sequence(inst.graph, spec.mode, spec.length, derive_seed(spec.seed, 2));
    t = run_experiment(spec.algorithm, inst, seq, spec.options);
  }
  t.seed = spec.seed;
  t.sequence = sequence_mode_name(spec.mode);
  return t;
}

std::vector<CostTrace> run_many(const std::vector<RunSpec>& specs, int jobs) {
  std::vector<CostTrace> out(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        out[i] = run_spec(specs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  int k = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string ScalingReport::to_text() const {
  std::ostringstream os;
  os << std::setw(6) << "n" << std::setw(6) << "runs" << std::setw(16) << "mean_migration" << std::setw(14)
     << "ratio" << '\n';
  for (const auto& r : rows)
    os << std::setw(6) << r.n << std::setw(6) << r.runs << std::setw(16) << std::fixed << std::setprecision(1)
       << r.mean_migration << std::setw(14) << std::setprecision(5) << r.ratio << '\n';
  os << "spread (max/min ratio): " << std::setprecision(3) << spread << '\n';
  os << "trend ok: " << (trend_ok ? "yes" : "no") << '\n';
  os << "bounded: " << (bounded ? "yes" : "no") << '\n';
  return os.str();
}

nlohmann::json ScalingReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows)
    j["rows"].push_back({{"n", r.n}, {"runs", r.runs}, {"mean_migration", r.mean_migration}, {"ratio", r.ratio}});
  j["spread"] = spread;
  j["trend_ok"] = trend_ok;
  j["bounded"] = bounded;
  return j;
}

ScalingReport scaling_fit(const std::vector<CostTrace>& traces, double trend_tolerance, double max_spread) {
  std::map<int, std::vector<std::int64_t>> by_n;
  for (const auto& t : traces) by_n[t.size_param].push_back(t.total_migration());
  if (by_n.size() < 3)
    throw LadderError(ErrorCode::InsufficientData,
                      "scaling fit needs at least 3 distinct sizes, got " + std::to_string(by_n.size()));
  if (by_n.begin()->first < 2) throw LadderError(ErrorCode::InsufficientData, "sizes must be at least 2");

  ScalingReport rep;
  for (const auto& [n, costs] : by_n) {
    ScalingRow row;
    row.n = n;
    row.runs = static_cast<int>(costs.size());
    row.mean_migration = std::accumulate(costs.begin(), costs.end(), 0.0) / static_cast<double>(costs.size());
    row.ratio = row.mean_migration / (static_cast<double>(n) * n * std::log2(static_cast<double>(n)));
    rep.rows.push_back(row);
  }
  double lo = rep.rows.front().ratio, hi = lo;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    lo = std::min(lo, rep.rows[i].ratio);
    hi = std::max(hi, rep.rows[i].ratio);
    if (i > 0 && rep.rows[i].ratio > rep.rows[i - 1].ratio * (1 + trend_tolerance)) rep.trend_ok = false;
  }
  rep.spread = lo > 0 ? hi / lo : (hi > 0 ? INFINITY : 1.0);
  rep.bounded = rep.trend_ok && rep.spread <= max_spread;
  return rep;
}

}  // namespace ladder
