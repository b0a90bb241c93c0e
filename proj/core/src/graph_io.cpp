#include "ladder/graph_io.hpp"

#include <algorithm>
#include <fstream>

namespace ladder {

namespace {

[[noreturn]] void fail(const std::string& why) { throw LadderError(ErrorCode::ParseError, why); }

int as_int(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  return v.get<int>();
}

QuasiEmbedding triples(const nlohmann::json& arr, const std::string& what) {
  if (!arr.is_array()) fail("'" + what + "' must be an array");
  QuasiEmbedding phi;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3) fail("'" + what + "' entries are [node, side, level]");
    NodeId v = as_int(t[0], what + " node");
    int side = as_int(t[1], what + " side");
    int level = as_int(t[2], what + " level");
    if (side != 1 && side != 2) fail(what + ": side of node " + std::to_string(v) + " must be 1 or 2");
    if (!phi.emplace(v, LadderCoord{level, side}).second) fail(what + ": node " + std::to_string(v) + " listed twice");
  }
  return phi;
}

nlohmann::json to_triples(const QuasiEmbedding& phi) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [v, c] : phi) arr.push_back({v, c.side, c.level});
  return arr;
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write '" + path + "'");
  out << text;
  if (!out) fail("write to '" + path + "' failed");
}

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("instance must be a JSON object");
  if (!j.contains("n")) fail("instance lacks 'n'");
  Instance inst;
  inst.n = as_int(j["n"], "n");
  if (inst.n < 1) fail("n must be positive");
  for (NodeId v = 1; v <= inst.n; ++v) inst.graph.add_node(v);
  if (!j.contains("edges") || !j["edges"].is_array()) fail("instance lacks an 'edges' array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) fail("edges are [u, v] pairs");
    NodeId u = as_int(e[0], "edge endpoint"), v = as_int(e[1], "edge endpoint");
    if (u < 1 || u > inst.n || v < 1 || v > inst.n)
      fail("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside 1..n");
    if (u == v) fail("self loop at " + std::to_string(u));
    inst.graph.add_edge(u, v);
  }
  if (j.contains("ground_truth")) inst.truth = triples(j["ground_truth"], "ground_truth");
  inst.generator = "file";
  inst.size_param = inst.n;
  if (inst.truth) {
    int hi = 0;
    for (const auto& [v, c] : *inst.truth) hi = std::max(hi, c.level);
    inst.size_param = hi;
  }
  return inst;
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["n"] = inst.n;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : inst.graph.edges()) j["edges"].push_back({e.a, e.b});
  if (inst.truth) j["ground_truth"] = to_triples(*inst.truth);
  return j;
}

Instance read_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

void write_instance(const Instance& inst, const std::string& path) {
  write_text_file(path, instance_to_json(inst).dump(1) + '\n');
}

EmbeddingFile embedding_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("embedding")) fail("embedding file lacks 'embedding'");
  EmbeddingFile e;
  e.phi = triples(j["embedding"], "embedding");
  if (j.contains("spines")) {
    if (!j["spines"].is_array()) fail("'spines' must be an array");
    for (const auto& s : j["spines"]) {
      if (!s.is_array()) fail("each spine is an array of nodes");
      std::vector<NodeId> spine;
      for (const auto& v : s) spine.push_back(as_int(v, "spine node"));
      e.spines.push_back(std::move(spine));
    }
  }
  return e;
}

nlohmann::json embedding_to_json(const EmbeddingFile& e) {
  nlohmann::json j;
  j["embedding"] = to_triples(e.phi);
  if (!e.spines.empty()) j["spines"] = e.spines;
  return j;
}

EmbeddingFile read_embedding(const std::string& path) { return embedding_from_json(read_json_file(path)); }

void write_embedding(const EmbeddingFile& e, const std::string& path) {
  write_text_file(path, embedding_to_json(e).dump(1) + '\n');
}

}  // namespace ladder
