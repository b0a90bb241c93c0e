#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ladder/harness.hpp"

namespace ladder {

// Instance files: {"n": N, "edges": [[u, v], ...], "ground_truth": [[node, side, level], ...]}.
// ground_truth is optional. Every reader throws ParseError with a reason.
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);
Instance read_instance(const std::string& path);
void write_instance(const Instance& inst, const std::string& path);

// Embedding files: {"embedding": [[node, side, level], ...], "spines": [[v, ...], ...]}.
struct EmbeddingFile {
  QuasiEmbedding phi;
  std::vector<std::vector<NodeId>> spines;  // optional, enables the septum check
};
EmbeddingFile embedding_from_json(const nlohmann::json& j);
nlohmann::json embedding_to_json(const EmbeddingFile& e);
EmbeddingFile read_embedding(const std::string& path);
void write_embedding(const EmbeddingFile& e, const std::string& path);

// Parses the whole file as JSON; ParseError on IO or syntax problems.
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ladder
