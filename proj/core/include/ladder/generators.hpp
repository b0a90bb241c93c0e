#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ladder/graph.hpp"
#include "ladder/types.hpp"

namespace ladder {

struct LadderInstance {
  int levels = 0;
  Graph graph;           // every node 1..2*levels is present, isolated ones included
  QuasiEmbedding truth;  // a correct embedding of graph

  int node_count() const { return 2 * levels; }
};

// Keeps each edge of Ladder_levels with probability `density`. With `relabel`
// the ids 1..2*levels are shuffled so that id order says nothing about
// position.
LadderInstance gen_ladder_subgraph(int levels, double density, std::uint64_t seed, bool relabel = true);

// A connected piece of a random ladder subgraph: the component of the
// instance holding the most nodes, with its ground truth.
LadderInstance gen_ladder_component(int levels, double density, std::uint64_t seed);

// A uniformly random spanning-tree-like subgraph of Ladder_levels (connected,
// acyclic) with ground truth; the tree covers all 2*levels nodes.
LadderInstance gen_ladder_tree(int levels, std::uint64_t seed);

enum class SequenceMode { Random, Reveal, BfsReveal, ReplayHeavy, Adversarial };

std::optional<SequenceMode> parse_sequence_mode(const std::string& s);
const char* sequence_mode_name(SequenceMode m);

// Requests drawn from the edges of g. `length` <= 0 means "reveal every edge
// once" for the reveal modes and |E| for the others. Reveal and BfsReveal list
// every edge once before any repeat; ReplayHeavy reveals everything and then
// repeats known edges. Adversarial sequences depend on the online
// configuration and are produced by the experiment runner instead.
std::vector<Edge> gen_request_sequence(const Graph& g, SequenceMode mode, int length, std::uint64_t seed);

// Random connected graph on k nodes (ids 1..k) with edge probability p,
// made connected by a random recursive spanning tree.
Graph gen_connected_graph(int k, double p, std::uint64_t seed);

}  // namespace ladder
