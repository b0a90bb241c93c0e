#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ladder {

using NodeId = int;

enum class ErrorCode {
  UndefinedNode,
  TooLarge,
  EmptyGraph,
  NotATree,
  EmptyCore,
  CycleTooShort,
  UncompletedFrame,
  EdgeNotInComponent,
  NoValidOrientation,
  InfeasibleConstraints,
  EnsureFailed,
  SelfLoop,
  InvariantViolation,
  NodeSetMismatch,
  UnplacedNode,
  NotACycleEdge,
  InsufficientData,
  NotALineGraph,
  ParseError,
};

// Upper-case names as used in reports and CLI diagnostics (e.g. "TOO_LARGE").
const char* error_name(ErrorCode code);

class LadderError : public std::runtime_error {
 public:
  LadderError(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Undirected edge kept as (min, max).
struct Edge {
  NodeId a = 0;
  NodeId b = 0;

  Edge() = default;
  Edge(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool touches(NodeId v) const { return a == v || b == v; }
  NodeId other(NodeId v) const { return v == a ? b : a; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct LadderCoord {
  int level = 0;
  int side = 1;  // 1 or 2

  friend auto operator<=>(const LadderCoord&, const LadderCoord&) = default;
  friend bool operator==(const LadderCoord&, const LadderCoord&) = default;
};

inline int other_side(int side) { return side == 1 ? 2 : 1; }

// Two slots are ladder-adjacent iff their L1 distance is 1.
inline bool ladder_adjacent(const LadderCoord& x, const LadderCoord& y) {
  int dl = x.level > y.level ? x.level - y.level : y.level - x.level;
  int ds = x.side == y.side ? 0 : 1;
  return dl + ds == 1;
}

using QuasiEmbedding = std::map<NodeId, LadderCoord>;

std::string to_string(const Edge& e);
std::string to_string(const LadderCoord& c);

}  // namespace ladder
