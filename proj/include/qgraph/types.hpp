#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgraph {

using VertexId = int;
using Weight = double;

inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::infinity();

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InvalidEdgeCount : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidThreshold : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParam : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DisconnectedGraph : std::runtime_error {
  DisconnectedGraph() : std::runtime_error("graph not connected") {}
};

struct TrivialGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KindMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A concrete path between two endpoints, listed vertex by vertex.
struct PathResult {
  VertexId from = -1;
  VertexId to = -1;
  Weight total_weight = 0.0;
  std::vector<VertexId> vertices;
};

// Shortest-path tree rooted at one source.
struct SsspResult {
  std::vector<Weight> dist;
  std::vector<VertexId> parent;
};

}  // namespace qgraph
