#pragma once

#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

struct BfsResult {
  std::vector<int> level;        // -1 for unreached
  int depth = 0;                 // max level among reached vertices
  std::vector<VertexId> parent;  // -1 for root/unreached
  std::vector<VertexId> order;   // vertices in dequeue order
};

struct PartialBfsResult {
  std::vector<VertexId> visited;  // enqueue order, truncated to the cap
  int depth = 0;                  // level of the last retained vertex
  std::vector<VertexId> parent;
  std::vector<int> level;
};

struct PartialDijkstraResult {
  std::vector<VertexId> visited;  // settle order, truncated to the cap
  Weight reach = 0.0;             // distance of the last settled vertex
  std::vector<VertexId> parent;
  std::vector<Weight> dist;
};

struct MetricsReport {
  std::vector<Weight> ecc;
  Weight diameter = 0.0;
  Weight radius = 0.0;
  VertexId diameter_vertex = -1;  // lowest-index argmax
  VertexId radius_vertex = -1;    // lowest-index argmin
  PathResult diameter_path;
  PathResult radius_path;
};

struct HittingSet {
  std::vector<VertexId> members;  // sorted ascending
  int s = 0;
  double sample_const = 0.0;
};

struct ApproxEstimate {
  Weight estimate = 0.0;
  PathResult witness;
};

// Searches take an optional ledger; when given, every adjacency access is
// routed through oracle_query so the probe count stays honest.
BfsResult bfs(const Graph& g, VertexId source, QueryLedger* ledger = nullptr);

// BFS stopped after cap vertices have been enqueued; the batch being expanded
// may be cut mid-way.
PartialBfsResult partial_bfs(const Graph& g, VertexId source, int cap);

// Dijkstra stopped after cap vertices have been settled.
PartialDijkstraResult partial_dijkstra(const Graph& g, VertexId source, int cap,
                                       QueryLedger* ledger = nullptr);

SsspResult dijkstra(const Graph& g, VertexId source, QueryLedger* ledger = nullptr);

// All-pairs metrics via one full search per vertex. Ties break toward the
// lowest vertex index.
MetricsReport exact_metrics_bruteforce(const Graph& g);

// Random sample whose size makes it hit every neighborhood of size s with
// good probability.
HittingSet sample_hitting_set(int n, int s, double sample_const, Rng& rng);
HittingSet sample_hitting_set(const Graph& g, int s, double sample_const, Rng& rng);

// Deterministic cover of the given neighborhoods by greedy max coverage.
HittingSet greedy_hitting_set(const std::vector<std::vector<VertexId>>& sets, int n);

// Classical 2/3 approximation of the diameter, deterministic variant.
ApproxEstimate approx_diameter_acim(const Graph& g, int s);

// Classical 2/3 approximation, randomized hitting-set variant.
ApproxEstimate approx_diameter_rw(const Graph& g, int s, double sample_const, Rng& rng);

// Reconstruct the path from source to target out of a parent array.
PathResult build_path(const Graph& g, VertexId source, VertexId target,
                      const std::vector<VertexId>& parent);

// Check that a path is a real walk in the graph with the stated weight.
bool validate_path(const Graph& g, const PathResult& path);

// Weight of edge (u,v), or infinity when absent.
Weight edge_weight(const Graph& g, VertexId u, VertexId v);

}  // namespace qgraph
