#pragma once

#include <cstddef>
#include <vector>

#include "qgraph/classical.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/sim_config.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

struct EccResult {
  Weight value = 0.0;
  PathResult path;
};

// Eccentricity of one vertex: shortest-path tree plus max-finding over the
// stored distances, both billed to the ledger.
EccResult q_eccentricity(const Graph& g, VertexId v, const SimConfig& cfg,
                         QueryLedger& ledger);

// Diameter / radius: max- or min-finding over the vertex set where each
// inner evaluation is billed at the full cost of one eccentricity run
// (measured once on a scratch ledger); eccentricities are computed once per
// vertex and memoized. A final eccentricity run at the winner produces the
// returned path.
EccResult q_diameter(const Graph& g, const SimConfig& cfg, QueryLedger& ledger);
EccResult q_radius(const Graph& g, const SimConfig& cfg, QueryLedger& ledger);

// Record of one frontier expansion inside the partial search.
struct PartialSearchBatch {
  VertexId source = -1;
  std::vector<int> found_indices;            // adjacency indices batched in
  int m_v = 0;                               // how many the search reported
  std::vector<std::size_t> doubling_rounds;  // thresholds 1, 2, 4, ... requested
};

// Partial BFS visiting about s vertices, frontier batches found by doubling
// threshold searches. The ledger receives the analytic charge
// ceil(c * s^1.5 * log2(s+1)) plus the oracle probes; the inner threshold
// calls are simulated for behavior on a scratch account so the run is not
// billed twice.
PartialBfsResult qpbfs(const Graph& g, VertexId v, int s, const SimConfig& cfg,
                       QueryLedger& ledger,
                       std::vector<PartialSearchBatch>* batches = nullptr);

struct ApproxResult {
  Weight estimate = 0.0;
  PathResult witness;
  VertexId w_vertex = -1;
  HittingSet hitting_set;
  std::vector<VertexId> n_s_of_w;
};

// 2/3 diameter approximation: sample a hitting set, pick the deepest s-capped
// partial search, then max-finding over eccentricities of the sample plus
// that neighborhood. Unweighted graphs use breadth-first eccentricities;
// weighted graphs use shortest-path eccentricities with the partial searches
// replaced by s-capped Dijkstra runs charged at the same rate.
ApproxResult q_approx_diameter(const Graph& g, int s, double sample_const,
                               const SimConfig& cfg, QueryLedger& ledger, Rng& rng);

}  // namespace qgraph
