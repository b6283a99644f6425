#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgraph/classical.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

enum class GadgetKind { SparseLayered, DensePlanted, RadiusCircle };

// Stand-in for the zero weights the constructions call for; positive weights
// are required throughout, so verifiers compare with epsilon-aware slack.
inline constexpr double kDefaultGadgetEpsilon = 1e-9;

// A generated hard instance plus the bookkeeping its verifier needs.
struct GadgetDescriptor {
  Graph graph;
  GadgetKind kind;
  int d = 0;      // columns (layered kinds)
  int width = 0;  // vertices per column
  std::vector<double> gap_minima;      // per-gap minimum inter-column weight
  std::vector<VertexId> planted_path;  // DensePlanted only
  VertexId s_vertex = -1;
  VertexId t_vertex = -1;
  double epsilon = kDefaultGadgetEpsilon;
};

// Layered columns between s and t: intra-column chains at epsilon, terminal
// attachments at width*epsilon, and complete bipartite gaps whose weight
// ranges strictly decrease toward t. The shortest s-t path must pick every
// gap's minimum edge, so eccentricity of s recovers all gap minima.
GadgetDescriptor gen_sparse_gadget(int d, int width, std::uint64_t seed,
                                   double epsilon = kDefaultGadgetEpsilon);

// Complete graph with a random Hamiltonian path of small weights planted
// between s and t; off-path edges are heavy enough that the planted path is
// the unique shortest route and realizes the diameter.
GadgetDescriptor gen_dense_gadget(int n, std::uint64_t seed);

// The layered construction bent into a ring (s and t merged into one hub c):
// gap weight ranges decrease with ring distance from c, so distances around
// the ring decompose into contiguous arc sums of gap minima.
GadgetDescriptor gen_radius_circle_gadget(int d, int width, std::uint64_t seed,
                                          double epsilon = kDefaultGadgetEpsilon);

// Check a computed metric value and witness against the descriptor's
// bookkeeping (and the descriptor against its own graph, so a tampered
// record fails).
bool verify_reduction(const GadgetDescriptor& gd, Weight value,
                      const PathResult& witness);
bool verify_reduction(const GadgetDescriptor& gd, const MetricsReport& report);

std::string gadget_kind_name(GadgetKind kind);
GadgetKind gadget_kind_from_name(const std::string& name);

// Edge list at `path` plus a JSON sidecar at `path` + ".json".
void save_gadget(const std::string& path, const GadgetDescriptor& gd);
GadgetDescriptor load_gadget(const std::string& path);

}  // namespace qgraph
