#include "qgraph/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <utility>

#include "json.hpp"
#include "qgraph/rng.hpp"

namespace qgraph {
namespace {

// Vertex ids for the layered kinds: hub/source is 0, column j in [1, d]
// occupies ids 1 + (j-1)*width .. j*width, sparse sink is d*width + 1.
VertexId column_vertex(int j, int i, int width) { return 1 + (j - 1) * width + i; }

// Column index of v: 0 for the source/hub, d + 1 for the sparse sink.
int column_of(VertexId v, int d, int width) {
  if (v == 0) return 0;
  if (v > d * width) return d + 1;
  return (v - 1) / width + 1;
}

// Draw a full bipartite gap (width*width weights, row-major) in
// [lo, lo + 1), resampling until the minimum is separated from the
// second-smallest weight by more than the path-noise scale.
std::vector<double> draw_gap(Rng& rng, int width, double lo, double separation,
                             double* min_out) {
  std::vector<double> w(static_cast<size_t>(width) * width);
  while (true) {
    for (auto& x : w) x = lo + rng.next_real();
    double best = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    for (double x : w) {
      if (x < best) {
        second = best;
        best = x;
      } else if (x < second) {
        second = x;
      }
    }
    if (second - best > separation) {
      *min_out = best;
      return w;
    }
  }
}

void check_layered_params(int d, int width, double epsilon) {
  if (d < 1) throw InvalidParam("gadget depth must be at least 1");
  if (width < 2) throw InvalidParam("gadget width must be at least 2");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw InvalidParam("gadget epsilon must be positive and finite");
}

double arc_slack(const GadgetDescriptor& gd, double scale) {
  int n = gd.graph.vertex_count();
  return gd.epsilon * (n + 2.0 * gd.width + 2.0) + 1e-12 * std::max(1.0, scale);
}

// Recompute per-gap minima straight from the graph; must equal the recorded
// doubles bit-for-bit or the descriptor has been altered.
bool gap_minima_consistent(const GadgetDescriptor& gd) {
  int gaps = gd.d - 1;
  if (static_cast<int>(gd.gap_minima.size()) != gaps) return false;
  std::vector<double> best(static_cast<size_t>(std::max(gaps, 0)),
                           std::numeric_limits<double>::infinity());
  for (const auto& e : gd.graph.edge_list()) {
    int cu = column_of(e.u, gd.d, gd.width);
    int cv = column_of(e.v, gd.d, gd.width);
    int lo = std::min(cu, cv);
    int hi = std::max(cu, cv);
    if (hi != lo + 1 || lo < 1 || hi > gd.d) continue;
    best[lo - 1] = std::min(best[lo - 1], e.weight);
  }
  for (int j = 0; j < gaps; ++j)
    if (best[j] != gd.gap_minima[j]) return false;
  return true;
}

bool planted_consistent(const GadgetDescriptor& gd) {
  int n = gd.graph.vertex_count();
  if (static_cast<int>(gd.planted_path.size()) != n) return false;
  std::set<VertexId> seen(gd.planted_path.begin(), gd.planted_path.end());
  if (static_cast<int>(seen.size()) != n) return false;
  if (gd.planted_path.front() != gd.s_vertex) return false;
  if (gd.planted_path.back() != gd.t_vertex) return false;
  for (size_t i = 1; i < gd.planted_path.size(); ++i) {
    if (edge_weight(gd.graph, gd.planted_path[i - 1], gd.planted_path[i]) ==
        kInfiniteWeight) {
      return false;
    }
  }
  return true;
}

double planted_total(const GadgetDescriptor& gd) {
  double total = 0.0;
  for (size_t i = 1; i < gd.planted_path.size(); ++i)
    total += edge_weight(gd.graph, gd.planted_path[i - 1], gd.planted_path[i]);
  return total;
}

bool verify_sparse(const GadgetDescriptor& gd, Weight value,
                   const PathResult& witness) {
  if (!gap_minima_consistent(gd)) return false;
  double expected = 0.0;
  for (double m : gd.gap_minima) expected += m;
  if (std::abs(value - expected) > arc_slack(gd, expected)) return false;
  if (!validate_path(gd.graph, witness)) return false;
  if (witness.from != gd.s_vertex) return false;
  if (witness.to != gd.t_vertex) return false;
  // The witness must cross every gap exactly once, each time on that gap's
  // minimum edge.
  std::vector<int> crossings(gd.gap_minima.size(), 0);
  for (size_t i = 1; i < witness.vertices.size(); ++i) {
    VertexId a = witness.vertices[i - 1];
    VertexId b = witness.vertices[i];
    int lo = std::min(column_of(a, gd.d, gd.width), column_of(b, gd.d, gd.width));
    int hi = std::max(column_of(a, gd.d, gd.width), column_of(b, gd.d, gd.width));
    if (hi != lo + 1 || lo < 1 || hi > gd.d) continue;
    if (edge_weight(gd.graph, a, b) != gd.gap_minima[lo - 1]) return false;
    ++crossings[lo - 1];
  }
  for (int c : crossings)
    if (c != 1) return false;
  return true;
}

bool verify_dense(const GadgetDescriptor& gd, Weight value,
                  const PathResult& witness) {
  if (!planted_consistent(gd)) return false;
  double total = planted_total(gd);
  if (std::abs(value - total) > 1e-9 * std::max(1.0, total)) return false;
  if (!validate_path(gd.graph, witness)) return false;
  std::vector<VertexId> forward = gd.planted_path;
  std::vector<VertexId> backward(forward.rbegin(), forward.rend());
  return witness.vertices == forward || witness.vertices == backward;
}

bool verify_circle(const GadgetDescriptor& gd, Weight value,
                   const PathResult& witness) {
  if (!gap_minima_consistent(gd)) return false;
  if (!validate_path(gd.graph, witness)) return false;
  int gaps = static_cast<int>(gd.gap_minima.size());
  double total = 0.0;
  for (double m : gd.gap_minima) total += m;
  double slack = arc_slack(gd, total);
  // Distances on the ring are contiguous arc sums of gap minima, either the
  // direct arc or its complement through the hub.
  std::vector<double> prefix(gaps + 1, 0.0);
  for (int j = 0; j < gaps; ++j) prefix[j + 1] = prefix[j] + gd.gap_minima[j];
  for (int a = 0; a < gaps; ++a) {
    for (int b = a; b < gaps; ++b) {
      double arc = prefix[b + 1] - prefix[a];
      if (std::abs(value - arc) <= slack) return true;
      if (std::abs(value - (total - arc)) <= slack) return true;
    }
  }
  return false;
}

nlohmann::json require_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw ParseError(std::string("gadget sidecar missing field: ") + key);
  }
  return j.at(key);
}

}  // namespace

GadgetDescriptor gen_sparse_gadget(int d, int width, std::uint64_t seed,
                                   double epsilon) {
  check_layered_params(d, width, epsilon);
  Rng rng(seed);
  int n = d * width + 2;
  VertexId t = d * width + 1;
  double terminal = width * epsilon;
  double separation = 8.0 * width * epsilon;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < width; ++i)
    edges.push_back({0, column_vertex(1, i, width), terminal});
  for (int i = 0; i < width; ++i)
    edges.push_back({column_vertex(d, i, width), t, terminal});
  for (int j = 1; j <= d; ++j)
    for (int i = 0; i + 1 < width; ++i)
      edges.push_back({column_vertex(j, i, width), column_vertex(j, i + 1, width),
                       epsilon});
  std::vector<double> minima;
  for (int j = 1; j < d; ++j) {
    double lo = 2.0 * (d - j);
    double min_w = 0.0;
    auto w = draw_gap(rng, width, lo, separation, &min_w);
    for (int a = 0; a < width; ++a)
      for (int b = 0; b < width; ++b)
        edges.push_back({column_vertex(j, a, width), column_vertex(j + 1, b, width),
                         w[static_cast<size_t>(a) * width + b]});
    minima.push_back(min_w);
  }
  Graph g(n, edges, true);
  return GadgetDescriptor{std::move(g), GadgetKind::SparseLayered, d, width,
                          std::move(minima), {}, 0, t, epsilon};
}

GadgetDescriptor gen_dense_gadget(int n, std::uint64_t seed) {
  if (n < 3) throw InvalidParam("dense gadget needs at least 3 vertices");
  Rng rng(seed);
  std::vector<VertexId> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i;
  std::vector<EdgeSpec> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      bool on_path = std::abs(pos[u] - pos[v]) == 1;
      double w = on_path ? 1.0 + rng.next_real() : 2.0 * n + rng.next_real();
      edges.push_back({u, v, w});
    }
  }
  Graph g(n, edges, true);
  VertexId s = perm.front();
  VertexId t = perm.back();
  return GadgetDescriptor{std::move(g), GadgetKind::DensePlanted, 0, 0, {},
                          std::move(perm), s, t, 0.0};
}

GadgetDescriptor gen_radius_circle_gadget(int d, int width, std::uint64_t seed,
                                          double epsilon) {
  check_layered_params(d, width, epsilon);
  if (d % 2 != 0 || d < 4)
    throw InvalidParam("circle gadget depth must be even and at least 4");
  Rng rng(seed);
  int n = d * width + 1;
  double terminal = width * epsilon;
  double separation = 8.0 * width * epsilon;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < width; ++i)
    edges.push_back({0, column_vertex(1, i, width), terminal});
  for (int i = 0; i < width; ++i)
    edges.push_back({0, column_vertex(d, i, width), terminal});
  for (int j = 1; j <= d; ++j)
    for (int i = 0; i + 1 < width; ++i)
      edges.push_back({column_vertex(j, i, width), column_vertex(j, i + 1, width),
                       epsilon});
  std::vector<double> minima;
  for (int j = 1; j < d; ++j) {
    int ring_dist = std::min(j, d - j);
    double lo = 2.0 * (d / 2 - ring_dist + 1);
    double min_w = 0.0;
    auto w = draw_gap(rng, width, lo, separation, &min_w);
    for (int a = 0; a < width; ++a)
      for (int b = 0; b < width; ++b)
        edges.push_back({column_vertex(j, a, width), column_vertex(j + 1, b, width),
                         w[static_cast<size_t>(a) * width + b]});
    minima.push_back(min_w);
  }
  Graph g(n, edges, true);
  return GadgetDescriptor{std::move(g), GadgetKind::RadiusCircle, d, width,
                          std::move(minima), {}, 0, 0, epsilon};
}

bool verify_reduction(const GadgetDescriptor& gd, Weight value,
                      const PathResult& witness) {
  switch (gd.kind) {
    case GadgetKind::SparseLayered:
      return verify_sparse(gd, value, witness);
    case GadgetKind::DensePlanted:
      return verify_dense(gd, value, witness);
    case GadgetKind::RadiusCircle:
      return verify_circle(gd, value, witness);
  }
  throw KindMismatch("unknown gadget kind");
}

bool verify_reduction(const GadgetDescriptor& gd, const MetricsReport& report) {
  if (gd.kind == GadgetKind::RadiusCircle)
    return verify_reduction(gd, report.radius, report.radius_path);
  return verify_reduction(gd, report.diameter, report.diameter_path);
}

std::string gadget_kind_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::SparseLayered:
      return "sparse-layered";
    case GadgetKind::DensePlanted:
      return "dense-planted";
    case GadgetKind::RadiusCircle:
      return "radius-circle";
  }
  throw KindMismatch("unknown gadget kind");
}

GadgetKind gadget_kind_from_name(const std::string& name) {
  if (name == "sparse-layered") return GadgetKind::SparseLayered;
  if (name == "dense-planted") return GadgetKind::DensePlanted;
  if (name == "radius-circle") return GadgetKind::RadiusCircle;
  throw KindMismatch("unknown gadget kind: " + name);
}

void save_gadget(const std::string& path, const GadgetDescriptor& gd) {
  save_graph(path, gd.graph);
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = gadget_kind_name(gd.kind);
  j["d"] = gd.d;
  j["width"] = gd.width;
  j["gap_minima"] = gd.gap_minima;
  j["planted_path"] = gd.planted_path;
  j["s"] = gd.s_vertex;
  j["t"] = gd.t_vertex;
  j["epsilon"] = gd.epsilon;
  std::ofstream out(path + ".json");
  if (!out) throw IoError("cannot write gadget sidecar: " + path + ".json");
  out << j.dump(2) << "\n";
  if (!out) throw IoError("failed writing gadget sidecar: " + path + ".json");
}

GadgetDescriptor load_gadget(const std::string& path) {
  Graph g = load_graph(path);
  std::ifstream in(path + ".json");
  if (!in) throw IoError("cannot read gadget sidecar: " + path + ".json");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad gadget sidecar: ") + e.what());
  }
  try {
    GadgetKind kind = gadget_kind_from_name(
        require_field(j, "kind").get<std::string>());
    GadgetDescriptor gd{std::move(g),
                        kind,
                        require_field(j, "d").get<int>(),
                        require_field(j, "width").get<int>(),
                        require_field(j, "gap_minima").get<std::vector<double>>(),
                        require_field(j, "planted_path").get<std::vector<VertexId>>(),
                        require_field(j, "s").get<VertexId>(),
                        require_field(j, "t").get<VertexId>(),
                        require_field(j, "epsilon").get<double>()};
    return gd;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad gadget sidecar: ") + e.what());
  }
}

}  // namespace qgraph
