#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgraph/ledger.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

struct Edge {
  VertexId to = -1;
  Weight weight = 1.0;
};

struct EdgeSpec {
  VertexId u = -1;
  VertexId v = -1;
  Weight weight = 1.0;
};

// Undirected graph with sorted adjacency lists. Construction validates every
// edge: endpoints in range, no self loops, no duplicates, positive finite
// weights, and weight exactly 1 when the graph is declared unweighted.
class Graph {
 public:
  Graph(int n, const std::vector<EdgeSpec>& edges, bool weighted);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool weighted() const { return weighted_; }

  const std::vector<Edge>& neighbors(VertexId v) const;
  std::vector<EdgeSpec> edge_list() const;

 private:
  int n_ = 0;
  int m_ = 0;
  bool weighted_ = false;
  std::vector<std::vector<Edge>> adj_;
};

// The adjacency oracle: every access the algorithms make goes through here so
// the ledger sees each lookup.
const Edge& oracle_query(const Graph& g, VertexId v, int i, QueryLedger& ledger);

int degree(const Graph& g, VertexId v);
bool is_connected(const Graph& g);

enum class WeightMode { Unit, UniformReal };

// Uniform random connected graph: a uniform labeled spanning tree plus
// distinct extra edges. Throws InvalidEdgeCount when m is out of range.
Graph gen_connected_random(int n, int m, WeightMode mode, Rng& rng,
                           double weight_lo = 0.5, double weight_hi = 10.0);

// Circulant-style regular graph: C_n with offsets drawn from a random
// permutation. Requires even degree and n >= degree + 1.
Graph gen_regular(int n, int degree, WeightMode mode, Rng& rng);

// Plain text edge-list format:
//   p <n> <m> <weighted|unweighted>
//   <u> <v> <w>      (m lines)
// '#' starts a comment; blank lines are skipped.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace qgraph
