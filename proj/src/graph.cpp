#include "qgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace qgraph {

namespace {

std::pair<int, int> ordered(VertexId u, VertexId v) {
  return u < v ? std::pair<int, int>{u, v} : std::pair<int, int>{v, u};
}

}  // namespace

Graph::Graph(int n, const std::vector<EdgeSpec>& edges, bool weighted)
    : n_(n), m_(static_cast<int>(edges.size())), weighted_(weighted), adj_(n > 0 ? n : 0) {
  if (n < 1) throw InvalidParam("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const EdgeSpec& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw IndexOutOfRange("edge endpoint out of range");
    }
    if (e.u == e.v) throw InvalidParam("self loop");
    if (!seen.insert(ordered(e.u, e.v)).second) throw InvalidParam("duplicate edge");
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw InvalidParam("edge weight must be positive and finite");
    }
    if (!weighted && e.weight != 1.0) {
      throw InvalidParam("unweighted graph requires unit weights");
    }
    adj_[e.u].push_back({e.v, e.weight});
    adj_[e.v].push_back({e.u, e.weight});
  }
  for (auto& lst : adj_) {
    std::sort(lst.begin(), lst.end(),
              [](const Edge& a, const Edge& b) { return a.to < b.to; });
  }
}

const std::vector<Edge>& Graph::neighbors(VertexId v) const {
  if (v < 0 || v >= n_) throw IndexOutOfRange("vertex out of range");
  return adj_[v];
}

std::vector<EdgeSpec> Graph::edge_list() const {
  std::vector<EdgeSpec> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u) {
    for (const Edge& e : adj_[u]) {
      if (u < e.to) out.push_back({u, e.to, e.weight});
    }
  }
  return out;
}

const Edge& oracle_query(const Graph& g, VertexId v, int i, QueryLedger& ledger) {
  const auto& lst = g.neighbors(v);
  if (i < 0 || i >= static_cast<int>(lst.size())) {
    throw IndexOutOfRange("adjacency index out of range");
  }
  ledger.count_oracle();
  return lst[static_cast<std::size_t>(i)];
}

int degree(const Graph& g, VertexId v) {
  return static_cast<int>(g.neighbors(v).size());
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const Edge& e : g.neighbors(u)) {
      if (!seen[e.to]) {
        seen[e.to] = 1;
        ++reached;
        stack.push_back(e.to);
      }
    }
  }
  return reached == n;
}

namespace {

Weight draw_weight(WeightMode mode, Rng& rng, double lo = 0.5, double hi = 10.0) {
  if (mode == WeightMode::Unit) return 1.0;
  return rng.uniform(lo, hi);
}

}  // namespace

Graph gen_connected_random(int n, int m, WeightMode mode, Rng& rng,
                           double weight_lo, double weight_hi) {
  if (n < 1) throw InvalidParam("need at least one vertex");
  if (mode == WeightMode::UniformReal &&
      (!(weight_lo > 0.0) || !(weight_hi > weight_lo))) {
    throw InvalidParam("need 0 < weight_lo < weight_hi");
  }
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m) throw InvalidEdgeCount("edge count incompatible with n");

  std::vector<EdgeSpec> edges;
  std::set<std::pair<int, int>> used;
  auto add = [&](VertexId u, VertexId v, Weight w) {
    edges.push_back({u, v, w});
    used.insert(u < v ? std::pair<int, int>{u, v} : std::pair<int, int>{v, u});
  };

  if (n == 1) return Graph(1, {}, mode != WeightMode::Unit);

  if (n == 2) {
    add(0, 1, draw_weight(mode, rng, weight_lo, weight_hi));
  } else {
    // Decode a uniform Pruefer sequence into a uniform labeled tree.
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) leaves.insert(v);
    }
    for (int x : pruefer) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      add(leaf, x, draw_weight(mode, rng, weight_lo, weight_hi));
      if (--deg[x] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    add(a, b, draw_weight(mode, rng, weight_lo, weight_hi));
  }

  const int extra = m - (n - 1);
  if (extra > 0) {
    // Dense targets enumerate the complement; sparse targets use rejection.
    if (static_cast<long long>(m) * 2 > max_m) {
      std::vector<std::pair<int, int>> pool;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!used.count({u, v})) pool.push_back({u, v});
        }
      }
      for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(pool[i], pool[j]);
      }
      for (int i = 0; i < extra; ++i) {
        add(pool[i].first, pool[i].second, draw_weight(mode, rng, weight_lo, weight_hi));
      }
    } else {
      int added = 0;
      while (added < extra) {
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        const auto key = u < v ? std::pair<int, int>{u, v} : std::pair<int, int>{v, u};
        if (used.count(key)) continue;
        add(key.first, key.second, draw_weight(mode, rng, weight_lo, weight_hi));
        ++added;
      }
    }
  }
  return Graph(n, edges, mode != WeightMode::Unit);
}

Graph gen_regular(int n, int deg, WeightMode mode, Rng& rng) {
  if (deg < 2 || deg % 2 != 0) throw InvalidParam("degree must be even and at least 2");
  if (n < deg + 1) throw InvalidParam("need n >= degree + 1");
  // Pick deg/2 distinct circulant offsets in [1, n/2); offset n/2 would give
  // odd contribution, so exclude it. Offset 1 is always kept so the ring keeps
  // the graph connected no matter what the other offsets share with n.
  const int half = deg / 2;
  std::vector<int> pool(static_cast<std::size_t>(std::max(0, (n - 1) / 2 - 1)));
  std::iota(pool.begin(), pool.end(), 2);
  if (static_cast<int>(pool.size()) < half - 1) {
    throw InvalidParam("n too small for this degree");
  }
  for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> offsets{1};
  offsets.insert(offsets.end(), pool.begin(), pool.begin() + (half - 1));

  std::vector<EdgeSpec> edges;
  for (int off : offsets) {
    for (int u = 0; u < n; ++u) {
      const int v = (u + off) % n;
      edges.push_back({std::min(u, v), std::max(u, v), draw_weight(mode, rng)});
    }
  }
  return Graph(n, edges, mode != WeightMode::Unit);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << ' '
      << (g.weighted() ? "weighted" : "unweighted") << '\n';
  char buf[64];
  for (const EdgeSpec& e : g.edge_list()) {
    std::snprintf(buf, sizeof buf, "%.17g", e.weight);
    out << e.u << ' ' << e.v << ' ' << buf << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  bool weighted = false;
  bool header_seen = false;
  std::vector<EdgeSpec> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!header_seen) {
      char p;
      std::string mode;
      if (!(ls >> p >> n >> m >> mode) || p != 'p') {
        throw ParseError("bad header at line " + std::to_string(line_no));
      }
      if (mode == "weighted") {
        weighted = true;
      } else if (mode == "unweighted") {
        weighted = false;
      } else {
        throw ParseError("unknown weight mode at line " + std::to_string(line_no));
      }
      if (n < 1 || m < 0) throw ParseError("bad sizes in header");
      std::string rest;
      if (ls >> rest) throw ParseError("trailing data at line " + std::to_string(line_no));
      header_seen = true;
      continue;
    }
    EdgeSpec e;
    if (!(ls >> e.u >> e.v >> e.weight)) {
      throw ParseError("bad edge at line " + std::to_string(line_no));
    }
    std::string rest;
    if (ls >> rest) throw ParseError("trailing data at line " + std::to_string(line_no));
    edges.push_back(e);
  }
  if (!header_seen) throw ParseError("missing header");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError("edge count does not match header");
  }
  try {
    return Graph(n, edges, weighted);
  } catch (const std::exception& ex) {
    throw ParseError(std::string("invalid graph: ") + ex.what());
  }
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  write_edge_list(out, g);
  if (!out) throw IoError("write failed: " + path);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return read_edge_list(in);
}

}  // namespace qgraph
