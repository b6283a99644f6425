#include "qgraph/classical.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <set>
#include <utility>

namespace qgraph {

namespace {

// Adjacency access that funnels through the oracle when a ledger is present.
const Edge& edge_at(const Graph& g, VertexId u, int i, QueryLedger* ledger) {
  if (ledger) return oracle_query(g, u, i, *ledger);
  return g.neighbors(u)[static_cast<std::size_t>(i)];
}

}  // namespace

BfsResult bfs(const Graph& g, VertexId source, QueryLedger* ledger) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw IndexOutOfRange("source out of range");
  BfsResult r;
  r.level.assign(n, -1);
  r.parent.assign(n, -1);
  r.level[source] = 0;
  std::deque<VertexId> q = {source};
  while (!q.empty()) {
    const VertexId u = q.front();
    q.pop_front();
    r.order.push_back(u);
    if (r.level[u] > r.depth) r.depth = r.level[u];
    const int du = degree(g, u);
    for (int i = 0; i < du; ++i) {
      const Edge& e = edge_at(g, u, i, ledger);
      if (r.level[e.to] < 0) {
        r.level[e.to] = r.level[u] + 1;
        r.parent[e.to] = u;
        q.push_back(e.to);
      }
    }
  }
  return r;
}

PartialBfsResult partial_bfs(const Graph& g, VertexId source, int cap) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw IndexOutOfRange("source out of range");
  if (cap < 1) throw InvalidParam("cap must be at least 1");
  PartialBfsResult r;
  r.level.assign(n, -1);
  r.parent.assign(n, -1);
  r.level[source] = 0;
  r.visited.push_back(source);
  std::deque<VertexId> q = {source};
  bool full = static_cast<int>(r.visited.size()) >= cap;
  while (!q.empty() && !full) {
    const VertexId u = q.front();
    q.pop_front();
    for (const Edge& e : g.neighbors(u)) {
      if (r.level[e.to] < 0) {
        r.level[e.to] = r.level[u] + 1;
        r.parent[e.to] = u;
        r.visited.push_back(e.to);
        q.push_back(e.to);
        if (static_cast<int>(r.visited.size()) >= cap) {
          full = true;
          break;
        }
      }
    }
  }
  r.depth = r.level[r.visited.back()];
  return r;
}

PartialDijkstraResult partial_dijkstra(const Graph& g, VertexId source, int cap,
                                       QueryLedger* ledger) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw IndexOutOfRange("source out of range");
  if (cap < 1) throw InvalidParam("cap must be at least 1");
  PartialDijkstraResult r;
  r.dist.assign(n, kInfiniteWeight);
  r.parent.assign(n, -1);
  r.dist[source] = 0.0;
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0.0, source});
  std::vector<char> settled(n, 0);
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (settled[u] || d > r.dist[u]) continue;
    settled[u] = 1;
    r.visited.push_back(u);
    r.reach = d;
    if (static_cast<int>(r.visited.size()) >= cap) break;
    const int du = degree(g, u);
    for (int i = 0; i < du; ++i) {
      const Edge& e = edge_at(g, u, i, ledger);
      const Weight nd = d + e.weight;
      if (nd < r.dist[e.to]) {
        r.dist[e.to] = nd;
        r.parent[e.to] = u;
        pq.push({nd, e.to});
      }
    }
  }
  return r;
}

SsspResult dijkstra(const Graph& g, VertexId source, QueryLedger* ledger) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw IndexOutOfRange("source out of range");
  SsspResult r;
  r.dist.assign(n, kInfiniteWeight);
  r.parent.assign(n, -1);
  r.dist[source] = 0.0;
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0.0, source});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > r.dist[u]) continue;
    const int du = degree(g, u);
    for (int i = 0; i < du; ++i) {
      const Edge& e = edge_at(g, u, i, ledger);
      const Weight nd = d + e.weight;
      if (nd < r.dist[e.to]) {
        r.dist[e.to] = nd;
        r.parent[e.to] = u;
        pq.push({nd, e.to});
      }
    }
  }
  return r;
}

namespace {

// Lowest-index farthest vertex in a distance array.
std::pair<VertexId, Weight> farthest(const std::vector<Weight>& dist) {
  VertexId best = 0;
  Weight best_d = dist[0];
  for (VertexId v = 1; v < static_cast<VertexId>(dist.size()); ++v) {
    if (dist[v] > best_d) {
      best_d = dist[v];
      best = v;
    }
  }
  return {best, best_d};
}

}  // namespace

MetricsReport exact_metrics_bruteforce(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  const int n = g.vertex_count();
  MetricsReport r;
  r.ecc.assign(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    const SsspResult s = dijkstra(g, v);
    r.ecc[v] = farthest(s.dist).second;
  }
  r.diameter_vertex = 0;
  r.radius_vertex = 0;
  for (VertexId v = 1; v < n; ++v) {
    if (r.ecc[v] > r.ecc[r.diameter_vertex]) r.diameter_vertex = v;
    if (r.ecc[v] < r.ecc[r.radius_vertex]) r.radius_vertex = v;
  }
  r.diameter = r.ecc[r.diameter_vertex];
  r.radius = r.ecc[r.radius_vertex];
  {
    const SsspResult s = dijkstra(g, r.diameter_vertex);
    const auto [t, d] = farthest(s.dist);
    (void)d;
    r.diameter_path = build_path(g, r.diameter_vertex, t, s.parent);
  }
  {
    const SsspResult s = dijkstra(g, r.radius_vertex);
    const auto [t, d] = farthest(s.dist);
    (void)d;
    r.radius_path = build_path(g, r.radius_vertex, t, s.parent);
  }
  return r;
}

HittingSet sample_hitting_set(int n, int s, double sample_const, Rng& rng) {
  if (n < 1) throw InvalidParam("need at least one vertex");
  if (s < 1) throw InvalidParam("neighborhood size must be positive");
  if (sample_const <= 0.0) throw InvalidParam("sample const must be positive");
  const double raw = sample_const * (static_cast<double>(n) / s) * std::log(n);
  const int size = std::min(n, std::max(1, static_cast<int>(std::ceil(raw))));
  HittingSet h;
  h.s = s;
  h.sample_const = sample_const;
  if (size >= n) {
    h.members.resize(n);
    for (int v = 0; v < n; ++v) h.members[v] = v;
    return h;
  }
  std::set<VertexId> picked;
  while (static_cast<int>(picked.size()) < size) {
    picked.insert(static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n))));
  }
  h.members.assign(picked.begin(), picked.end());
  return h;
}

HittingSet sample_hitting_set(const Graph& g, int s, double sample_const, Rng& rng) {
  return sample_hitting_set(g.vertex_count(), s, sample_const, rng);
}

HittingSet greedy_hitting_set(const std::vector<std::vector<VertexId>>& sets, int n) {
  HittingSet h;
  const int k = static_cast<int>(sets.size());
  std::vector<char> covered(k, 0);
  int remaining = k;
  std::set<VertexId> members;
  while (remaining > 0) {
    std::vector<int> gain(n, 0);
    for (int i = 0; i < k; ++i) {
      if (covered[i]) continue;
      for (VertexId v : sets[i]) {
        if (v < 0 || v >= n) throw IndexOutOfRange("set element out of range");
        ++gain[v];
      }
    }
    VertexId best = 0;
    for (VertexId v = 1; v < n; ++v) {
      if (gain[v] > gain[best]) best = v;
    }
    if (gain[best] == 0) throw InvalidParam("empty set cannot be hit");
    members.insert(best);
    for (int i = 0; i < k; ++i) {
      if (covered[i]) continue;
      if (std::find(sets[i].begin(), sets[i].end(), best) != sets[i].end()) {
        covered[i] = 1;
        --remaining;
      }
    }
  }
  h.members.assign(members.begin(), members.end());
  return h;
}

namespace {

// Partial search from v touching about cap vertices: BFS layers for unit
// weights, Dijkstra order otherwise. Returns visited list and reach.
std::pair<std::vector<VertexId>, Weight> partial_search(const Graph& g, VertexId v,
                                                        int cap) {
  if (g.weighted()) {
    PartialDijkstraResult r = partial_dijkstra(g, v, cap);
    return {std::move(r.visited), r.reach};
  }
  PartialBfsResult r = partial_bfs(g, v, cap);
  return {std::move(r.visited), static_cast<Weight>(r.depth)};
}

// Full eccentricity of u plus the path realizing it.
std::pair<Weight, PathResult> full_ecc(const Graph& g, VertexId u) {
  const SsspResult s = dijkstra(g, u);
  const auto [t, d] = farthest(s.dist);
  return {d, build_path(g, u, t, s.parent)};
}

ApproxEstimate estimate_from_sources(const Graph& g, const std::set<VertexId>& sources) {
  ApproxEstimate out;
  bool first = true;
  for (VertexId u : sources) {
    auto [d, path] = full_ecc(g, u);
    if (first || d > out.estimate) {
      out.estimate = d;
      out.witness = std::move(path);
      first = false;
    }
  }
  return out;
}

}  // namespace

ApproxEstimate approx_diameter_acim(const Graph& g, int s) {
  if (!is_connected(g)) throw DisconnectedGraph();
  const int n = g.vertex_count();
  if (s < 1) throw InvalidParam("partial search size must be positive");
  std::vector<std::vector<VertexId>> balls(n);
  VertexId w = 0;
  Weight w_reach = -1.0;
  for (VertexId v = 0; v < n; ++v) {
    auto [vis, reach] = partial_search(g, v, s);
    balls[v] = std::move(vis);
    if (reach > w_reach) {
      w_reach = reach;
      w = v;
    }
  }
  std::set<VertexId> sources(balls[w].begin(), balls[w].end());
  sources.insert(w);
  const HittingSet cover = greedy_hitting_set(balls, n);
  sources.insert(cover.members.begin(), cover.members.end());
  return estimate_from_sources(g, sources);
}

ApproxEstimate approx_diameter_rw(const Graph& g, int s, double sample_const, Rng& rng) {
  if (!is_connected(g)) throw DisconnectedGraph();
  const int n = g.vertex_count();
  if (s < 1) throw InvalidParam("partial search size must be positive");
  const HittingSet h = sample_hitting_set(n, s, sample_const, rng);
  Weight w_reach = -1.0;
  std::vector<VertexId> w_ball;
  for (VertexId v : h.members) {
    auto [vis, reach] = partial_search(g, v, s);
    if (reach > w_reach) {
      w_reach = reach;
      w_ball = std::move(vis);
    }
  }
  std::set<VertexId> sources(h.members.begin(), h.members.end());
  sources.insert(w_ball.begin(), w_ball.end());
  return estimate_from_sources(g, sources);
}

PathResult build_path(const Graph& g, VertexId source, VertexId target,
                      const std::vector<VertexId>& parent) {
  PathResult p;
  p.from = source;
  p.to = target;
  VertexId cur = target;
  while (cur != source) {
    p.vertices.push_back(cur);
    const VertexId prev = parent[cur];
    if (prev < 0) throw InvalidParam("no path recorded to target");
    cur = prev;
  }
  p.vertices.push_back(source);
  std::reverse(p.vertices.begin(), p.vertices.end());
  p.total_weight = 0.0;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    p.total_weight += edge_weight(g, p.vertices[i - 1], p.vertices[i]);
  }
  return p;
}

bool validate_path(const Graph& g, const PathResult& path) {
  if (path.vertices.empty()) return false;
  if (path.vertices.front() != path.from || path.vertices.back() != path.to) return false;
  std::set<VertexId> seen;
  Weight total = 0.0;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const VertexId v = path.vertices[i];
    if (v < 0 || v >= g.vertex_count()) return false;
    if (!seen.insert(v).second) return false;
    if (i == 0) continue;
    const Weight w = edge_weight(g, path.vertices[i - 1], v);
    if (w == kInfiniteWeight) return false;
    total += w;
  }
  const Weight scale = std::max(1.0, std::abs(path.total_weight));
  return std::abs(total - path.total_weight) <= 1e-9 * scale;
}

Weight edge_weight(const Graph& g, VertexId u, VertexId v) {
  const auto& lst = g.neighbors(u);
  const auto it = std::lower_bound(
      lst.begin(), lst.end(), v,
      [](const Edge& e, VertexId target) { return e.to < target; });
  if (it == lst.end() || it->to != v) return kInfiniteWeight;
  return it->weight;
}

}  // namespace qgraph
