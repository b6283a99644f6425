#include "qgraph/quantum_metrics.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "qgraph/quantum_sim.hpp"

namespace qgraph {

namespace {

// Max-finding over the distances stored by one tree run, then the path.
EccResult ecc_from_tree(const Graph& g, VertexId v, const std::vector<Weight>& dist,
                        const std::vector<VertexId>& parent, const SimConfig& cfg,
                        QueryLedger& ledger, Rng& rng) {
  const int n = g.vertex_count();
  if (n == 1) return {0.0, PathResult{v, v, 0.0, {v}}};
  const auto to_vertex = [v](std::size_t i) {
    const auto t = static_cast<VertexId>(i);
    return t < v ? t : t + 1;
  };
  const auto [idx, val] =
      qmf_max([&](std::size_t i) { return dist[to_vertex(i)]; },
              static_cast<std::size_t>(n - 1), cfg, ledger, rng, "ecc_max");
  const VertexId target = to_vertex(idx);
  return {val, build_path(g, v, target, parent)};
}

// One full eccentricity computation billed to the given ledger. breadth_only
// switches to the BFS-depth variant used on unweighted graphs by the
// approximation path.
EccResult q_ecc_core(const Graph& g, VertexId v, const SimConfig& cfg,
                     QueryLedger& ledger, Rng& rng, bool breadth_only) {
  if (breadth_only) {
    const QbfsResult r = qbfs(g, v, cfg, ledger);
    VertexId target = v;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (r.level[u] == r.depth) {
        target = u;
        break;
      }
    }
    return {static_cast<Weight>(r.depth), build_path(g, v, target, r.parent)};
  }
  const SsspResult sp = qsssp(g, v, cfg, ledger);
  return ecc_from_tree(g, v, sp.dist, sp.parent, cfg, ledger, rng);
}

// What the simulation reports as the farthest target in a distance array:
// the exact lowest-index maximum when idealized, one sampled max-finding run
// (on a scratch account) otherwise. `self` is excluded from the domain.
std::pair<Weight, VertexId> observe_farthest(const std::vector<Weight>& dist,
                                             VertexId self, const SimConfig& cfg,
                                             Rng& rng) {
  const auto n = dist.size();
  if (n == 1) return {0.0, self};
  const auto to_vertex = [self](std::size_t i) {
    const auto t = static_cast<VertexId>(i);
    return t < self ? t : t + 1;
  };
  const std::size_t domain = n - 1;
  if (!cfg.stochastic()) {
    VertexId best = to_vertex(0);
    for (std::size_t i = 1; i < domain; ++i) {
      const VertexId t = to_vertex(i);
      if (dist[t] > dist[best]) best = t;
    }
    return {dist[best], best};
  }
  QueryLedger scratch;
  Rng r = rng.split();
  const auto [idx, val] = qmf_max([&](std::size_t i) { return dist[to_vertex(i)]; },
                                  domain, cfg, scratch, r, "observe");
  return {val, to_vertex(idx)};
}

EccResult q_extremal(const Graph& g, const SimConfig& cfg, QueryLedger& ledger,
                     bool maximize) {
  cfg.validate();
  const int n = g.vertex_count();
  if (n < 2) throw TrivialGraph("need at least two vertices");
  if (!is_connected(g)) throw DisconnectedGraph();
  Rng root(cfg.seed);

  // Cost of one full eccentricity run, measured once on a scratch account;
  // each inner evaluation of the search loop below is billed at this rate.
  QueryCost gamma;
  {
    QueryLedger scratch;
    Rng gr = root.split();
    q_ecc_core(g, 0, cfg, scratch, gr, false);
    gamma = {scratch.charged_queries(), scratch.charged_time()};
  }

  // Memoized per-vertex eccentricities as the simulation observes them; the
  // tree probes are real, the model cost is covered by gamma per evaluation.
  std::vector<Weight> ecc(n);
  for (VertexId v = 0; v < n; ++v) {
    const SsspResult sp = dijkstra(g, v, &ledger);
    ecc[v] = observe_farthest(sp.dist, v, cfg, root).first;
  }

  const auto value_fn = [&](std::size_t i) { return ecc[i]; };
  Rng sr = root.split();
  std::size_t winner;
  if (maximize) {
    winner = qmf_max(value_fn, static_cast<std::size_t>(n), cfg, ledger, sr,
                     "diameter_search", gamma)
                 .first;
  } else {
    winner = qmf_min(value_fn, static_cast<std::size_t>(n), cfg, ledger, sr,
                     "radius_search", gamma)
                 .first;
  }

  Rng fr = root.split();
  return q_ecc_core(g, static_cast<VertexId>(winner), cfg, ledger, fr, false);
}

// Partial search behavior: frontier batches discovered by doubling threshold
// calls. Oracle probes land on `ledger`; the threshold calls charge a local
// scratch account, since callers bill the analytic formula instead.
PartialBfsResult qpbfs_core(const Graph& g, VertexId v, int s, const SimConfig& cfg,
                            QueryLedger& ledger, Rng& rng,
                            std::vector<PartialSearchBatch>* batches) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw IndexOutOfRange("source out of range");
  if (s < 1) throw InvalidParam("cap must be at least 1");
  PartialBfsResult r;
  r.level.assign(n, -1);
  r.parent.assign(n, -1);
  r.level[v] = 0;
  r.visited.push_back(v);
  std::vector<char> in_set(n, 0);
  in_set[v] = 1;
  std::deque<std::pair<VertexId, int>> frontier = {{v, 0}};
  QueryLedger inner;
  while (!frontier.empty() && static_cast<int>(r.visited.size()) < s) {
    const auto [u, h] = frontier.front();
    frontier.pop_front();
    const int deg = degree(g, u);
    PartialSearchBatch batch;
    batch.source = u;
    if (deg > 0) {
      const auto unvisited = [&](std::size_t i) {
        const Edge& e = oracle_query(g, u, static_cast<int>(i), ledger);
        return !in_set[e.to];
      };
      QtfOutcome outcome;
      for (std::size_t t = 1;; t *= 2) {
        batch.doubling_rounds.push_back(t);
        const auto capped = std::min<std::size_t>(t, static_cast<std::size_t>(deg));
        outcome = qtf(unvisited, static_cast<std::size_t>(deg), capped, cfg, inner, rng);
        if (outcome.flag) break;
      }
      batch.m_v = static_cast<int>(outcome.index_set.size());
      for (const std::size_t idx : outcome.index_set) {
        const Edge& e = oracle_query(g, u, static_cast<int>(idx), ledger);
        batch.found_indices.push_back(static_cast<int>(idx));
        if (!in_set[e.to]) {
          in_set[e.to] = 1;
          r.level[e.to] = h + 1;
          r.parent[e.to] = u;
          r.visited.push_back(e.to);
          frontier.push_back({e.to, h + 1});
        }
      }
    }
    if (batches) batches->push_back(std::move(batch));
  }
  const int cap = std::min(s, n);
  if (static_cast<int>(r.visited.size()) > cap) {
    for (std::size_t i = static_cast<std::size_t>(cap); i < r.visited.size(); ++i) {
      r.level[r.visited[i]] = -1;
      r.parent[r.visited[i]] = -1;
    }
    r.visited.resize(static_cast<std::size_t>(cap));
  }
  r.depth = r.level[r.visited.back()];
  return r;
}

}  // namespace

EccResult q_eccentricity(const Graph& g, VertexId v, const SimConfig& cfg,
                         QueryLedger& ledger) {
  cfg.validate();
  if (v < 0 || v >= g.vertex_count()) throw IndexOutOfRange("vertex out of range");
  Rng root(cfg.seed);
  Rng r = root.split();
  return q_ecc_core(g, v, cfg, ledger, r, false);
}

EccResult q_diameter(const Graph& g, const SimConfig& cfg, QueryLedger& ledger) {
  return q_extremal(g, cfg, ledger, true);
}

EccResult q_radius(const Graph& g, const SimConfig& cfg, QueryLedger& ledger) {
  return q_extremal(g, cfg, ledger, false);
}

PartialBfsResult qpbfs(const Graph& g, VertexId v, int s, const SimConfig& cfg,
                       QueryLedger& ledger, std::vector<PartialSearchBatch>* batches) {
  cfg.validate();
  if (g.weighted()) throw InvalidParam("requires an unweighted graph");
  Rng root(cfg.seed);
  Rng r = root.split();
  PartialBfsResult out = qpbfs_core(g, v, s, cfg, ledger, r, batches);
  const double q = qpbfs_charge(s, cfg.charge_const);
  ledger.charge("qpbfs", q, q);
  return out;
}

ApproxResult q_approx_diameter(const Graph& g, int s, double sample_const,
                               const SimConfig& cfg, QueryLedger& ledger, Rng& rng) {
  cfg.validate();
  const int n = g.vertex_count();
  if (s < 1 || s > n) throw InvalidParam("partial size must be in [1, n]");
  if (!is_connected(g)) throw DisconnectedGraph();

  ApproxResult out;
  out.hitting_set = sample_hitting_set(g, s, sample_const, rng);
  const std::vector<VertexId>& hs = out.hitting_set.members;

  // Step 2: deepest s-capped partial search among the sample. Each inner
  // evaluation is billed at the partial-search rate; the searches themselves
  // run once per member and are memoized.
  const double pq = qpbfs_charge(s, cfg.charge_const);
  const QueryCost partial_cost{pq, pq};
  std::vector<Weight> reach(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (g.weighted()) {
      reach[i] = partial_dijkstra(g, hs[i], s, &ledger).reach;
    } else {
      Rng pr = rng.split();
      reach[i] = static_cast<Weight>(
          qpbfs_core(g, hs[i], s, cfg, ledger, pr, nullptr).depth);
    }
  }
  Rng wr = rng.split();
  const std::size_t wi = qmf_max([&](std::size_t i) { return reach[i]; }, hs.size(),
                                 cfg, ledger, wr, "approx_w_search", partial_cost)
                             .first;
  out.w_vertex = hs[wi];

  // Step 3: materialize that neighborhood, charged at the analytic rate.
  if (g.weighted()) {
    out.n_s_of_w = partial_dijkstra(g, out.w_vertex, s, &ledger).visited;
  } else {
    Rng nr = rng.split();
    out.n_s_of_w = qpbfs_core(g, out.w_vertex, s, cfg, ledger, nr, nullptr).visited;
  }
  ledger.charge("qpbfs", partial_cost.queries, partial_cost.time);

  // Step 4: max-finding over eccentricities of sample plus neighborhood.
  std::set<VertexId> cand_set(hs.begin(), hs.end());
  cand_set.insert(out.n_s_of_w.begin(), out.n_s_of_w.end());
  const std::vector<VertexId> cand(cand_set.begin(), cand_set.end());

  QueryCost ecc_cost;
  if (g.weighted()) {
    QueryLedger scratch;
    Rng gr = rng.split();
    q_ecc_core(g, 0, cfg, scratch, gr, false);
    ecc_cost = {scratch.charged_queries(), scratch.charged_time()};
  } else {
    const double q = qbfs_charge(n, cfg.charge_const);
    ecc_cost = {q, q};
  }

  std::vector<Weight> ecc(cand.size());
  std::vector<VertexId> far(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (g.weighted()) {
      const SsspResult sp = dijkstra(g, cand[i], &ledger);
      const auto [val, tgt] = observe_farthest(sp.dist, cand[i], cfg, rng);
      ecc[i] = val;
      far[i] = tgt;
    } else {
      const BfsResult b = bfs(g, cand[i], &ledger);
      ecc[i] = static_cast<Weight>(b.depth);
      far[i] = cand[i];
      for (VertexId u = 0; u < n; ++u) {
        if (b.level[u] == b.depth) {
          far[i] = u;
          break;
        }
      }
    }
  }
  Rng er = rng.split();
  const std::size_t ci = qmf_max([&](std::size_t i) { return ecc[i]; }, cand.size(),
                                 cfg, ledger, er, "approx_ecc_search", ecc_cost)
                             .first;
  const VertexId u_star = cand[ci];

  // The witness is rebuilt classically from the winner's tree; the model
  // already billed its evaluation inside the search loop.
  const std::vector<VertexId> parents =
      g.weighted() ? dijkstra(g, u_star).parent : bfs(g, u_star).parent;
  out.estimate = ecc[ci];
  out.witness = build_path(g, u_star, far[ci], parents);
  return out;
}

}  // namespace qgraph
