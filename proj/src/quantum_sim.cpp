#include "qgraph/quantum_sim.hpp"

#include <algorithm>
#include <cmath>

#include "qgraph/classical.hpp"

namespace qgraph {

double grover_success_prob(std::size_t n_items, std::size_t marked, std::size_t iterations) {
  if (n_items == 0) throw InvalidParam("empty search space");
  if (marked == 0) return 0.0;
  if (marked >= n_items) return 1.0;
  const double theta =
      std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(n_items)));
  const double amp = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return amp * amp;
}

bool qsearch_round(std::size_t n_items, std::size_t marked, std::size_t iterations,
                   Rng& rng) {
  return rng.next_real() < grover_success_prob(n_items, marked, iterations);
}

namespace {

std::vector<std::size_t> scan_marked(const std::function<bool(std::size_t)>& pred,
                                     std::size_t n_items) {
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i < n_items; ++i) {
    if (pred(i)) marked.push_back(i);
  }
  return marked;
}

}  // namespace

std::optional<std::size_t> qsearch(const std::function<bool(std::size_t)>& pred,
                                   std::size_t n_items, const SimConfig& cfg,
                                   QueryLedger& ledger, Rng& rng,
                                   const std::string& label, const QueryCost& per_query,
                                   QSearchState* state_out) {
  if (n_items == 0) return std::nullopt;
  const std::vector<std::size_t> marked = scan_marked(pred, n_items);
  const std::size_t k = marked.size();
  const double sqrt_n = std::sqrt(static_cast<double>(n_items));

  if (!cfg.stochastic()) {
    const double count =
        k == 0 ? std::ceil(sqrt_n)
               : std::ceil(std::sqrt(static_cast<double>(n_items) /
                                     static_cast<double>(std::max<std::size_t>(k, 1))));
    ledger.charge(label, count * per_query.queries, count * per_query.time);
    if (k == 0) return std::nullopt;
    return marked[rng.below(k)];
  }

  QSearchState st;
  st.n_items = n_items;
  st.theta = k == 0 ? 0.0
                    : std::asin(std::sqrt(static_cast<double>(k) /
                                          static_cast<double>(n_items)));
  for (;;) {
    const auto bound = static_cast<std::uint64_t>(std::ceil(st.schedule_bound));
    const std::size_t j = rng.below(bound);
    st.last_j = j;
    const double spent = static_cast<double>(j) + 1.0;
    ledger.charge(label, spent * per_query.queries, spent * per_query.time);
    st.total_iterations += spent;
    if (k > 0 && qsearch_round(n_items, k, j, rng)) {
      if (state_out) *state_out = st;
      return marked[rng.below(k)];
    }
    st.schedule_bound = std::min(cfg.lambda * st.schedule_bound, sqrt_n);
    if (st.schedule_bound >= sqrt_n &&
        st.total_iterations > cfg.qsearch_cutoff_const * sqrt_n) {
      if (state_out) *state_out = st;
      return std::nullopt;
    }
  }
}

std::pair<std::size_t, double> qmf_min(const std::function<double(std::size_t)>& value,
                                       std::size_t n_items, const SimConfig& cfg,
                                       QueryLedger& ledger, Rng& rng,
                                       const std::string& label,
                                       const QueryCost& per_query) {
  if (n_items == 0) throw InvalidParam("empty search domain");
  std::size_t best = rng.below(n_items);
  double best_val = value(best);
  for (;;) {
    const double bound = best_val;
    const auto found = qsearch([&](std::size_t i) { return value(i) < bound; }, n_items,
                               cfg, ledger, rng, label, per_query);
    if (!found) break;
    best = *found;
    best_val = value(best);
  }
  if (!cfg.stochastic()) {
    // Guaranteed-correct mode also pins the tie rule: lowest index wins.
    best = 0;
    best_val = value(0);
    for (std::size_t i = 1; i < n_items; ++i) {
      const double v = value(i);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
  }
  return {best, best_val};
}

std::pair<std::size_t, double> qmf_max(const std::function<double(std::size_t)>& value,
                                       std::size_t n_items, const SimConfig& cfg,
                                       QueryLedger& ledger, Rng& rng,
                                       const std::string& label,
                                       const QueryCost& per_query) {
  const auto [idx, neg] = qmf_min([&](std::size_t i) { return -value(i); }, n_items, cfg,
                                  ledger, rng, label, per_query);
  return {idx, -neg};
}

std::vector<std::pair<std::size_t, double>> qmf_k_types(
    const std::function<double(std::size_t)>& value,
    const std::function<int(std::size_t)>& type_of, std::size_t n_items, int k,
    const SimConfig& cfg, QueryLedger& ledger, Rng& rng) {
  (void)rng;
  if (k < 1) throw InvalidParam("need k >= 1");
  if (n_items == 0) throw InvalidParam("empty search domain");
  struct TypeMin {
    std::size_t index;
    double value;
  };
  std::vector<int> types;
  std::vector<TypeMin> minima;
  for (std::size_t i = 0; i < n_items; ++i) {
    const int t = type_of(i);
    const double v = value(i);
    const auto it = std::find(types.begin(), types.end(), t);
    if (it == types.end()) {
      types.push_back(t);
      minima.push_back({i, v});
    } else {
      TypeMin& m = minima[static_cast<std::size_t>(it - types.begin())];
      if (v < m.value) m = {i, v};
    }
  }
  std::sort(minima.begin(), minima.end(), [](const TypeMin& a, const TypeMin& b) {
    return a.value != b.value ? a.value < b.value : a.index < b.index;
  });
  if (static_cast<int>(minima.size()) > k) minima.resize(static_cast<std::size_t>(k));

  const double q = std::ceil(cfg.charge_const *
                             std::sqrt(static_cast<double>(k) * static_cast<double>(n_items)) *
                             std::log2(static_cast<double>(n_items) + 1.0));
  ledger.charge("qmf_k_types", q, q);

  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(minima.size());
  for (const TypeMin& m : minima) out.push_back({m.index, m.value});
  return out;
}

QtfOutcome qtf(const std::function<bool(std::size_t)>& pred, std::size_t n_items,
               std::size_t threshold, const SimConfig& cfg, QueryLedger& ledger,
               Rng& rng) {
  if (threshold < 1 || threshold > n_items) {
    throw InvalidThreshold("threshold must be in [1, N]");
  }
  const double q = std::ceil(cfg.charge_const *
                             std::sqrt(static_cast<double>(threshold) *
                                       static_cast<double>(n_items)));
  ledger.charge("qtf", q, q * std::log2(static_cast<double>(n_items) + 1.0));

  std::vector<std::size_t> marked = scan_marked(pred, n_items);
  QtfOutcome out;
  out.threshold = threshold;
  if (marked.size() <= threshold) {
    out.flag = true;
    out.index_set = std::move(marked);
    return out;
  }
  if (!cfg.stochastic() || rng.next_real() < 1.0 - cfg.delta) {
    out.flag = false;
    return out;
  }
  // Failure branch: a spurious positive carrying a uniform t-subset.
  for (std::size_t i = 0; i < threshold; ++i) {
    const std::size_t j = i + rng.below(marked.size() - i);
    std::swap(marked[i], marked[j]);
  }
  marked.resize(threshold);
  std::sort(marked.begin(), marked.end());
  out.flag = true;
  out.index_set = std::move(marked);
  return out;
}

double qbfs_charge(int n, double charge_const) {
  return std::ceil(charge_const * static_cast<double>(n) *
                   std::log2(static_cast<double>(n) + 1.0));
}

double qsssp_charge(int n, int m, double charge_const, double polylog_exp) {
  return std::ceil(charge_const *
                   std::sqrt(static_cast<double>(n) * static_cast<double>(m)) *
                   std::pow(std::log2(static_cast<double>(n) + 1.0), polylog_exp));
}

double qpbfs_charge(int s, double charge_const) {
  return std::ceil(charge_const * std::pow(static_cast<double>(s), 1.5) *
                   std::log2(static_cast<double>(s) + 1.0));
}

QbfsResult qbfs(const Graph& g, VertexId v, const SimConfig& cfg, QueryLedger& ledger) {
  if (g.weighted()) throw InvalidParam("requires an unweighted graph");
  BfsResult r = bfs(g, v, &ledger);
  if (static_cast<int>(r.order.size()) < g.vertex_count()) throw DisconnectedGraph();
  const double q = qbfs_charge(g.vertex_count(), cfg.charge_const);
  ledger.charge("qbfs", q, q);
  QbfsResult out;
  out.order = std::move(r.order);
  out.depth = r.depth;
  out.parent = std::move(r.parent);
  out.level = std::move(r.level);
  return out;
}

SsspResult qsssp(const Graph& g, VertexId v, const SimConfig& cfg, QueryLedger& ledger) {
  SsspResult r = dijkstra(g, v, &ledger);
  for (const Weight d : r.dist) {
    if (d == kInfiniteWeight) throw DisconnectedGraph();
  }
  const double q =
      qsssp_charge(g.vertex_count(), g.edge_count(), cfg.charge_const, cfg.sssp_polylog_exp);
  ledger.charge("qsssp", q, q);
  return r;
}

SsspResult qsssp_structural(const Graph& g, VertexId v, const SimConfig& cfg,
                            QueryLedger& ledger, Rng& rng) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw IndexOutOfRange("source out of range");
  // Flatten adjacency into slots (u, i) so the frontier scan is one index space.
  std::vector<std::pair<VertexId, int>> slots;
  std::vector<std::size_t> slot_base(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    slot_base[u] = slots.size();
    for (int i = 0; i < degree(g, u); ++i) slots.push_back({u, i});
  }
  slot_base[n] = slots.size();

  SsspResult r;
  r.dist.assign(n, kInfiniteWeight);
  r.parent.assign(n, -1);
  r.dist[v] = 0.0;
  std::vector<char> settled(n, 0);
  settled[v] = 1;
  const auto slot_value = [&](std::size_t si) {
    const auto [u, i] = slots[si];
    if (!settled[u]) return kInfiniteWeight;
    const Edge& e = oracle_query(g, u, i, ledger);
    if (settled[e.to]) return kInfiniteWeight;
    return r.dist[u] + e.weight;
  };
  for (int step = 1; step < n; ++step) {
    const auto [si, val] =
        qmf_min(slot_value, slots.size(), cfg, ledger, rng, "qsssp_structural");
    if (val == kInfiniteWeight) throw DisconnectedGraph();
    const auto [u, i] = slots[si];
    const Edge& e = oracle_query(g, u, i, ledger);
    r.dist[e.to] = val;
    r.parent[e.to] = u;
    settled[e.to] = 1;
  }
  return r;
}

}  // namespace qgraph
