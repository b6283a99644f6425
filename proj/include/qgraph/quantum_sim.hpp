#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/sim_config.hpp"
#include "qgraph/types.hpp"

namespace qgraph {

// Success probability of measuring a marked item after `iterations` Grover
// steps on a space of n_items with `marked` solutions: sin^2((2j+1)theta),
// sin^2(theta) = marked/n_items.
double grover_success_prob(std::size_t n_items, std::size_t marked, std::size_t iterations);

// One measurement round at a fixed iteration count; true on success.
bool qsearch_round(std::size_t n_items, std::size_t marked, std::size_t iterations,
                   Rng& rng);

// Running state of the growing-schedule search loop.
struct QSearchState {
  std::size_t n_items = 0;
  double schedule_bound = 1.0;  // M, capped at sqrt(n_items)
  std::size_t last_j = 0;
  double theta = 0.0;
  double total_iterations = 0.0;
};

// Unknown-marked-count search. Stochastic mode runs the growing schedule:
// each round samples j below ceil(M), charges (j+1) per-query costs, and
// succeeds with the Grover round probability; M grows by cfg.lambda up to
// sqrt(N) and the loop gives up (returns nullopt) once total iterations pass
// cfg.qsearch_cutoff_const * sqrt(N) with M saturated. Idealized mode returns
// a uniformly random marked index at cost ceil(sqrt(N/max(k,1))), or nullopt
// at cost ceil(sqrt(N)) when nothing is marked. The marked count is taken by
// scanning pred once per call; that bookkeeping is not charged.
std::optional<std::size_t> qsearch(const std::function<bool(std::size_t)>& pred,
                                   std::size_t n_items, const SimConfig& cfg,
                                   QueryLedger& ledger, Rng& rng,
                                   const std::string& label = "qsearch",
                                   const QueryCost& per_query = {},
                                   QSearchState* state_out = nullptr);

// Minimum finding via repeated threshold search. Returns (index, value);
// idealized mode always returns the lowest-index minimizer, stochastic mode
// returns whatever the loop held when the search gave up.
std::pair<std::size_t, double> qmf_min(const std::function<double(std::size_t)>& value,
                                       std::size_t n_items, const SimConfig& cfg,
                                       QueryLedger& ledger, Rng& rng,
                                       const std::string& label = "qmf",
                                       const QueryCost& per_query = {});
std::pair<std::size_t, double> qmf_max(const std::function<double(std::size_t)>& value,
                                       std::size_t n_items, const SimConfig& cfg,
                                       QueryLedger& ledger, Rng& rng,
                                       const std::string& label = "qmf",
                                       const QueryCost& per_query = {});

// Per-type minima for the k types whose minima are smallest (all types when
// fewer exist). Exact answer, analytic charge ceil(c*sqrt(kN)*log2(N+1)).
// Results sorted by (value, index). rng is accepted for interface symmetry;
// the exact computation draws nothing from it.
std::vector<std::pair<std::size_t, double>> qmf_k_types(
    const std::function<double(std::size_t)>& value,
    const std::function<int(std::size_t)>& type_of, std::size_t n_items, int k,
    const SimConfig& cfg, QueryLedger& ledger, Rng& rng);

struct QtfOutcome {
  bool flag = false;                   // true means marked count <= threshold
  std::vector<std::size_t> index_set;  // exact marked set when flag is true
  std::size_t threshold = 0;
};

// Threshold finding: certifies "at most t marked" and returns the exact
// marked set; over-threshold inputs report false (always when idealized,
// with probability 1-delta otherwise; the failure branch returns a spurious
// uniform t-subset). Charges ceil(c*sqrt(tN)) queries, time scaled by
// log2(N+1).
QtfOutcome qtf(const std::function<bool(std::size_t)>& pred, std::size_t n_items,
               std::size_t threshold, const SimConfig& cfg, QueryLedger& ledger,
               Rng& rng);

struct QbfsResult {
  std::vector<VertexId> order;
  int depth = 0;
  std::vector<VertexId> parent;
  std::vector<int> level;
};

// Breadth-first depth at theoretical cost: classical BFS supplies the exact
// answer, the ledger is charged the analytic formula.
QbfsResult qbfs(const Graph& g, VertexId v, const SimConfig& cfg, QueryLedger& ledger);

// Single-source shortest paths, exact answer plus analytic charge.
SsspResult qsssp(const Graph& g, VertexId v, const SimConfig& cfg, QueryLedger& ledger);

// Exploratory variant that grows the shortest-path tree by minimum finding
// over frontier edge slots; costs accrue from the inner search loops.
SsspResult qsssp_structural(const Graph& g, VertexId v, const SimConfig& cfg,
                            QueryLedger& ledger, Rng& rng);

// Analytic charge formulas shared with the benchmark models.
double qbfs_charge(int n, double charge_const);
double qsssp_charge(int n, int m, double charge_const, double polylog_exp);
double qpbfs_charge(int s, double charge_const);

}  // namespace qgraph
