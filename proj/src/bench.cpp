#include "qgraph/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/quantum_metrics.hpp"
#include "qgraph/rng.hpp"

namespace qgraph {
namespace {

bool known_algorithm(const std::string& a) {
  return a == "diameter" || a == "radius" || a == "qpbfs" ||
         a == "approx-diameter";
}

// Stable per-(point, trial) seed derivation from the config seed.
void derive_seeds(std::uint64_t base, int point_index, int trial,
                  std::uint64_t* graph_seed, std::uint64_t* run_seed) {
  std::uint64_t mix = base;
  mix ^= 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(point_index + 1);
  mix ^= 0xC2B2AE3D27D4EB4Full * static_cast<std::uint64_t>(trial + 1);
  Rng r(mix);
  *graph_seed = r.next_u64();
  *run_seed = r.next_u64();
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

double model_value(const std::string& model, const SweepPoint& p) {
  if (model == "diameter" || model == "radius") {
    return p.n * std::sqrt(static_cast<double>(p.m)) *
           std::pow(std::log2(static_cast<double>(p.n)), 2.5);
  }
  if (model == "qpbfs") {
    return std::pow(static_cast<double>(p.s), 1.5) * std::log2(p.s + 1.0);
  }
  if (model == "approx-diameter") {
    return std::sqrt(static_cast<double>(p.m)) *
           std::pow(static_cast<double>(p.n), 0.75) *
           std::pow(std::log2(static_cast<double>(p.n)), 3.0);
  }
  throw InvalidParam("unknown cost model: " + model);
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  cfg.sim.validate();
  if (cfg.trials < 1) throw InvalidParam("trials must be at least 1");
  if (cfg.sweep.empty()) throw InvalidParam("sweep must be non-empty");
  if (!known_algorithm(cfg.algorithm))
    throw InvalidParam("unknown algorithm: " + cfg.algorithm);
  std::vector<BenchRow> rows;
  rows.reserve(cfg.sweep.size() * static_cast<size_t>(cfg.trials));
  for (size_t pi = 0; pi < cfg.sweep.size(); ++pi) {
    const SweepPoint& p = cfg.sweep[pi];
    for (int trial = 0; trial < cfg.trials; ++trial) {
      std::uint64_t graph_seed = 0;
      std::uint64_t run_seed = 0;
      derive_seeds(cfg.sim.seed, static_cast<int>(pi), trial, &graph_seed,
                   &run_seed);
      Rng grng(graph_seed);
      Graph g = cfg.algorithm == "qpbfs"
                    ? gen_regular(p.n, 8, WeightMode::Unit, grng)
                    : gen_connected_random(p.n, p.m, cfg.weight_mode, grng);
      SimConfig rc = cfg.sim;
      rc.seed = run_seed;
      QueryLedger ledger;
      double value = 0.0;
      if (cfg.algorithm == "diameter") {
        value = q_diameter(g, rc, ledger).value;
      } else if (cfg.algorithm == "radius") {
        value = q_radius(g, rc, ledger).value;
      } else if (cfg.algorithm == "qpbfs") {
        value = qpbfs(g, 0, p.s, rc, ledger).depth;
      } else {
        Rng rr(run_seed);
        value = q_approx_diameter(g, p.s, cfg.sample_const, rc, ledger, rr)
                    .estimate;
      }
      BenchRow row;
      row.n = g.vertex_count();
      row.m = g.edge_count();
      row.s = p.s;
      row.trial = trial;
      row.seed = run_seed;
      row.algorithm = cfg.algorithm;
      row.charged_queries = ledger.charged_queries();
      row.charged_time = ledger.charged_time();
      row.oracle_queries = ledger.oracle_queries();
      row.value = value;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

ScalingReport analyze(const BenchConfig& cfg, const std::vector<BenchRow>& rows) {
  ScalingReport rep;
  rep.model_name = cfg.model.empty() ? cfg.algorithm : cfg.model;
  rep.tolerance = cfg.tolerance;
  if (cfg.sweep.empty() || cfg.trials < 1 ||
      rows.size() != cfg.sweep.size() * static_cast<size_t>(cfg.trials)) {
    throw InvalidParam("row count does not match sweep x trials");
  }
  for (size_t pi = 0; pi < cfg.sweep.size(); ++pi) {
    PointStats st;
    st.point = cfg.sweep[pi];
    double sum = 0.0, sum_t = 0.0, sum_o = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const BenchRow& r = rows[pi * cfg.trials + t];
      sum += r.charged_queries;
      sum_t += r.charged_time;
      sum_o += static_cast<double>(r.oracle_queries);
    }
    st.mean_charged = sum / cfg.trials;
    st.mean_time = sum_t / cfg.trials;
    st.mean_oracle = sum_o / cfg.trials;
    double ss = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      double d = rows[pi * cfg.trials + t].charged_queries - st.mean_charged;
      ss += d * d;
    }
    st.stddev_charged = cfg.trials > 1 ? std::sqrt(ss / (cfg.trials - 1)) : 0.0;
    st.ratio = st.mean_charged / model_value(rep.model_name, st.point);
    rep.points.push_back(st);
  }
  // Least-squares slope of log(mean charge) against log(sweep scale).
  if (rep.points.size() >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& st : rep.points) {
      double scale = rep.model_name == "qpbfs" ? st.point.s : st.point.n;
      double x = std::log(scale);
      double y = std::log(st.mean_charged);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double k = static_cast<double>(rep.points.size());
    rep.loglog_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }
  double lo = rep.points.front().ratio;
  double hi = lo;
  for (const auto& st : rep.points) {
    lo = std::min(lo, st.ratio);
    hi = std::max(hi, st.ratio);
  }
  rep.ratio_max_min = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  rep.pass = rep.ratio_max_min <= rep.tolerance;
  return rep;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  char stamp[64] = "unknown";
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  if (gmtime_r(&now, &tm_utc) != nullptr) {
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  }
  out << "# generated " << stamp << "\n";
  out << "n,m,trial,seed,algorithm,charged_queries,charged_time,oracle_queries,"
         "value\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.m << ',' << r.trial << ',' << r.seed << ','
        << r.algorithm << ',' << fmt_double(r.charged_queries) << ','
        << fmt_double(r.charged_time) << ',' << r.oracle_queries << ','
        << fmt_double(r.value) << "\n";
  }
}

void write_csv_file(const std::string& path, const std::vector<BenchRow>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write csv: " + path);
  write_csv(out, rows);
  if (!out) throw IoError("failed writing csv: " + path);
}

void write_scaling_json(std::ostream& out, const ScalingReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["model"] = report.model_name;
  j["tolerance"] = report.tolerance;
  j["loglog_slope"] = report.loglog_slope;
  j["ratio_max_min"] = report.ratio_max_min;
  j["pass"] = report.pass;
  j["points"] = nlohmann::json::array();
  for (const auto& st : report.points) {
    j["points"].push_back({{"n", st.point.n},
                           {"m", st.point.m},
                           {"s", st.point.s},
                           {"mean_charged_queries", st.mean_charged},
                           {"stddev_charged_queries", st.stddev_charged},
                           {"mean_charged_time", st.mean_time},
                           {"mean_oracle_queries", st.mean_oracle},
                           {"ratio", st.ratio}});
  }
  out << j.dump(2) << "\n";
}

void write_scaling_json_file(const std::string& path,
                             const ScalingReport& report) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write report: " + path);
  write_scaling_json(out, report);
  if (!out) throw IoError("failed writing report: " + path);
}

BenchConfig preset_diameter_bench() {
  BenchConfig cfg;
  cfg.algorithm = "diameter";
  for (int n : {128, 256, 512, 1024, 2048}) cfg.sweep.push_back({n, 4 * n, 0});
  cfg.trials = 10;
  cfg.weight_mode = WeightMode::UniformReal;
  cfg.tolerance = 3.0;
  return cfg;
}

BenchConfig preset_qpbfs_bench() {
  BenchConfig cfg;
  cfg.algorithm = "qpbfs";
  for (int s : {16, 64, 256, 1024}) cfg.sweep.push_back({2 * s, 8 * s, s});
  cfg.trials = 3;
  cfg.weight_mode = WeightMode::Unit;
  cfg.tolerance = 3.0;
  return cfg;
}

BenchConfig preset_approx_diameter_bench() {
  BenchConfig cfg;
  cfg.algorithm = "approx-diameter";
  for (int n : {256, 512, 1024, 2048, 4096}) {
    int s = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    cfg.sweep.push_back({n, 4 * n, s});
  }
  cfg.trials = 3;
  cfg.weight_mode = WeightMode::UniformReal;
  cfg.tolerance = 4.0;
  return cfg;
}

}  // namespace qgraph
