#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/sim_config.hpp"

namespace qgraph {

// One sweep point; s is the partial-search budget (qpbfs, approx-diameter)
// and is ignored by algorithms that do not take one.
struct SweepPoint {
  int n = 0;
  int m = 0;
  int s = 0;
};

struct BenchConfig {
  std::string algorithm;  // diameter | radius | qpbfs | approx-diameter
  std::vector<SweepPoint> sweep;
  int trials = 1;
  SimConfig sim;
  WeightMode weight_mode = WeightMode::UniformReal;
  double sample_const = 2.0;  // approx-diameter hitting-set constant
  std::string model;          // cost model to compare against; defaults to algorithm
  double tolerance = 3.0;     // max allowed drift of charged/model across the sweep
};

struct BenchRow {
  int n = 0;
  int m = 0;
  int s = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  double charged_queries = 0.0;
  double charged_time = 0.0;
  std::uint64_t oracle_queries = 0;
  double value = 0.0;
};

struct PointStats {
  SweepPoint point;
  double mean_charged = 0.0;
  double stddev_charged = 0.0;
  double mean_time = 0.0;
  double mean_oracle = 0.0;
  double ratio = 0.0;  // mean_charged / model_value
};

struct ScalingReport {
  std::string model_name;
  double tolerance = 0.0;
  std::vector<PointStats> points;
  double loglog_slope = 0.0;
  double ratio_max_min = 0.0;
  bool pass = false;
};

// Predicted query count for a sweep point under the named cost model.
double model_value(const std::string& model, const SweepPoint& p);

// Run every (point, trial) pair with per-pair derived seeds; deterministic
// for a fixed config.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

// Group rows per sweep point, compare means against the cost model, and fit
// a log-log slope across the sweep.
ScalingReport analyze(const BenchConfig& cfg, const std::vector<BenchRow>& rows);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);
void write_csv_file(const std::string& path, const std::vector<BenchRow>& rows);
void write_scaling_json(std::ostream& out, const ScalingReport& report);
void write_scaling_json_file(const std::string& path, const ScalingReport& report);

// Ready-made sweeps used by the benchmark CLI and the validation suite.
BenchConfig preset_diameter_bench();
BenchConfig preset_qpbfs_bench();
BenchConfig preset_approx_diameter_bench();

}  // namespace qgraph
