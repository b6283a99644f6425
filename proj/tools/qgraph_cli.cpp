#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgraph/bench.hpp"
#include "qgraph/classical.hpp"
#include "qgraph/gadgets.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/quantum_metrics.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/sim_config.hpp"

namespace {

using nlohmann::json;
using namespace qgraph;

struct GlobalOpts {
  std::uint64_t seed = 1;
  std::string mode = "idealized";
  double delta = 0.1;
  double charge_const = 1.0;
  double sssp_polylog_exp = 1.5;
  std::string out;
};

SimConfig make_sim(const GlobalOpts& go) {
  SimConfig cfg;
  cfg.fidelity =
      go.mode == "stochastic" ? Fidelity::Stochastic : Fidelity::Idealized;
  cfg.delta = go.delta;
  cfg.charge_const = go.charge_const;
  cfg.sssp_polylog_exp = go.sssp_polylog_exp;
  cfg.seed = go.seed;
  cfg.validate();
  return cfg;
}

json config_json(const SimConfig& cfg) {
  return json{{"mode", cfg.stochastic() ? "stochastic" : "idealized"},
              {"delta", cfg.delta},
              {"lambda", cfg.lambda},
              {"qsearch_cutoff_const", cfg.qsearch_cutoff_const},
              {"sssp_polylog_exp", cfg.sssp_polylog_exp},
              {"charge_const", cfg.charge_const},
              {"seed", cfg.seed}};
}

json witness_json(const PathResult& p) {
  return json{{"from", p.from},
              {"to", p.to},
              {"total_weight", p.total_weight},
              {"vertices", p.vertices}};
}

json ledger_json(const QueryLedger& ledger) {
  json per = json::object();
  for (const auto& [name, charge] : ledger.per_subroutine()) {
    per[name] = json{{"queries", charge.queries}, {"time", charge.time}};
  }
  return json{{"oracle_queries", ledger.oracle_queries()},
              {"charged_queries", ledger.charged_queries()},
              {"charged_time", ledger.charged_time()},
              {"per_subroutine", per}};
}

void emit(const GlobalOpts& go, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (go.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(go.out);
  if (!out) throw IoError("cannot write report: " + go.out);
  out << text;
  if (!out) throw IoError("failed writing report: " + go.out);
}

void emit_run_report(const GlobalOpts& go, const Graph& g,
                     const std::string& algorithm, Weight value,
                     const PathResult& witness, const QueryLedger& ledger,
                     const SimConfig& cfg, json extra = json::object()) {
  if (!validate_path(g, witness)) {
    throw std::runtime_error("internal error: witness failed validation");
  }
  json j{{"schema", 1},
         {"algorithm", algorithm},
         {"value", value},
         {"witness", witness_json(witness)},
         {"ledger", ledger_json(ledger)},
         {"seed", cfg.seed},
         {"config", config_json(cfg)}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(go, j);
}

int default_budget(const Graph& g, int s) {
  if (s > 0) return s;
  return static_cast<int>(
      std::ceil(std::sqrt(static_cast<double>(g.vertex_count()))));
}

SweepPoint parse_point(const std::string& text) {
  SweepPoint p;
  int got = std::sscanf(text.c_str(), "%d,%d,%d", &p.n, &p.m, &p.s);
  if (got < 2) throw InvalidParam("bad sweep point (want n,m[,s]): " + text);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts go;
  int exit_code = 0;

  CLI::App app{"query-model laboratory for graph metrics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", go.seed, "rng seed");
  app.add_option("--mode", go.mode, "simulation fidelity")
      ->check(CLI::IsMember({"idealized", "stochastic"}));
  app.add_option("--delta", go.delta, "tolerated failure probability");
  app.add_option("--charge-const", go.charge_const, "charge leading constant");
  app.add_option("--sssp-polylog-exp", go.sssp_polylog_exp,
                 "log exponent of the sssp charge");
  app.add_option("--out", go.out, "output path");

  // gen -------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a graph or gadget instance");
  gen->require_subcommand(1);
  gen->fallthrough();

  auto print_graph_line = [](const Graph& g) {
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
  };
  auto require_out = [&go]() {
    if (go.out.empty()) throw InvalidParam("gen requires --out");
  };

  int er_n = 0, er_m = 0;
  bool er_unweighted = false;
  auto* gen_er = gen->add_subcommand("er", "connected random graph");
  gen_er->fallthrough();
  gen_er->add_option("--n", er_n, "vertices")->required();
  gen_er->add_option("--m", er_m, "edges")->required();
  gen_er->add_flag("--unweighted", er_unweighted, "unit weights");
  gen_er->callback([&] {
    require_out();
    Rng rng(go.seed);
    Graph g = gen_connected_random(
        er_n, er_m, er_unweighted ? WeightMode::Unit : WeightMode::UniformReal,
        rng);
    save_graph(go.out, g);
    print_graph_line(g);
  });

  int reg_n = 0, reg_deg = 0;
  bool reg_weighted = false;
  auto* gen_reg = gen->add_subcommand("reg", "random regular circulant graph");
  gen_reg->fallthrough();
  gen_reg->add_option("--n", reg_n, "vertices")->required();
  gen_reg->add_option("--degree", reg_deg, "even degree")->required();
  gen_reg->add_flag("--weighted", reg_weighted, "uniform real weights");
  gen_reg->callback([&] {
    require_out();
    Rng rng(go.seed);
    Graph g = gen_regular(
        reg_n, reg_deg, reg_weighted ? WeightMode::UniformReal : WeightMode::Unit,
        rng);
    save_graph(go.out, g);
    print_graph_line(g);
  });

  int sg_d = 0, sg_width = 0;
  double sg_eps = kDefaultGadgetEpsilon;
  auto* gen_sparse = gen->add_subcommand("sparse-gadget", "layered s-t instance");
  gen_sparse->fallthrough();
  gen_sparse->add_option("--d", sg_d, "columns")->required();
  gen_sparse->add_option("--width", sg_width, "vertices per column")->required();
  gen_sparse->add_option("--epsilon", sg_eps, "near-zero weight");
  gen_sparse->callback([&] {
    require_out();
    GadgetDescriptor gd = gen_sparse_gadget(sg_d, sg_width, go.seed, sg_eps);
    save_gadget(go.out, gd);
    print_graph_line(gd.graph);
  });

  int dg_n = 0;
  auto* gen_dense = gen->add_subcommand("dense-gadget", "planted-path instance");
  gen_dense->fallthrough();
  gen_dense->add_option("--n", dg_n, "vertices")->required();
  gen_dense->callback([&] {
    require_out();
    GadgetDescriptor gd = gen_dense_gadget(dg_n, go.seed);
    save_gadget(go.out, gd);
    print_graph_line(gd.graph);
  });

  int cg_d = 0, cg_width = 0;
  double cg_eps = kDefaultGadgetEpsilon;
  auto* gen_circle = gen->add_subcommand("circle-gadget", "ring radius instance");
  gen_circle->fallthrough();
  gen_circle->add_option("--d", cg_d, "columns (even)")->required();
  gen_circle->add_option("--width", cg_width, "vertices per column")->required();
  gen_circle->add_option("--epsilon", cg_eps, "near-zero weight");
  gen_circle->callback([&] {
    require_out();
    GadgetDescriptor gd = gen_radius_circle_gadget(cg_d, cg_width, go.seed, cg_eps);
    save_gadget(go.out, gd);
    print_graph_line(gd.graph);
  });

  // run -------------------------------------------------------------------
  auto* run = app.add_subcommand("run", "run an algorithm on a graph file");
  run->require_subcommand(1);
  run->fallthrough();

  std::string run_graph;
  int run_source = 0;
  int run_s = 0;
  double run_sample_const = 2.0;

  auto add_graph_opt = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--graph", run_graph, "edge-list file")->required();
  };

  auto* run_ecc = run->add_subcommand("ecc", "eccentricity of one vertex");
  add_graph_opt(run_ecc);
  run_ecc->add_option("--source", run_source, "vertex");
  run_ecc->callback([&] {
    Graph g = load_graph(run_graph);
    SimConfig cfg = make_sim(go);
    QueryLedger ledger;
    EccResult r = q_eccentricity(g, run_source, cfg, ledger);
    emit_run_report(go, g, "ecc", r.value, r.path, ledger, cfg,
                    json{{"source", run_source}});
  });

  auto* run_diam = run->add_subcommand("diameter", "exact diameter");
  add_graph_opt(run_diam);
  run_diam->callback([&] {
    Graph g = load_graph(run_graph);
    SimConfig cfg = make_sim(go);
    QueryLedger ledger;
    EccResult r = q_diameter(g, cfg, ledger);
    emit_run_report(go, g, "diameter", r.value, r.path, ledger, cfg);
  });

  auto* run_rad = run->add_subcommand("radius", "exact radius");
  add_graph_opt(run_rad);
  run_rad->callback([&] {
    Graph g = load_graph(run_graph);
    SimConfig cfg = make_sim(go);
    QueryLedger ledger;
    EccResult r = q_radius(g, cfg, ledger);
    emit_run_report(go, g, "radius", r.value, r.path, ledger, cfg);
  });

  auto* run_approx = run->add_subcommand("approx-diameter", "2/3 approximation");
  add_graph_opt(run_approx);
  run_approx->add_option("--s", run_s, "partial-search budget (default ceil(sqrt(n)))");
  run_approx->add_option("--sample-const", run_sample_const, "hitting-set constant");
  run_approx->callback([&] {
    Graph g = load_graph(run_graph);
    SimConfig cfg = make_sim(go);
    QueryLedger ledger;
    Rng rng(cfg.seed);
    int s = default_budget(g, run_s);
    ApproxResult r = q_approx_diameter(g, s, run_sample_const, cfg, ledger, rng);
    emit_run_report(go, g, "approx-diameter", r.estimate, r.witness, ledger, cfg,
                    json{{"s", s},
                         {"sample_const", run_sample_const},
                         {"w_vertex", r.w_vertex}});
  });

  auto* run_acim = run->add_subcommand("acim", "classical 2/3 approximation");
  add_graph_opt(run_acim);
  run_acim->add_option("--s", run_s, "partial-search budget (default ceil(sqrt(n)))");
  run_acim->callback([&] {
    Graph g = load_graph(run_graph);
    SimConfig cfg = make_sim(go);
    QueryLedger ledger;
    int s = default_budget(g, run_s);
    ApproxEstimate r = approx_diameter_acim(g, s);
    emit_run_report(go, g, "acim", r.estimate, r.witness, ledger, cfg,
                    json{{"s", s}});
  });

  auto* run_rw = run->add_subcommand("rw", "classical randomized 2/3 approximation");
  add_graph_opt(run_rw);
  run_rw->add_option("--s", run_s, "partial-search budget (default ceil(sqrt(n)))");
  run_rw->add_option("--sample-const", run_sample_const, "hitting-set constant");
  run_rw->callback([&] {
    Graph g = load_graph(run_graph);
    SimConfig cfg = make_sim(go);
    QueryLedger ledger;
    Rng rng(cfg.seed);
    int s = default_budget(g, run_s);
    ApproxEstimate r = approx_diameter_rw(g, s, run_sample_const, rng);
    emit_run_report(go, g, "rw", r.estimate, r.witness, ledger, cfg,
                    json{{"s", s}, {"sample_const", run_sample_const}});
  });

  auto* run_brute = run->add_subcommand("brute", "classical exact metrics");
  add_graph_opt(run_brute);
  run_brute->callback([&] {
    Graph g = load_graph(run_graph);
    SimConfig cfg = make_sim(go);
    QueryLedger ledger;
    MetricsReport rep = exact_metrics_bruteforce(g);
    emit_run_report(go, g, "brute", rep.diameter, rep.diameter_path, ledger, cfg,
                    json{{"radius", rep.radius},
                         {"radius_witness", witness_json(rep.radius_path)}});
  });

  // bench -----------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "seeded scaling experiments");
  bench->fallthrough();
  std::string bench_preset;
  std::string bench_algorithm;
  std::string bench_model;
  std::vector<std::string> bench_points;
  int bench_trials = -1;
  double bench_tolerance = -1.0;
  double bench_sample_const = -1.0;
  bool bench_unweighted = false;
  bench->add_option("--preset", bench_preset, "ready-made sweep")
      ->check(CLI::IsMember({"diameter", "qpbfs", "approx-diameter"}));
  bench->add_option("--algorithm", bench_algorithm,
                    "diameter|radius|qpbfs|approx-diameter");
  bench->add_option("--point", bench_points, "sweep point n,m[,s] (repeatable)");
  bench->add_option("--trials", bench_trials, "trials per point");
  bench->add_option("--tolerance", bench_tolerance, "max ratio drift");
  bench->add_option("--model", bench_model, "cost model to compare against");
  bench->add_option("--sample-const", bench_sample_const, "hitting-set constant");
  bench->add_flag("--unweighted", bench_unweighted, "unit weights");
  bench->callback([&] {
    BenchConfig bc;
    if (bench_preset == "diameter") {
      bc = preset_diameter_bench();
    } else if (bench_preset == "qpbfs") {
      bc = preset_qpbfs_bench();
    } else if (bench_preset == "approx-diameter") {
      bc = preset_approx_diameter_bench();
    } else {
      if (bench_algorithm.empty())
        throw InvalidParam("bench needs --preset or --algorithm");
      bc.algorithm = bench_algorithm;
      for (const auto& text : bench_points) bc.sweep.push_back(parse_point(text));
      if (bc.sweep.empty()) throw InvalidParam("bench needs at least one --point");
      bc.trials = 1;
    }
    if (!bench_algorithm.empty()) bc.algorithm = bench_algorithm;
    if (bench_trials > 0) bc.trials = bench_trials;
    if (bench_tolerance > 0.0) bc.tolerance = bench_tolerance;
    if (!bench_model.empty()) bc.model = bench_model;
    if (bench_sample_const > 0.0) bc.sample_const = bench_sample_const;
    if (bench_unweighted) bc.weight_mode = WeightMode::Unit;
    bc.sim = make_sim(go);
    std::vector<BenchRow> rows = run_bench(bc);
    ScalingReport rep = analyze(bc, rows);
    if (!go.out.empty()) {
      write_csv_file(go.out, rows);
      write_scaling_json_file(go.out + ".scaling.json", rep);
      std::cout << "pass=" << (rep.pass ? "true" : "false")
                << " ratio_max_min=" << rep.ratio_max_min
                << " loglog_slope=" << rep.loglog_slope << "\n";
    } else {
      write_scaling_json(std::cout, rep);
    }
    exit_code = rep.pass ? 0 : 1;
  });

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a gadget instance end to end");
  verify->fallthrough();
  std::string verify_graph;
  verify->add_option("--graph", verify_graph, "gadget edge-list file")->required();
  verify->callback([&] {
    GadgetDescriptor gd = load_gadget(verify_graph);
    SimConfig cfg = make_sim(go);
    QueryLedger ledger;
    std::string algorithm;
    Weight value = 0.0;
    PathResult witness;
    if (gd.kind == GadgetKind::SparseLayered) {
      algorithm = "ecc";
      EccResult r = q_eccentricity(gd.graph, gd.s_vertex, cfg, ledger);
      value = r.value;
      witness = r.path;
    } else if (gd.kind == GadgetKind::DensePlanted) {
      algorithm = "diameter";
      EccResult r = q_diameter(gd.graph, cfg, ledger);
      value = r.value;
      witness = r.path;
    } else {
      algorithm = "radius";
      EccResult r = q_radius(gd.graph, cfg, ledger);
      value = r.value;
      witness = r.path;
    }
    bool ok = verify_reduction(gd, value, witness);
    json j{{"schema", 1},
           {"kind", gadget_kind_name(gd.kind)},
           {"algorithm", algorithm},
           {"value", value},
           {"verified", ok},
           {"ledger", ledger_json(ledger)}};
    emit(go, j);
    exit_code = ok ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
