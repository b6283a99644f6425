#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qgraph/classical.hpp"
#include "qgraph/gadgets.hpp"
#include "qgraph/graph.hpp"
#include "test_util.hpp"

using namespace qgraph;
using nlohmann::json;
using qtest::TempDir;
using qtest::run_cli;

TEST_CASE("graph generation writes a loadable edge list") {
  TempDir dir;
  const std::string path = dir.file("er.txt");
  auto r = run_cli("--seed 3 gen er --n 10 --m 20 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n=10 m=20") != std::string::npos);
  Graph g = load_graph(path);
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 20);
  CHECK(g.weighted());
  CHECK(is_connected(g));

  // the same seed regenerates the same file
  const std::string again = dir.file("er2.txt");
  run_cli("--seed 3 gen er --n 10 --m 20 --out " + again);
  std::ifstream a(path), b(again);
  const std::string sa((std::istreambuf_iterator<char>(a)),
                       std::istreambuf_iterator<char>());
  const std::string sb((std::istreambuf_iterator<char>(b)),
                       std::istreambuf_iterator<char>());
  CHECK(sa == sb);

  // unweighted and regular variants
  const std::string unit = dir.file("unit.txt");
  CHECK(run_cli("--seed 4 gen er --n 8 --m 12 --unweighted --out " + unit)
            .exit_code == 0);
  CHECK_FALSE(load_graph(unit).weighted());
  const std::string reg = dir.file("reg.txt");
  CHECK(run_cli("--seed 5 gen reg --n 16 --degree 4 --out " + reg).exit_code == 0);
  Graph rg = load_graph(reg);
  for (VertexId v = 0; v < 16; ++v) CHECK(degree(rg, v) == 4);
}

TEST_CASE("gadget generation writes graph plus sidecar") {
  TempDir dir;
  const std::string sparse = dir.file("sparse.txt");
  auto r = run_cli("--seed 7 gen sparse-gadget --d 5 --width 3 --out " + sparse);
  CHECK(r.exit_code == 0);
  GadgetDescriptor gd = load_gadget(sparse);
  CHECK(gd.kind == GadgetKind::SparseLayered);
  CHECK(gd.d == 5);
  CHECK(gd.width == 3);

  const std::string dense = dir.file("dense.txt");
  CHECK(run_cli("--seed 8 gen dense-gadget --n 12 --out " + dense).exit_code == 0);
  CHECK(load_gadget(dense).kind == GadgetKind::DensePlanted);

  const std::string circle = dir.file("circle.txt");
  CHECK(run_cli("--seed 9 gen circle-gadget --d 6 --width 2 --out " + circle)
            .exit_code == 0);
  CHECK(load_gadget(circle).kind == GadgetKind::RadiusCircle);
}

TEST_CASE("metric runs emit coherent json") {
  TempDir dir;
  const std::string path = dir.file("g.txt");
  REQUIRE(run_cli("--seed 11 gen er --n 14 --m 30 --out " + path).exit_code == 0);
  Graph g = load_graph(path);
  auto brute = exact_metrics_bruteforce(g);

  {
    auto r = run_cli("run diameter --graph " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["schema"] == 1);
    CHECK(j["algorithm"] == "diameter");
    CHECK(j["value"].get<double>() == doctest::Approx(brute.diameter).epsilon(1e-9));
    CHECK(j["config"]["mode"] == "idealized");
    CHECK(j["ledger"]["charged_queries"].get<double>() > 0.0);
    CHECK(j["ledger"]["oracle_queries"].get<std::uint64_t>() > 0);
    CHECK(j["ledger"]["per_subroutine"].contains("diameter_search"));
    // the reported witness is a real path of the stated weight
    PathResult w;
    w.from = j["witness"]["from"].get<VertexId>();
    w.to = j["witness"]["to"].get<VertexId>();
    w.total_weight = j["witness"]["total_weight"].get<double>();
    for (const auto& v : j["witness"]["vertices"]) w.vertices.push_back(v.get<VertexId>());
    CHECK(validate_path(g, w));
    CHECK(w.total_weight == doctest::Approx(brute.diameter).epsilon(1e-9));
  }
  {
    auto r = run_cli("run radius --graph " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["value"].get<double>() == doctest::Approx(brute.radius).epsilon(1e-9));
  }
  {
    auto r = run_cli("run ecc --graph " + path + " --source 3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["source"] == 3);
    CHECK(j["value"].get<double>() == doctest::Approx(brute.ecc[3]).epsilon(1e-9));
  }
  {
    auto r = run_cli("run brute --graph " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["value"].get<double>() == doctest::Approx(brute.diameter).epsilon(1e-9));
    CHECK(j["radius"].get<double>() == doctest::Approx(brute.radius).epsilon(1e-9));
    CHECK(j.contains("radius_witness"));
  }
  {
    auto r = run_cli("--seed 21 run approx-diameter --graph " + path + " --s 4");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["s"] == 4);
    CHECK(j["value"].get<double>() <= brute.diameter + 1e-9);
    CHECK(j.contains("w_vertex"));
    CHECK(j.contains("sample_const"));
  }
  {
    auto r = run_cli("run acim --graph " + path + " --s 4");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["value"].get<double>() <= brute.diameter + 1e-9);
    CHECK(j["value"].get<double>() >= std::floor(2.0 * brute.diameter / 3.0) - 1e-9);
  }
  {
    auto r = run_cli("--seed 22 run rw --graph " + path + " --s 4");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["value"].get<double>() <= brute.diameter + 1e-9);
  }
}

TEST_CASE("runs are deterministic per seed and honor the mode flag") {
  TempDir dir;
  const std::string path = dir.file("g.txt");
  REQUIRE(run_cli("--seed 31 gen er --n 20 --m 50 --out " + path).exit_code == 0);
  auto a = run_cli("--seed 5 --mode stochastic run diameter --graph " + path);
  auto b = run_cli("--seed 5 --mode stochastic run diameter --graph " + path);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  json j = json::parse(a.output);
  CHECK(j["config"]["mode"] == "stochastic");
  CHECK(j["config"]["seed"] == 5);
  // stochastic diameter never exceeds the idealized value
  auto ideal = run_cli("run diameter --graph " + path);
  json ji = json::parse(ideal.output);
  CHECK(j["value"].get<double>() <= ji["value"].get<double>() + 1e-9);
  // global knobs land in the echoed config
  auto c = run_cli("--delta 0.2 --charge-const 2 run diameter --graph " + path);
  json jc = json::parse(c.output);
  CHECK(jc["config"]["delta"].get<double>() == doctest::Approx(0.2));
  CHECK(jc["config"]["charge_const"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("gadget verification succeeds honestly and fails on tampering") {
  TempDir dir;
  const std::string path = dir.file("gadget.txt");
  REQUIRE(run_cli("--seed 13 gen sparse-gadget --d 6 --width 2 --out " + path)
              .exit_code == 0);
  auto ok = run_cli("verify --graph " + path);
  REQUIRE(ok.exit_code == 0);
  json j = json::parse(ok.output);
  CHECK(j["verified"] == true);
  CHECK(j["kind"] == "sparse-layered");
  CHECK(j["algorithm"] == "ecc");

  // tamper with the recorded minima: the verifier must notice
  GadgetDescriptor gd = load_gadget(path);
  gd.gap_minima[1] += 1e-6;
  save_gadget(path, gd);
  auto bad = run_cli("verify --graph " + path);
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.output)["verified"] == false);

  const std::string dense = dir.file("dense.txt");
  REQUIRE(run_cli("--seed 14 gen dense-gadget --n 10 --out " + dense).exit_code == 0);
  auto okd = run_cli("verify --graph " + dense);
  CHECK(okd.exit_code == 0);
  CHECK(json::parse(okd.output)["algorithm"] == "diameter");

  const std::string circle = dir.file("circle.txt");
  REQUIRE(run_cli("--seed 15 gen circle-gadget --d 4 --width 2 --out " + circle)
              .exit_code == 0);
  auto okc = run_cli("verify --graph " + circle);
  CHECK(okc.exit_code == 0);
  CHECK(json::parse(okc.output)["algorithm"] == "radius");
}

TEST_CASE("benchmark subcommand reports scaling and writes files") {
  TempDir dir;
  {
    auto r = run_cli(
        "--seed 2 bench --algorithm diameter --point 12,24 --point 16,32 "
        "--trials 2 --tolerance 100");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["pass"] == true);
    CHECK(j["points"].size() == 2);
  }
  {
    const std::string out = dir.file("rows.csv");
    auto r = run_cli(
        "--seed 2 bench --algorithm qpbfs --point 32,128,8 --trials 2 "
        "--tolerance 100 --out " + out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("pass=") != std::string::npos);
    std::ifstream csv(out);
    REQUIRE(csv.good());
    std::string line;
    std::getline(csv, line);
    CHECK(line.rfind("# generated ", 0) == 0);
    std::ifstream rep(out + ".scaling.json");
    REQUIRE(rep.good());
    json j = json::parse(rep);
    CHECK(j["model"] == "qpbfs");
  }
}

TEST_CASE("error paths exit with distinct codes") {
  TempDir dir;
  // unknown subcommand: argument parse failure
  CHECK(run_cli("frobnicate").exit_code == 2);
  // missing required option
  CHECK(run_cli("gen er --n 5").exit_code == 2);
  // missing input file
  {
    auto r = run_cli("run diameter --graph " + dir.file("absent.txt"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error:") != std::string::npos);
  }
  // disconnected input is reported by name
  {
    const std::string path = dir.file("split.txt");
    Graph split(4, {{0, 1, 1.0}, {2, 3, 1.0}}, false);
    save_graph(path, split);
    auto r = run_cli("run diameter --graph " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("graph not connected") != std::string::npos);
  }
  // verify on a plain graph without a sidecar
  {
    const std::string path = dir.file("plain.txt");
    save_graph(path, Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}, false));
    CHECK(run_cli("verify --graph " + path).exit_code == 2);
  }
  // help exits cleanly
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("run --help").exit_code == 0);
}
