#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "groom/experiment.hpp"

using namespace groom;

namespace {

ExperimentConfig smoke_config() {
  ExperimentConfig cfg;
  cfg.kind = TreeKind::BinaryTree;
  cfg.nodeSweep = {2};
  cfg.granularitySweep = {16};
  cfg.patternSweep = {1};
  cfg.seed = 5;
  cfg.ga.mu = 4;
  cfg.ga.lambda = 4;
  cfg.ga.generations = 3;
  return cfg;
}

}  // namespace

TEST_CASE("n=2 smoke run completes and sits inside the bounds") {
  ExperimentResult r = run_experiment(smoke_config());
  REQUIRE(r.points.size() == 1);
  const SweepPoint& p = r.points[0];
  CHECK(p.ga.wavelengthCount >= p.bounds.wMin);
  CHECK(p.ga.wavelengthCount <= p.bounds.wMax);
  CHECK(p.ga.admCount >= p.bounds.mMin);
  CHECK(p.ga.admCount <= p.bounds.mMax);
  CHECK(p.baseline.wavelengthCount >= p.bounds.wMin);
  CHECK(p.baseline.wavelengthCount <= p.bounds.wMax);
  CHECK(p.baseline.admCount >= p.bounds.mMin);
  CHECK(p.baseline.admCount <= p.bounds.mMax);
}

TEST_CASE("empty sweep axes are rejected") {
  ExperimentConfig cfg = smoke_config();
  cfg.patternSweep.clear();
  CHECK_THROWS(run_experiment(cfg));
}

TEST_CASE("CSV columns are frozen") {
  ExperimentResult empty;
  empty.config = smoke_config();
  CHECK(result_to_csv(empty) ==
        "n,g,M,wMin,wMax,mMin,mMax,gaAdm,gaWl,baseAdm,baseWl,seed,seconds\n");

  ExperimentConfig cfg = smoke_config();
  cfg.patternSweep = {1, 2};
  cfg.granularitySweep = {16, 24};
  ExperimentResult r = run_experiment(cfg);
  std::string csv = result_to_csv(r);
  size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 5u);  // header + 4 sweep points
}

TEST_CASE("result document round trip") {
  ExperimentConfig cfg = smoke_config();
  cfg.patternSweep = {1, 2};
  cfg.compareReuse = true;
  ExperimentResult r = run_experiment(cfg);
  ExperimentResult back = result_from_json_string(result_to_json_string(r));
  CHECK(result_to_json_string(back) == result_to_json_string(r));
  CHECK(result_to_json_string(back, false) == result_to_json_string(r, false));
  REQUIRE(back.points.size() == r.points.size());
  CHECK(back.points[0].noReuse.has_value());
}

TEST_CASE("identical config and seed give byte-identical untimed documents") {
  ExperimentConfig cfg = smoke_config();
  cfg.nodeSweep = {5};
  cfg.patternSweep = {2};
  std::string a = result_to_json_string(run_experiment(cfg), false);
  std::string b = result_to_json_string(run_experiment(cfg), false);
  CHECK(a == b);
}

TEST_CASE("export writes both files") {
  ExperimentResult r = run_experiment(smoke_config());
  export_result(r, "smoke_out.json", "smoke_out.csv");
  std::ifstream js("smoke_out.json"), cs("smoke_out.csv");
  CHECK(js.good());
  CHECK(cs.good());
  std::remove("smoke_out.json");
  std::remove("smoke_out.csv");
}

TEST_CASE("arbitrary topology needs a readable edge file") {
  ExperimentConfig cfg = smoke_config();
  cfg.kind = TreeKind::ArbitraryTree;
  cfg.edgeFile = "/nonexistent/edges.txt";
  CHECK_THROWS(run_experiment(cfg));
}
