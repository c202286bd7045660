#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groom/bounds.hpp"
#include "groom/evolve.hpp"
#include "groom/grooming.hpp"
#include "groom/topology.hpp"
#include "groom/traffic.hpp"

namespace groom {

struct ExperimentConfig {
  TreeKind kind = TreeKind::Star;
  std::string edgeFile;  // ArbitraryTree only
  std::vector<int> nodeSweep{15};
  std::vector<int> granularitySweep{24};
  std::vector<int> patternSweep{2};
  int trafficLo = 0;
  int trafficHi = 15;
  std::uint32_t seed = 1;
  GaConfig ga;
  bool reuse = true;
  bool compareReuse = false;  // additionally run the no-reuse decoder
};

struct SweepPoint {
  int n = 0, g = 0, M = 0;
  std::uint32_t seed = 0;
  BoundsReport bounds;
  Fitness ga;        // dynamic grooming, dedicated wavelengths included
  Fitness baseline;  // max-traffic matrix groomed statically
  std::optional<Fitness> noReuse;
  int dedicated = 0;  // full wavelengths peeled off by splitting
  double seconds = 0.0;
  std::vector<std::vector<Fitness>> gaTraces;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<SweepPoint> points;
};

// One full sweep per the experiment protocol: for each node count the two
// extreme traffic patterns are generated once and shared across the pattern
// sweep; each point grooms dynamically with the GA, grooms the max-traffic
// matrix as the static baseline, validates every solution (hard error on
// failure) and computes bounds.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Structured JSON document; timing is omitted when withTiming is false so
// identical runs serialize byte-identically.
std::string result_to_json_string(const ExperimentResult& r, bool withTiming = true);
ExperimentResult result_from_json_string(const std::string& text);

// Flat CSV, one row per sweep point. Column order is frozen:
// n,g,M,wMin,wMax,mMin,mMax,gaAdm,gaWl,baseAdm,baseWl,seed,seconds
std::string result_to_csv(const ExperimentResult& r);

void export_result(const ExperimentResult& r, const std::string& jsonPath,
                   const std::string& csvPath, bool withTiming = true);

}  // namespace groom
