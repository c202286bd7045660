#include "groom/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace groom {

namespace {

std::uint32_t mix(std::uint32_t seed, std::uint32_t stream) {
  std::uint64_t z = (static_cast<std::uint64_t>(seed) << 32) | stream;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return static_cast<std::uint32_t>(z ^ (z >> 31));
}

Topology build_for(const ExperimentConfig& cfg, int n) {
  if (cfg.kind == TreeKind::ArbitraryTree) {
    auto topo = build_topology(load_edge_list(cfg.edgeFile));
    if (topo.node_count() != n)
      throw std::runtime_error("edge-list node count does not match sweep point");
    return topo;
  }
  return build_topology(cfg.kind, n);
}

TrafficSet single_pattern(const TrafficSet& ts, int m) {
  return TrafficSet{ts.n, 1, ts.g, {ts.demands[m]}};
}

void require_valid(const GroomingSolution& sol, const TrafficSet& ts, const Topology& topo,
                   const std::string& what) {
  auto violations = validate(sol, ts, topo);
  if (!violations.empty())
    throw std::runtime_error(what + " failed validation: " + violations.front().message);
}

Fitness plus_dedicated(Fitness f, int dedicated) {
  f.admCount += 2 * dedicated;
  f.wavelengthCount += dedicated;
  return f;
}

const char* kind_name(TreeKind k) {
  switch (k) {
    case TreeKind::Star: return "star";
    case TreeKind::BinaryTree: return "binary";
    default: return "arbitrary";
  }
}

TreeKind kind_from_name(const std::string& s) {
  if (s == "star") return TreeKind::Star;
  if (s == "binary") return TreeKind::BinaryTree;
  if (s == "arbitrary") return TreeKind::ArbitraryTree;
  throw std::invalid_argument("unknown topology kind: " + s);
}

nlohmann::json fitness_json(const Fitness& f) {
  return {{"adm", f.admCount}, {"wavelengths", f.wavelengthCount}};
}

Fitness fitness_from_json(const nlohmann::json& j) {
  return {j.at("adm").get<int>(), j.at("wavelengths").get<int>()};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.nodeSweep.empty() || cfg.granularitySweep.empty() || cfg.patternSweep.empty())
    throw std::invalid_argument("sweep axes must be non-empty");
  ExperimentResult result;
  result.config = cfg;

  for (int n : cfg.nodeSweep) {
    Topology topo = build_for(cfg, n);
    // Extreme patterns fixed per node count so pattern sweeps stay comparable.
    TrafficSet extremes =
        generate(n, 2, 1, mix(cfg.seed, static_cast<std::uint32_t>(n)), cfg.trafficLo,
                 cfg.trafficHi);
    for (int g : cfg.granularitySweep)
      for (int M : cfg.patternSweep) {
        auto t0 = std::chrono::steady_clock::now();
        SweepPoint pt;
        pt.n = n;
        pt.g = g;
        pt.M = M;
        pt.seed = mix(cfg.seed, static_cast<std::uint32_t>(((n * 257 + g) * 257 + M)));

        TrafficSet ts = interpolate(extremes, M, mix(pt.seed, 0xabcdu));
        ts.g = g;
        SplitResult split = split_over_granularity(ts);
        pt.dedicated = split.total_dedicated();
        const TrafficSet& residual = split.residual;

        pt.bounds = compute_bounds(residual, topo);

        Instance inst(residual, topo);
        GaConfig ga = cfg.ga;
        ga.seed = mix(pt.seed, 0x6761u);
        EvolutionResult evo = run(inst, ga, cfg.reuse);
        require_valid(evo.bestSolution, residual, topo, "GA solution");
        pt.ga = plus_dedicated(evo.bestFitness, pt.dedicated);
        pt.gaTraces = evo.fitnessTraces;

        if (cfg.compareReuse) {
          GaConfig ga2 = ga;
          ga2.seed = mix(pt.seed, 0x6e6fu);
          EvolutionResult evo2 = run(inst, ga2, !cfg.reuse);
          require_valid(evo2.bestSolution, residual, topo, "no-reuse GA solution");
          pt.noReuse = plus_dedicated(evo2.bestFitness, pt.dedicated);
        }

        // Static baseline: groom the max-traffic matrix, then check the
        // solution carries every individual pattern.
        TrafficSet maxm = max_matrix(residual);
        Instance maxInst(maxm, topo);
        GaConfig gaBase = ga;
        gaBase.seed = mix(pt.seed, 0x6261u);
        EvolutionResult base = run(maxInst, gaBase, cfg.reuse);
        require_valid(base.bestSolution, maxm, topo, "baseline solution");
        for (int m = 0; m < residual.M; ++m)
          require_valid(base.bestSolution, single_pattern(residual, m), topo,
                        "baseline solution (pattern " + std::to_string(m) + ")");
        pt.baseline = plus_dedicated(base.bestFitness, pt.dedicated);

        pt.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.points.push_back(std::move(pt));
      }
  }
  return result;
}

std::string result_to_json_string(const ExperimentResult& r, bool withTiming) {
  const ExperimentConfig& c = r.config;
  nlohmann::json cfg{{"topology", kind_name(c.kind)},
                     {"edgeFile", c.edgeFile},
                     {"nodes", c.nodeSweep},
                     {"granularity", c.granularitySweep},
                     {"patterns", c.patternSweep},
                     {"trafficLo", c.trafficLo},
                     {"trafficHi", c.trafficHi},
                     {"seed", c.seed},
                     {"reuse", c.reuse},
                     {"compareReuse", c.compareReuse},
                     {"ga",
                      {{"mu", c.ga.mu},
                       {"lambda", c.ga.lambda},
                       {"generations", c.ga.generations},
                       {"crossoverRate", c.ga.crossoverRate},
                       {"mutationRate", c.ga.mutationRate},
                       {"restarts", c.ga.restarts}}}};
  nlohmann::json points = nlohmann::json::array();
  for (const SweepPoint& p : r.points) {
    nlohmann::json traces = nlohmann::json::array();
    for (const auto& trace : p.gaTraces) {
      nlohmann::json t = nlohmann::json::array();
      for (const Fitness& f : trace)
        t.push_back(nlohmann::json::array({f.admCount, f.wavelengthCount}));
      traces.push_back(std::move(t));
    }
    nlohmann::json pj{{"n", p.n},
                      {"g", p.g},
                      {"M", p.M},
                      {"seed", p.seed},
                      {"bounds",
                       {{"wMin", p.bounds.wMin},
                        {"wMax", p.bounds.wMax},
                        {"mMin", p.bounds.mMin},
                        {"mMax", p.bounds.mMax},
                        {"wMaxMethod", p.bounds.wMaxMethod},
                        {"mMaxMethod", p.bounds.mMaxMethod}}},
                      {"ga", fitness_json(p.ga)},
                      {"baseline", fitness_json(p.baseline)},
                      {"dedicated", p.dedicated},
                      {"traces", traces}};
    if (p.noReuse) pj["noReuse"] = fitness_json(*p.noReuse);
    if (withTiming) pj["seconds"] = p.seconds;
    points.push_back(std::move(pj));
  }
  return nlohmann::json{{"config", cfg}, {"points", points}}.dump(2);
}

ExperimentResult result_from_json_string(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  ExperimentResult r;
  const auto& cj = doc.at("config");
  r.config.kind = kind_from_name(cj.at("topology").get<std::string>());
  r.config.edgeFile = cj.at("edgeFile").get<std::string>();
  r.config.nodeSweep = cj.at("nodes").get<std::vector<int>>();
  r.config.granularitySweep = cj.at("granularity").get<std::vector<int>>();
  r.config.patternSweep = cj.at("patterns").get<std::vector<int>>();
  r.config.trafficLo = cj.at("trafficLo").get<int>();
  r.config.trafficHi = cj.at("trafficHi").get<int>();
  r.config.seed = cj.at("seed").get<std::uint32_t>();
  r.config.reuse = cj.at("reuse").get<bool>();
  r.config.compareReuse = cj.at("compareReuse").get<bool>();
  const auto& gj = cj.at("ga");
  r.config.ga.mu = gj.at("mu").get<int>();
  r.config.ga.lambda = gj.at("lambda").get<int>();
  r.config.ga.generations = gj.at("generations").get<int>();
  r.config.ga.crossoverRate = gj.at("crossoverRate").get<double>();
  r.config.ga.mutationRate = gj.at("mutationRate").get<double>();
  r.config.ga.restarts = gj.at("restarts").get<int>();

  for (const auto& pj : doc.at("points")) {
    SweepPoint p;
    p.n = pj.at("n").get<int>();
    p.g = pj.at("g").get<int>();
    p.M = pj.at("M").get<int>();
    p.seed = pj.at("seed").get<std::uint32_t>();
    const auto& bj = pj.at("bounds");
    p.bounds.wMin = bj.at("wMin").get<int>();
    p.bounds.wMax = bj.at("wMax").get<int>();
    p.bounds.mMin = bj.at("mMin").get<int>();
    p.bounds.mMax = bj.at("mMax").get<int>();
    p.bounds.wMaxMethod = bj.at("wMaxMethod").get<std::string>();
    p.bounds.mMaxMethod = bj.at("mMaxMethod").get<std::string>();
    p.ga = fitness_from_json(pj.at("ga"));
    p.baseline = fitness_from_json(pj.at("baseline"));
    if (pj.contains("noReuse")) p.noReuse = fitness_from_json(pj.at("noReuse"));
    p.dedicated = pj.at("dedicated").get<int>();
    if (pj.contains("seconds")) p.seconds = pj.at("seconds").get<double>();
    for (const auto& tj : pj.at("traces")) {
      std::vector<Fitness> trace;
      for (const auto& fj : tj) trace.push_back({fj.at(0).get<int>(), fj.at(1).get<int>()});
      p.gaTraces.push_back(std::move(trace));
    }
    r.points.push_back(std::move(p));
  }
  return r;
}

std::string result_to_csv(const ExperimentResult& r) {
  std::string out = "n,g,M,wMin,wMax,mMin,mMax,gaAdm,gaWl,baseAdm,baseWl,seed,seconds\n";
  char row[256];
  for (const SweepPoint& p : r.points) {
    std::snprintf(row, sizeof(row), "%d,%d,%d,%d,%d,%d,%d,%d,%d,%d,%d,%u,%.3f\n", p.n, p.g, p.M,
                  p.bounds.wMin, p.bounds.wMax, p.bounds.mMin, p.bounds.mMax, p.ga.admCount,
                  p.ga.wavelengthCount, p.baseline.admCount, p.baseline.wavelengthCount, p.seed,
                  p.seconds);
    out += row;
  }
  return out;
}

void export_result(const ExperimentResult& r, const std::string& jsonPath,
                   const std::string& csvPath, bool withTiming) {
  std::ofstream js(jsonPath);
  if (!js) throw std::runtime_error("cannot write " + jsonPath);
  js << result_to_json_string(r, withTiming) << '\n';
  std::ofstream cs(csvPath);
  if (!cs) throw std::runtime_error("cannot write " + csvPath);
  cs << result_to_csv(r);
}

}  // namespace groom
