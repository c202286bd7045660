// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are reduced relative to the full experiment protocol
// where a criterion allows it; every tolerance is pinned here.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "groom/bounds.hpp"
#include "groom/evolve.hpp"
#include "groom/experiment.hpp"
#include "groom/grooming.hpp"
#include "groom/topology.hpp"
#include "groom/traffic.hpp"

using namespace groom;

namespace {

int g_failures = 0;
long g_traces_checked = 0;
bool g_trace_monotone = true;

void report(int id, const char* what, bool pass, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

// Wraps the GA so every fitness trace is monotonicity-checked (criterion 8).
EvolutionResult run_ga(const Instance& inst, const GaConfig& cfg, bool reuse) {
  EvolutionResult r = run(inst, cfg, reuse);
  for (const auto& trace : r.fitnessTraces) {
    ++g_traces_checked;
    for (size_t i = 1; i < trace.size(); ++i)
      if (trace[i - 1].better_than(trace[i])) g_trace_monotone = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive branch-and-bound: true minimum ADM count for strictly
// nonblocking grooming on tiny instances. Exhaustive below the incumbent, so
// initializing the incumbent at (upper bound + 1) yields the exact minimum up
// to that bound.
class AdmOracle {
 public:
  AdmOracle(const Instance& inst, int incumbent) : inst_(inst), best_(incumbent) {
    for (int d = 0; d < inst.demand_count(); ++d)
      if (!inst.zero(d)) demands_.push_back(d);
    // Larger demands first: capacity conflicts surface early.
    std::sort(demands_.begin(), demands_.end(), [&](int a, int b) {
      int va = 0, vb = 0;
      for (int m = 0; m < inst.patterns(); ++m) {
        va = std::max(va, inst.value(a, m));
        vb = std::max(vb, inst.value(b, m));
      }
      return va > vb;
    });
  }

  int solve() {
    std::vector<WavelengthState> waves;
    recurse(0, waves, 0);
    return best_;
  }

 private:
  // Every node touched by a remaining demand but holding no ADM anywhere
  // needs at least one more ADM.
  int lower_remaining(size_t idx, const std::vector<WavelengthState>& waves) const {
    std::vector<char> covered(inst_.topology().node_count(), 0), needed(covered);
    for (const auto& w : waves)
      for (int v = 0; v < inst_.topology().node_count(); ++v)
        if (w.drops_at(v)) covered[v] = 1;
    int extra = 0;
    for (size_t i = idx; i < demands_.size(); ++i)
      for (int v : {inst_.src(demands_[i]), inst_.dst(demands_[i])})
        if (!covered[v] && !needed[v]) {
          needed[v] = 1;
          ++extra;
        }
    return extra;
  }

  void recurse(size_t idx, std::vector<WavelengthState>& waves, int adm) {
    if (adm + lower_remaining(idx, waves) >= best_) return;
    if (idx == demands_.size()) {
      best_ = adm;
      return;
    }
    int d = demands_[idx];
    // Existing wavelengths, cheapest ADM growth first.
    std::vector<std::pair<int, int>> options;  // (new adms, wavelength)
    for (size_t w = 0; w < waves.size(); ++w)
      if (waves[w].can_assign(d, 2)) {
        int grow = (waves[w].drops_at(inst_.src(d)) ? 0 : 1) +
                   (waves[w].drops_at(inst_.dst(d)) ? 0 : 1);
        options.emplace_back(grow, static_cast<int>(w));
      }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto [grow, w] : options) {
      WavelengthState saved = waves[w];
      waves[w].assign(d);
      recurse(idx + 1, waves, adm + grow);
      waves[w] = saved;
    }
    // One fresh wavelength; more than one open empty wavelength is symmetric.
    waves.emplace_back(inst_);
    waves.back().assign(d);
    recurse(idx + 1, waves, adm + 2);
    waves.pop_back();
  }

  const Instance& inst_;
  std::vector<int> demands_;
  int best_;
};

// ---------------------------------------------------------------------------

void criterion1() {
  bool ok = w_max_binary(15) == 56 && w_max_binary(8) == 16 && w_max_star(15) == 14;
  for (int n = 3; n <= 200 && ok; ++n)
    ok = w_max_tree(n, 2) == w_max_binary(n) && w_max_tree(n, n - 1) == n - 1;
  report(1, "closed-form wavelength upper bounds, exact", ok);
}

void criterion2() {
  int instances = 0, violations = 0;
  int wOver = 0, wUnder = 0, mOver = 0, mUnder = 0, invalid = 0;
  std::string firstBad;
  GaConfig ga;
  ga.mu = 30;
  ga.lambda = 30;
  ga.generations = 50;
  for (std::uint32_t seed : {11u, 12u})
    for (int n : {5, 9, 15})
      for (TreeKind kind : {TreeKind::Star, TreeKind::BinaryTree})
        for (int g : {16, 24, 48})
          for (int M : {1, 2, 4}) {
            Topology topo = build_topology(kind, n);
            TrafficSet ts = generate(n, M, g, seed * 7919u + n * 131u + g * 17u + M);
            ++instances;
            BoundsReport b = compute_bounds(ts, topo);
            Instance inst(ts, topo);
            ga.seed = seed * 1000003u + instances;
            auto check = [&](const Fitness& f, const GroomingSolution& sol,
                             const TrafficSet& against, const BoundsReport& b,
                             const char* tag) {
              if (f.wavelengthCount > b.wMax) ++wOver;
              if (f.wavelengthCount < b.wMin) ++wUnder;
              if (f.admCount > b.mMax) ++mOver;
              if (f.admCount < b.mMin) ++mUnder;
              if (!validate(sol, against, topo).empty()) ++invalid;
              bool ok = f.wavelengthCount >= b.wMin && f.wavelengthCount <= b.wMax &&
                        f.admCount >= b.mMin && f.admCount <= b.mMax &&
                        validate(sol, against, topo).empty();
              if (!ok) {
                ++violations;
                if (firstBad.empty())
                  firstBad = std::string(tag) + " n=" + std::to_string(n) + " g=" +
                             std::to_string(g) + " M=" + std::to_string(M) + " W=" +
                             std::to_string(f.wavelengthCount) + " adm=" +
                             std::to_string(f.admCount) + " [" + std::to_string(b.wMin) + "," +
                             std::to_string(b.wMax) + "]x[" + std::to_string(b.mMin) + "," +
                             std::to_string(b.mMax) + "]";
              }
            };
            EvolutionResult evo = run_ga(inst, ga, true);
            check(evo.bestFitness, evo.bestSolution, ts, b, "ga");
            // The baseline grooms the max matrix, so it is judged against
            // the bounds of that (static) instance.
            TrafficSet mx = max_matrix(ts);
            Instance mi(mx, topo);
            BoundsReport mb = compute_bounds(mx, topo);
            EvolutionResult base = run_ga(mi, ga, true);
            check(base.bestFitness, base.bestSolution, mx, mb, "baseline");
          }
  report(2, "bounds sandwich + validation over random instances", violations == 0,
         std::to_string(instances) + " instances, " + std::to_string(violations) +
             " violations (wOver=" + std::to_string(wOver) + " wUnder=" + std::to_string(wUnder) +
             " mOver=" + std::to_string(mOver) + " mUnder=" + std::to_string(mUnder) +
             " invalid=" + std::to_string(invalid) + ")" +
             (firstBad.empty() ? "" : "; first: " + firstBad));
}

void criterion3() {
  GaConfig ga;
  ga.mu = 50;
  ga.lambda = 50;
  ga.generations = 100;
  ga.restarts = 5;
  bool ok = true;
  std::string detail;
  for (TreeKind kind : {TreeKind::Star, TreeKind::BinaryTree}) {
    int n = kind == TreeKind::Star ? 4 : 5;
    for (int M : {1, 2}) {
      int matches = 0, fewer = 0;
      for (int s = 0; s < 10; ++s) {
        Topology topo = build_topology(kind, n);
        TrafficSet ts = generate(n, M, 16, 30000u + s * 101u + n * 7u + M, 0, 3);
        Instance inst(ts, topo);
        ga.seed = 5000u + s;
        EvolutionResult evo = run_ga(inst, ga, true);
        int gaAdm = evo.bestFitness.admCount;
        int oracleAdm = AdmOracle(inst, gaAdm + 1).solve();
        if (gaAdm == oracleAdm) ++matches;
        if (gaAdm < oracleAdm) ++fewer;
      }
      bool groupOk = matches >= 9 && fewer == 0;
      ok = ok && groupOk;
      detail += (kind == TreeKind::Star ? "star" : "tree");
      detail += " M=" + std::to_string(M) + ": " + std::to_string(matches) + "/10  ";
    }
  }
  report(3, "GA matches the exact branch-and-bound ADM optimum", ok, detail);
}

void criterion4() {
  // Reduced budget, so the band around the reported 115 ADMs / 26
  // wavelengths widens to +-25%.
  GaConfig ga;
  ga.mu = 50;
  ga.lambda = 50;
  ga.generations = 120;
  Topology topo = build_topology(TreeKind::BinaryTree, 15);
  double sumReuse = 0, sumNoReuse = 0;
  Fitness best{1 << 30, 1 << 30};
  for (int s = 0; s < 10; ++s) {
    TrafficSet ts = generate(15, 2, 24, 60000u + s);
    Instance inst(ts, topo);
    ga.seed = 7000u + s;
    EvolutionResult withReuse = run_ga(inst, ga, true);
    ga.seed = 8000u + s;
    EvolutionResult without = run_ga(inst, ga, false);
    sumReuse += withReuse.bestFitness.admCount;
    sumNoReuse += without.bestFitness.admCount;
    if (withReuse.bestFitness.better_than(best)) best = withReuse.bestFitness;
  }
  bool ordering = sumReuse <= sumNoReuse;
  bool admBand = best.admCount >= 115 * 0.75 && best.admCount <= 115 * 1.25;
  bool wlBand = best.wavelengthCount >= 26 * 0.75 && best.wavelengthCount <= 26 * 1.25;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "mean adm reuse=%.1f no-reuse=%.1f; best reuse=(%d,%d) vs reference (115,26) +-25%%",
                sumReuse / 10, sumNoReuse / 10, best.admCount, best.wavelengthCount);
  report(4, "wavelength reuse benefit and published reference band", ordering && admBand && wlBand,
         buf);
}

void criterion5() {
  const std::vector<int> gs{16, 24, 48, 72, 96};
  Topology topo = build_topology(TreeKind::Star, 15);
  GaConfig ga;
  ga.mu = 40;
  ga.lambda = 40;
  ga.generations = 80;
  ga.restarts = 2;

  // Per seed: find the smallest tested g with m_max == m_min; at every
  // collapsed g from there on, the GA must reach m_min (the proven optimum).
  // A seed passes when it collapses somewhere and never misses m_min at a
  // collapsed g; at least 8 of 10 seeds must pass.
  int passes = 0;
  int firstCollapse = 0;
  std::string detail;
  for (int s = 0; s < 10; ++s) {
    bool collapsed = false, allHit = true;
    int cg = -1;
    for (int g : gs) {
      TrafficSet ts = generate(15, 2, g, 90000u + s);
      if (m_max(ts, topo) != m_min(ts, topo)) continue;
      if (!collapsed) cg = g;
      collapsed = true;
      Instance inst(ts, topo);
      ga.seed = 95000u + s * 13u + g;
      EvolutionResult evo = run_ga(inst, ga, true);
      if (evo.bestFitness.admCount != m_min(ts, topo)) allHit = false;
    }
    if (collapsed && allHit) {
      ++passes;
      firstCollapse = firstCollapse == 0 ? cg : std::min(firstCollapse, cg);
    }
    detail += std::to_string(s) + (collapsed ? (allHit ? "+" : "-") : "x");
  }
  report(5, "large-g collapse: m_max==m_min and GA reaches m_min", passes >= 8,
         std::to_string(passes) + "/10 seeds (earliest collapse g=" +
             std::to_string(firstCollapse) + "; per seed: " + detail + ")");
}

void criterion6() {
  int bad = 0;
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    TreeKind kind = trial % 2 ? TreeKind::Star : TreeKind::BinaryTree;
    int n = 4 + trial % 8;
    int M = 1 + trial % 4;
    Topology topo = build_topology(kind, n);
    TrafficSet ts = generate(n, M, 16 + 8 * (trial % 3), 40000u + trial);
    TrafficSet mx = max_matrix(ts);
    Instance inst(mx, topo);
    std::vector<int> perm(inst.demand_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    GroomingSolution sol = decode(perm, inst, trial % 2 == 0);
    for (int m = 0; m < ts.M; ++m) {
      TrafficSet single{ts.n, 1, ts.g, {ts.demands[m]}};
      if (!validate(sol, single, topo).empty()) ++bad;
    }
  }
  report(6, "max-matrix solutions stay feasible for every pattern", bad == 0,
         std::to_string(bad) + " per-pattern validation failures");
}

void criterion7() {
  GaConfig ga;
  ga.mu = 30;
  ga.lambda = 30;
  ga.generations = 50;
  bool monotone = true, belowDedicated = true;
  std::string detail;
  for (int n : {7, 11, 15}) {
    Topology topo = build_topology(TreeKind::BinaryTree, n);
    std::vector<double> means;
    for (int M : {1, 2, 4, 8}) {
      double sum = 0;
      for (int s = 0; s < 5; ++s) {
        TrafficSet extremes = generate(n, 2, 24, 70000u + n * 31u + s);
        TrafficSet ts = interpolate(extremes, M, 71000u + n * 31u + s * 7u + M);
        Instance inst(ts, topo);
        ga.seed = 72000u + n * 101u + M * 11u + s;
        EvolutionResult evo = run_ga(inst, ga, true);
        sum += evo.bestFitness.admCount;
        if (evo.bestFitness.admCount >= n * (n - 1)) belowDedicated = false;
      }
      means.push_back(sum / 5);
    }
    detail += "n=" + std::to_string(n) + ":";
    for (double m : means) detail += " " + std::to_string(m).substr(0, 5);
    detail += "  ";
    for (size_t i = 1; i < means.size(); ++i)
      if (means[i] < means[i - 1]) monotone = false;
  }
  report(7, "mean ADM count non-decreasing in M, below the dedicated bound",
         monotone && belowDedicated, detail);
}

void criterion8() {
  ExperimentConfig cfg;
  cfg.kind = TreeKind::Star;
  cfg.nodeSweep = {5};
  cfg.granularitySweep = {16};
  cfg.patternSweep = {2};
  cfg.seed = 99;
  cfg.ga.mu = 10;
  cfg.ga.lambda = 10;
  cfg.ga.generations = 10;
  std::string a = result_to_json_string(run_experiment(cfg), false);
  std::string b = result_to_json_string(run_experiment(cfg), false);
  bool ok = a == b && g_trace_monotone && g_traces_checked > 0;
  report(8, "determinism and elitist monotone traces", ok,
         std::to_string(g_traces_checked) + " traces checked, documents " +
             (a == b ? "identical" : "differ"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return g_failures == 0 ? 0 : 1;
}
