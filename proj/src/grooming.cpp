#include "groom/grooming.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace groom {

Instance::Instance(const TrafficSet& ts, const Topology& topo)
    : ts_(&ts), topo_(&topo), N_(ts.demand_count()), M_(ts.M), g_(ts.g) {
  if (ts.n != topo.node_count())
    throw std::invalid_argument("traffic and topology disagree on n");
  src_.resize(N_);
  dst_.resize(N_);
  routes_.resize(N_);
  value_.resize(static_cast<size_t>(N_) * M_);
  zero_.resize(N_);
  for (int d = 0; d < N_; ++d) {
    auto [i, j] = demand_pair(d, ts.n);
    src_[d] = i;
    dst_[d] = j;
    routes_[d] = topo.route(i, j);
    bool all_zero = true;
    for (int m = 0; m < M_; ++m) {
      int v = ts.demands[m][i][j];
      value_[d * M_ + m] = v;
      if (v > 0) all_zero = false;
    }
    zero_[d] = all_zero ? 1 : 0;
  }
}

WavelengthState::WavelengthState(const Instance& inst)
    : inst_(&inst),
      linkRes_(static_cast<size_t>(inst.topology().link_count()) * 2 * inst.patterns(),
               inst.granularity()),
      addRes_(static_cast<size_t>(inst.topology().node_count()) * inst.patterns(),
              inst.granularity()),
      dropRes_(addRes_),
      hasAdm_(inst.topology().node_count(), 0) {}

bool WavelengthState::can_assign(int d, int maxNewAdms) const {
  const Instance& inst = *inst_;
  if (inst.zero(d)) return true;
  const int M = inst.patterns();
  const int s = inst.src(d), t = inst.dst(d);
  int newAdms = (hasAdm_[s] ? 0 : 1) + (hasAdm_[t] ? 0 : 1);
  if (newAdms > maxNewAdms) return false;
  const Route& route = inst.route_of(d);
  for (int m = 0; m < M; ++m) {
    const int v = inst.value(d, m);
    if (v == 0) continue;
    bool links_ok = true;
    for (const Hop& h : route)
      if (linkRes_[(h.link * 2 + dir_index(h.dir)) * M + m] < v) {
        links_ok = false;
        break;
      }
    if (!links_ok) return false;
    if (addRes_[s * M + m] < v) {
      if (inst.topology().is_leaf(s)) ++inst.leaf_adddrop_rejects;
      return false;
    }
    if (dropRes_[t * M + m] < v) {
      if (inst.topology().is_leaf(t)) ++inst.leaf_adddrop_rejects;
      return false;
    }
  }
  return true;
}

void WavelengthState::assign(int d) {
  const Instance& inst = *inst_;
  assert(can_assign(d, 2) && "assign called without can_assign precondition");
  if (inst.zero(d)) return;
  const int M = inst.patterns();
  const int s = inst.src(d), t = inst.dst(d);
  for (int m = 0; m < M; ++m) {
    const int v = inst.value(d, m);
    if (v == 0) continue;
    for (const Hop& h : inst.route_of(d))
      linkRes_[(h.link * 2 + dir_index(h.dir)) * M + m] -= v;
    addRes_[s * M + m] -= v;
    dropRes_[t * M + m] -= v;
  }
  for (int v : {s, t})
    if (!hasAdm_[v]) {
      hasAdm_[v] = 1;
      ++admCount_;
    }
  assigned_.push_back(d);
}

std::vector<int> WavelengthState::drop_nodes() const {
  std::vector<int> out;
  for (int v = 0; v < inst_->topology().node_count(); ++v)
    if (hasAdm_[v]) out.push_back(v);
  return out;
}

GroomingSolution decode(const std::vector<int>& chromosome, const Instance& inst, bool reuse) {
  const int N = inst.demand_count();
  {
    if (static_cast<int>(chromosome.size()) != N)
      throw std::invalid_argument("decode: chromosome length != n(n-1)");
    std::vector<char> seen(N, 0);
    for (int x : chromosome) {
      if (x < 0 || x >= N || seen[x])
        throw std::invalid_argument("decode: chromosome is not a permutation");
      seen[x] = 1;
    }
  }

  std::vector<int> P = chromosome;  // working copy; the genome is not rewritten
  std::vector<WavelengthState> waves;
  waves.emplace_back(inst);
  GroomingSolution sol;
  sol.assignmentOf.assign(N, GroomingSolution::kNone);

  int k = 0;
  while (k < N) {
    const int d = P[k];
    if (inst.zero(d)) {
      ++k;
      continue;
    }
    const int w = static_cast<int>(waves.size()) - 1;

    if (!waves[w].can_assign(d, 2)) {
      // Reuse pass: before opening a fresh wavelength, first-fit into an
      // older one with at most one new ADM.
      if (reuse) {
        bool placed = false;
        for (int f = 0; f < w; ++f)
          if (waves[f].can_assign(d, 1)) {
            waves[f].assign(d);
            sol.assignmentOf[d] = f;
            ++k;
            placed = true;
            break;
          }
        if (placed) continue;
      }
      waves.emplace_back(inst);  // open a fresh wavelength and retry
      continue;
    }
    waves[w].assign(d);
    sol.assignmentOf[d] = w;
    ++k;

    // Improvement scan over the remaining items: the current wavelength with
    // no new ADM, then (reuse only) any older wavelength with no new ADM.
    // Placed items are swapped into the processed prefix.
    int prefix = k;
    for (int l = prefix; l < N; ++l) {
      const int e = P[l];
      if (inst.zero(e)) {
        std::swap(P[l], P[prefix]);
        ++prefix;
        continue;
      }
      int target = -1;
      if (waves[w].can_assign(e, 0)) target = w;
      if (target < 0 && reuse)
        for (int f = 0; f < w; ++f)
          if (waves[f].can_assign(e, 0)) {
            target = f;
            break;
          }
      if (target >= 0) {
        waves[target].assign(e);
        sol.assignmentOf[e] = target;
        std::swap(P[l], P[prefix]);
        ++prefix;
      }
    }
    k = prefix;
  }

  // Keep only non-empty wavelengths, preserving order. Indices are remapped;
  // only the trailing wavelength can be empty by construction.
  std::vector<int> remap(waves.size(), GroomingSolution::kNone);
  for (size_t i = 0; i < waves.size(); ++i) {
    if (waves[i].empty()) continue;
    remap[i] = static_cast<int>(sol.wavelengths.size());
    sol.wavelengths.push_back(waves[i].assigned());
  }
  for (int d = 0; d < N; ++d)
    if (sol.assignmentOf[d] != GroomingSolution::kNone)
      sol.assignmentOf[d] = remap[sol.assignmentOf[d]];
  return sol;
}

Fitness metrics(const GroomingSolution& s, const Instance& inst) {
  Fitness f;
  std::vector<char> drops(inst.topology().node_count());
  for (const auto& demands : s.wavelengths) {
    if (demands.empty()) continue;
    ++f.wavelengthCount;
    std::fill(drops.begin(), drops.end(), 0);
    for (int d : demands) drops[inst.src(d)] = drops[inst.dst(d)] = 1;
    f.admCount += static_cast<int>(std::count(drops.begin(), drops.end(), 1));
  }
  return f;
}

GroomingSolution first_fit_packing(const Instance& inst) {
  std::vector<int> order;
  for (int d = 0; d < inst.demand_count(); ++d)
    if (!inst.zero(d)) order.push_back(d);
  auto peak = [&inst](int d) {
    int p = 0;
    for (int m = 0; m < inst.patterns(); ++m) p = std::max(p, inst.value(d, m));
    return p;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return peak(a) > peak(b); });

  std::vector<WavelengthState> waves;
  GroomingSolution s;
  s.assignmentOf.assign(inst.demand_count(), GroomingSolution::kNone);
  for (int d : order) {
    bool placed = false;
    for (size_t w = 0; w < waves.size(); ++w)
      if (waves[w].can_assign(d, 2)) {
        waves[w].assign(d);
        s.assignmentOf[d] = static_cast<int>(w);
        placed = true;
        break;
      }
    if (!placed) {
      waves.emplace_back(inst);
      waves.back().assign(d);
      s.assignmentOf[d] = static_cast<int>(waves.size()) - 1;
    }
  }
  for (const auto& w : waves) s.wavelengths.push_back(w.assigned());
  return s;
}

GroomingSolution consolidate(const GroomingSolution& s, const Instance& inst) {
  std::vector<WavelengthState> waves;
  for (const auto& demands : s.wavelengths) {
    waves.emplace_back(inst);
    for (int d : demands) waves.back().assign(d);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = static_cast<int>(waves.size()) - 1; w >= 0; --w) {
      // Tentatively relocate every demand of wavelength w, each to the
      // cheapest (fewest new ADMs) other wavelength, first-fit among ties.
      std::vector<WavelengthState> cand = waves;
      int added = 0;
      bool ok = true;
      for (int d : waves[w].assigned()) {
        int target = -1, cost = 3;
        for (int f = 0; f < static_cast<int>(cand.size()) && cost > 0; ++f) {
          if (f == w) continue;
          int nd = (cand[f].drops_at(inst.src(d)) ? 0 : 1) +
                   (cand[f].drops_at(inst.dst(d)) ? 0 : 1);
          if (nd < cost && cand[f].can_assign(d, 2)) {
            target = f;
            cost = nd;
          }
        }
        if (target < 0) {
          ok = false;
          break;
        }
        cand[target].assign(d);
        added += cost;
      }
      // Freed ADMs on w must pay for the new ones, so the total never grows.
      if (ok && added <= waves[w].adm_count()) {
        cand.erase(cand.begin() + w);
        waves = std::move(cand);
        changed = true;
      }
    }
  }

  GroomingSolution out;
  out.assignmentOf.assign(inst.demand_count(), GroomingSolution::kNone);
  for (const auto& wv : waves) {
    if (wv.empty()) continue;
    for (int d : wv.assigned()) out.assignmentOf[d] = static_cast<int>(out.wavelengths.size());
    out.wavelengths.push_back(wv.assigned());
  }
  return out;
}

std::vector<Violation> validate(const GroomingSolution& s, const TrafficSet& ts,
                                const Topology& topo) {
  std::vector<Violation> out;
  auto flag = [&out](std::string msg) { out.push_back({std::move(msg)}); };
  const int N = ts.demand_count();
  const int W = static_cast<int>(s.wavelengths.size());

  if (static_cast<int>(s.assignmentOf.size()) != N) {
    flag("assignment vector has wrong length");
    return out;
  }

  // Assignment bookkeeping: lists and assignmentOf must agree, nonzero
  // demands assigned exactly once, zero demands to none.
  std::vector<int> seen(N, 0);
  for (int w = 0; w < W; ++w)
    for (int d : s.wavelengths[w]) {
      if (d < 0 || d >= N) {
        flag("wavelength " + std::to_string(w) + " lists invalid demand id");
        continue;
      }
      ++seen[d];
      if (s.assignmentOf[d] != w)
        flag("demand " + std::to_string(d) + " listed on wavelength " + std::to_string(w) +
             " but assignmentOf says " + std::to_string(s.assignmentOf[d]));
    }
  for (int d = 0; d < N; ++d) {
    auto [i, j] = demand_pair(d, ts.n);
    bool nonzero = false;
    for (int m = 0; m < ts.M; ++m) nonzero = nonzero || ts.demands[m][i][j] > 0;
    // Assigned all-zero demands are tolerated: they consume no capacity, and
    // they occur naturally when a solution groomed for one traffic set is
    // checked against a sparser one (e.g. per-pattern checks of a max-matrix
    // solution).
    if (nonzero && seen[d] != 1)
      flag("demand " + std::to_string(d) + " assigned " + std::to_string(seen[d]) +
           " times (expected 1)");
  }

  // Per-wavelength capacity recomputation from scratch.
  const int L = topo.link_count(), n = topo.node_count();
  for (int w = 0; w < W; ++w) {
    std::vector<char> drops(n, 0);
    for (int d : s.wavelengths[w]) {
      auto [i, j] = demand_pair(d, ts.n);
      drops[i] = drops[j] = 1;
    }
    for (int m = 0; m < ts.M; ++m) {
      std::vector<int> linkLoad(static_cast<size_t>(L) * 2, 0);
      std::vector<int> addLoad(n, 0), dropLoad(n, 0);
      for (int d : s.wavelengths[w]) {
        auto [i, j] = demand_pair(d, ts.n);
        int v = ts.demands[m][i][j];
        if (v == 0) continue;
        for (const Hop& h : topo.route(i, j)) linkLoad[h.link * 2 + dir_index(h.dir)] += v;
        addLoad[i] += v;
        dropLoad[j] += v;
      }
      for (int l = 0; l < L; ++l)
        for (int dir = 0; dir < 2; ++dir)
          if (linkLoad[l * 2 + dir] > ts.g)
            flag("wavelength " + std::to_string(w) + " link " + std::to_string(l) +
                 " direction " + std::to_string(dir + 1) + " pattern " + std::to_string(m) +
                 " overloaded: " + std::to_string(linkLoad[l * 2 + dir]) + " > g=" +
                 std::to_string(ts.g));
      for (int v = 0; v < n; ++v) {
        if (addLoad[v] > ts.g)
          flag("wavelength " + std::to_string(w) + " node " + std::to_string(v) + " pattern " +
               std::to_string(m) + " add overloaded");
        if (dropLoad[v] > ts.g)
          flag("wavelength " + std::to_string(w) + " node " + std::to_string(v) + " pattern " +
               std::to_string(m) + " drop overloaded");
        if ((addLoad[v] > 0 || dropLoad[v] > 0) && !drops[v])
          flag("wavelength " + std::to_string(w) + " node " + std::to_string(v) +
               " carries add/drop traffic without an ADM");
      }
    }
  }
  return out;
}

std::string solution_to_json_string(const GroomingSolution& s, const Instance& inst) {
  nlohmann::json waves = nlohmann::json::array();
  std::vector<char> drops(inst.topology().node_count());
  for (const auto& demands : s.wavelengths) {
    std::fill(drops.begin(), drops.end(), 0);
    nlohmann::json items = nlohmann::json::array();
    for (int d : demands) {
      drops[inst.src(d)] = drops[inst.dst(d)] = 1;
      nlohmann::json vals = nlohmann::json::array();
      for (int m = 0; m < inst.patterns(); ++m) vals.push_back(inst.value(d, m));
      items.push_back({{"from", inst.src(d)}, {"to", inst.dst(d)}, {"values", vals}});
    }
    nlohmann::json dn = nlohmann::json::array();
    for (int v = 0; v < inst.topology().node_count(); ++v)
      if (drops[v]) dn.push_back(v);
    waves.push_back({{"dropNodes", dn}, {"demands", items}});
  }
  return nlohmann::json{{"wavelengths", waves}}.dump(2);
}

GroomingSolution solution_from_json_string(const std::string& text, const TrafficSet& ts) {
  auto doc = nlohmann::json::parse(text);
  GroomingSolution s;
  s.assignmentOf.assign(ts.demand_count(), GroomingSolution::kNone);
  for (const auto& wave : doc.at("wavelengths")) {
    std::vector<int> demands;
    for (const auto& item : wave.at("demands")) {
      int d = demand_index(item.at("from").get<int>(), item.at("to").get<int>(), ts.n);
      demands.push_back(d);
      s.assignmentOf[d] = static_cast<int>(s.wavelengths.size());
    }
    s.wavelengths.push_back(std::move(demands));
  }
  return s;
}

}  // namespace groom
