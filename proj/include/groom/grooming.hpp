#pragma once

#include <string>
#include <vector>

#include "groom/topology.hpp"
#include "groom/traffic.hpp"

namespace groom {

// Lexicographic solution cost: fewer ADMs wins, then fewer wavelengths.
struct Fitness {
  int admCount = 0;
  int wavelengthCount = 0;

  bool operator==(const Fitness&) const = default;
  bool better_than(const Fitness& o) const {
    if (admCount != o.admCount) return admCount < o.admCount;
    return wavelengthCount < o.wavelengthCount;
  }
};

// Decode context: per-demand routes and per-pattern magnitudes, precomputed
// once so chromosome decoding stays cheap. Counters for test instrumentation.
class Instance {
 public:
  Instance(const TrafficSet& ts, const Topology& topo);

  const TrafficSet& traffic() const { return *ts_; }
  const Topology& topology() const { return *topo_; }
  int demand_count() const { return N_; }
  int patterns() const { return M_; }
  int granularity() const { return g_; }

  int src(int d) const { return src_[d]; }
  int dst(int d) const { return dst_[d]; }
  const Route& route_of(int d) const { return routes_[d]; }
  int value(int d, int m) const { return value_[d * M_ + m]; }
  bool zero(int d) const { return zero_[d] != 0; }

  // Times a leaf node's add/drop check failed after all link checks passed.
  // Stays zero: a leaf's single link carries exactly its add/drop volume.
  mutable long leaf_adddrop_rejects = 0;

 private:
  const TrafficSet* ts_;
  const Topology* topo_;
  int N_, M_, g_;
  std::vector<int> src_, dst_;
  std::vector<Route> routes_;
  std::vector<int> value_;  // [d*M + m]
  std::vector<char> zero_;
};

// Per-wavelength capacity state: residual link capacity per (link, direction,
// pattern), residual ADM add/drop throughput per (node, pattern), and the
// drop-node set. Intermediate route nodes bypass optically and are untouched.
class WavelengthState {
 public:
  explicit WavelengthState(const Instance& inst);

  // True iff demand d fits across every pattern: link residuals on its route,
  // add residual at the source, drop residual at the destination, and at most
  // maxNewAdms endpoints missing from the drop-node set. Zero demands fit
  // vacuously.
  bool can_assign(int d, int maxNewAdms) const;

  // Requires can_assign(d, 2). Asserts on violation.
  void assign(int d);

  const std::vector<int>& assigned() const { return assigned_; }
  bool empty() const { return assigned_.empty(); }
  bool drops_at(int v) const { return hasAdm_[v] != 0; }
  int adm_count() const { return admCount_; }
  std::vector<int> drop_nodes() const;

  int link_residual(int link, Direction dir, int m) const {
    return linkRes_[(link * 2 + dir_index(dir)) * inst_->patterns() + m];
  }
  int add_residual(int node, int m) const { return addRes_[node * inst_->patterns() + m]; }
  int drop_residual(int node, int m) const { return dropRes_[node * inst_->patterns() + m]; }

 private:
  const Instance* inst_;
  std::vector<int> linkRes_;  // [link][dir][m]
  std::vector<int> addRes_, dropRes_;  // [node][m]
  std::vector<char> hasAdm_;
  int admCount_ = 0;
  std::vector<int> assigned_;
};

// Demand -> wavelength assignment. assignmentOf[d] == kNone for demands that
// are zero in every pattern.
struct GroomingSolution {
  static constexpr int kNone = -1;

  std::vector<int> assignmentOf;            // [N] -> wavelength index or kNone
  std::vector<std::vector<int>> wavelengths;  // demand ids per wavelength, all non-empty
};

// Algorithm I: deterministic left-to-right first-fit decode with a greedy
// improvement scan; `reuse` additionally first-fits each demand into older
// wavelengths when at most one new ADM is needed.
GroomingSolution decode(const std::vector<int>& chromosome, const Instance& inst, bool reuse);

// ADM and wavelength counts recomputed from the assignment, never cached.
Fitness metrics(const GroomingSolution& s, const Instance& inst);

// Capacity-only first-fit-decreasing packing: demands sorted by peak value
// (stable, descending), each placed on the first wavelength with room across
// all patterns, ADMs granted freely. A feasible wavelength-frugal reference
// solution; also the construction behind the analytical ADM upper bound.
GroomingSolution first_fit_packing(const Instance& inst);

// Post-decode improvement: repeatedly empties a wavelength by relocating all
// of its demands onto the others, committing a move only when it does not
// increase the ADM count. Deterministic; never worsens either metric.
GroomingSolution consolidate(const GroomingSolution& s, const Instance& inst);

struct Violation {
  std::string message;
};

// From-scratch feasibility audit: per-pattern link loads and per-node
// add/drop volumes within g on every wavelength, every nonzero demand
// assigned exactly once, endpoints inside the wavelength's drop-node set.
std::vector<Violation> validate(const GroomingSolution& s, const TrafficSet& ts,
                                const Topology& topo);

std::string solution_to_json_string(const GroomingSolution& s, const Instance& inst);
GroomingSolution solution_from_json_string(const std::string& text, const TrafficSet& ts);

}  // namespace groom
