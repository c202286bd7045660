#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace groom {

// Dynamic-traffic instance: M demand matrices over n nodes plus the
// wavelength granularity g. demands[m][i][j] is the integer demand from i to
// j while pattern m is active. Immutable by convention once built.
struct TrafficSet {
  int n = 0;
  int M = 0;
  int g = 0;
  std::vector<std::vector<std::vector<int>>> demands;  // [m][i][j]

  int demand_count() const { return n * (n - 1); }
  bool operator==(const TrafficSet&) const = default;
};

// Ordered demand pairs (i,j), i != j, indexed 0..n(n-1)-1.
inline int demand_index(int i, int j, int n) { return i * (n - 1) + (j < i ? j : j - 1); }
inline std::pair<int, int> demand_pair(int id, int n) {
  int i = id / (n - 1), r = id % (n - 1);
  return {i, r < i ? r : r + 1};
}

// Extreme-pattern traffic generation: patterns 1 and M are drawn i.i.d.
// uniform on [lo,hi]; every middle pattern entry is uniform on the closed
// integer interval between the two extreme values. The PRNG is std::mt19937
// seeded with `seed`; draw order is extremes first (row-major, diagonal
// skipped), then middle patterns in index order.
TrafficSet generate(int n, int M, int g, std::uint32_t seed, int lo = 0, int hi = 15);

// Expands a 1- or 2-pattern extreme set to M patterns with the same
// interpolation rule, leaving the extremes untouched. Lets one pair of
// extreme patterns be shared across an M-sweep.
TrafficSet interpolate(const TrafficSet& extremes, int M, std::uint32_t seed);

// Demands at or above g are peeled off into dedicated full wavelengths:
// per pair, base = max_m floor(r[m]/g) wavelengths, each holding g units.
struct SplitResult {
  std::vector<std::pair<int, int>> dedicated;  // (demand id, full wavelength count)
  TrafficSet residual;                         // all entries < g

  int total_dedicated() const;
};

SplitResult split_over_granularity(const TrafficSet& ts);

// Entrywise maximum over the M patterns; the static grooming baseline.
TrafficSet max_matrix(const TrafficSet& ts);

std::string to_json_string(const TrafficSet& ts);
TrafficSet traffic_from_json_string(const std::string& text);
void save_traffic(const TrafficSet& ts, const std::string& path);
TrafficSet load_traffic(const std::string& path);

}  // namespace groom
