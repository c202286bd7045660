#pragma once

#include <string>
#include <vector>

#include "groom/topology.hpp"
#include "groom/traffic.hpp"

namespace groom {

// Directional link loads: L1/L2 are the per-link maxima over patterns of the
// summed demand routed in direction 1 (parent->child) / direction 2.
struct LinkLoads {
  std::vector<std::vector<int>> perPattern1;  // [link][m]
  std::vector<std::vector<int>> perPattern2;
  std::vector<int> L1, L2;  // [link], max over patterns
};

// Per-node totals: sigma = max over patterns of traffic terminating at the
// node, tau = max over patterns of traffic originating there. Optically
// bypassed transit traffic does not count.
struct NodeTotals {
  std::vector<int> sigma, tau;  // [node]
};

LinkLoads link_loads(const TrafficSet& ts, const Topology& topo);
NodeTotals node_totals(const TrafficSet& ts);

// Lower bound on wavelengths: max over links of ceil(L/g) in each direction
// and over internal nodes of ceil(max(sigma,tau)/g).
int w_min(const TrafficSet& ts, const Topology& topo);

// Lower bound on ADMs: sum over all nodes of ceil(max(sigma,tau)/g).
int m_min(const TrafficSet& ts, const Topology& topo);

// Upper bound on wavelengths for any topology: the maximum number of calls
// (nonzero demand pairs) carried by a single (link, direction).
int w_max_generic(const TrafficSet& ts, const Topology& topo);

// Closed-form wavelength upper bounds. k is the number of root branches.
int w_max_tree(int n, int k);
int w_max_binary(int n);  // (n^2-1)/4 odd n, n^2/4 even n
int w_max_star(int n);    // n-1

// Star wavelength lower bound: max over every node (leaves and hub) of
// ceil(max(sigma,tau)/g).
int w_min_star(const TrafficSet& ts);

// Upper bound on ADMs: n * w_min_star for stars, min(n(n-1), n * w_min)
// otherwise.
int m_max(const TrafficSet& ts, const Topology& topo);

struct BoundsReport {
  int wMin = 0, mMin = 0, wMax = 0, mMax = 0;
  std::string wMaxMethod;  // which upper bound was the binding one
  std::string mMaxMethod;
};

// Evaluates every applicable bound and keeps the tightest upper bounds.
// Expects a post-split TrafficSet (all demands < g).
BoundsReport compute_bounds(const TrafficSet& ts, const Topology& topo);

}  // namespace groom
