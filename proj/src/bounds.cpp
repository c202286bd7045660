#include "groom/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "groom/grooming.hpp"

namespace groom {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int node_term(const NodeTotals& nt, int v, int g) {
  return ceil_div(std::max(nt.sigma[v], nt.tau[v]), g);
}

}  // namespace

LinkLoads link_loads(const TrafficSet& ts, const Topology& topo) {
  const int L = topo.link_count();
  LinkLoads out;
  out.perPattern1.assign(L, std::vector<int>(ts.M, 0));
  out.perPattern2.assign(L, std::vector<int>(ts.M, 0));
  for (int i = 0; i < ts.n; ++i)
    for (int j = 0; j < ts.n; ++j) {
      if (i == j) continue;
      Route route = topo.route(i, j);
      for (int m = 0; m < ts.M; ++m) {
        int v = ts.demands[m][i][j];
        if (v == 0) continue;
        for (const Hop& h : route)
          (h.dir == Direction::ParentToChild ? out.perPattern1 : out.perPattern2)[h.link][m] += v;
      }
    }
  out.L1.assign(L, 0);
  out.L2.assign(L, 0);
  for (int l = 0; l < L; ++l) {
    out.L1[l] = *std::max_element(out.perPattern1[l].begin(), out.perPattern1[l].end());
    out.L2[l] = *std::max_element(out.perPattern2[l].begin(), out.perPattern2[l].end());
  }
  return out;
}

NodeTotals node_totals(const TrafficSet& ts) {
  NodeTotals out;
  out.sigma.assign(ts.n, 0);
  out.tau.assign(ts.n, 0);
  for (int m = 0; m < ts.M; ++m) {
    std::vector<int> term(ts.n, 0), orig(ts.n, 0);
    for (int i = 0; i < ts.n; ++i)
      for (int j = 0; j < ts.n; ++j) {
        if (i == j) continue;
        orig[i] += ts.demands[m][i][j];
        term[j] += ts.demands[m][i][j];
      }
    for (int v = 0; v < ts.n; ++v) {
      out.sigma[v] = std::max(out.sigma[v], term[v]);
      out.tau[v] = std::max(out.tau[v], orig[v]);
    }
  }
  return out;
}

int w_min(const TrafficSet& ts, const Topology& topo) {
  LinkLoads ll = link_loads(ts, topo);
  NodeTotals nt = node_totals(ts);
  int best = 0;
  for (int l = 0; l < topo.link_count(); ++l)
    best = std::max({best, ceil_div(ll.L1[l], ts.g), ceil_div(ll.L2[l], ts.g)});
  for (int v = 0; v < ts.n; ++v)
    if (topo.is_internal(v)) best = std::max(best, node_term(nt, v, ts.g));
  return best;
}

int m_min(const TrafficSet& ts, const Topology& topo) {
  (void)topo;
  NodeTotals nt = node_totals(ts);
  int total = 0;
  for (int v = 0; v < ts.n; ++v) total += node_term(nt, v, ts.g);
  return total;
}

int w_max_generic(const TrafficSet& ts, const Topology& topo) {
  const int L = topo.link_count();
  std::vector<int> calls(static_cast<size_t>(L) * 2, 0);
  for (int i = 0; i < ts.n; ++i)
    for (int j = 0; j < ts.n; ++j) {
      if (i == j) continue;
      int peak = 0;
      for (int m = 0; m < ts.M; ++m) peak = std::max(peak, ts.demands[m][i][j]);
      if (peak == 0) continue;
      for (const Hop& h : topo.route(i, j)) ++calls[h.link * 2 + dir_index(h.dir)];
    }
  return calls.empty() ? 0 : *std::max_element(calls.begin(), calls.end());
}

int w_max_tree(int n, int k) {
  // Nodes split evenly into k root branches: a branch of ceil((n-1)/k) nodes
  // exchanges calls with the n - ceil((n-1)/k) nodes outside it.
  int branch = ceil_div(n - 1, k);
  return (n - branch) * branch;
}

int w_max_binary(int n) { return n % 2 ? (n * n - 1) / 4 : n * n / 4; }

int w_max_star(int n) { return n - 1; }

int w_min_star(const TrafficSet& ts) {
  NodeTotals nt = node_totals(ts);
  int best = 0;
  for (int v = 0; v < ts.n; ++v) best = std::max(best, node_term(nt, v, ts.g));
  return best;
}

int m_max(const TrafficSet& ts, const Topology& topo) {
  // n ADMs per wavelength times the wavelength count of an actual feasible
  // solution (the canonical first-fit decode). Using a feasible wavelength
  // count instead of the wavelength lower bound keeps the ADM bound valid:
  // per-pattern packing constraints can make the wavelength lower bound
  // unreachable, and n times an unreachable count may undercut the true ADM
  // optimum. Capped by the dedicated construction: one wavelength and two
  // ADMs per node pair.
  const int n = ts.n;
  const int dedicated = n * (n - 1);
  Instance inst(ts, topo);
  // Capacity-only first-fit-decreasing: ADMs are granted freely, so the
  // wavelength count is as tight as plain packing allows.
  const int packed = static_cast<int>(first_fit_packing(inst).wavelengths.size());
  return std::min(dedicated, n * packed);
}

BoundsReport compute_bounds(const TrafficSet& ts, const Topology& topo) {
  BoundsReport r;
  r.wMin = w_min(ts, topo);
  r.mMin = m_min(ts, topo);

  r.wMax = w_max_generic(ts, topo);
  r.wMaxMethod = "calls-per-link";
  int closed;
  std::string tag;
  switch (topo.kind()) {
    case TreeKind::Star:
      closed = w_max_star(ts.n);
      tag = "star";
      break;
    case TreeKind::BinaryTree:
      closed = w_max_binary(ts.n);
      tag = "binary";
      break;
    default:
      closed = w_max_tree(ts.n, topo.root_branch_count());
      tag = "k-branch";
      break;
  }
  if (closed < r.wMax) {
    r.wMax = closed;
    r.wMaxMethod = tag;
  }

  r.mMax = m_max(ts, topo);
  r.mMaxMethod = "min(n(n-1), n*Wpacked)";
  return r;
}

}  // namespace groom
