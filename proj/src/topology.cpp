#include "groom/topology.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace groom {

Route Topology::route(int src, int dst) const {
  if (src == dst) throw std::invalid_argument("route: src == dst");
  Route up, down;
  int a = src, b = dst;
  while (depth_[a] > depth_[b]) {
    up.push_back({link_of(a), Direction::ChildToParent});
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    down.push_back({link_of(b), Direction::ParentToChild});
    b = parent_[b];
  }
  while (a != b) {
    up.push_back({link_of(a), Direction::ChildToParent});
    down.push_back({link_of(b), Direction::ParentToChild});
    a = parent_[a];
    b = parent_[b];
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int Topology::lca(int a, int b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

Topology Topology::from_parents(TreeKind kind, std::vector<int> parents,
                                std::vector<int> original_labels) {
  Topology t;
  t.n_ = static_cast<int>(parents.size());
  t.kind_ = kind;
  t.parent_ = std::move(parents);
  t.original_ = std::move(original_labels);
  t.children_.assign(t.n_, {});
  t.depth_.assign(t.n_, 0);
  if (t.parent_[0] != -1) throw std::invalid_argument("node 0 must be the root");
  for (int v = 1; v < t.n_; ++v) {
    int p = t.parent_[v];
    if (p < 0 || p >= t.n_) throw std::invalid_argument("bad parent index");
    if (p >= v) throw std::invalid_argument("parents must precede children");
    t.children_[p].push_back(v);
    t.depth_[v] = t.depth_[p] + 1;
  }
  return t;
}

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("edge list does not describe a tree (|E| != n-1)");
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw std::invalid_argument("bad edge endpoint");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Roots the tree at `root` and relabels nodes in BFS order (children visited
// ascending by original label) so the root becomes node 0.
Topology root_and_relabel(TreeKind kind, int root, const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> new_id(n, -1), original;
  std::vector<int> parents;
  original.reserve(n);
  parents.reserve(n);
  std::queue<int> q;
  new_id[root] = 0;
  original.push_back(root);
  parents.push_back(-1);
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    std::vector<int> nbrs = adj[u];
    std::sort(nbrs.begin(), nbrs.end());
    for (int v : nbrs) {
      if (new_id[v] != -1) continue;
      new_id[v] = static_cast<int>(original.size());
      original.push_back(v);
      parents.push_back(new_id[u]);
      q.push(v);
    }
  }
  if (static_cast<int>(original.size()) != n)
    throw std::invalid_argument("edge list is not connected");
  return Topology::from_parents(kind, std::move(parents), std::move(original));
}

}  // namespace

int select_root(int n, const std::vector<std::pair<int, int>>& edges) {
  auto adj = adjacency(n, edges);
  // Subtree sizes with node 0 as a provisional root, then the classic
  // max-branch computation per candidate.
  std::vector<int> order, par(n, -1), size(n, 1);
  order.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        par[v] = u;
        stack.push_back(v);
      }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("edge list is not connected");
  for (int i = n - 1; i > 0; --i) size[par[order[i]]] += size[order[i]];
  int best = 0, best_branch = n + 1;
  for (int v = 0; v < n; ++v) {
    int branch = n - size[v];  // the branch through v's parent
    for (int c : adj[v])
      if (par[c] == v) branch = std::max(branch, size[c]);
    if (branch < best_branch) {
      best_branch = branch;
      best = v;
    }
  }
  return best;
}

Topology build_topology(TreeKind kind, int n) {
  if (n < 2) throw std::invalid_argument("topology needs at least 2 nodes");
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case TreeKind::Star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case TreeKind::BinaryTree:
      for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
      break;
    case TreeKind::ArbitraryTree:
      throw std::invalid_argument("arbitrary trees need an edge list");
  }
  int root = select_root(n, edges);
  return root_and_relabel(kind, root, adjacency(n, edges));
}

Topology build_topology(const std::vector<std::pair<int, int>>& edges) {
  int n = 0;
  for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  if (n < 2) throw std::invalid_argument("topology needs at least 2 nodes");
  int root = select_root(n, edges);
  return root_and_relabel(TreeKind::ArbitraryTree, root, adjacency(n, edges));
}

std::vector<std::pair<int, int>> load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    int u, v;
    if (ss >> u >> v) edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace groom
