#pragma once

#include <string>
#include <utility>
#include <vector>

namespace groom {

enum class TreeKind { Star, BinaryTree, ArbitraryTree };

// Direction 1 runs from parent to child, direction 2 from child to parent.
enum class Direction : int { ParentToChild = 1, ChildToParent = 2 };

inline int dir_index(Direction d) { return d == Direction::ParentToChild ? 0 : 1; }
inline Direction flip(Direction d) {
  return d == Direction::ParentToChild ? Direction::ChildToParent : Direction::ParentToChild;
}

struct Hop {
  int link;  // link index in [0, n-2]; link l connects node l+1 to its parent
  Direction dir;
  bool operator==(const Hop&) const = default;
};

using Route = std::vector<Hop>;

// Rooted tree (or star) over nodes 0..n-1. After construction node 0 is the
// root; in a star it is the hub. Immutable, safe to share between threads.
class Topology {
 public:
  int node_count() const { return n_; }
  int link_count() const { return n_ - 1; }
  TreeKind kind() const { return kind_; }
  int root() const { return 0; }

  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int depth(int v) const { return depth_[v]; }
  bool is_internal(int v) const { return !children_[v].empty(); }
  bool is_leaf(int v) const { return children_[v].empty(); }

  // Number of branches hanging off the root (the k of the tree upper bound).
  int root_branch_count() const { return static_cast<int>(children_[0].size()); }

  // Node label before the root relabeling, for reporting against input files.
  int original_label(int v) const { return original_[v]; }

  int link_of(int child) const { return child - 1; }
  int link_parent(int link) const { return parent_[link + 1]; }
  int link_child(int link) const { return link + 1; }

  // Unique path src -> dst: climbs to the LCA (ChildToParent hops), then
  // descends (ParentToChild hops). Throws std::invalid_argument if src == dst.
  Route route(int src, int dst) const;

  int lca(int a, int b) const;

  static Topology from_parents(TreeKind kind, std::vector<int> parents,
                               std::vector<int> original_labels);

 private:
  int n_ = 0;
  TreeKind kind_ = TreeKind::ArbitraryTree;
  std::vector<int> parent_;    // parent_[0] == -1
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<int> original_;
};

// Star: hub 0 with n-1 leaves. BinaryTree: complete-as-possible binary tree.
// Both are re-rooted at their centroid (a no-op for these shapes).
Topology build_topology(TreeKind kind, int n);

// Arbitrary tree from an undirected edge list over nodes 0..n-1. Validates
// connectivity/acyclicity, roots the tree at its centroid and relabels nodes
// so the root becomes 0 (BFS order, ascending original labels).
Topology build_topology(const std::vector<std::pair<int, int>>& edges);

// Centroid of an unrooted tree: the node minimizing the maximum branch size,
// lowest node id on ties. Returns the id in the input labeling.
int select_root(int n, const std::vector<std::pair<int, int>>& edges);

// Plain-text edge list: one "u v" pair per line, '#' starts a comment.
std::vector<std::pair<int, int>> load_edge_list(const std::string& path);

}  // namespace groom
