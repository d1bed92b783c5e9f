#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tschsim {

struct Node {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double comm_range = 0.0;
  double interference_range = 0.0;
};

/// Directed communication link sender -> receiver.
struct Link {
  int sender = 0;
  int receiver = 0;
};

/// Network configuration graph: nodes with positions/ranges plus the
/// directed links between them.
struct NetworkTopology {
  std::vector<Node> nodes;
  std::vector<Link> links;

  double distance(int a, int b) const;

  /// Checks id density, range containment of every link, and no self-links.
  /// Throws TopologyError on violation.
  void validate() const;
};

/// Drops n_nodes uniformly at random on an area_w x area_h field and derives
/// one directed link for every ordered pair within the sender's comm range.
/// Deterministic for a fixed seed. Throws TopologyError when no link exists.
NetworkTopology generate_topology(int n_nodes, double area_w, double area_h, double comm_range,
                                  double interference_range, std::uint64_t seed);

/// Plain-text topology file: one `id x y R Rhat` line per node, optionally
/// followed by `i j` link lines. Without link lines, links are derived from
/// the ranges. Lines starting with '#' are comments.
NetworkTopology load_topology(const std::string& path);

/// Conflict relation between links: vertices are link indices, edges mark
/// pairs that must not share a slot-frame cell.
class CollisionGraph {
 public:
  CollisionGraph() = default;
  CollisionGraph(std::size_t n_vertices, std::vector<std::pair<int, int>> edges);

  std::size_t n_vertices() const { return n_; }
  bool conflicts(int a, int b) const { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  const std::vector<std::pair<int, int>>& conflict_edges() const { return edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

/// Two links conflict when they share a node (half-duplex, unicast) or when
/// the receiver of one sits inside the interference range of the other's
/// sender. Symmetric, no self-loops.
CollisionGraph build_collision_graph(const NetworkTopology& topo);

/// Every non-empty set of pairwise non-conflicting links, in lexicographic
/// order of the sorted link indices. Candidates for sharing one cell.
struct IndependentSetCatalog {
  std::vector<std::vector<int>> sets;
  std::size_t cap = 0;

  std::size_t size() const { return sets.size(); }
  std::size_t max_set_size() const;
};

/// Exact enumeration via backtracking. Throws CatalogOverflowError as soon as
/// the count would exceed cap. Requires cap >= number of vertices.
IndependentSetCatalog enumerate_independent_sets(const CollisionGraph& graph, std::size_t cap);

}  // namespace tschsim
