#include "tschsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tschsim/errors.hpp"
#include "tschsim/rng.hpp"

namespace tschsim {

double NetworkTopology::distance(int a, int b) const {
  const Node& na = nodes[static_cast<std::size_t>(a)];
  const Node& nb = nodes[static_cast<std::size_t>(b)];
  return std::hypot(na.x - nb.x, na.y - nb.y);
}

void NetworkTopology::validate() const {
  const int n = static_cast<int>(nodes.size());
  std::vector<char> seen(nodes.size(), 0);
  for (const Node& node : nodes) {
    if (node.id < 0 || node.id >= n)
      throw TopologyError("node id " + std::to_string(node.id) + " outside [0, " + std::to_string(n) + ")");
    if (seen[static_cast<std::size_t>(node.id)]) throw TopologyError("duplicate node id " + std::to_string(node.id));
    seen[static_cast<std::size_t>(node.id)] = 1;
    if (node.comm_range <= 0.0 || node.interference_range <= 0.0)
      throw TopologyError("node " + std::to_string(node.id) + " has non-positive range");
  }
  for (const Link& link : links) {
    if (link.sender < 0 || link.sender >= n || link.receiver < 0 || link.receiver >= n)
      throw TopologyError("link endpoint outside node range");
    if (link.sender == link.receiver) throw TopologyError("self-link at node " + std::to_string(link.sender));
    if (distance(link.sender, link.receiver) > nodes[static_cast<std::size_t>(link.sender)].comm_range)
      throw TopologyError("link " + std::to_string(link.sender) + "->" + std::to_string(link.receiver) +
                          " exceeds the sender's comm range");
  }
}

namespace {

void derive_links(NetworkTopology& topo) {
  const int n = static_cast<int>(topo.nodes.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (topo.distance(i, j) <= topo.nodes[static_cast<std::size_t>(i)].comm_range)
        topo.links.push_back({i, j});
    }
  }
}

}  // namespace

NetworkTopology generate_topology(int n_nodes, double area_w, double area_h, double comm_range,
                                  double interference_range, std::uint64_t seed) {
  if (n_nodes < 2) throw TopologyError("need at least 2 nodes");
  if (comm_range <= 0.0 || interference_range <= 0.0) throw TopologyError("ranges must be positive");
  if (area_w <= 0.0 || area_h <= 0.0) throw TopologyError("area must be positive");

  Rng rng(seed);
  NetworkTopology topo;
  topo.nodes.reserve(static_cast<std::size_t>(n_nodes));
  for (int i = 0; i < n_nodes; ++i) {
    Node node;
    node.id = i;
    node.x = rng.uniform(0.0, area_w);
    node.y = rng.uniform(0.0, area_h);
    node.comm_range = comm_range;
    node.interference_range = interference_range;
    topo.nodes.push_back(node);
  }
  derive_links(topo);
  if (topo.links.empty())
    throw TopologyError("generated topology has zero links (comm range " + std::to_string(comm_range) +
                        " too small for the area)");
  topo.validate();
  return topo;
}

NetworkTopology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TopologyError("cannot open topology file: " + path);

  NetworkTopology topo;
  bool explicit_links = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    if (auto pos = sv.find('#'); pos != std::string_view::npos) sv = sv.substr(0, pos);
    std::istringstream fields{std::string(sv)};
    std::vector<double> values;
    double v;
    while (fields >> v) values.push_back(v);
    if (values.empty()) continue;
    if (values.size() == 5) {
      topo.nodes.push_back({static_cast<int>(values[0]), values[1], values[2], values[3], values[4]});
    } else if (values.size() == 2) {
      explicit_links = true;
      topo.links.push_back({static_cast<int>(values[0]), static_cast<int>(values[1])});
    } else {
      throw TopologyError("topology file line " + std::to_string(line_no) +
                          ": expected 5 fields (node) or 2 fields (link)");
    }
  }
  if (topo.nodes.empty()) throw TopologyError("topology file has no nodes: " + path);
  std::sort(topo.nodes.begin(), topo.nodes.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
  if (!explicit_links) derive_links(topo);
  if (topo.links.empty()) throw TopologyError("topology has zero links: " + path);
  topo.validate();
  return topo;
}

CollisionGraph::CollisionGraph(std::size_t n_vertices, std::vector<std::pair<int, int>> edges)
    : n_(n_vertices), adj_(n_vertices * n_vertices, 0), edges_(std::move(edges)) {
  for (const auto& [a, b] : edges_) {
    adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
    adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
  }
}

CollisionGraph build_collision_graph(const NetworkTopology& topo) {
  topo.validate();
  const std::size_t m = topo.links.size();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < m; ++a) {
    const Link& la = topo.links[a];
    for (std::size_t b = a + 1; b < m; ++b) {
      const Link& lb = topo.links[b];
      bool shared = la.sender == lb.sender || la.sender == lb.receiver || la.receiver == lb.sender ||
                    la.receiver == lb.receiver;
      // Receiver of one inside the interference range of the other's sender,
      // applied in both directions.
      bool interferes =
          topo.distance(lb.sender, la.receiver) <=
              topo.nodes[static_cast<std::size_t>(lb.sender)].interference_range ||
          topo.distance(la.sender, lb.receiver) <=
              topo.nodes[static_cast<std::size_t>(la.sender)].interference_range;
      if (shared || interferes) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return CollisionGraph(m, std::move(edges));
}

std::size_t IndependentSetCatalog::max_set_size() const {
  std::size_t best = 0;
  for (const auto& s : sets) best = std::max(best, s.size());
  return best;
}

IndependentSetCatalog enumerate_independent_sets(const CollisionGraph& graph, std::size_t cap) {
  const std::size_t n = graph.n_vertices();
  if (cap < n) throw CatalogOverflowError(cap, n);

  IndependentSetCatalog catalog;
  catalog.cap = cap;
  std::vector<int> current;

  // Backtracking in ascending vertex order emits sets lexicographically by
  // their sorted member lists.
  auto extend = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t v = start; v < n; ++v) {
      bool ok = true;
      for (int u : current) {
        if (graph.conflicts(u, static_cast<int>(v))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(static_cast<int>(v));
      if (catalog.sets.size() >= cap) throw CatalogOverflowError(cap, n);
      catalog.sets.push_back(current);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return catalog;
}

}  // namespace tschsim
