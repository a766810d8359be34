#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaugecount {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges and loops are allowed.
/// Edge ids are list positions. Immutable after construction.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws InputError if an endpoint is out of range.
  Multigraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// A loop contributes 2.
  unsigned degree(Vertex v) const { return static_cast<unsigned>(slots_[v].size()); }

  /// Argument slots of v: incident edge ids in increasing id order, a loop listed twice.
  const std::vector<EdgeId>& slots(Vertex v) const { return slots_[v]; }

  bool has_loops() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> slots_;
};

using DegreeSequence = std::vector<unsigned>;

DegreeSequence degree_sequence(const Multigraph& g);

/// "n m" header followed by m lines "u v" (0-based). Blank lines are skipped.
/// Errors carry the offending line number.
Multigraph parse_edge_list(std::string_view text);
std::string serialize(const Multigraph& g);

/// Standard graph6 for simple graphs; an optional ">>graph6<<" header is accepted.
Multigraph parse_graph6(std::string_view text);

Multigraph complete_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);
Multigraph complete_bipartite(std::size_t a, std::size_t b);
Multigraph complete_multipartite(const std::vector<std::size_t>& parts);
Multigraph petersen_graph();
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Family specs: "K5", "C6", "K3,3", "K2,2,2", "petersen", "octahedron",
/// "complete:5", "cycle:6", "bipartite:3,3", "multipartite:2,2,2", and
/// disjoint unions joined with '+', e.g. "C3+C3".
Multigraph generate(std::string_view spec);

std::optional<unsigned> regular_degree(const Multigraph& g);
bool is_eulerian(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Closed walk given by its start vertex and the sequence of traversed edges.
struct ClosedWalk {
  Vertex start = 0;
  std::vector<EdgeId> edges;
};

/// True if consecutive edges chain from start back to start.
bool is_closed_walk(const Multigraph& g, const ClosedWalk& walk);

struct BipartiteCheck {
  bool bipartite = true;
  std::vector<int> side;              // 0/1 colouring when bipartite
  std::optional<ClosedWalk> odd_walk; // witness when not bipartite
};

BipartiteCheck check_bipartite(const Multigraph& g);
inline bool is_bipartite(const Multigraph& g) { return check_bipartite(g).bipartite; }

/// Short human-readable summary, e.g. "n=5 m=10 degrees=4^5".
std::string describe(const Multigraph& g);

}  // namespace gaugecount
