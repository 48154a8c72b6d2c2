#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nest/partition.hpp"
#include "nest/perm.hpp"

namespace nest {

/// A finite simple undirected graph with fixed vertex indexing. Adjacency is
/// kept both as sorted neighbor lists and as per-vertex bit rows; the bit rows
/// carry the hot paths (common neighbors, refinement).
class Graph {
public:
  Graph(int vertex_count, const std::vector<std::pair<int, int>> &edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  const std::vector<int> &neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  /// Constant valency if the graph is regular.
  std::optional<int> regular_valency() const;

  /// All edges, each pair sorted, the list sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  std::vector<int> common_neighbors(int u, int v) const;
  int common_neighbor_count(int u, int v) const;

  bool is_connected() const;

  /// Length of a shortest cycle; empty for forests.
  std::optional<int> girth() const;

  /// Graph with vertex v renamed to p(v).
  Graph relabeled(const Perm &p) const;

  std::span<const std::uint64_t> adjacency_row(int v) const;
  int words_per_row() const { return words_; }

  /// Deterministic JSON: {"vertices": N, "edges": [[u,v],...]} with each pair
  /// sorted and the edge list sorted.
  std::string to_json() const;
  static Graph from_json(const std::string &text);

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.vertex_count_ == b.vertex_count_ && a.adj_ == b.adj_;
  }

private:
  int vertex_count_ = 0;
  int edge_count_ = 0;
  int words_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_; // vertex_count_ rows of words_ words
};

/// Partition of V by the reflexive relation u ~ v iff u == v or
/// |common_neighbors(u,v)| == s, provided the relation is an equivalence;
/// throws std::domain_error otherwise. Classes ordered by smallest member.
Partition relation_partition(const Graph &g, int s);

/// Quotient graph: classes as vertices, adjacency = existence of a cross
/// edge. Never emits loops.
Graph quotient(const Graph &g, const Partition &p);

/// Returns r if every edge {u,v} satisfies p(u) != p(v) and
/// |N(u) ∩ p(v)| == r for one constant r; empty otherwise.
std::optional<int> cover_index(const Graph &g, const Partition &p);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
/// Kneser graph on 2-subsets of a 5-set, adjacency by disjointness.
Graph petersen();
Graph petersen_complement();
/// Cartesian square of K4.
Graph hamming_2_4();
/// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph shrikhande();

} // namespace nest
