#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nest/graph.hpp"
#include "nest/partition.hpp"
#include "nest/perm.hpp"
#include "nest/perm_group.hpp"

namespace nest {

/// Canonical certificate of a graph: the adjacency matrix of the canonically
/// relabeled graph, row-major and bit-packed, plus the relabeling that
/// produced it. Two graphs have equal certificate bytes iff they are
/// isomorphic.
struct Certificate {
  std::vector<std::uint8_t> bytes;
  Perm labeling; // original vertex -> canonical index

  std::string hex() const;

  friend bool operator==(const Certificate &a, const Certificate &b) {
    return a.bytes == b.bytes;
  }
  friend bool operator!=(const Certificate &a, const Certificate &b) {
    return !(a == b);
  }
  friend bool operator<(const Certificate &a, const Certificate &b) {
    return a.bytes < b.bytes;
  }
};

/// Coarsest equitable refinement of p: every vertex of a class ends up with
/// the same number of neighbors in every class. Deterministic class ordering
/// (split parts replace their parent in place, ordered by neighbor count).
Partition refine(const Graph &g, const Partition &p);

/// Automorphism group and canonical form out of one refinement-
/// individualization search.
struct GraphSymmetry {
  PermGroup group;
  Certificate certificate;
};

GraphSymmetry analyze_symmetry(const Graph &g);

PermGroup automorphism_group(const Graph &g);
Certificate canonical_form(const Graph &g);

/// An isomorphism a -> b (edge-exact witness), or empty if none exists.
std::optional<Perm> are_isomorphic(const Graph &a, const Graph &b);

} // namespace nest
