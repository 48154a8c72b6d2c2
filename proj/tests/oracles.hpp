#pragma once

// Brute-force oracles for the unit and acceptance tests. Everything here is
// deliberately independent of the library's algorithmic paths: backtracking
// and plain enumeration only.

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nest/graph.hpp"
#include "nest/partition.hpp"
#include "nest/perm.hpp"

namespace nest::test {

// All automorphisms by backtracking over partial vertex maps, pruning on
// degree and adjacency consistency. Fine up to ~16 vertices for the graphs
// in this corpus.
inline void oracle_automorphisms_rec(const Graph &g, std::vector<int> &image,
                                     std::vector<char> &used, int depth,
                                     std::vector<Perm> &out) {
  const int n = g.vertex_count();
  if (depth == n) {
    out.emplace_back(image);
    return;
  }
  for (int target = 0; target < n; ++target) {
    if (used[static_cast<std::size_t>(target)])
      continue;
    if (g.degree(depth) != g.degree(target))
      continue;
    bool ok = true;
    for (int prev = 0; prev < depth; ++prev)
      if (g.adjacent(prev, depth) !=
          g.adjacent(image[static_cast<std::size_t>(prev)], target)) {
        ok = false;
        break;
      }
    if (!ok)
      continue;
    image[static_cast<std::size_t>(depth)] = target;
    used[static_cast<std::size_t>(target)] = 1;
    oracle_automorphisms_rec(g, image, used, depth + 1, out);
    used[static_cast<std::size_t>(target)] = 0;
  }
}

inline std::vector<Perm> oracle_automorphisms(const Graph &g) {
  std::vector<int> image(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Perm> out;
  oracle_automorphisms_rec(g, image, used, 0, out);
  return out;
}

// Exhaustive filtering of all n! permutations; only for n <= 10.
inline std::size_t oracle_automorphism_count_filter(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  const auto edge_list = g.edges();
  std::size_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : edge_list)
      if (!g.adjacent(image[static_cast<std::size_t>(u)],
                      image[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    if (ok)
      ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

// Group elements by closure under right multiplication; stops (and fails the
// caller's expectations) beyond `limit` elements.
inline std::set<Perm> oracle_group_elements(int degree,
                                            const std::vector<Perm> &gens,
                                            std::size_t limit = 20000) {
  std::set<Perm> elements{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  while (!queue.empty()) {
    const Perm current = queue.back();
    queue.pop_back();
    for (const Perm &g : gens) {
      Perm next = current * g;
      if (elements.size() > limit)
        return elements;
      if (elements.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return elements;
}

// Exact girth through an independent route: for every edge {u,v}, the
// shortest u-v path with that edge removed closes a shortest cycle through
// the edge.
inline std::optional<int> oracle_girth(const Graph &g) {
  std::optional<int> best;
  const int n = g.vertex_count();
  for (auto [eu, ev] : g.edges()) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{eu};
    dist[static_cast<std::size_t>(eu)] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x)) {
        if (x == eu && y == ev)
          continue; // the removed edge
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[static_cast<std::size_t>(ev)] >= 0) {
      const int cycle = dist[static_cast<std::size_t>(ev)] + 1;
      if (!best || cycle < *best)
        best = cycle;
    }
  }
  return best;
}

inline bool is_equitable(const Graph &g, const Partition &p) {
  for (const auto &cls : p.classes()) {
    for (int target = 0; target < p.class_count(); ++target) {
      int expected = -1;
      for (int v : cls) {
        int count = 0;
        for (int w : p.class_members(target))
          if (g.adjacent(v, w))
            ++count;
        if (expected < 0)
          expected = count;
        else if (count != expected)
          return false;
      }
    }
  }
  return true;
}

inline Perm random_perm(std::mt19937 &rng, int degree) {
  std::vector<int> image(static_cast<std::size_t>(degree));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Perm(image);
}

inline Perm perm_from_cycle(int degree, const std::vector<int> &cycle) {
  std::vector<int> image(static_cast<std::size_t>(degree));
  std::iota(image.begin(), image.end(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    image[static_cast<std::size_t>(cycle[i])] =
        cycle[(i + 1) % cycle.size()];
  return Perm(image);
}

} // namespace nest::test
