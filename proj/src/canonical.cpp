#include "nest/canonical.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace nest {

namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t mix(std::uint64_t h, std::uint64_t value) {
  h ^= value + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

int count_into(const Graph &g, int v, const std::vector<std::uint64_t> &mask) {
  auto row = g.adjacency_row(v);
  int count = 0;
  for (std::size_t w = 0; w < row.size(); ++w)
    count += std::popcount(row[w] & mask[w]);
  return count;
}

std::vector<std::uint64_t> cell_mask(const Graph &g,
                                     const std::vector<int> &cell) {
  std::vector<std::uint64_t> mask(
      static_cast<std::size_t>(g.words_per_row()), 0);
  for (int v : cell)
    mask[static_cast<std::size_t>(v) / 64] |= 1ULL
                                              << (static_cast<unsigned>(v) % 64);
  return mask;
}

// Worklist equitable refinement. Splitters are carried as bit masks so they
// stay valid while the cell list mutates. Enqueuing every fragment of every
// split is more work than Hopcroft's rule but reaches the same fixed point.
void refine_cells(const Graph &g, Cells &cells, std::uint64_t &trace) {
  std::deque<std::vector<std::uint64_t>> work;
  for (const auto &cell : cells)
    work.push_back(cell_mask(g, cell));
  std::vector<std::pair<int, int>> keyed; // (count, vertex)
  while (!work.empty()) {
    const std::vector<std::uint64_t> splitter = std::move(work.front());
    work.pop_front();
    Cells rebuilt;
    rebuilt.reserve(cells.size());
    for (std::size_t pos = 0; pos < cells.size(); ++pos) {
      auto &cell = cells[pos];
      if (cell.size() == 1) {
        rebuilt.push_back(std::move(cell));
        continue;
      }
      keyed.clear();
      bool uniform = true;
      for (int v : cell) {
        const int d = count_into(g, v, splitter);
        if (!keyed.empty() && d != keyed.front().first)
          uniform = false;
        keyed.emplace_back(d, v);
      }
      if (uniform) {
        rebuilt.push_back(std::move(cell));
        continue;
      }
      std::sort(keyed.begin(), keyed.end());
      trace = mix(trace, 0x5eeded ^ (static_cast<std::uint64_t>(pos) << 8));
      std::size_t i = 0;
      while (i < keyed.size()) {
        std::size_t j = i;
        while (j < keyed.size() && keyed[j].first == keyed[i].first)
          ++j;
        std::vector<int> part;
        part.reserve(j - i);
        for (std::size_t t = i; t < j; ++t)
          part.push_back(keyed[t].second);
        trace = mix(trace, static_cast<std::uint64_t>(keyed[i].first));
        trace = mix(trace, static_cast<std::uint64_t>(part.size()));
        work.push_back(cell_mask(g, part));
        rebuilt.push_back(std::move(part));
        i = j;
      }
    }
    cells = std::move(rebuilt);
  }
  trace = mix(trace, static_cast<std::uint64_t>(cells.size()));
}

Cells partition_to_cells(const Partition &p) {
  return p.classes();
}

Partition cells_to_partition(int n, const Cells &cells) {
  return Partition::from_classes(n, cells);
}

// Initial invariant: vertices grouped by degree plus the sorted multiset of
// common-neighbor counts with their neighbors. Kills most non-edge-transitive
// candidates before any branching.
Cells initial_cells(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<std::pair<std::vector<int>, int>> keyed;
  keyed.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> key;
    key.push_back(g.degree(v));
    std::vector<int> counts;
    for (int w : g.neighbors(v))
      counts.push_back(g.common_neighbor_count(v, w));
    std::sort(counts.begin(), counts.end());
    key.insert(key.end(), counts.begin(), counts.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::sort(keyed.begin(), keyed.end());
  Cells cells;
  std::size_t i = 0;
  while (i < keyed.size()) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].first == keyed[i].first)
      ++j;
    std::vector<int> cell;
    for (std::size_t t = i; t < j; ++t)
      cell.push_back(keyed[t].second);
    std::sort(cell.begin(), cell.end());
    cells.push_back(std::move(cell));
    i = j;
  }
  return cells;
}

std::vector<std::uint8_t> leaf_bytes(const Graph &g, const Cells &cells) {
  const int n = g.vertex_count();
  std::vector<int> vertex_at(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < cells.size(); ++i)
    vertex_at[i] = cells[i].front();
  std::vector<std::uint8_t> bytes(
      (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 7) / 8, 0);
  for (int i = 0; i < n; ++i) {
    const int vi = vertex_at[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (g.adjacent(vi, vertex_at[static_cast<std::size_t>(j)])) {
        const std::size_t bit = static_cast<std::size_t>(i) *
                                    static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(j);
        bytes[bit >> 3] |= static_cast<std::uint8_t>(1u << (bit & 7));
      }
    }
  }
  return bytes;
}

Perm leaf_labeling(int n, const Cells &cells) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < cells.size(); ++i)
    images[static_cast<std::size_t>(cells[i].front())] = static_cast<int>(i);
  return Perm(images);
}

bool is_graph_automorphism(const Graph &g, const Perm &p) {
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v)))
      return false;
  return true;
}

class SymmetrySearch {
public:
  explicit SymmetrySearch(const Graph &g) : g_(g), n_(g.vertex_count()) {}

  GraphSymmetry run() {
    Cells cells = initial_cells(g_);
    std::uint64_t trace = 0x517cc1b727220a95ULL;
    refine_cells(g_, cells, trace);
    explore(cells, 0, trace, true, true);
    PermGroup group(n_, gens_);
    return GraphSymmetry{std::move(group),
                         Certificate{best_bytes_, best_perm_}};
  }

private:
  static bool discrete(const Cells &cells) {
    for (const auto &cell : cells)
      if (cell.size() > 1)
        return false;
    return true;
  }

  static std::size_t target_cell(const Cells &cells) {
    std::size_t best = cells.size();
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::size_t s = cells[i].size();
      if (s > 1 && (best == cells.size() || s < best_size)) {
        best = i;
        best_size = s;
      }
    }
    return best;
  }

  // Union-find over vertices for the subgroup generated by the discovered
  // automorphisms that fix the current individualized prefix pointwise.
  std::vector<int> prefix_orbit_reps() {
    std::vector<int> root(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      root[static_cast<std::size_t>(v)] = v;
    auto find = [&](int x) {
      while (root[static_cast<std::size_t>(x)] != x) {
        root[static_cast<std::size_t>(x)] =
            root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
        x = root[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const Perm &gen : gens_) {
      bool fixes_prefix = true;
      for (int p : prefix_)
        if (gen(p) != p) {
          fixes_prefix = false;
          break;
        }
      if (!fixes_prefix)
        continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gen(v));
        if (a != b)
          root[static_cast<std::size_t>(a)] = b;
      }
    }
    std::vector<int> reps(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      reps[static_cast<std::size_t>(v)] = find(v);
    return reps;
  }

  void record_automorphism(const Perm &leaf_lab, const Perm &ref_lab) {
    const Perm gamma = leaf_lab * ref_lab.inverse();
    if (gamma.is_identity())
      return;
    if (!is_graph_automorphism(g_, gamma))
      throw std::logic_error("search produced a non-automorphism");
    if (std::find(gens_.begin(), gens_.end(), gamma) == gens_.end())
      gens_.push_back(gamma);
  }

  void handle_leaf(const Cells &cells, std::size_t depth, bool zeta_ok,
                   bool best_ok) {
    std::vector<std::uint8_t> bytes = leaf_bytes(g_, cells);
    Perm lab = leaf_labeling(n_, cells);
    if (!zeta_set_) {
      zeta_set_ = true;
      zeta_depth_ = depth;
      zeta_bytes_ = bytes;
      zeta_perm_ = lab;
      best_set_ = true;
      best_bytes_ = std::move(bytes);
      best_perm_ = std::move(lab);
      return;
    }
    if (zeta_ok && depth == zeta_depth_ && bytes == zeta_bytes_)
      record_automorphism(lab, zeta_perm_);
    if (!best_ok)
      return;
    if (!best_set_) {
      best_set_ = true;
      best_bytes_ = std::move(bytes);
      best_perm_ = std::move(lab);
      return;
    }
    if (bytes > best_bytes_) {
      best_bytes_ = std::move(bytes);
      best_perm_ = std::move(lab);
    } else if (bytes == best_bytes_) {
      record_automorphism(lab, best_perm_);
    }
  }

  void explore(const Cells &cells, std::size_t depth, std::uint64_t node_inv,
               bool zeta_ok, bool best_ok) {
    if (zeta_ok && !zeta_set_)
      zeta_inv_.push_back(node_inv);
    if (best_ok && !best_set_) {
      best_inv_.resize(depth + 1);
      best_inv_[depth] = node_inv;
    }
    if (discrete(cells)) {
      handle_leaf(cells, depth, zeta_ok, best_ok);
      return;
    }
    const std::size_t pos = target_cell(cells);
    std::vector<int> candidates = cells[pos];
    std::vector<int> processed;
    std::vector<int> reps;
    std::size_t reps_gen_count = static_cast<std::size_t>(-1);
    for (int v : candidates) {
      if (gens_.size() != reps_gen_count) {
        reps = prefix_orbit_reps();
        reps_gen_count = gens_.size();
      }
      bool skip = false;
      for (int w : processed)
        if (reps[static_cast<std::size_t>(w)] ==
            reps[static_cast<std::size_t>(v)]) {
          skip = true;
          break;
        }
      if (skip)
        continue;
      processed.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == pos) {
          child.push_back({v});
          std::vector<int> rest;
          rest.reserve(cells[i].size() - 1);
          for (int w : cells[i])
            if (w != v)
              rest.push_back(w);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      std::uint64_t child_inv =
          mix(0x2545f4914f6cdd1dULL, static_cast<std::uint64_t>(pos));
      refine_cells(g_, child, child_inv);

      bool child_zeta;
      if (!zeta_set_) {
        child_zeta = true; // first descent defines the zeta path
      } else {
        child_zeta = zeta_ok && depth + 1 < zeta_inv_.size() &&
                     child_inv == zeta_inv_[depth + 1];
      }
      bool child_best;
      if (!best_set_) {
        child_best = true; // defining or rewriting the best path
      } else if (!best_ok) {
        child_best = false;
      } else if (depth + 1 >= best_inv_.size() ||
                 child_inv > best_inv_[depth + 1]) {
        // Strictly better node invariant: this subtree supersedes the best
        // leaf; invalidate it and let the subtree re-establish it.
        best_set_ = false;
        child_best = true;
      } else {
        child_best = (child_inv == best_inv_[depth + 1]);
      }
      if (!child_zeta && !child_best)
        continue;
      prefix_.push_back(v);
      explore(child, depth + 1, child_inv, child_zeta, child_best);
      prefix_.pop_back();
    }
  }

  const Graph &g_;
  int n_;
  std::vector<Perm> gens_;
  std::vector<int> prefix_;

  bool zeta_set_ = false;
  std::size_t zeta_depth_ = 0;
  std::vector<std::uint64_t> zeta_inv_;
  std::vector<std::uint8_t> zeta_bytes_;
  Perm zeta_perm_;

  bool best_set_ = false;
  std::vector<std::uint64_t> best_inv_;
  std::vector<std::uint8_t> best_bytes_;
  Perm best_perm_;
};

} // namespace

std::string Certificate::hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Partition refine(const Graph &g, const Partition &p) {
  if (p.point_count() != g.vertex_count())
    throw std::invalid_argument("partition domain mismatch");
  Cells cells = partition_to_cells(p);
  std::uint64_t trace = 0;
  refine_cells(g, cells, trace);
  return cells_to_partition(g.vertex_count(), cells);
}

GraphSymmetry analyze_symmetry(const Graph &g) {
  SymmetrySearch search(g);
  GraphSymmetry result = search.run();
  for (const Perm &gen : result.group.generators())
    if (!is_graph_automorphism(g, gen))
      throw std::logic_error("automorphism generator does not preserve edges");
  return result;
}

PermGroup automorphism_group(const Graph &g) {
  return analyze_symmetry(g).group;
}

Certificate canonical_form(const Graph &g) {
  return analyze_symmetry(g).certificate;
}

std::optional<Perm> are_isomorphic(const Graph &a, const Graph &b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  const Certificate ca = canonical_form(a);
  const Certificate cb = canonical_form(b);
  if (ca.bytes != cb.bytes)
    return std::nullopt;
  const Perm witness = ca.labeling * cb.labeling.inverse();
  for (auto [u, v] : a.edges())
    if (!b.adjacent(witness(u), witness(v)))
      throw std::logic_error("certificate equality without isomorphism");
  return witness;
}

} // namespace nest
