#include "nest/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nest/canonical.hpp"

namespace nest {

namespace {

void check_generators_preserve_edges(const Graph &g, const PermGroup &grp) {
  if (grp.degree() != g.vertex_count())
    throw std::invalid_argument("group degree does not match vertex count");
  for (const Perm &gen : grp.generators())
    for (auto [u, v] : g.edges())
      if (!g.adjacent(gen(u), gen(v)))
        throw std::invalid_argument("generator is not a graph automorphism");
}

void check_transitive(const PermGroup &grp) {
  if (!grp.is_transitive())
    throw std::invalid_argument("group is not transitive");
}

} // namespace

bool is_vertex_transitive(const Graph &g, const PermGroup &grp) {
  check_generators_preserve_edges(g, grp);
  return static_cast<int>(grp.orbit(0).size()) == g.vertex_count();
}

bool is_edge_transitive(const Graph &g, const PermGroup &grp) {
  check_generators_preserve_edges(g, grp);
  const auto edge_list = g.edges();
  if (edge_list.empty())
    return true;
  std::map<std::pair<int, int>, int> edge_id;
  for (std::size_t i = 0; i < edge_list.size(); ++i)
    edge_id[edge_list[i]] = static_cast<int>(i);
  std::vector<char> seen(edge_list.size(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto [u, v] = edge_list[static_cast<std::size_t>(queue.back())];
    queue.pop_back();
    for (const Perm &gen : grp.generators()) {
      const int a = gen(u), b = gen(v);
      const int id = edge_id.at({std::min(a, b), std::max(a, b)});
      if (!seen[static_cast<std::size_t>(id)]) {
        seen[static_cast<std::size_t>(id)] = 1;
        ++reached;
        queue.push_back(id);
      }
    }
  }
  return reached == edge_list.size();
}

bool is_arc_transitive(const Graph &g, const PermGroup &grp) {
  check_generators_preserve_edges(g, grp);
  const int n = g.vertex_count();
  const auto edge_list = g.edges();
  if (edge_list.empty())
    return true;
  auto arc_id = [n](int u, int v) {
    return static_cast<long long>(u) * n + v;
  };
  std::set<long long> seen;
  std::vector<std::pair<int, int>> queue{edge_list.front()};
  seen.insert(arc_id(edge_list.front().first, edge_list.front().second));
  while (!queue.empty()) {
    const auto [u, v] = queue.back();
    queue.pop_back();
    for (const Perm &gen : grp.generators()) {
      const int a = gen(u), b = gen(v);
      if (seen.insert(arc_id(a, b)).second)
        queue.emplace_back(a, b);
    }
  }
  return seen.size() == 2 * edge_list.size();
}

CoreProfile is_core_free(const Graph &g, const NestParams &p) {
  if (g.vertex_count() != 2 * p.n)
    throw std::invalid_argument("graph does not match the parameters");
  const PermGroup aut = automorphism_group(g);
  const CyclicCore core = cyclic_core(aut, rho_perm(p));
  return CoreProfile{core.order == 1, core.order};
}

std::vector<int> minimal_block_through(const PermGroup &grp, int alpha,
                                       int beta) {
  check_transitive(grp);
  const int n = grp.degree();
  if (alpha < 0 || alpha >= n || beta < 0 || beta >= n || alpha == beta)
    throw std::invalid_argument("need two distinct points in range");

  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(
          parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<int> rep(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    rep[static_cast<std::size_t>(i)] = i;

  parent[static_cast<std::size_t>(find(beta))] = find(alpha);
  rep[static_cast<std::size_t>(find(alpha))] = alpha;
  std::vector<int> queue{beta};
  while (!queue.empty()) {
    const int gamma = queue.back();
    queue.pop_back();
    const int delta = rep[static_cast<std::size_t>(find(gamma))];
    for (const Perm &gen : grp.generators()) {
      const int a = gen(gamma);
      const int b = gen(delta);
      const int ra = find(a);
      const int rb = find(b);
      if (ra != rb) {
        // merge class of a into class of b; the absorbed representative
        // still has to be processed
        const int absorbed = rep[static_cast<std::size_t>(ra)];
        parent[static_cast<std::size_t>(ra)] = rb;
        queue.push_back(absorbed);
      }
    }
  }
  std::vector<int> block;
  const int root = find(alpha);
  for (int x = 0; x < n; ++x)
    if (find(x) == root)
      block.push_back(x);
  return block;
}

std::vector<BlockSystemInfo>
minimal_block_systems(const PermGroup &grp, int base_point,
                      std::optional<int> nest_n) {
  check_transitive(grp);
  const int n = grp.degree();
  if (base_point < 0 || base_point >= n)
    throw std::out_of_range("base point out of range");
  if (nest_n && 2 * *nest_n != n)
    throw std::invalid_argument("nest_n does not match the degree");

  std::set<std::vector<int>> candidates;
  for (int beta = 0; beta < n; ++beta) {
    if (beta == base_point)
      continue;
    std::vector<int> block = minimal_block_through(grp, base_point, beta);
    if (static_cast<int>(block.size()) < n)
      candidates.insert(std::move(block));
  }
  // keep blocks with no strictly smaller candidate inside them
  std::vector<std::vector<int>> minimal;
  for (const auto &block : candidates) {
    bool contains_smaller = false;
    for (const auto &other : candidates) {
      if (other.size() >= block.size())
        continue;
      if (std::includes(block.begin(), block.end(), other.begin(),
                        other.end())) {
        contains_smaller = true;
        break;
      }
    }
    if (!contains_smaller)
      minimal.push_back(block);
  }

  std::vector<BlockSystemInfo> out;
  for (const auto &block : minimal) {
    // the system is the orbit of the block under the group
    std::set<std::vector<int>> blocks{block};
    std::vector<std::vector<int>> queue{block};
    while (!queue.empty()) {
      const std::vector<int> current = std::move(queue.back());
      queue.pop_back();
      for (const Perm &gen : grp.generators()) {
        std::vector<int> image;
        image.reserve(current.size());
        for (int x : current)
          image.push_back(gen(x));
        std::sort(image.begin(), image.end());
        if (blocks.insert(image).second)
          queue.push_back(std::move(image));
      }
    }
    Partition partition = Partition::from_classes(
        n, std::vector<std::vector<int>>(blocks.begin(), blocks.end()));

    BlockSystemInfo info;
    info.block_size = static_cast<int>(block.size());
    if (nest_n) {
      bool cyclic = true;
      for (const auto &cls : partition.classes()) {
        const bool in_u = cls.back() < *nest_n;
        const bool in_v = cls.front() >= *nest_n;
        if (!in_u && !in_v) {
          cyclic = false;
          break;
        }
      }
      info.cyclic = cyclic;
    }
    const InducedAction action = induced_action(grp, partition);
    info.kernel_order = action.kernel.order();
    info.normal = action.kernel.orbits().same_classes(partition);
    info.partition = std::move(partition);
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(),
            [](const BlockSystemInfo &x, const BlockSystemInfo &y) {
              if (x.block_size != y.block_size)
                return x.block_size < y.block_size;
              return x.partition.classes() < y.partition.classes();
            });
  return out;
}

bool is_primitive(const PermGroup &grp) {
  check_transitive(grp);
  const int n = grp.degree();
  for (int beta = 1; beta < n; ++beta)
    if (static_cast<int>(minimal_block_through(grp, 0, beta).size()) < n)
      return false;
  return true;
}

bool lucchini_check(const PermGroup &grp, const Perm &rho) {
  if (!grp.contains(rho))
    throw std::invalid_argument("rho is not an element of grp");
  const CyclicCore core = cyclic_core(grp, rho);
  const GroupOrder rho_order = static_cast<GroupOrder>(rho.order());
  if (core.order != 1 || grp.order() == rho_order)
    return true;
  return rho_order * rho_order < grp.order();
}

} // namespace nest
