#include "nest/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include <json.hpp>

namespace nest {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>> &edges)
    : vertex_count_(vertex_count) {
  if (vertex_count <= 0)
    throw std::invalid_argument("graph needs at least one vertex");
  words_ = (vertex_count + 63) / 64;
  adj_.assign(static_cast<std::size_t>(vertex_count), {});
  bits_.assign(static_cast<std::size_t>(vertex_count) *
                   static_cast<std::size_t>(words_),
               0);
  edge_count_ = 0;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("loops are not allowed");
    if (adjacent(u, v))
      throw std::invalid_argument("duplicate edge");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    ++edge_count_;
  }
  for (auto &row : adj_)
    std::sort(row.begin(), row.end());
}

const std::vector<int> &Graph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count_)
    throw std::out_of_range("vertex out of range");
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
    throw std::out_of_range("vertex out of range");
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >>
          (v % 64)) &
         1ULL;
}

std::optional<int> Graph::regular_valency() const {
  const int d = degree(0);
  for (int v = 1; v < vertex_count_; ++v)
    if (degree(v) != d)
      return std::nullopt;
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::span<const std::uint64_t> Graph::adjacency_row(int v) const {
  if (v < 0 || v >= vertex_count_)
    throw std::out_of_range("vertex out of range");
  return {bits_.data() + static_cast<std::size_t>(v) * words_,
          static_cast<std::size_t>(words_)};
}

int Graph::common_neighbor_count(int u, int v) const {
  auto ru = adjacency_row(u);
  auto rv = adjacency_row(v);
  int count = 0;
  for (int w = 0; w < words_; ++w)
    count += std::popcount(ru[static_cast<std::size_t>(w)] &
                           rv[static_cast<std::size_t>(w)]);
  return count;
}

std::vector<int> Graph::common_neighbors(int u, int v) const {
  if (u == v)
    throw std::invalid_argument("common_neighbors needs distinct vertices");
  auto ru = adjacency_row(u);
  auto rv = adjacency_row(v);
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word =
        ru[static_cast<std::size_t>(w)] & rv[static_cast<std::size_t>(w)];
    while (word) {
      const int bit = std::countr_zero(word);
      out.push_back(w * 64 + bit);
      word &= word - 1;
    }
  }
  return out;
}

bool Graph::is_connected() const {
  std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        queue.push_back(v);
      }
  }
  return reached == vertex_count_;
}

std::optional<int> Graph::girth() const {
  // BFS from every vertex; a non-tree edge {x,y} seen from root r bounds a
  // cycle of length dist(x)+dist(y)+1, and the bound is attained when r lies
  // on a shortest cycle. Depth is capped by the best cycle found so far.
  int best = vertex_count_ + 1;
  bool found = false;
  std::vector<int> dist(static_cast<std::size_t>(vertex_count_));
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  for (int r = 0; r < vertex_count_; ++r) {
    if (found && best == 3)
      break;
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{r};
    dist[static_cast<std::size_t>(r)] = 0;
    const int depth_cap = found ? best / 2 : vertex_count_;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (dist[static_cast<std::size_t>(u)] >= depth_cap)
        continue;
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] =
              dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          const int len = dist[static_cast<std::size_t>(u)] +
                          dist[static_cast<std::size_t>(v)] + 1;
          if (!found || len < best) {
            best = len;
            found = true;
          }
        }
      }
    }
  }
  if (!found)
    return std::nullopt;
  return best;
}

Graph Graph::relabeled(const Perm &p) const {
  if (p.degree() != vertex_count_)
    throw std::invalid_argument("relabeling degree mismatch");
  std::vector<std::pair<int, int>> renamed;
  renamed.reserve(static_cast<std::size_t>(edge_count_));
  for (auto [u, v] : edges())
    renamed.emplace_back(p(u), p(v));
  return Graph(vertex_count_, renamed);
}

std::string Graph::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = vertex_count_;
  nlohmann::ordered_json edge_list = nlohmann::ordered_json::array();
  for (auto [u, v] : edges())
    edge_list.push_back({u, v});
  j["edges"] = std::move(edge_list);
  return j.dump();
}

Graph Graph::from_json(const std::string &text) {
  const auto j = nlohmann::json::parse(text);
  const int n = j.at("vertices").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto &e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(n, edges);
}

Partition relation_partition(const Graph &g, int s) {
  const int n = g.vertex_count();
  // Union-find closure of the relation, then exhaustive verification that
  // every intra-class pair is actually related (transitivity check).
  std::vector<int> root(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    root[static_cast<std::size_t>(v)] = v;
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] =
          root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto related = [&](int u, int v) {
    return g.common_neighbor_count(u, v) == s;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (related(u, v))
        root[static_cast<std::size_t>(find(u))] = find(v);
  std::vector<std::vector<int>> classes;
  std::vector<int> class_index(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (class_index[static_cast<std::size_t>(r)] < 0) {
      class_index[static_cast<std::size_t>(r)] =
          static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(class_index[static_cast<std::size_t>(r)])]
        .push_back(v);
  }
  for (const auto &cls : classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (!related(cls[i], cls[j]))
          throw std::domain_error(
              "common-neighbor relation is not an equivalence");
  return Partition::from_classes(n, std::move(classes));
}

Graph quotient(const Graph &g, const Partition &p) {
  if (p.point_count() != g.vertex_count())
    throw std::invalid_argument("partition domain mismatch");
  const int b = p.class_count();
  std::vector<std::pair<int, int>> edges;
  std::vector<char> seen(static_cast<std::size_t>(b) *
                             static_cast<std::size_t>(b),
                         0);
  for (auto [u, v] : g.edges()) {
    const int cu = p.class_of(u);
    const int cv = p.class_of(v);
    if (cu == cv)
      continue;
    const int lo = std::min(cu, cv);
    const int hi = std::max(cu, cv);
    auto &flag = seen[static_cast<std::size_t>(lo) * b + hi];
    if (!flag) {
      flag = 1;
      edges.emplace_back(lo, hi);
    }
  }
  return Graph(b, edges);
}

std::optional<int> cover_index(const Graph &g, const Partition &p) {
  if (p.point_count() != g.vertex_count())
    throw std::invalid_argument("partition domain mismatch");
  std::optional<int> r;
  auto count_into = [&](int u, int cls) {
    int count = 0;
    for (int w : p.class_members(cls))
      if (g.adjacent(u, w))
        ++count;
    return count;
  };
  for (auto [u, v] : g.edges()) {
    if (p.class_of(u) == p.class_of(v))
      return std::nullopt;
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      const int count = count_into(x, p.class_of(y));
      if (!r)
        r = count;
      else if (*r != count)
        return std::nullopt;
    }
  }
  return r;
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1)
    throw std::invalid_argument("complete graph needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("bipartition parts must be non-empty");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      edges.emplace_back(i, a + j);
  return Graph(a + b, edges);
}

namespace {

// 2-subsets of {0..4} in lexicographic order.
std::vector<std::pair<int, int>> two_subsets_of_five() {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      subsets.emplace_back(i, j);
  return subsets;
}

} // namespace

Graph petersen() {
  const auto subsets = two_subsets_of_five();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const auto [a, b] = subsets[i];
      const auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(10, edges);
}

Graph petersen_complement() {
  const auto subsets = two_subsets_of_five();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const auto [a, b] = subsets[i];
      const auto [c, d] = subsets[j];
      if (!(a != c && a != d && b != c && b != d))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(10, edges);
}

Graph hamming_2_4() {
  // Vertices are pairs (x, y) in {0..3}^2, adjacent when they differ in
  // exactly one coordinate.
  std::vector<std::pair<int, int>> edges;
  auto id = [](int x, int y) { return 4 * x + y; };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      for (int x2 = x + 1; x2 < 4; ++x2)
        edges.emplace_back(id(x, y), id(x2, y));
      for (int y2 = y + 1; y2 < 4; ++y2)
        edges.emplace_back(id(x, y), id(x, y2));
    }
  return Graph(16, edges);
}

Graph shrikhande() {
  std::vector<std::pair<int, int>> edges;
  auto id = [](int x, int y) { return 4 * ((x % 4 + 4) % 4) + ((y % 4 + 4) % 4); };
  const std::vector<std::pair<int, int>> connection = {
      {1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<char> seen(16 * 16, 0);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (auto [dx, dy] : connection) {
        const int u = id(x, y);
        const int v = id(x + dx, y + dy);
        const int lo = std::min(u, v);
        const int hi = std::max(u, v);
        auto &flag = seen[static_cast<std::size_t>(lo) * 16 + hi];
        if (!flag) {
          flag = 1;
          edges.emplace_back(lo, hi);
        }
      }
  return Graph(16, edges);
}

} // namespace nest
