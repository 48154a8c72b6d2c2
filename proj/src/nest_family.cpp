#include "nest/nest_family.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nest {

std::string NestParams::to_string() const {
  std::ostringstream out;
  out << n << ',' << a << ',' << b << ',' << c << ',' << k;
  return out.str();
}

NestParams NestParams::parse(const std::string &text) {
  std::istringstream in(text);
  int vals[5];
  char sep;
  for (int i = 0; i < 5; ++i) {
    if (i > 0 && (!(in >> sep) || sep != ','))
      throw std::invalid_argument("expected 'n,a,b,c,k'");
    if (!(in >> vals[i]))
      throw std::invalid_argument("expected 'n,a,b,c,k'");
  }
  std::string rest;
  if (in >> rest)
    throw std::invalid_argument("trailing characters after 'n,a,b,c,k'");
  return validate_params(vals[0], vals[1], vals[2], vals[3], vals[4]);
}

NestParams validate_params(int n, int a, int b, int c, int k) {
  if (n < 4)
    throw std::invalid_argument("n must be at least 4");
  auto reduce = [n](int x) { return ((x % n) + n) % n; };
  a = reduce(a);
  b = reduce(b);
  c = reduce(c);
  k = reduce(k);
  if (a == 0 || b == 0 || c == 0)
    throw std::invalid_argument("spoke offsets a, b, c must be nonzero mod n");
  if (k == 0)
    throw std::invalid_argument("hub offset k must be nonzero mod n");
  if (a == b || a == c || b == c)
    throw std::invalid_argument("spoke offsets a, b, c must be pairwise distinct");
  if (n % 2 == 0 && k == n / 2)
    throw std::invalid_argument("hub offset k must differ from n/2 when n is even");
  return NestParams{n, a, b, c, k};
}

Graph build_nest(const NestParams &p) {
  const int n = p.n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(6 * n));
  std::set<std::pair<int, int>> seen;
  auto add = [&](int u, int v) {
    auto key = std::minmax(u, v);
    if (seen.insert({key.first, key.second}).second)
      edges.emplace_back(key.first, key.second);
  };
  for (int i = 0; i < n; ++i) {
    add(u_vertex(p, i), u_vertex(p, i + 1));
    add(v_vertex(p, i), v_vertex(p, i + p.k));
    add(u_vertex(p, i), v_vertex(p, i));
    add(u_vertex(p, i), v_vertex(p, i + p.a));
    add(u_vertex(p, i), v_vertex(p, i + p.b));
    add(u_vertex(p, i), v_vertex(p, i + p.c));
  }
  if (edges.size() != static_cast<std::size_t>(6 * n))
    throw std::logic_error("Nest construction did not yield 6n edges");
  return Graph(2 * n, edges);
}

Perm rho_perm(const NestParams &p) {
  const int n = p.n;
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    images[static_cast<std::size_t>(i)] = (i + 1) % n;
    images[static_cast<std::size_t>(n + i)] = n + (i + 1) % n;
  }
  return Perm(images);
}

Perm phi_perm(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("phi is defined for odd m >= 3");
  const int n = 2 * m;
  auto red = [n](int x) { return ((x % n) + n) % n; };
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0)
      images[static_cast<std::size_t>(i)] = red(-i);
    else
      images[static_cast<std::size_t>(i)] = n + red(-i + 1);
    if (i % 2 == 0)
      images[static_cast<std::size_t>(n + i)] = red(-i + 1);
    else
      images[static_cast<std::size_t>(n + i)] = n + red(-i + 2);
  }
  return Perm(images);
}

Perm eta_perm(int m) {
  if (m < 2)
    throw std::invalid_argument("eta is defined for m >= 2");
  const int n = 2 * m;
  std::vector<int> images(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    images[static_cast<std::size_t>(i)] = i;
    images[static_cast<std::size_t>(n + i)] = n + (i + m) % n;
  }
  return Perm(images);
}

namespace {

NestParams make_checked(int n, int a, int b, int c, int k) {
  return validate_params(n, a, b, c, k);
}

} // namespace

std::vector<NestParams> symmetric_variants(const NestParams &p) {
  const int n = p.n;
  auto red = [n](int x) { return ((x % n) + n) % n; };
  std::set<NestParams> closure{p};
  std::vector<NestParams> queue{p};
  auto push = [&](int a, int b, int c, int k) {
    NestParams q = make_checked(n, a, b, c, k);
    if (closure.insert(q).second)
      queue.push_back(q);
  };
  while (!queue.empty()) {
    const NestParams q = queue.back();
    queue.pop_back();
    const int abc[3] = {q.a, q.b, q.c};
    int perm_idx[3] = {0, 1, 2};
    do {
      push(abc[perm_idx[0]], abc[perm_idx[1]], abc[perm_idx[2]], q.k);
    } while (std::next_permutation(perm_idx, perm_idx + 3));
    push(q.a, q.b, q.c, red(-q.k));
    push(red(-q.a), red(-q.b), red(-q.c), q.k);
    push(red(-q.a), red(q.b - q.a), red(q.c - q.a), q.k);
  }
  return {closure.begin(), closure.end()};
}

NestParams canonical_variant(const NestParams &p) {
  std::optional<NestParams> best;
  for (const NestParams &q : symmetric_variants(p)) {
    if (!(q.a < q.b && q.b < q.c))
      continue;
    if (!(1 <= q.k && 2 * q.k <= q.n - 1))
      continue;
    if (!best || q < *best)
      best = q;
  }
  if (!best)
    throw std::logic_error("symmetry closure has no normalized member");
  return *best;
}

std::optional<NestParams> quotient_params(const NestParams &p, int d) {
  if (d <= 0 || p.n % d != 0)
    throw std::invalid_argument("d must be a divisor of n");
  if (d >= p.n)
    throw std::invalid_argument("d must be a proper divisor of n");
  const int m = p.n / d;
  if (m < 4)
    return std::nullopt;
  auto red = [m](int x) { return ((x % m) + m) % m; };
  const int a = red(p.a), b = red(p.b), c = red(p.c), k = red(p.k);
  if (a == 0 || b == 0 || c == 0 || k == 0)
    return std::nullopt;
  if (a == b || a == c || b == c)
    return std::nullopt;
  if (m % 2 == 0 && k == m / 2)
    return std::nullopt;
  return NestParams{m, a, b, c, k};
}

} // namespace nest
