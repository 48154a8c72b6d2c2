#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nest/graph.hpp"
#include "nest/perm.hpp"

namespace nest {

/// Parameters (n; a,b,c; k) of a Nest graph. Offsets live in Z_n; validity
/// requires a, b, c, k nonzero, a, b, c pairwise distinct, and k != n/2 when
/// n is even. Instances are only produced by validate(), so they are always
/// well-formed.
struct NestParams {
  int n = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  int k = 0;

  friend bool operator==(const NestParams &x, const NestParams &y) {
    return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.k == y.k;
  }
  friend bool operator!=(const NestParams &x, const NestParams &y) {
    return !(x == y);
  }
  friend bool operator<(const NestParams &x, const NestParams &y) {
    if (x.n != y.n)
      return x.n < y.n;
    if (x.a != y.a)
      return x.a < y.a;
    if (x.b != y.b)
      return x.b < y.b;
    if (x.c != y.c)
      return x.c < y.c;
    return x.k < y.k;
  }

  /// "n,a,b,c,k" as used in CLI flags.
  std::string to_string() const;
  static NestParams parse(const std::string &text);
};

/// Normalizes residues mod n and checks every construction invariant;
/// throws std::invalid_argument naming the violated rule.
NestParams validate_params(int n, int a, int b, int c, int k);

/// Vertex indexing fixed project-wide: u_i -> i, v_i -> n + i.
inline int u_vertex(const NestParams &p, int i) {
  return ((i % p.n) + p.n) % p.n;
}
inline int v_vertex(const NestParams &p, int i) {
  return p.n + ((i % p.n) + p.n) % p.n;
}

/// The Nest graph on 2n vertices: rim edges {u_i, u_{i+1}}, hub edges
/// {v_i, v_{i+k}}, and spokes {u_i, v_{i+s}} for s in {0, a, b, c}.
Graph build_nest(const NestParams &p);

/// The rotation (u_0 ... u_{n-1})(v_0 ... v_{n-1}); an automorphism of
/// build_nest(p) for every valid p.
Perm rho_perm(const NestParams &p);

/// The involutions of the arc-transitive family Nest(2m; 2, m, 2+m; 1),
/// m odd >= 3, on 4m points.
Perm phi_perm(int m);

/// u_i -> u_i, v_i -> v_{i+m} on 4m points; an automorphism of every
/// Nest(2m; a, m, a+m; k). Requires m >= 2.
Perm eta_perm(int m);

/// Closure of {p} under the parameter maps that preserve the isomorphism
/// class: permuting {a,b,c}, k -> -k, (a,b,c) -> (-a,-b,-c) and
/// (a,b,c) -> (-a, b-a, c-a). Sorted, duplicates removed.
std::vector<NestParams> symmetric_variants(const NestParams &p);

/// Lexicographically least member of symmetric_variants(p) that satisfies
/// a < b < c and 1 <= k <= (n-1)/2; the census dedup key.
NestParams canonical_variant(const NestParams &p);

/// Parameters of the quotient by the cyclic block system of size d (a proper
/// divisor of n): reduction mod n/d, empty if the images are not valid.
std::optional<NestParams> quotient_params(const NestParams &p, int d);

} // namespace nest
