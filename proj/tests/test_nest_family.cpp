#include <doctest.h>

#include <set>

#include "nest/canonical.hpp"
#include "nest/nest_family.hpp"
#include "nest/perm_group.hpp"
#include "oracles.hpp"

using nest::NestParams;

TEST_CASE("validation accepts the classified tuples and rejects bad ones") {
  CHECK_NOTHROW(nest::validate_params(5, 1, 2, 3, 2));
  CHECK_NOTHROW(nest::validate_params(12, 2, 4, 8, 5));
  CHECK_THROWS_WITH_AS(nest::validate_params(8, 1, 2, 4, 4),
                       "hub offset k must differ from n/2 when n is even",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(nest::validate_params(6, 2, 2, 3, 1),
                       "spoke offsets a, b, c must be pairwise distinct",
                       std::invalid_argument);
  CHECK_THROWS_AS(nest::validate_params(3, 1, 2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(nest::validate_params(6, 0, 2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(nest::validate_params(6, 1, 2, 3, 0), std::invalid_argument);
  // residues are normalized mod n
  const NestParams p = nest::validate_params(6, -1, 2, 3, 7);
  CHECK(p.a == 5);
  CHECK(p.k == 1);
}

TEST_CASE("parse mirrors to_string") {
  const NestParams p = NestParams::parse("12,2,4,8,5");
  CHECK(p == nest::validate_params(12, 2, 4, 8, 5));
  CHECK(p.to_string() == "12,2,4,8,5");
  CHECK_THROWS(NestParams::parse("12,2,4,8"));
  CHECK_THROWS(NestParams::parse("12,2,4,8,5,9"));
  CHECK_THROWS(NestParams::parse("a,b,c,d,e"));
}

TEST_CASE("neighborhoods follow the three edge types") {
  const NestParams p = nest::validate_params(12, 2, 4, 8, 5);
  const nest::Graph g = nest::build_nest(p);
  const std::set<int> u0(g.neighbors(nest::u_vertex(p, 0)).begin(),
                         g.neighbors(nest::u_vertex(p, 0)).end());
  const std::set<int> expected_u0 = {
      nest::u_vertex(p, 1),  nest::u_vertex(p, 11), nest::v_vertex(p, 0),
      nest::v_vertex(p, 2),  nest::v_vertex(p, 4),  nest::v_vertex(p, 8)};
  CHECK(u0 == expected_u0);
  const std::set<int> v0(g.neighbors(nest::v_vertex(p, 0)).begin(),
                         g.neighbors(nest::v_vertex(p, 0)).end());
  const std::set<int> expected_v0 = {
      nest::v_vertex(p, 5), nest::v_vertex(p, 7), nest::u_vertex(p, 0),
      nest::u_vertex(p, 10), nest::u_vertex(p, 8), nest::u_vertex(p, 4)};
  CHECK(v0 == expected_v0);
}

TEST_CASE("the rim induces the n-cycle on every sample") {
  for (const char *text : {"5,1,2,3,2", "8,1,3,4,3", "12,2,4,8,5",
                           "9,2,4,7,3", "16,1,3,5,7"}) {
    const NestParams p = NestParams::parse(text);
    const nest::Graph g = nest::build_nest(p);
    CHECK(g.regular_valency() == 6);
    CHECK(g.edge_count() == 6 * p.n);
    CHECK(g.is_connected());
    for (int i = 0; i < p.n; ++i)
      for (int j = i + 1; j < p.n; ++j) {
        const bool rim = (j - i == 1) || (i == 0 && j == p.n - 1);
        CHECK(g.adjacent(i, j) == rim);
      }
  }
}

TEST_CASE("rho is always an automorphism of order n") {
  for (const char *text : {"5,1,2,3,2", "8,1,2,5,3", "12,2,4,8,5",
                           "11,2,5,8,4"}) {
    const NestParams p = NestParams::parse(text);
    const nest::Graph g = nest::build_nest(p);
    const nest::Perm rho = nest::rho_perm(p);
    CHECK(rho.order() == p.n);
    for (auto [u, v] : g.edges())
      CHECK(g.adjacent(rho(u), rho(v)));
  }
}

TEST_CASE("phi and eta act as stated") {
  const nest::Perm eta3 = nest::eta_perm(3);
  const NestParams p6 = nest::validate_params(6, 2, 3, 5, 1);
  for (int i = 0; i < 6; ++i) {
    CHECK(eta3(nest::u_vertex(p6, i)) == nest::u_vertex(p6, i));
    CHECK(eta3(nest::v_vertex(p6, i)) == nest::v_vertex(p6, i + 3));
  }
  const nest::Perm phi3 = nest::phi_perm(3);
  CHECK(phi3(nest::u_vertex(p6, 1)) == nest::v_vertex(p6, 0));
  CHECK((phi3 * phi3).is_identity());
  CHECK((eta3 * eta3).is_identity());
  CHECK_THROWS(nest::phi_perm(4));
  CHECK_THROWS(nest::eta_perm(1));
}

TEST_CASE("phi and eta are automorphisms of the odd-m family") {
  for (int m : {3, 5, 7}) {
    const NestParams p = nest::validate_params(2 * m, 2, m, 2 + m, 1);
    const nest::Graph g = nest::build_nest(p);
    for (const nest::Perm &gamma : {nest::phi_perm(m), nest::eta_perm(m)})
      for (auto [u, v] : g.edges())
        CHECK(g.adjacent(gamma(u), gamma(v)));
  }
}

TEST_CASE("eta works for the whole a, m, a+m parameter shape") {
  const NestParams p = nest::validate_params(10, 1, 5, 6, 2);
  const nest::Graph g = nest::build_nest(p);
  const nest::Perm eta = nest::eta_perm(5);
  for (auto [u, v] : g.edges())
    CHECK(g.adjacent(eta(u), eta(v)));
}

TEST_CASE("the odd-m family generates a group of order 48m with dihedral "
          "stabilizer") {
  for (int m : {3, 5}) {
    const NestParams p = nest::validate_params(2 * m, 2, m, 2 + m, 1);
    const nest::PermGroup group(
        4 * m, {nest::rho_perm(p), nest::phi_perm(m), nest::eta_perm(m)});
    CHECK(group.order() == static_cast<nest::GroupOrder>(48 * m));
    const nest::PermGroup stab = group.point_stabilizer(0);
    CHECK(stab.order() == 12);
    const nest::Perm product = nest::phi_perm(m) * nest::eta_perm(m);
    CHECK(product.order() == 6);
    CHECK(stab.contains(nest::phi_perm(m)));
    CHECK(stab.contains(nest::eta_perm(m)));
  }
}

TEST_CASE("symmetric variants contain the stated members") {
  const NestParams p = nest::validate_params(5, 1, 2, 3, 2);
  const auto closure = nest::symmetric_variants(p);
  auto contains = [&](int n, int a, int b, int c, int k) {
    return std::find(closure.begin(), closure.end(),
                     nest::validate_params(n, a, b, c, k)) != closure.end();
  };
  CHECK(contains(5, 4, 3, 2, 2)); // negation
  CHECK(contains(5, 4, 1, 2, 2)); // shift by a
  CHECK(contains(5, 1, 2, 3, 3)); // k -> -k

  // closure is stable under every listed map
  for (const NestParams &q : closure) {
    const auto closure_q = nest::symmetric_variants(q);
    CHECK(closure_q == closure);
  }
}

TEST_CASE("all variants share one certificate") {
  for (const char *text : {"5,1,2,3,2", "8,1,2,5,3", "10,2,5,7,1"}) {
    const NestParams p = NestParams::parse(text);
    const auto cert = nest::canonical_form(nest::build_nest(p));
    for (const NestParams &q : nest::symmetric_variants(p))
      CHECK(nest::canonical_form(nest::build_nest(q)) == cert);
  }
}

TEST_CASE("quotient parameters reduce modulo n/d") {
  const NestParams p16 = nest::validate_params(16, 1, 3, 5, 7);
  const auto q = nest::quotient_params(p16, 2);
  REQUIRE(q.has_value());
  CHECK(*q == nest::validate_params(8, 1, 3, 5, 7));

  const NestParams p12 = nest::validate_params(12, 2, 4, 8, 5);
  CHECK_FALSE(nest::quotient_params(p12, 2)); // 2,4,8 collide mod 6
  CHECK_FALSE(nest::quotient_params(p12, 3)); // 4 and 8 vanish mod 4
  CHECK_THROWS(nest::quotient_params(p12, 5));
  CHECK_THROWS(nest::quotient_params(p12, 12));
}
