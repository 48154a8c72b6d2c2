#include <doctest.h>

#include <algorithm>
#include <set>

#include "nest/canonical.hpp"
#include "nest/nest_family.hpp"
#include "nest/symmetry.hpp"
#include "oracles.hpp"

using nest::NestParams;
using nest::Perm;
using nest::PermGroup;
using nest::test::perm_from_cycle;

TEST_CASE("transitivity flags of a cycle") {
  const nest::Graph c6 = nest::cycle_graph(6);
  const PermGroup aut = nest::automorphism_group(c6);
  CHECK(nest::is_vertex_transitive(c6, aut));
  CHECK(nest::is_edge_transitive(c6, aut));
  CHECK(nest::is_arc_transitive(c6, aut));
}

TEST_CASE("non-automorphism generators are rejected") {
  const nest::Graph path(3, {{0, 1}, {1, 2}});
  const PermGroup bogus(3, {perm_from_cycle(3, {0, 1})});
  CHECK_THROWS(nest::is_vertex_transitive(path, bogus));
}

TEST_CASE("the even-m family member fails edge-transitivity") {
  const NestParams p = nest::validate_params(24, 2, 12, 14, 1);
  const nest::Graph g = nest::build_nest(p);
  const PermGroup aut = nest::automorphism_group(g);
  CHECK_FALSE(nest::is_edge_transitive(g, aut));
}

TEST_CASE("the fourth classified graph is arc-transitive") {
  const NestParams p = nest::validate_params(12, 2, 4, 8, 5);
  const nest::Graph g = nest::build_nest(p);
  const PermGroup aut = nest::automorphism_group(g);
  CHECK(nest::is_edge_transitive(g, aut));
  CHECK(nest::is_arc_transitive(g, aut));
  CHECK(nest::is_vertex_transitive(g, aut));
}

TEST_CASE("core-freeness of the classified graphs") {
  {
    const NestParams p = nest::validate_params(5, 1, 2, 3, 2);
    const auto profile = nest::is_core_free(nest::build_nest(p), p);
    CHECK(profile.core_free);
    CHECK(profile.core_order == 1);
  }
  {
    const NestParams p = nest::validate_params(6, 2, 3, 5, 1);
    const auto profile = nest::is_core_free(nest::build_nest(p), p);
    CHECK_FALSE(profile.core_free);
    CHECK(profile.core_order == 3);
  }
  {
    const NestParams p = nest::validate_params(12, 2, 4, 8, 5);
    const auto profile = nest::is_core_free(nest::build_nest(p), p);
    CHECK(profile.core_free);
  }
}

TEST_CASE("the n=6 core matches a by-hand divisor scan") {
  // independent route: enumerate all 144 automorphisms by backtracking and
  // conjugate each power of rho by each of them
  const NestParams p = nest::validate_params(6, 2, 3, 5, 1);
  const nest::Graph g = nest::build_nest(p);
  const auto all_autos = nest::test::oracle_automorphisms(g);
  const Perm rho = nest::rho_perm(p);
  long long best = 1;
  for (long long d : {1LL, 2LL, 3LL, 6LL}) {
    const Perm generator = rho.pow(6 / d);
    std::set<Perm> subgroup;
    Perm power(12);
    for (long long i = 0; i < d; ++i) {
      power = power * generator;
      subgroup.insert(power);
    }
    bool normal = true;
    for (const Perm &g_elt : all_autos)
      if (!subgroup.count(g_elt.inverse() * generator * g_elt)) {
        normal = false;
        break;
      }
    if (normal)
      best = std::max(best, d);
  }
  CHECK(best == 3);
  const auto core = nest::cyclic_core(nest::automorphism_group(g), rho);
  CHECK(core.order == best);
}

TEST_CASE("the rim stabilizer of the m=3 family member is exactly <eta>") {
  const NestParams p = nest::validate_params(6, 2, 3, 5, 1);
  const PermGroup aut = nest::automorphism_group(nest::build_nest(p));
  const PermGroup stab = aut.pointwise_stabilizer({0, 1, 2, 3, 4, 5});
  CHECK(stab.order() == 2);
  CHECK(stab.contains(nest::eta_perm(3)));
  // independent route: count backtracked automorphisms fixing the rim
  std::size_t fixing = 0;
  for (const Perm &gamma :
       nest::test::oracle_automorphisms(nest::build_nest(p))) {
    bool fixes = true;
    for (int i = 0; i < 6; ++i)
      if (gamma(i) != i)
        fixes = false;
    if (fixes)
      ++fixing;
  }
  CHECK(fixing == 2);
}

TEST_CASE("named reference graphs are vertex-transitive with known orders") {
  struct Case {
    nest::Graph graph;
    std::uint64_t order;
  };
  const std::vector<Case> cases = {{nest::petersen_complement(), 120},
                                   {nest::hamming_2_4(), 1152},
                                   {nest::shrikhande(), 192}};
  for (const auto &c : cases) {
    const PermGroup aut = nest::automorphism_group(c.graph);
    CHECK(aut.order() == c.order);
    CHECK(nest::is_vertex_transitive(c.graph, aut));
  }
}

TEST_CASE("rho generates a non-normal subgroup for the Petersen complement") {
  const NestParams p = nest::validate_params(5, 1, 2, 3, 2);
  const PermGroup aut = nest::automorphism_group(nest::build_nest(p));
  const PermGroup rho_group(10, {nest::rho_perm(p)});
  CHECK_FALSE(nest::is_normal(aut, rho_group));
}

TEST_CASE("minimal blocks via the union-find closure") {
  const PermGroup c4(4, {perm_from_cycle(4, {0, 1, 2, 3})});
  CHECK(nest::minimal_block_through(c4, 0, 2) == std::vector<int>{0, 2});

  const PermGroup s4(4, {perm_from_cycle(4, {0, 1}),
                         perm_from_cycle(4, {0, 1, 2, 3})});
  CHECK(nest::minimal_block_through(s4, 0, 1).size() == 4);

  const NestParams p = nest::validate_params(5, 1, 2, 3, 2);
  const PermGroup aut = nest::automorphism_group(nest::build_nest(p));
  for (int beta = 1; beta < 10; ++beta)
    CHECK(nest::minimal_block_through(aut, 0, beta).size() == 10);
}

TEST_CASE("minimal block systems of a regular cyclic group") {
  const PermGroup c6(6, {perm_from_cycle(6, {0, 1, 2, 3, 4, 5})});
  const auto systems = nest::minimal_block_systems(c6, 0);
  REQUIRE(systems.size() == 2);
  CHECK(systems[0].block_size == 2);
  CHECK(systems[1].block_size == 3);
  for (const auto &info : systems) {
    CHECK_FALSE(info.cyclic.has_value()); // not Nest-indexed
    CHECK(info.normal);                   // abelian: all subgroups normal
  }
}

TEST_CASE("primitive groups have no minimal block system") {
  const PermGroup s4(4, {perm_from_cycle(4, {0, 1}),
                         perm_from_cycle(4, {0, 1, 2, 3})});
  CHECK(nest::is_primitive(s4));
  CHECK(nest::minimal_block_systems(s4, 0).empty());

  const PermGroup c6(6, {perm_from_cycle(6, {0, 1, 2, 3, 4, 5})});
  CHECK_FALSE(nest::is_primitive(c6));

  // the Hamming graph's group acts in product action, which is primitive;
  // the Shrikhande graph's group is imprimitive (its normal Klein subgroup
  // has orbits of length 4)
  const NestParams hamming = nest::validate_params(8, 1, 3, 4, 3);
  CHECK(nest::is_primitive(nest::automorphism_group(nest::build_nest(hamming))));
  const NestParams shrik = nest::validate_params(8, 1, 2, 5, 3);
  CHECK_FALSE(
      nest::is_primitive(nest::automorphism_group(nest::build_nest(shrik))));
  const NestParams pc = nest::validate_params(5, 1, 2, 3, 2);
  CHECK(nest::is_primitive(nest::automorphism_group(nest::build_nest(pc))));
}

TEST_CASE("the fourth graph's size-4 system has the stated kernel") {
  const NestParams p = nest::validate_params(12, 2, 4, 8, 5);
  const nest::Graph g = nest::build_nest(p);
  const PermGroup aut = nest::automorphism_group(g);
  const auto systems = nest::minimal_block_systems(aut, 0, p.n);
  bool found = false;
  for (const auto &info : systems) {
    if (info.block_size != 4 || !info.cyclic.has_value() || *info.cyclic)
      continue;
    found = true;
    CHECK(info.normal);
    CHECK(info.kernel_order == 16);
    const auto action = induced_action(aut, info.partition);
    const auto elements =
        nest::test::oracle_group_elements(24, action.kernel.generators());
    CHECK(elements.size() == 16);
    for (const Perm &e : elements)
      if (!e.is_identity())
        CHECK(e.order() == 2);
    CHECK(action.kernel.orbits().same_classes(info.partition));
    // quotient is K_{3,3} covered twice
    CHECK(nest::cover_index(g, info.partition) == 2);
    CHECK(nest::are_isomorphic(nest::quotient(g, info.partition),
                               nest::complete_bipartite(3, 3))
              .has_value());
  }
  CHECK(found);
}

TEST_CASE("lucchini bound on the classified graphs") {
  {
    const NestParams p = nest::validate_params(5, 1, 2, 3, 2);
    const PermGroup aut = nest::automorphism_group(nest::build_nest(p));
    CHECK(aut.order() == 120); // 25 < 120
    CHECK(nest::lucchini_check(aut, nest::rho_perm(p)));
  }
  {
    const NestParams p = nest::validate_params(8, 1, 2, 5, 3);
    const PermGroup aut = nest::automorphism_group(nest::build_nest(p));
    CHECK(aut.order() == 192); // 64 < 192
    CHECK(nest::lucchini_check(aut, nest::rho_perm(p)));
  }
  {
    // vacuous when <rho> is the whole group
    const Perm rho = perm_from_cycle(6, {0, 1, 2, 3, 4, 5});
    const PermGroup c6(6, {rho});
    CHECK(nest::lucchini_check(c6, rho));
  }
}
