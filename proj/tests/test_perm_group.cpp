#include <doctest.h>

#include <random>

#include "nest/canonical.hpp"
#include "nest/nest_family.hpp"
#include "nest/perm_group.hpp"
#include "oracles.hpp"

using nest::Partition;
using nest::Perm;
using nest::PermGroup;
using nest::test::oracle_group_elements;
using nest::test::perm_from_cycle;

namespace {

PermGroup s4() {
  return PermGroup(4, {perm_from_cycle(4, {0, 1}),
                       perm_from_cycle(4, {0, 1, 2, 3})});
}

} // namespace

TEST_CASE("orders of small generated groups") {
  CHECK(PermGroup(5).order() == 1);
  CHECK(PermGroup(5, {perm_from_cycle(5, {0, 1, 2, 3, 4})}).order() == 5);
  CHECK(s4().order() == 24);
}

TEST_CASE("bsgs order equals exhaustive element count") {
  std::mt19937 rng(23);
  std::vector<std::vector<Perm>> generator_sets = {
      {perm_from_cycle(6, {0, 1, 2, 3, 4, 5})},
      {perm_from_cycle(4, {0, 1}), perm_from_cycle(4, {0, 1, 2, 3})},
      {perm_from_cycle(7, {0, 1, 2}), perm_from_cycle(7, {2, 3, 4}),
       perm_from_cycle(7, {4, 5, 6})},
      {perm_from_cycle(8, {0, 1, 2, 3}), perm_from_cycle(8, {4, 5, 6, 7}),
       Perm(std::vector<int>{4, 5, 6, 7, 0, 1, 2, 3})},
  };
  // random sets on 7 points stay within |S_7| = 5040 elements
  for (int round = 0; round < 4; ++round) {
    std::vector<Perm> gens{nest::test::random_perm(rng, 7),
                           nest::test::random_perm(rng, 7)};
    generator_sets.push_back(gens);
  }
  for (const auto &gens : generator_sets) {
    const int degree = gens.front().degree();
    const auto elements = oracle_group_elements(degree, gens);
    REQUIRE(elements.size() <= 20000);
    PermGroup group(degree, gens);
    CHECK(group.order() == elements.size());
    for (const Perm &e : elements)
      CHECK(group.contains(e));
    // membership agrees with the enumerated element set
    for (int i = 0; i < 40; ++i) {
      const Perm p = nest::test::random_perm(rng, degree);
      CHECK(group.contains(p) == (elements.count(p) > 0));
    }
  }
}

TEST_CASE("contains on cyclic groups") {
  const Perm rho = perm_from_cycle(7, {0, 1, 2, 3, 4, 5, 6});
  PermGroup c7(7, {rho});
  CHECK(c7.contains(rho.pow(3)));
  CHECK_FALSE(c7.contains(perm_from_cycle(7, {0, 1})));
}

TEST_CASE("orbits and transitivity") {
  PermGroup trivial(5);
  CHECK(trivial.orbits() == Partition::singletons(5));
  const Perm rho = perm_from_cycle(6, {0, 1, 2, 3, 4, 5});
  PermGroup c6(6, {rho});
  CHECK(c6.orbit(2).size() == 6);
  CHECK(c6.is_transitive());
  PermGroup half(6, {perm_from_cycle(6, {0, 1, 2})});
  CHECK(half.orbit(0) == std::vector<int>{0, 1, 2});
  CHECK_FALSE(half.is_transitive());
  CHECK_THROWS(c6.orbit(6));
}

TEST_CASE("point stabilizers") {
  CHECK(s4().point_stabilizer(0).order() == 6);
  const Perm rho = perm_from_cycle(5, {0, 1, 2, 3, 4});
  CHECK(PermGroup(5, {rho}).point_stabilizer(0).is_trivial());
}

TEST_CASE("orbit-stabilizer identity on random generator sets") {
  std::mt19937 rng(929);
  for (int degree : {6, 12, 24}) {
    for (int round = 0; round < 6; ++round) {
      std::vector<Perm> gens;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < count; ++i)
        gens.push_back(nest::test::random_perm(rng, degree));
      PermGroup group(degree, gens);
      for (int x = 0; x < degree; x += 5) {
        const auto orbit = group.orbit(x);
        CHECK(static_cast<nest::GroupOrder>(orbit.size()) *
                  group.point_stabilizer(x).order() ==
              group.order());
      }
    }
  }
}

TEST_CASE("pointwise stabilizer") {
  const PermGroup g = s4();
  std::vector<int> all{0, 1, 2, 3};
  CHECK(g.pointwise_stabilizer(all).is_trivial());
  const PermGroup stab01 = g.pointwise_stabilizer({0, 1});
  CHECK(stab01.order() == 2);
  CHECK(stab01.contains(perm_from_cycle(4, {2, 3})));
}

TEST_CASE("induced action on invariant partitions") {
  const Perm rho4 = perm_from_cycle(4, {0, 1, 2, 3});
  PermGroup c4(4, {rho4});
  const Partition blocks = Partition::from_classes(4, {{0, 2}, {1, 3}});
  const auto action = induced_action(c4, blocks);
  CHECK(action.image.order() == 2);
  CHECK(action.kernel.order() == 2);

  // orbits of the group itself: image trivial, kernel everything
  PermGroup half(6, {perm_from_cycle(6, {0, 1, 2})});
  const auto orbit_action = induced_action(half, half.orbits());
  CHECK(orbit_action.image.is_trivial());
  CHECK(orbit_action.kernel.order() == half.order());

  // non-invariant partition is rejected
  CHECK_THROWS(induced_action(c4, Partition::from_classes(4, {{0, 1}, {2, 3}})));

  // order factorization on a bigger example
  const auto s4_action =
      induced_action(s4(), Partition::from_classes(4, {{0, 1, 2, 3}}));
  CHECK(s4_action.image.is_trivial());
  CHECK(s4_action.kernel.order() == 24);
}

TEST_CASE("normality") {
  const PermGroup g = s4();
  CHECK(nest::is_normal(g, PermGroup(4)));
  const PermGroup klein(
      4, {Perm(std::vector<int>{1, 0, 3, 2}), Perm(std::vector<int>{2, 3, 0, 1})});
  CHECK(nest::is_normal(g, klein));
  const PermGroup sub(4, {perm_from_cycle(4, {0, 1})});
  CHECK_FALSE(nest::is_normal(g, sub));
  // not a subgroup
  const PermGroup c5(5, {perm_from_cycle(5, {0, 1, 2, 3, 4})});
  CHECK_THROWS(nest::is_normal(c5, PermGroup(5, {perm_from_cycle(5, {0, 1})})));
}

TEST_CASE("cyclic subgroups") {
  const Perm rho = perm_from_cycle(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(nest::cyclic_subgroup(rho, 1).is_trivial());
  CHECK(nest::cyclic_subgroup(rho, 12).order() == 12);
  const PermGroup c4 = nest::cyclic_subgroup(rho, 4);
  CHECK(c4.order() == 4);
  CHECK(c4.contains(rho.pow(3)));
  CHECK_THROWS(nest::cyclic_subgroup(rho, 5));
}

TEST_CASE("cyclic core inside the cyclic group itself") {
  const Perm rho = perm_from_cycle(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  PermGroup c10(10, {rho});
  const auto core = nest::cyclic_core(c10, rho);
  CHECK(core.order == 10);
  CHECK(core.subgroup.order() == 10);
  CHECK_THROWS(nest::cyclic_core(PermGroup(10), rho));
}

TEST_CASE("strong generators sift to identity") {
  const PermGroup g = s4();
  for (const Perm &s : g.strong_generators())
    CHECK(g.contains(s));
  for (const Perm &s : g.generators())
    CHECK(g.contains(s));
}
