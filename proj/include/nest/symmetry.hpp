#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nest/graph.hpp"
#include "nest/nest_family.hpp"
#include "nest/partition.hpp"
#include "nest/perm_group.hpp"

namespace nest {

/// One minimal block system of a transitive group, annotated with the
/// census-relevant flags. `cyclic` is only meaningful for Nest-indexed point
/// sets (first n points u's, next n points v's) and is empty otherwise.
struct BlockSystemInfo {
  Partition partition;
  int block_size = 0;
  std::optional<bool> cyclic;
  bool normal = false;
  GroupOrder kernel_order = 1;
};

/// Transitivity predicates of grp <= Aut(g); every generator is checked to
/// preserve edges (throws std::invalid_argument otherwise).
bool is_vertex_transitive(const Graph &g, const PermGroup &grp);
bool is_edge_transitive(const Graph &g, const PermGroup &grp);
bool is_arc_transitive(const Graph &g, const PermGroup &grp);

struct CoreProfile {
  bool core_free = false;
  long long core_order = 1;
};

/// Core of <rho> in Aut(build_nest(p)); core order 1 means core-free.
CoreProfile is_core_free(const Graph &g, const NestParams &p);

/// Smallest block containing both points (Atkinson); requires a transitive
/// group and distinct points.
std::vector<int> minimal_block_through(const PermGroup &grp, int alpha,
                                       int beta);

/// All minimal block systems through `base_point`, each annotated. Pass the
/// Nest modulus in `nest_n` to get the cyclic flag. Ordered by block size,
/// then by partition content.
std::vector<BlockSystemInfo>
minimal_block_systems(const PermGroup &grp, int base_point,
                      std::optional<int> nest_n = std::nullopt);

bool is_primitive(const PermGroup &grp);

/// Core-free proper cyclic subgroups satisfy |C|^2 < |G|; vacuously true
/// when <rho> has a non-trivial core or equals grp. Requires rho in grp.
bool lucchini_check(const PermGroup &grp, const Perm &rho);

} // namespace nest
