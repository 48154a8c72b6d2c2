#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nest/partition.hpp"
#include "nest/perm.hpp"

namespace nest {

/// Exact group orders. Property tests run groups up to S_24, which overflows
/// 64 bits, so orders are carried in 128 bits with checked arithmetic.
using GroupOrder = unsigned __int128;

std::string group_order_to_string(GroupOrder value);

/// Checked narrowing; throws std::overflow_error if the order exceeds 64 bits.
std::uint64_t group_order_to_u64(GroupOrder value);

/// A permutation group given by generators, backed by a deterministic
/// base-and-strong-generating-set (Schreier-Sims) structure. Immutable after
/// construction; order, membership, orbits and stabilizers are exact.
class PermGroup {
public:
  /// Trivial group on `degree` points.
  explicit PermGroup(int degree);

  /// Group generated by `generators` (all of equal degree; identities are
  /// dropped). An empty list yields the trivial group of the given degree.
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  GroupOrder order() const { return order_; }
  std::uint64_t order_u64() const { return group_order_to_u64(order_); }
  bool is_trivial() const { return order_ == 1; }

  /// The deduplicated input generators.
  const std::vector<Perm> &generators() const { return generators_; }

  /// All strong generators of the stabilizer chain.
  std::vector<Perm> strong_generators() const;

  /// Base points of the chain, in order.
  std::vector<int> base() const;

  /// Membership via sifting.
  bool contains(const Perm &p) const;

  /// Orbit of a point under the group, in discovery order starting at `point`.
  std::vector<int> orbit(int point) const;

  /// All orbits as a partition (classes ordered by smallest member).
  Partition orbits() const;

  bool is_transitive() const;

  /// Stabilizer of one point, as an exact subgroup.
  PermGroup point_stabilizer(int point) const;

  /// Subgroup fixing every listed point, computed by a base change placing
  /// the points first.
  PermGroup pointwise_stabilizer(const std::vector<int> &points) const;

private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens; // strong generators first assigned to this level
    std::vector<int> orbit; // discovery order; orbit[0] == base_point
    std::vector<int> orbit_index;  // point -> position in orbit, or -1
    std::vector<Perm> transversal; // transversal[i] maps base_point -> orbit[i]
  };

  PermGroup(int degree, std::vector<Perm> generators,
            std::vector<int> forced_base_prefix);

  void build(std::vector<int> forced_base_prefix);
  void recompute_orbit(std::size_t level);
  std::vector<Perm> level_generator_set(std::size_t level) const;
  // Sifts p through levels [from, end); returns residue and the level index
  // at which sifting stopped (== levels_.size() when all levels passed).
  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from) const;
  void insert_generator(const Perm &p);
  bool verify_level(std::size_t level, std::size_t &added_at);
  void close_chain(std::size_t from_level);
  void compute_order();

  int degree_;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  GroupOrder order_ = 1;
};

/// True iff h is normal in g. Requires h <= g (checked; throws otherwise).
bool is_normal(const PermGroup &g, const PermGroup &h);

/// The unique subgroup of <rho> of order d; d must divide ord(rho).
PermGroup cyclic_subgroup(const Perm &rho, long long d);

struct CyclicCore {
  long long order; // largest divisor d of ord(rho) with C_d normal in g
  PermGroup subgroup;
};

/// Core of <rho> in g: the largest subgroup C_d of <rho> normal in g.
/// Requires rho in g. order == 1 means <rho> is core-free in g.
CyclicCore cyclic_core(const PermGroup &g, const Perm &rho);

struct InducedAction {
  PermGroup image;  // action on block indices
  PermGroup kernel; // subgroup acting trivially on blocks, on the points
};

/// Action of g on the classes of a g-invariant partition; throws
/// std::invalid_argument if some generator does not permute the classes.
InducedAction induced_action(const PermGroup &g, const Partition &blocks);

} // namespace nest
