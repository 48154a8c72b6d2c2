#include "nest/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nest {

namespace {

constexpr GroupOrder kMaxOrder = ~static_cast<GroupOrder>(0);

GroupOrder checked_mul(GroupOrder a, GroupOrder b) {
  if (a != 0 && b > kMaxOrder / a)
    throw std::overflow_error("group order exceeds 128 bits");
  return a * b;
}

int first_moved_point(const Perm &p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i)
      return i;
  return -1;
}

} // namespace

std::string group_order_to_string(GroupOrder value) {
  if (value == 0)
    return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t group_order_to_u64(GroupOrder value) {
  if (value > static_cast<GroupOrder>(~static_cast<std::uint64_t>(0)))
    throw std::overflow_error("group order exceeds 64 bits");
  return static_cast<std::uint64_t>(value);
}

PermGroup::PermGroup(int degree) : PermGroup(degree, {}) {}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     std::vector<int> forced_base_prefix)
    : degree_(degree) {
  if (degree_ < 0)
    throw std::invalid_argument("group degree must be non-negative");
  for (const Perm &g : generators) {
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity() &&
        std::find(generators_.begin(), generators_.end(), g) ==
            generators_.end())
      generators_.push_back(g);
  }
  build(std::move(forced_base_prefix));
}

void PermGroup::build(std::vector<int> forced_base_prefix) {
  for (int p : forced_base_prefix) {
    if (p < 0 || p >= degree_)
      throw std::out_of_range("base point out of range");
    Level lvl;
    lvl.base_point = p;
    levels_.push_back(std::move(lvl));
    recompute_orbit(levels_.size() - 1);
  }
  for (const Perm &g : generators_)
    insert_generator(g);
  compute_order();
}

std::vector<Perm> PermGroup::level_generator_set(std::size_t level) const {
  std::vector<Perm> out;
  for (std::size_t j = level; j < levels_.size(); ++j)
    for (const Perm &g : levels_[j].gens)
      out.push_back(g);
  return out;
}

void PermGroup::recompute_orbit(std::size_t level) {
  Level &lvl = levels_[level];
  const std::vector<Perm> gens = level_generator_set(level);
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.orbit_index.assign(static_cast<std::size_t>(degree_), -1);
  lvl.orbit.push_back(lvl.base_point);
  lvl.transversal.push_back(Perm(degree_));
  lvl.orbit_index[static_cast<std::size_t>(lvl.base_point)] = 0;
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    for (const Perm &g : gens) {
      const int image = g(lvl.orbit[i]);
      if (lvl.orbit_index[static_cast<std::size_t>(image)] < 0) {
        lvl.orbit_index[static_cast<std::size_t>(image)] =
            static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(image);
        lvl.transversal.push_back(lvl.transversal[i] * g);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level &lvl = levels_[l];
    const int image = p(lvl.base_point);
    const int idx = lvl.orbit_index[static_cast<std::size_t>(image)];
    if (idx < 0)
      return {std::move(p), l};
    p = p * lvl.transversal[static_cast<std::size_t>(idx)].inverse();
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::insert_generator(const Perm &p) {
  auto [res, lvl] = sift(p, 0);
  if (res.is_identity())
    return;
  if (lvl == levels_.size()) {
    Level fresh;
    fresh.base_point = first_moved_point(res);
    levels_.push_back(std::move(fresh));
  }
  levels_[lvl].gens.push_back(std::move(res));
  close_chain(lvl);
}

// Checks that the orbit at `level` is closed and that every Schreier
// generator sifts to the identity through the deeper levels. On failure the
// offending residue is recorded as a strong generator (at a strictly deeper
// level, possibly a fresh one), `added_at` reports where, and the caller must
// re-verify from that level.
bool PermGroup::verify_level(std::size_t level, std::size_t &added_at) {
  recompute_orbit(level);
  Level &lvl = levels_[level];
  const std::vector<Perm> gens = level_generator_set(level);
  for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
    for (const Perm &g : gens) {
      const int image = g(lvl.orbit[i]);
      const int idx = lvl.orbit_index[static_cast<std::size_t>(image)];
      const Perm schreier =
          lvl.transversal[i] * g *
          lvl.transversal[static_cast<std::size_t>(idx)].inverse();
      if (schreier.is_identity())
        continue;
      auto [res, stuck] = sift(schreier, level + 1);
      if (res.is_identity())
        continue;
      if (stuck == levels_.size()) {
        Level fresh;
        fresh.base_point = first_moved_point(res);
        levels_.push_back(std::move(fresh));
      }
      levels_[stuck].gens.push_back(std::move(res));
      added_at = stuck;
      return false;
    }
  }
  return true;
}

void PermGroup::close_chain(std::size_t from_level) {
  // Levels deeper than `stale` are closed; work back up to level 0.
  std::size_t stale = from_level;
  while (true) {
    std::size_t added_at = 0;
    if (verify_level(stale, added_at)) {
      if (stale == 0)
        break;
      --stale;
    } else {
      stale = added_at;
    }
  }
}

void PermGroup::compute_order() {
  order_ = 1;
  for (const Level &lvl : levels_)
    order_ = checked_mul(order_, static_cast<GroupOrder>(lvl.orbit.size()));
}

std::vector<Perm> PermGroup::strong_generators() const {
  return level_generator_set(0);
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  out.reserve(levels_.size());
  for (const Level &lvl : levels_)
    out.push_back(lvl.base_point);
  return out;
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("permutation degree mismatch");
  auto [res, lvl] = sift(p, 0);
  (void)lvl;
  return res.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_)
    throw std::out_of_range("point out of range");
  std::vector<int> orb{point};
  std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const Perm &g : generators_) {
      const int image = g(orb[i]);
      if (!seen[static_cast<std::size_t>(image)]) {
        seen[static_cast<std::size_t>(image)] = 1;
        orb.push_back(image);
      }
    }
  }
  return orb;
}

Partition PermGroup::orbits() const {
  std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < degree_; ++v) {
    if (seen[static_cast<std::size_t>(v)])
      continue;
    std::vector<int> orb = orbit(v);
    for (int x : orb)
      seen[static_cast<std::size_t>(x)] = 1;
    std::sort(orb.begin(), orb.end());
    classes.push_back(std::move(orb));
  }
  return Partition::from_classes(degree_, std::move(classes));
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 &&
         static_cast<int>(orbit(0).size()) == degree_;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  return pointwise_stabilizer({point});
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int> &points) const {
  std::vector<int> prefix = points;
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  if (prefix.empty())
    return *this;
  PermGroup rebased(degree_, generators_, prefix);
  std::vector<Perm> stab_gens =
      rebased.level_generator_set(prefix.size());
  return PermGroup(degree_, std::move(stab_gens));
}

bool is_normal(const PermGroup &g, const PermGroup &h) {
  if (g.degree() != h.degree())
    throw std::invalid_argument("degree mismatch");
  for (const Perm &y : h.generators())
    if (!g.contains(y))
      throw std::invalid_argument("h is not a subgroup of g");
  for (const Perm &x : g.generators()) {
    const Perm xinv = x.inverse();
    for (const Perm &y : h.generators())
      if (!h.contains(xinv * y * x))
        return false;
  }
  return true;
}

PermGroup cyclic_subgroup(const Perm &rho, long long d) {
  if (d <= 0)
    throw std::invalid_argument("subgroup order must be positive");
  const long long ord = rho.order();
  if (ord % d != 0)
    throw std::invalid_argument("requested order does not divide ord(rho)");
  return PermGroup(rho.degree(), {rho.pow(ord / d)});
}

CyclicCore cyclic_core(const PermGroup &g, const Perm &rho) {
  if (!g.contains(rho))
    throw std::invalid_argument("rho is not an element of g");
  const long long ord = rho.order();
  std::vector<long long> divisors;
  for (long long d = 1; d <= ord; ++d)
    if (ord % d == 0)
      divisors.push_back(d);
  std::vector<long long> normal_divisors;
  for (long long d : divisors)
    if (is_normal(g, cyclic_subgroup(rho, d)))
      normal_divisors.push_back(d);
  // Normal divisors are closed under taking divisors (subgroups of a cyclic
  // normal subgroup are characteristic in it, hence normal).
  for (long long d : normal_divisors)
    for (long long e : divisors)
      if (d % e == 0 &&
          std::find(normal_divisors.begin(), normal_divisors.end(), e) ==
              normal_divisors.end())
        throw std::logic_error("cyclic core monotonicity violated");
  const long long best = normal_divisors.back();
  return CyclicCore{best, cyclic_subgroup(rho, best)};
}

InducedAction induced_action(const PermGroup &g, const Partition &blocks) {
  const int n = g.degree();
  if (blocks.point_count() != n)
    throw std::invalid_argument("partition domain mismatch");
  const int b = blocks.class_count();

  std::vector<Perm> block_perms;
  std::vector<Perm> extended;
  for (const Perm &gen : g.generators()) {
    std::vector<int> block_image(static_cast<std::size_t>(b), -1);
    for (int c = 0; c < b; ++c) {
      const auto &members = blocks.class_members(c);
      const int target = blocks.class_of(gen(members.front()));
      for (int v : members)
        if (blocks.class_of(gen(v)) != target)
          throw std::invalid_argument("partition is not invariant under g");
      block_image[static_cast<std::size_t>(c)] = target;
    }
    block_perms.emplace_back(block_image);
    std::vector<int> ext(static_cast<std::size_t>(n + b));
    for (int v = 0; v < n; ++v)
      ext[static_cast<std::size_t>(v)] = gen(v);
    for (int c = 0; c < b; ++c)
      ext[static_cast<std::size_t>(n + c)] =
          n + block_image[static_cast<std::size_t>(c)];
    extended.emplace_back(std::move(ext));
  }

  std::vector<int> forced(static_cast<std::size_t>(b));
  std::iota(forced.begin(), forced.end(), n);
  PermGroup ext_group(n + b, std::move(extended));
  PermGroup ext_kernel = ext_group.pointwise_stabilizer(forced);
  std::vector<Perm> kernel_gens;
  for (const Perm &eg : ext_kernel.generators()) {
    std::vector<int> restricted(eg.images().begin(),
                                eg.images().begin() + n);
    kernel_gens.emplace_back(std::move(restricted));
  }

  InducedAction out{PermGroup(b, std::move(block_perms)),
                    PermGroup(n, std::move(kernel_gens))};
  if (checked_mul(out.image.order(), out.kernel.order()) != g.order())
    throw std::logic_error("induced action order factorization failed");
  return out;
}

} // namespace nest
