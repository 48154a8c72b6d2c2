#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nest {

/// A permutation of {0,...,N-1}, stored as its image sequence.
///
/// Application convention used project-wide: permutations act on the
/// right and compose left to right, i.e. (p * q)(i) == q(p(i)).
class Perm {
public:
  Perm() = default;

  /// Identity on `degree` points.
  explicit Perm(int degree);

  /// From an image sequence; throws std::invalid_argument unless `images`
  /// is a permutation of {0,...,images.size()-1}.
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree) { return Perm(degree); }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a point; throws std::out_of_range for points outside the domain.
  int operator()(int point) const;

  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;

  Perm inverse() const;

  /// p^e for any integer exponent (negative exponents use the inverse).
  Perm pow(long long e) const;

  /// Order of the permutation (lcm of its cycle lengths).
  long long order() const;

  /// Cycle decomposition, fixed points omitted; e.g. "(0 1 2)(4 5)".
  std::string cycle_string() const;

  friend Perm operator*(const Perm &p, const Perm &q);

  friend bool operator==(const Perm &a, const Perm &b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Perm &a, const Perm &b) { return !(a == b); }
  friend bool operator<(const Perm &a, const Perm &b) {
    return a.images_ < b.images_;
  }

  std::size_t hash() const;

private:
  std::vector<int> images_;
};

} // namespace nest

template <> struct std::hash<nest::Perm> {
  std::size_t operator()(const nest::Perm &p) const { return p.hash(); }
};
