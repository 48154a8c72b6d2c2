#pragma once

#include <vector>

namespace nest {

/// An ordered partition of {0,...,N-1}: a list of disjoint non-empty classes
/// covering all points. Class order is significant (refinement and induced
/// actions index classes by position); members within a class are kept sorted.
class Partition {
public:
  Partition() = default;

  /// Single class containing every point.
  static Partition unit(int point_count);

  /// One singleton class per point, in point order.
  static Partition singletons(int point_count);

  /// From explicit classes; validates disjointness and coverage.
  static Partition from_classes(int point_count,
                                std::vector<std::vector<int>> classes);

  int point_count() const { return static_cast<int>(class_of_.size()); }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>> &classes() const { return classes_; }
  const std::vector<int> &class_members(int c) const;
  int class_of(int point) const;
  bool is_discrete() const { return class_count() == point_count(); }

  /// Same classes in the same order.
  friend bool operator==(const Partition &a, const Partition &b) {
    return a.classes_ == b.classes_;
  }
  friend bool operator!=(const Partition &a, const Partition &b) {
    return !(a == b);
  }

  /// Equality as a set of classes, ignoring class order.
  bool same_classes(const Partition &other) const;

private:
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

} // namespace nest
