#include "nest/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace nest {

Partition Partition::unit(int point_count) {
  if (point_count <= 0)
    throw std::invalid_argument("partition needs at least one point");
  std::vector<int> all(static_cast<std::size_t>(point_count));
  for (int i = 0; i < point_count; ++i)
    all[static_cast<std::size_t>(i)] = i;
  return from_classes(point_count, {std::move(all)});
}

Partition Partition::singletons(int point_count) {
  if (point_count <= 0)
    throw std::invalid_argument("partition needs at least one point");
  std::vector<std::vector<int>> classes;
  classes.reserve(static_cast<std::size_t>(point_count));
  for (int i = 0; i < point_count; ++i)
    classes.push_back({i});
  return from_classes(point_count, std::move(classes));
}

Partition Partition::from_classes(int point_count,
                                  std::vector<std::vector<int>> classes) {
  if (point_count <= 0)
    throw std::invalid_argument("partition needs at least one point");
  Partition p;
  p.class_of_.assign(static_cast<std::size_t>(point_count), -1);
  for (auto &cls : classes) {
    if (cls.empty())
      throw std::invalid_argument("partition class must be non-empty");
    std::sort(cls.begin(), cls.end());
    for (int v : cls) {
      if (v < 0 || v >= point_count)
        throw std::invalid_argument("partition member out of range");
      if (p.class_of_[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("partition classes are not disjoint");
      p.class_of_[static_cast<std::size_t>(v)] =
          static_cast<int>(&cls - classes.data());
    }
  }
  for (int v = 0; v < point_count; ++v)
    if (p.class_of_[static_cast<std::size_t>(v)] == -1)
      throw std::invalid_argument("partition does not cover every point");
  p.classes_ = std::move(classes);
  return p;
}

const std::vector<int> &Partition::class_members(int c) const {
  if (c < 0 || c >= class_count())
    throw std::out_of_range("class index out of range");
  return classes_[static_cast<std::size_t>(c)];
}

int Partition::class_of(int point) const {
  if (point < 0 || point >= point_count())
    throw std::out_of_range("point out of range");
  return class_of_[static_cast<std::size_t>(point)];
}

bool Partition::same_classes(const Partition &other) const {
  if (point_count() != other.point_count() ||
      class_count() != other.class_count())
    return false;
  auto a = classes_;
  auto b = other.classes_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

} // namespace nest
