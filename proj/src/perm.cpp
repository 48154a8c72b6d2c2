#include "nest/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nest {

Perm::Perm(int degree) : images_(static_cast<std::size_t>(degree)) {
  if (degree < 0)
    throw std::invalid_argument("permutation degree must be non-negative");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("image sequence is not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

int Perm::operator()(int point) const {
  if (point < 0 || point >= degree())
    throw std::out_of_range("point outside permutation domain");
  return images_[static_cast<std::size_t>(point)];
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i)
    inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm operator*(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of different degree");
  std::vector<int> r(p.images_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
  Perm out;
  out.images_ = std::move(r);
  return out;
}

Perm Perm::pow(long long e) const {
  Perm base = e >= 0 ? *this : inverse();
  unsigned long long k = e >= 0 ? static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(-e);
  Perm acc(degree());
  while (k) {
    if (k & 1ULL)
      acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

long long Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  long long ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)])
      continue;
    long long len = 0;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = images_[static_cast<std::size_t>(j)];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] ||
        images_[static_cast<std::size_t>(i)] == i)
      continue;
    any = true;
    out << '(' << i;
    seen[static_cast<std::size_t>(i)] = true;
    int j = images_[static_cast<std::size_t>(i)];
    while (j != i) {
      seen[static_cast<std::size_t>(j)] = true;
      out << ' ' << j;
      j = images_[static_cast<std::size_t>(j)];
    }
    out << ')';
  }
  if (!any)
    return "()";
  return out.str();
}

std::size_t Perm::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ images_.size();
  for (int x : images_) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace nest
