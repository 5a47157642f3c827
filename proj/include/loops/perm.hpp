#pragma once

#include <cstdint>
#include <vector>

#include "loops/errors.hpp"

namespace loops {

// Permutation of 0..n-1, stored as the image vector.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);                 // identity on n points
  explicit Perm(std::vector<int> img);  // checked bijection

  int degree() const { return (int)img_.size(); }
  int operator()(int p) const { return img_[p]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  // lcm of cycle lengths
  long order() const;
  // points p with (*this)(p) != p, ascending
  std::vector<int> moved_points() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

// (a * b)(p) = a(b(p)): apply b first.
Perm compose(const Perm& a, const Perm& b);
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

}  // namespace loops
