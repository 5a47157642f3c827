#pragma once

#include <cstdint>
#include <vector>

#include "loops/perm.hpp"

namespace loops {

// Permutation group with a base and strong generating set built by a
// deterministic Schreier-Sims (base points chosen greedily as the smallest
// non-fixed point, orbits explored in ascending point order).
class PermGroup {
 public:
  // EmptyDegree if degree < 1; DegreeMismatch if a generator has a different
  // degree.  An empty generator list yields the trivial group.
  static PermGroup from_generators(int degree, std::vector<Perm> gens);
  // Rebuilds the chain with `pt` forced to be the first base point and
  // returns the stabilizer of pt as a group.  PointOutOfRange if pt invalid.
  PermGroup point_stabilizer(int pt) const;

  int degree() const { return degree_; }
  unsigned long long order() const;
  bool contains(const Perm& p) const;
  std::vector<int> orbit(int pt) const;
  // points fixed by every generator
  std::vector<int> fixed_points() const;

  const std::vector<Perm>& generators() const { return gens_; }
  // strong generators of the stabilizer chain (small, deterministic)
  std::vector<Perm> strong_generators() const;
  const std::vector<int>& base() const { return base_; }

  // All elements, in a deterministic order.  TooLargeToEnumerate if the order
  // exceeds cap.
  std::vector<Perm> elements(unsigned long long cap = 1000000) const;
  long exponent(unsigned long long cap = 1000000) const;
  unsigned long long center_order(unsigned long long cap = 1000000) const;

 private:
  PermGroup() = default;
  void build(std::vector<int> forced_base);
  void sims_at(int level);
  void recompute_orbit(int level);
  // sift from a level; returns residue and the level where it got stuck
  std::pair<Perm, int> sift_from(const Perm& p, int level) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<std::vector<Perm>> level_gens_;        // gens fixing base[0..i-1]
  std::vector<std::vector<int>> orbit_;              // fundamental orbit at level i
  std::vector<std::vector<Perm>> transversal_;       // point -> coset rep (by point index)
  std::vector<std::vector<char>> in_orbit_;
};

}  // namespace loops
