#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm.hpp"

namespace loops {

// Certificate-producing isomorphism test: when `isomorphic` is true, `map`
// satisfies map(x*y) = map(x)*map(y) for all x, y (verified exhaustively).
struct IsoCertificate {
  bool isomorphic = false;
  Perm map{1};
};

// Precomputes a generating sequence and element fingerprints for one loop so
// that it can be matched repeatedly against others without redoing that work.
class IsoTester {
 public:
  explicit IsoTester(LoopTable a);

  const LoopTable& table() const { return a_; }

  // An isomorphism table() -> b, if one exists.
  std::optional<Perm> find(const LoopTable& b) const;

  // All isomorphisms table() -> b (all automorphisms when b == table()).
  std::vector<Perm> all(const LoopTable& b,
                        std::size_t limit = static_cast<std::size_t>(-1)) const;

 private:
  void search(const LoopTable& b, const std::vector<std::array<int, 4>>& fpb,
              std::size_t limit, std::vector<Perm>& out) const;

  LoopTable a_;
  std::vector<Elt> gens_;                  // greedy generating sequence of a_
  std::vector<std::array<int, 4>> fpa_;    // per-element fingerprints of a_
  std::vector<std::array<int, 4>> fpa_sorted_;
};

// Per-element fingerprint (right order, left order, cyclic subloop size,
// commuting count); equal under any isomorphism.
std::vector<std::array<int, 4>> element_fingerprints(const LoopTable& q);

IsoCertificate are_isomorphic(const LoopTable& a, const LoopTable& b);
std::vector<Perm> all_isomorphisms(const LoopTable& a, const LoopTable& b,
                                   std::size_t limit = static_cast<std::size_t>(-1));

// Reference implementation trying every bijection fixing 0; for cross-checks.
bool are_isomorphic_naive(const LoopTable& a, const LoopTable& b);

// Stable de-duplication: keeps the first representative of each class, in
// input order; `class_of[i]` gives the index into the returned list.
std::vector<LoopTable> up_to_isomorphism(const std::vector<LoopTable>& in,
                                         std::vector<int>* class_of = nullptr);

// Principal isotope x o y = (x / b) * (a \ y), relabeled so that its identity
// a*b becomes element 0 (by swapping the two labels).
LoopTable principal_isotope(const LoopTable& q, Elt a, Elt b);

// Loops are isotopic iff some principal isotope of one is isomorphic to the
// other; returns (a, b) of a witnessing principal isotope when it exists.
struct IsotopyResult {
  bool isotopic = false;
  Elt a = 0;
  Elt b = 0;
};
IsotopyResult are_isotopic(const LoopTable& x, const LoopTable& y);

}  // namespace loops
