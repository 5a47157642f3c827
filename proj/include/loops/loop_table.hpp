#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "loops/errors.hpp"

namespace loops {

// Elements of a finite loop are just indices 0..n-1; index 0 is always the
// two-sided identity.
using Elt = int;

// A finite loop: a latin square over 0..n-1 whose row 0 and column 0 are the
// identity map.  Division tables are materialized once at validation time so
// ldiv/rdiv are O(1) lookups afterwards.
class LoopTable {
 public:
  // Checks shape, entry range (BadEntry), latin property (NotLatin) and the
  // identity convention (NoIdentity), then builds division tables.
  static LoopTable validate(const std::vector<std::vector<int>>& rows);
  static LoopTable validate_flat(int n, std::vector<int> flat);

  int order() const { return n_; }
  Elt mul(Elt x, Elt y) const { return mul_[x * n_ + y]; }
  // ldiv(x, y) = the unique z with x * z = y  (i.e. x \ y)
  Elt ldiv(Elt x, Elt y) const { return ld_[x * n_ + y]; }
  // rdiv(x, y) = the unique z with z * y = x  (i.e. x / y)
  Elt rdiv(Elt x, Elt y) const { return rd_[x * n_ + y]; }

  const std::vector<int>& flat() const { return mul_; }

  bool operator==(const LoopTable& o) const { return n_ == o.n_ && mul_ == o.mul_; }
  bool operator!=(const LoopTable& o) const { return !(*this == o); }

 private:
  LoopTable() = default;
  int n_ = 0;
  std::vector<int> mul_, ld_, rd_;
};

// ---- identities ------------------------------------------------------------

// ((x*y)*z)*y == x*((y*z)*y) for all x,y,z (early exit on first failure).
bool is_right_bol(const LoopTable& q);
// x*(y*(x*z)) == (x*(y*x))*z for all x,y,z.
bool is_left_bol(const LoopTable& q);
bool is_moufang(const LoopTable& q);
bool is_associative(const LoopTable& q);
bool is_commutative(const LoopTable& q);

// Mirror loop: x op y = y * x.
LoopTable opposite(const LoopTable& q);

// Relabel by sigma (must fix 0): new[i][j] = sigma(q[sigma^-1 i][sigma^-1 j]).
LoopTable relabel(const LoopTable& q, const std::vector<int>& sigma);

// ---- inverses and powers ---------------------------------------------------

bool has_two_sided_inverses(const LoopTable& q);
// Two-sided inverse of x; NoInverse if left and right inverses differ.
Elt inverse_of(const LoopTable& q, Elt x);

// Right Bol + automorphic inverse property (x*y)^-1 == x^-1 * y^-1.
// NoTwoSidedInverse if some element lacks a two-sided inverse.
bool is_right_bruck(const LoopTable& q);

// Left-normed power: x^0 = 0 (identity), x^k = x^(k-1) * x.  Negative k uses
// the two-sided inverse of x^-k (NoInverse if there is none).
Elt power(const LoopTable& q, Elt x, int k);

// Least k >= 1 with x^k = identity.  Verifies first that <x> is associative;
// NotPowerAssociative otherwise.
int element_order(const LoopTable& q, Elt x);
// lcm of all element orders.
int exponent(const LoopTable& q);
// Multiset of element orders, sorted ascending.
std::vector<int> order_spectrum(const LoopTable& q);

// ---- subsets ---------------------------------------------------------------

// Smallest subloop containing gens (closure under *, which for finite loops
// is automatically closed under both divisions and contains the identity).
std::vector<Elt> subloop_generated(const LoopTable& q, const std::vector<Elt>& gens);

// Number of ordered pairs (x, y) with x*y == y*x.
long count_commuting_pairs(const LoopTable& q);

// ---- text format -----------------------------------------------------------
//
// Line 1: the order n.  Lines 2..n+1: n space-separated integers each (row of
// the table, 0-based).  Blank lines and lines starting with '#' are ignored.

LoopTable read_loop(std::istream& in);
LoopTable read_loop_file(const std::string& path);
std::string to_text(const LoopTable& q);
void write_loop_file(const std::string& path, const LoopTable& q);

// Relabel an arbitrary latin square so its two-sided identity (which must
// exist; NoIdentity otherwise) becomes element 0, then validate.
LoopTable normalize_latin_square(const std::vector<std::vector<int>>& rows);

}  // namespace loops
