#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm_group.hpp"

namespace loops {

// ---- translations and multiplication groups --------------------------------

// R_x: p -> p * x
Perm right_translation(const LoopTable& q, Elt x);
// L_x: p -> x * p
Perm left_translation(const LoopTable& q, Elt x);

// Mlt_rho = <R_x>, Mlt_lambda = <L_x>, Mlt = <L_x, R_x>
PermGroup right_mlt(const LoopTable& q);
PermGroup left_mlt(const LoopTable& q);
PermGroup mlt(const LoopTable& q);
// Inn_rho = stabilizer of the identity in Mlt_rho
PermGroup right_inn(const LoopTable& q);

// ---- characteristic subsets -------------------------------------------------

// {a : a(xy) = (ax)y for all x,y}
std::vector<Elt> left_nucleus(const LoopTable& q);
// {a : x(ay) = (xa)y for all x,y}
std::vector<Elt> middle_nucleus(const LoopTable& q);
// {a : x(ya) = (xy)a for all x,y}
std::vector<Elt> right_nucleus(const LoopTable& q);
std::vector<Elt> nucleus(const LoopTable& q);
// {a : ax = xa for all x}
std::vector<Elt> commutant(const LoopTable& q);
// nucleus intersect commutant
std::vector<Elt> center(const LoopTable& q);

// ---- subloops ---------------------------------------------------------------

bool is_subloop(const LoopTable& q, const std::vector<Elt>& h);
// h invariant under all inner mappings L_{x,y}, R_{x,y}, T_x (NotASubloop if
// h is not a subloop).
bool is_normal(const LoopTable& q, const std::vector<Elt>& h);
// Every subloop, found by repeatedly extending known subloops by one element
// and closing; sorted by (size, elements).
std::vector<std::vector<Elt>> all_subloops(const LoopTable& q);
std::vector<std::vector<Elt>> all_normal_subloops(const LoopTable& q);

// Subloop h relabeled as a loop in its own right (element i of the result is
// the i-th smallest member of h).
LoopTable restriction(const LoopTable& q, const std::vector<Elt>& h);
// Quotient by a normal subloop (NotNormal otherwise; IllDefined if the coset
// multiplication were inconsistent).  Cosets are numbered by their minimal
// elements in ascending order, so the identity coset is 0.
LoopTable quotient(const LoopTable& q, const std::vector<Elt>& h);
// coset_of[x] = index of the coset of x in quotient numbering
std::vector<int> coset_map(const LoopTable& q, const std::vector<Elt>& h);

// Smallest normal subloop with an abelian group quotient.
std::vector<Elt> derived_subloop(const LoopTable& q);
// q >= q' >= q'' >= ... as subsets of q, ending when the term stabilizes.
std::vector<std::vector<Elt>> derived_series(const LoopTable& q);
bool is_solvable(const LoopTable& q);

// Iterated center quotients: class k if k quotients reach the trivial loop.
struct Nilpotence {
  bool nilpotent = false;
  int cls = 0;
};
Nilpotence central_nilpotence(const LoopTable& q);

// ---- automorphisms ----------------------------------------------------------

// All automorphisms, as a permutation group on the elements.
PermGroup automorphism_group(const LoopTable& q);

// ---- profile ----------------------------------------------------------------

struct InvariantProfile {
  int order = 0;
  int center_order = 0;
  int exponent = 0;
  int order3_count = 0;       // |{x : |x| = 3}|
  int derived_order = 0;      // |Q'|
  int left_nucleus_order = 0;
  int left_nucleus_exponent = 0;
  long commuting_pairs = 0;
  unsigned long long right_mlt_order = 0;
  unsigned long long left_mlt_order = 0;
  unsigned long long mlt_order = 0;
  unsigned long long aut_order = 0;
  bool right_bruck = false;
  // catalog name of the associated right Bruck loop, if it matches one
  std::string associated_bruck_name;

  bool operator==(const InvariantProfile&) const = default;
};

InvariantProfile profile(const LoopTable& q);

struct RMltProfile {
  unsigned long long order = 0;
  long exponent = 0;
  unsigned long long center_order = 0;
  bool operator==(const RMltProfile&) const = default;
};

RMltProfile rmlt_profile(const LoopTable& q);

// Cayley table of a permutation group as a LoopTable (identity relabeled to
// element 0, remaining elements in enumeration order); TooLargeToEnumerate
// beyond the cap.  Lets the loop isomorphism machinery compare groups.
LoopTable cayley_table(const PermGroup& g, unsigned long long cap = 1000000);

}  // namespace loops
