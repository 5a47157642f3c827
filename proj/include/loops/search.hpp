#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loops/constructions.hpp"
#include "loops/loop_table.hpp"

namespace loops {

// ---- central extensions inside the right Bol variety -----------------------

// Solution space of the linearized right Bol condition on normalized cocycles
// theta: F x F -> Z_p.  Basis vectors have length (|F|-1)^2; the entry at
// index (x-1)*(|F|-1) + (y-1) holds theta(x, y), and the identity row/column
// of theta is implicitly zero.
struct CocycleSpace {
  int p = 0;
  LoopTable factor = LoopTable::validate_flat(1, {0});
  std::vector<std::vector<std::uint8_t>> solution_basis;
  std::vector<std::vector<std::uint8_t>> coboundary_basis;

  // Pads a packed vector back to a full |F| x |F| cocycle.
  Cocycle unpack(const std::vector<std::uint8_t>& vec) const;
};

// On the extension Z_p x F with F a group, ((XY)Z)Y = X((YZ)Y) reduces per
// triple (x,y,z) of F to the linear condition
//   theta(x,y) + theta(xy,z) + theta(xyz,y) = theta(y,z) + theta(yz,y) + theta(x,yzy)
// over GF(p).  Returns a basis of its solution space together with a basis of
// the coboundary subspace {g(xy) - g(x) - g(y) : g : F -> Z_p, g(0) = 0}.
// NotAGroup unless F is associative.
CocycleSpace bol_cocycle_space(int p, const LoopTable& f);

// All right Bol central extensions of Z_p by F, up to isomorphism: enumerates
// the solution space modulo coboundaries, keeps lexicographically minimal
// representatives of the induced Aut(Z_p) x Aut(F) orbits, builds the
// corresponding extensions, and finishes with an isomorphism-class pass.
// Deterministic output order.
std::vector<LoopTable> central_extensions_in_variety(int p, const LoopTable& f);
std::vector<LoopTable> central_extensions_in_variety(int p);  // F = C_p x C_p

// ---- finite-model search for right Bol loops of order 3m -------------------

// Which group of order 9 is prescribed as the normal subloop M.
enum class MCase { elementary_abelian, cyclic };

// Search space description: right Bol loops of order 3m containing the
// prescribed normal subloop M = {0..m-1} (its full multiplication table is
// fixed) and a subloop N of M that must lie inside the left nucleus.
// Normality of M is built into the encoding: cell (u,v) takes values in the
// coset block ((u/m + v/m) mod 3) * m .. + m-1, so the coset map is a
// homomorphism onto C_3 with kernel M.
struct SearchSpec {
  int order = 27;                          // must be 3m
  std::vector<std::vector<int>> m_table;   // m x m table of M (a loop, id 0)
  std::vector<Elt> n_elems;                // sorted subloop of M containing 0
  int symmetry_breaking = 1;               // 0 = off, 1 = least-number heuristic
};

// The two order-27 searches: M = C3 x C3 or M = C9 (relabeled so that its
// unique subgroup of order 3 is {0,1,2}), N = {0,1,2} in both cases.
SearchSpec trivial_center_spec(MCase c);

// Exhaustive backtracking completion of the table: latin row/column
// propagation with forced singles, incremental right Bol and left-nucleus
// instance propagation, most-constrained-cell branching, and least-number
// symmetry breaking on the labels outside M.  Every emitted model is
// re-validated from scratch.  InconsistentSpec for malformed specs.
// jobs > 1 splits the search tree at a fixed depth into independent subtrees
// executed concurrently and merged by subtree index; the result is identical
// to a single-threaded run.  A nonempty resume_file records finished subtrees
// (and their models) so an interrupted run can be restarted.
std::vector<LoopTable> model_search(const SearchSpec& spec, int jobs = 1,
                                    const std::string& resume_file = {});

// Machine-checkable part of the argument that the two trivial_center_spec
// cases cover every order-27 right Bol loop with trivial center: for each
// catalog loop with Z(Q) = 1, its derived subloop has order 9, meets the left
// nucleus nontrivially, and is elementary abelian or cyclic.
struct CoverageRow {
  std::string name;
  bool trivial_center = false;
  int derived_order = 0;            // |Q'|
  int derived_meet_left_nucleus = 0;  // |Q' intersect left nucleus|
  std::string derived_type;         // "elementary_abelian", "cyclic" or ""
  bool ok = false;
};
std::vector<CoverageRow> justify_trivial_center_coverage();

}  // namespace loops
