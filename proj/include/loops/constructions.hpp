#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "loops/loop_table.hpp"

namespace loops {

using Mat3 = std::array<std::array<int, 3>, 3>;
using Mat9 = std::array<std::array<int, 9>, 9>;

// ---- small groups ------------------------------------------------------

LoopTable cyclic_group(int n);
// (a, b) -> a * |B| + b
LoopTable direct_product(const LoopTable& a, const LoopTable& b);
// Upper unitriangular 3x3 matrices over GF(3): (a,b,c)*(d,e,f) =
// (a+d, b+e, c+f+a*e), encoded (a,b,c) -> 9a+3b+c.  Nonabelian, exponent 3.
LoopTable heisenberg3();
// Z9 semidirect Z3 with b acting as multiplication by 4^b:
// (a,b)*(c,d) = (a + 4^b c mod 9, b+d mod 3), encoded (a,b) -> 3a+b.
// Nonabelian, exponent 9.
LoopTable modular27();

// ---- cocycles and central extensions ------------------------------------

// Normalized 2-cocycle data for a central extension of Z_p by the loop F:
// theta is |F| x |F| (row-major), values mod p, theta(0,y) = theta(x,0) = 0.
struct Cocycle {
  int p = 0;
  int m = 0;                // |F|
  std::vector<int> theta;   // m*m entries
  int at(int x, int y) const { return theta[x * m + y]; }
};

// Loop on Z_p x F with (a,x)(b,y) = (a + b + theta(x,y), x y), encoded
// (a, x) -> a * |F| + x.  DimensionMismatch if theta shape disagrees with F,
// NotNormalized if theta has nonzero identity row/column, BadEntry for
// out-of-range cocycle values.
LoopTable central_extension(int p, const LoopTable& f, const Cocycle& theta);

// Inverse operation for loops with a central subgroup Z = {0, z, z^2, ...}
// of order p: picks the minimal transversal section and returns (F, theta)
// with central_extension(p, F, theta) isomorphic to q.
std::pair<LoopTable, Cocycle> extract_cocycle(const LoopTable& q, int p);

// ---- the Z3 x Z9 family --------------------------------------------------

// Loop on Z3 x Z9 with (u,i)(v,j) = (u+v, i + f(u,v) j + r*floor((u+v)/3)),
// where f(0,.)=1, f(1,.)=(x, 1/y, y/x), f(2,.)=(y, x/y, 1/x) as units mod 9
// and u+v in the floor is computed in the integers.  Encoded (u,i) -> 9u+i.
// NotAUnit if x or y is not invertible mod 9; NotALoop if the result fails
// validation.
LoopTable loop_qxyr(int x, int y, int r);

// ---- block constructions -------------------------------------------------

// 3x3 block with top-left entry k: the top row is the unique cyclic shift of
// the row of K containing k that starts with k, and every column descends
// cyclically within its residue block {3t, 3t+1, 3t+2}.  BadK if K is not a
// permutation of 0..8.
Mat3 t_block(int k, const Mat3& K);

// 27x27 array assembled from 9x9 block matrices M and N: for block-row i and
// block-column j (0..8) the 3x3 block is t_block(M[i][j], N_block(i/3, j/3)),
// where N_block(u,v) is the 3x3 subblock of N at rows 3u.., cols 3v..
// BadK if some N subblock is not a permutation of 0..8.
std::vector<int> t_assemble(const Mat9& m, const Mat9& n);

// Loop of order 27: entry (i,j) = t_assemble(m, n)[i][j] + 9*((i/9 + j/9) mod 3).
LoopTable loop_qmn(const Mat9& m, const Mat9& n);
// Same with the standard N (every subblock = [[0,1,2],[3,4,5],[6,7,8]]).
LoopTable loop_qm(const Mat9& m);

const Mat9& standard_n();
const Mat9& matrix_m2();
const Mat9& matrix_m6();
const Mat9& matrix_m9();
const Mat9& matrix_n9();
const Mat9& matrix_m10();
const Mat9& matrix_n10();

// ---- catalog ---------------------------------------------------------------

// The fifteen named loops of order 27: the five groups Z27, Z9xZ3, Z3^3,
// Heis3, Z9:Z3 and the ten nonassociative right Bol loops B1..B10.
const std::vector<std::string>& catalog_names();
LoopTable make_loop(const std::string& name);

// x compose y = ((y x^2) y)^(1/2) where the square root inverts the squaring
// bijection; SquaringNotBijective if squaring is not a bijection.  (The
// mirror-image bracketing ((x y^2) x)^(1/2) would give the opposite loop,
// which is left Bruck rather than right Bruck.)
LoopTable associated_bruck(const LoopTable& q);

}  // namespace loops
