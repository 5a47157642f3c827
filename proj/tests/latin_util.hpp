#pragma once

// Helpers shared by the test suites: deterministic pseudo-random normalized
// latin squares, exhaustive enumeration of small normalized latin squares,
// and an independent right-Bol oracle phrased through translation maps.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm.hpp"
#include "loops/invariants.hpp"

namespace testutil {

// Fill rows 1..n-1 of a normalized latin square (row 0 and column 0 are the
// identity) by depth-first search; `shuffle` randomizes the value order per
// cell so different seeds give different squares.
inline bool fill_square(std::vector<int>& flat, int n, int pos,
                        std::mt19937* rng) {
  if (pos == n * n) return true;
  int r = pos / n, c = pos % n;
  if (r == 0 || c == 0) return fill_square(flat, n, pos + 1, rng);
  std::vector<int> vals;
  for (int w = 0; w < n; ++w) {
    bool ok = true;
    for (int cc = 0; cc < c && ok; ++cc) ok = flat[r * n + cc] != w;
    for (int rr = 0; rr < r && ok; ++rr) ok = flat[rr * n + c] != w;
    if (ok) vals.push_back(w);
  }
  if (rng) std::shuffle(vals.begin(), vals.end(), *rng);
  for (int w : vals) {
    flat[r * n + c] = w;
    if (fill_square(flat, n, pos + 1, rng)) return true;
    flat[r * n + c] = -1;
  }
  return false;
}

inline loops::LoopTable random_normalized_square(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<int> flat(n * n, -1);
  for (int v = 0; v < n; ++v) {
    flat[v] = v;
    flat[v * n] = v;
  }
  fill_square(flat, n, 0, &rng);
  return loops::LoopTable::validate_flat(n, std::move(flat));
}

// Enumerate every normalized latin square of order n (row 0 and column 0 are
// the identity) in lexicographic order and hand each to `fn`.
inline void enumerate_normalized_squares(
    int n, const std::function<void(const loops::LoopTable&)>& fn) {
  std::vector<int> flat(n * n, -1);
  for (int v = 0; v < n; ++v) {
    flat[v] = v;
    flat[v * n] = v;
  }
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n * n) {
      fn(loops::LoopTable::validate_flat(n, flat));
      return;
    }
    int r = pos / n, c = pos % n;
    if (r == 0 || c == 0) {
      rec(pos + 1);
      return;
    }
    for (int w = 0; w < n; ++w) {
      bool ok = true;
      for (int cc = 0; cc < c && ok; ++cc) ok = flat[r * n + cc] != w;
      for (int rr = 0; rr < r && ok; ++rr) ok = flat[rr * n + c] != w;
      if (!ok) continue;
      flat[r * n + c] = w;
      rec(pos + 1);
      flat[r * n + c] = -1;
    }
  };
  rec(0);
}

// Runs fn and reports the loop_error code it threw, if any.
template <typename Fn>
inline std::optional<loops::errc> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const loops::loop_error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Independent right-Bol oracle: the identity ((xy)z)y = x((yz)y) for all x
// says exactly that composing the right translations y, z, y equals the
// right translation by (yz)y.
inline bool right_bol_by_translations(const loops::LoopTable& q) {
  int n = q.order();
  std::vector<loops::Perm> r;
  r.reserve(n);
  for (int y = 0; y < n; ++y) r.push_back(loops::right_translation(q, y));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      loops::Perm lhs = loops::compose(r[y], loops::compose(r[z], r[y]));
      if (lhs != r[q.mul(q.mul(y, z), y)]) return false;
    }
  return true;
}

}  // namespace testutil
