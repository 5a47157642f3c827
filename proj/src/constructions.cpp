#include "loops/constructions.hpp"

#include <algorithm>
#include <map>

namespace loops {

LoopTable cyclic_group(int n) {
  if (n <= 0) fail(errc::bad_entry, "cyclic group order must be positive");
  std::vector<int> flat((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[a * n + b] = (a + b) % n;
  return LoopTable::validate_flat(n, std::move(flat));
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> flat((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      flat[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  return LoopTable::validate_flat(n, std::move(flat));
}

LoopTable heisenberg3() {
  std::vector<int> flat(27 * 27);
  for (int x = 0; x < 27; ++x)
    for (int y = 0; y < 27; ++y) {
      int a = x / 9, b = (x / 3) % 3, c = x % 3;
      int d = y / 9, e = (y / 3) % 3, f = y % 3;
      int ra = (a + d) % 3, rb = (b + e) % 3, rc = (c + f + a * e) % 3;
      flat[x * 27 + y] = 9 * ra + 3 * rb + rc;
    }
  return LoopTable::validate_flat(27, std::move(flat));
}

LoopTable modular27() {
  int pw[3] = {1, 4, 7};  // 4^b mod 9
  std::vector<int> flat(27 * 27);
  for (int x = 0; x < 27; ++x)
    for (int y = 0; y < 27; ++y) {
      int a = x / 3, b = x % 3, c = y / 3, d = y % 3;
      flat[x * 27 + y] = 3 * ((a + pw[b] * c) % 9) + (b + d) % 3;
    }
  return LoopTable::validate_flat(27, std::move(flat));
}

LoopTable central_extension(int p, const LoopTable& f, const Cocycle& th) {
  if (p < 2) fail(errc::bad_entry, "modulus must be at least 2");
  int m = f.order();
  if (th.p != p || th.m != m || (int)th.theta.size() != m * m)
    fail(errc::dimension_mismatch, "cocycle shape does not match factor loop");
  for (int v : th.theta)
    if (v < 0 || v >= p) fail(errc::bad_entry, "cocycle value out of range");
  for (int i = 0; i < m; ++i)
    if (th.at(0, i) != 0 || th.at(i, 0) != 0)
      fail(errc::not_normalized, "cocycle must vanish on the identity row and column");
  int n = p * m;
  std::vector<int> flat((size_t)n * n);
  for (int a = 0; a < p; ++a)
    for (int x = 0; x < m; ++x)
      for (int b = 0; b < p; ++b)
        for (int y = 0; y < m; ++y)
          flat[(a * m + x) * n + (b * m + y)] =
              ((a + b + th.at(x, y)) % p) * m + f.mul(x, y);
  return LoopTable::validate_flat(n, std::move(flat));
}

std::pair<LoopTable, Cocycle> extract_cocycle(const LoopTable& q, int p) {
  int n = q.order();
  if (p < 2 || n % p != 0) fail(errc::dimension_mismatch, "order not divisible by modulus");
  // find the minimal central element of order p and take Z = <z>
  // (central: commutes and associates with everything)
  auto central = [&](int z) {
    for (int x = 0; x < n; ++x) {
      if (q.mul(z, x) != q.mul(x, z)) return false;
      for (int y = 0; y < n; ++y) {
        int a = q.mul(q.mul(z, x), y), b = q.mul(z, q.mul(x, y));
        if (a != b) return false;
        if (q.mul(q.mul(x, z), y) != q.mul(x, q.mul(z, y))) return false;
        if (q.mul(q.mul(x, y), z) != q.mul(x, q.mul(y, z))) return false;
      }
    }
    return true;
  };
  int z = -1;
  for (int cand = 1; cand < n; ++cand) {
    if (!central(cand)) continue;
    std::vector<Elt> zs = subloop_generated(q, {cand});
    if ((int)zs.size() == p) {
      z = cand;
      break;
    }
  }
  if (z == -1) fail(errc::not_a_subloop, "no central subgroup of the requested order");
  std::vector<Elt> zpow(p);
  zpow[0] = 0;
  for (int i = 1; i < p; ++i) zpow[i] = q.mul(zpow[i - 1], z);
  // cosets of Z, represented by their minimal elements
  std::vector<int> rep(n, -1), znum(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (rep[x] != -1) continue;
    for (int i = 0; i < p; ++i) {
      int e = q.mul(zpow[i], x);
      rep[e] = x;
      znum[e] = i;
    }
    reps.push_back(x);
  }
  int m = n / p;
  if ((int)reps.size() != m) fail(errc::ill_defined, "central cosets do not partition the loop");
  std::map<int, int> idx;  // coset rep -> factor index (identity coset first)
  for (int i = 0; i < m; ++i) idx[reps[i]] = i;
  std::vector<int> fflat((size_t)m * m);
  Cocycle th;
  th.p = p;
  th.m = m;
  th.theta.assign((size_t)m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int prod = q.mul(reps[i], reps[j]);
      fflat[i * m + j] = idx.at(rep[prod]);
      th.theta[i * m + j] = znum[prod];
    }
  return {LoopTable::validate_flat(m, std::move(fflat)), th};
}

LoopTable loop_qxyr(int x, int y, int r) {
  int inv[9] = {-1, 1, 5, -1, 7, 2, -1, 4, 8};
  auto unit = [&](int v) {
    v = ((v % 9) + 9) % 9;
    if (inv[v] < 0) fail(errc::not_a_unit, std::to_string(v) + " is not a unit mod 9");
    return v;
  };
  x = unit(x);
  y = unit(y);
  r = ((r % 9) + 9) % 9;
  int f[3][3] = {{1, 1, 1},
                 {x, inv[y], (y * inv[x]) % 9},
                 {y, (x * inv[y]) % 9, inv[x]}};
  std::vector<int> flat(27 * 27);
  for (int u = 0; u < 3; ++u)
    for (int i = 0; i < 9; ++i)
      for (int v = 0; v < 3; ++v)
        for (int j = 0; j < 9; ++j) {
          int su = (u + v) % 3;
          int si = (i + f[u][v] * j + r * ((u + v) / 3)) % 9;
          flat[(9 * u + i) * 27 + (9 * v + j)] = 9 * su + si;
        }
  try {
    return LoopTable::validate_flat(27, std::move(flat));
  } catch (const loop_error& e) {
    fail(errc::not_a_loop, std::string("parameters do not yield a loop: ") + e.what());
  }
}

Mat3 t_block(int k, const Mat3& K) {
  std::array<char, 9> seen{};
  for (const auto& row : K)
    for (int v : row) {
      if (v < 0 || v > 8 || seen[v]) fail(errc::bad_k, "block matrix must be a permutation of 0..8");
      seen[v] = 1;
    }
  if (k < 0 || k > 8) fail(errc::bad_k, "top-left entry out of range");
  // unique row of K containing k, shifted so k comes first
  int row = -1, col = -1;
  for (int i = 0; i < 3 && row < 0; ++i)
    for (int j = 0; j < 3; ++j)
      if (K[i][j] == k) {
        row = i;
        col = j;
        break;
      }
  Mat3 t{};
  for (int j = 0; j < 3; ++j) t[0][j] = K[row][(col + j) % 3];
  // columns descend cyclically within their residue block {3t, 3t+1, 3t+2}
  for (int j = 0; j < 3; ++j) {
    int base = 3 * (t[0][j] / 3);
    for (int i = 1; i < 3; ++i) t[i][j] = base + (t[i - 1][j] - base + 1) % 3;
  }
  return t;
}

std::vector<int> t_assemble(const Mat9& m, const Mat9& n) {
  std::vector<int> out(27 * 27);
  for (int bi = 0; bi < 9; ++bi)
    for (int bj = 0; bj < 9; ++bj) {
      Mat3 sub;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sub[i][j] = n[3 * (bi / 3) + i][3 * (bj / 3) + j];
      Mat3 blk = t_block(m[bi][bj], sub);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[(3 * bi + i) * 27 + (3 * bj + j)] = blk[i][j];
    }
  return out;
}

LoopTable loop_qmn(const Mat9& m, const Mat9& n) {
  std::vector<int> flat = t_assemble(m, n);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j) flat[i * 27 + j] += 9 * ((i / 9 + j / 9) % 3);
  try {
    return LoopTable::validate_flat(27, std::move(flat));
  } catch (const loop_error& e) {
    fail(errc::not_a_loop, std::string("matrices do not yield a loop: ") + e.what());
  }
}

LoopTable loop_qm(const Mat9& m) { return loop_qmn(m, standard_n()); }

const Mat9& standard_n() {
  static const Mat9 n = [] {
    Mat9 v{};
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) v[i][j] = 3 * (i % 3) + j % 3;
    return v;
  }();
  return n;
}

const Mat9& matrix_m2() {
  static const Mat9 m = {{
      {{0, 3, 6, 0, 3, 6, 0, 3, 6}},
      {{3, 6, 0, 3, 6, 0, 6, 1, 5}},
      {{6, 0, 3, 6, 0, 3, 5, 7, 0}},
      {{0, 3, 6, 0, 7, 4, 1, 6, 3}},
      {{3, 6, 0, 6, 3, 2, 4, 0, 6}},
      {{6, 0, 3, 5, 1, 8, 7, 3, 0}},
      {{0, 8, 3, 1, 5, 6, 1, 8, 4}},
      {{3, 0, 8, 8, 0, 4, 8, 3, 2}},
      {{6, 4, 1, 4, 8, 0, 4, 2, 7}},
  }};
  return m;
}

const Mat9& matrix_m6() {
  static const Mat9 m = {{
      {{0, 3, 6, 0, 3, 6, 0, 3, 6}},
      {{3, 6, 0, 3, 7, 2, 6, 2, 4}},
      {{6, 0, 3, 7, 0, 5, 4, 8, 0}},
      {{0, 4, 6, 0, 8, 4, 1, 6, 4}},
      {{3, 8, 2, 6, 3, 0, 4, 0, 7}},
      {{6, 0, 4, 3, 1, 8, 6, 5, 0}},
      {{0, 7, 3, 1, 4, 6, 1, 8, 3}},
      {{3, 0, 7, 6, 0, 5, 7, 3, 2}},
      {{6, 5, 2, 4, 7, 0, 4, 1, 7}},
  }};
  return m;
}

const Mat9& matrix_m9() {
  static const Mat9 m = {{
      {{0, 3, 6, 0, 3, 6, 0, 3, 6}},
      {{3, 6, 0, 5, 8, 2, 3, 6, 0}},
      {{6, 0, 3, 7, 1, 4, 6, 0, 3}},
      {{0, 1, 2, 0, 6, 3, 0, 2, 1}},
      {{3, 4, 5, 4, 1, 7, 4, 3, 5}},
      {{6, 7, 8, 8, 5, 2, 8, 7, 6}},
      {{0, 8, 4, 0, 2, 1, 0, 8, 4}},
      {{3, 2, 7, 3, 5, 4, 5, 1, 6}},
      {{6, 5, 1, 6, 8, 7, 7, 3, 2}},
  }};
  return m;
}

const Mat9& matrix_n9() {
  static const Mat9 m = {{
      {{0, 1, 2, 0, 1, 2, 0, 1, 2}},
      {{3, 4, 5, 3, 4, 5, 3, 4, 5}},
      {{6, 7, 8, 6, 7, 8, 6, 7, 8}},
      {{0, 3, 6, 0, 5, 7, 0, 8, 4}},
      {{1, 4, 7, 1, 3, 8, 1, 6, 5}},
      {{2, 5, 8, 2, 4, 6, 2, 7, 3}},
      {{0, 7, 5, 0, 6, 3, 0, 5, 7}},
      {{1, 8, 3, 1, 7, 4, 1, 3, 8}},
      {{2, 6, 4, 2, 8, 5, 2, 4, 6}},
  }};
  return m;
}

const Mat9& matrix_m10() {
  static const Mat9 m = {{
      {{0, 3, 6, 0, 3, 6, 0, 3, 6}},
      {{3, 6, 0, 5, 8, 2, 8, 2, 5}},
      {{6, 0, 3, 7, 1, 4, 4, 7, 1}},
      {{0, 1, 2, 0, 4, 8, 0, 2, 1}},
      {{3, 4, 5, 6, 1, 5, 4, 3, 5}},
      {{6, 7, 8, 3, 7, 2, 8, 7, 6}},
      {{0, 3, 6, 0, 2, 1, 0, 4, 8}},
      {{3, 6, 0, 8, 7, 6, 6, 1, 5}},
      {{6, 0, 3, 4, 3, 5, 3, 7, 2}},
  }};
  return m;
}

const Mat9& matrix_n10() {
  static const Mat9 m = {{
      {{0, 1, 2, 0, 1, 2, 0, 1, 2}},
      {{3, 4, 5, 3, 4, 5, 3, 4, 5}},
      {{6, 7, 8, 6, 7, 8, 6, 7, 8}},
      {{0, 4, 8, 0, 5, 7, 0, 8, 4}},
      {{1, 5, 6, 1, 3, 8, 1, 6, 5}},
      {{2, 3, 7, 2, 4, 6, 2, 7, 3}},
      {{0, 4, 8, 0, 4, 8, 0, 5, 7}},
      {{1, 5, 6, 1, 5, 6, 1, 3, 8}},
      {{2, 3, 7, 2, 3, 7, 2, 4, 6}},
  }};
  return m;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "Z27", "Z9xZ3", "Z3^3", "Heis3", "Z9:Z3", "B1", "B2", "B3",
      "B4",  "B5",    "B6",   "B7",    "B8",    "B9", "B10"};
  return names;
}

LoopTable make_loop(const std::string& name) {
  if (name == "Z27") return cyclic_group(27);
  if (name == "Z9xZ3") return direct_product(cyclic_group(9), cyclic_group(3));
  if (name == "Z3^3")
    return direct_product(direct_product(cyclic_group(3), cyclic_group(3)), cyclic_group(3));
  if (name == "Heis3") return heisenberg3();
  if (name == "Z9:Z3") return modular27();
  if (name == "B1") return loop_qxyr(1, 7, 0);
  if (name == "B2") return loop_qm(matrix_m2());
  if (name == "B3") return loop_qxyr(1, 4, 0);
  if (name == "B4") return loop_qxyr(1, 7, 3);
  if (name == "B5") return loop_qxyr(4, 4, 0);
  if (name == "B6") return loop_qm(matrix_m6());
  if (name == "B7") return loop_qxyr(7, 7, 0);
  if (name == "B8") return loop_qxyr(4, 4, 3);
  if (name == "B9") return loop_qmn(matrix_m9(), matrix_n9());
  if (name == "B10") return loop_qmn(matrix_m10(), matrix_n10());
  fail(errc::bad_entry, "unknown loop name: " + name);
}

LoopTable associated_bruck(const LoopTable& q) {
  int n = q.order();
  std::vector<int> sqrt_of(n, -1);
  for (int x = 0; x < n; ++x) {
    int s = q.mul(x, x);
    if (sqrt_of[s] != -1)
      fail(errc::squaring_not_bijective, "squaring map is not a bijection");
    sqrt_of[s] = x;
  }
  std::vector<int> flat((size_t)n * n);
  // x o y = ((y x^2) y)^(1/2); the mirror-image bracketing ((x y^2) x)^(1/2)
  // would produce the opposite loop (left Bruck instead of right Bruck).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[x * n + y] = sqrt_of[q.mul(q.mul(y, q.mul(x, x)), y)];
  return LoopTable::validate_flat(n, std::move(flat));
}

}  // namespace loops
