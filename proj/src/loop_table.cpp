#include "loops/loop_table.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace loops {

LoopTable LoopTable::validate_flat(int n, std::vector<int> flat) {
  if (n <= 0) fail(errc::bad_entry, "order must be positive");
  if ((int)flat.size() != n * n)
    fail(errc::bad_entry, "table has " + std::to_string(flat.size()) +
                              " entries, expected " + std::to_string(n * n));
  for (int v : flat)
    if (v < 0 || v >= n)
      fail(errc::bad_entry, "entry " + std::to_string(v) + " out of range 0.." +
                                std::to_string(n - 1));
  // latin property: every row and column is a permutation
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = flat[r * n + c];
      if (seen[v]) fail(errc::not_latin, "row " + std::to_string(r) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = flat[r * n + c];
      if (seen[v]) fail(errc::not_latin, "column " + std::to_string(c) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (flat[0 * n + i] != i) fail(errc::no_identity, "row 0 is not the identity map");
    if (flat[i * n + 0] != i) fail(errc::no_identity, "column 0 is not the identity map");
  }
  LoopTable q;
  q.n_ = n;
  q.mul_ = std::move(flat);
  q.ld_.assign(n * n, 0);
  q.rd_.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = q.mul_[x * n + y];
      q.ld_[x * n + v] = y;  // x * y = v  =>  x \ v = y
      q.rd_[v * n + y] = x;  // x * y = v  =>  v / y = x
    }
  return q;
}

LoopTable LoopTable::validate(const std::vector<std::vector<int>>& rows) {
  int n = (int)rows.size();
  if (n == 0) fail(errc::bad_entry, "empty table");
  std::vector<int> flat;
  flat.reserve((size_t)n * n);
  for (const auto& row : rows) {
    if ((int)row.size() != n)
      fail(errc::bad_entry, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_flat(n, std::move(flat));
}

bool is_right_bol(const LoopTable& q) {
  int n = q.order();
  for (int y = 1; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      for (int x = 1; x < n; ++x) {
        // ((x*y)*z)*y == x*((y*z)*y)
        if (q.mul(q.mul(q.mul(x, y), z), y) != q.mul(x, q.mul(q.mul(y, z), y)))
          return false;
      }
    }
  return true;
}

bool is_left_bol(const LoopTable& q) {
  int n = q.order();
  for (int x = 1; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 1; z < n; ++z)
        if (q.mul(x, q.mul(y, q.mul(x, z))) != q.mul(q.mul(x, q.mul(y, x)), z))
          return false;
  return true;
}

bool is_moufang(const LoopTable& q) { return is_right_bol(q) && is_left_bol(q); }

bool is_associative(const LoopTable& q) {
  int n = q.order();
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z)
        if (q.mul(q.mul(x, y), z) != q.mul(x, q.mul(y, z))) return false;
  return true;
}

bool is_commutative(const LoopTable& q) {
  int n = q.order();
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (q.mul(x, y) != q.mul(y, x)) return false;
  return true;
}

LoopTable opposite(const LoopTable& q) {
  int n = q.order();
  std::vector<int> flat(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = q.mul(y, x);
  return LoopTable::validate_flat(n, std::move(flat));
}

LoopTable relabel(const LoopTable& q, const std::vector<int>& sigma) {
  int n = q.order();
  if ((int)sigma.size() != n) fail(errc::degree_mismatch, "relabeling has wrong size");
  if (sigma[0] != 0) fail(errc::no_identity, "relabeling must fix the identity");
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] < 0 || sigma[i] >= n || inv[sigma[i]] != -1)
      fail(errc::bad_entry, "relabeling is not a permutation");
    inv[sigma[i]] = i;
  }
  std::vector<int> flat(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[x * n + y] = sigma[q.mul(inv[x], inv[y])];
  return LoopTable::validate_flat(n, std::move(flat));
}

bool has_two_sided_inverses(const LoopTable& q) {
  int n = q.order();
  for (int x = 1; x < n; ++x)
    if (q.ldiv(x, 0) != q.rdiv(0, x)) return false;  // right inverse != left inverse
  return true;
}

Elt inverse_of(const LoopTable& q, Elt x) {
  Elt r = q.ldiv(x, 0);  // x * r = e
  Elt l = q.rdiv(0, x);  // l * x = e
  if (r != l)
    fail(errc::no_inverse, "element " + std::to_string(x) + " has no two-sided inverse");
  return r;
}

bool is_right_bruck(const LoopTable& q) {
  int n = q.order();
  if (!has_two_sided_inverses(q))
    fail(errc::no_two_sided_inverse, "loop lacks two-sided inverses");
  if (!is_right_bol(q)) return false;
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[x] = q.ldiv(x, 0);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (inv[q.mul(x, y)] != q.mul(inv[x], inv[y])) return false;
  return true;
}

Elt power(const LoopTable& q, Elt x, int k) {
  if (k < 0) {
    Elt p = power(q, x, -k);
    Elt r = q.ldiv(p, 0), l = q.rdiv(0, p);
    if (r != l)
      fail(errc::no_inverse,
           "negative power needs a two-sided inverse of " + std::to_string(p));
    return r;
  }
  Elt acc = 0;
  for (int i = 0; i < k; ++i) acc = q.mul(acc, x);
  return acc;
}

int element_order(const LoopTable& q, Elt x) {
  std::vector<Elt> h = subloop_generated(q, {x});
  // <x> must be a group for "order of x" to mean anything
  for (Elt a : h)
    for (Elt b : h)
      for (Elt c : h)
        if (q.mul(q.mul(a, b), c) != q.mul(a, q.mul(b, c)))
          fail(errc::not_power_associative,
               "<" + std::to_string(x) + "> is not associative");
  Elt acc = x;
  int k = 1;
  while (acc != 0) {
    acc = q.mul(acc, x);
    ++k;
  }
  return k;
}

int exponent(const LoopTable& q) {
  long e = 1;
  for (int x = 0; x < q.order(); ++x) e = std::lcm(e, (long)element_order(q, x));
  return (int)e;
}

std::vector<int> order_spectrum(const LoopTable& q) {
  std::vector<int> v;
  v.reserve(q.order());
  for (int x = 0; x < q.order(); ++x) v.push_back(element_order(q, x));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Elt> subloop_generated(const LoopTable& q, const std::vector<Elt>& gens) {
  int n = q.order();
  std::vector<char> in(n, 0);
  std::vector<Elt> elems;
  auto add = [&](Elt e) {
    if (!in[e]) {
      in[e] = 1;
      elems.push_back(e);
    }
  };
  add(0);
  for (Elt g : gens) {
    if (g < 0 || g >= n) fail(errc::bad_entry, "generator out of range");
    add(g);
  }
  // closure under * suffices: right/left translations restrict to bijections
  // of any finite *-closed subset, so divisions stay inside automatically
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(q.mul(elems[i], elems[j]));
      add(q.mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

long count_commuting_pairs(const LoopTable& q) {
  int n = q.order();
  long cnt = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.mul(x, y) == q.mul(y, x)) ++cnt;
  return cnt;
}

// ---- text format -----------------------------------------------------------

namespace {
std::vector<std::string> payload_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    out.push_back(line);
  }
  return out;
}
}  // namespace

LoopTable read_loop(std::istream& in) {
  auto lines = payload_lines(in);
  if (lines.empty()) fail(errc::io_error, "empty loop file");
  int n = 0;
  {
    std::istringstream hs(lines[0]);
    if (!(hs >> n)) fail(errc::io_error, "first line must be the order");
    std::string junk;
    if (hs >> junk) fail(errc::io_error, "first line must contain only the order");
  }
  if (n <= 0) fail(errc::io_error, "order must be positive");
  if ((int)lines.size() != n + 1)
    fail(errc::io_error, "expected " + std::to_string(n) + " table rows, got " +
                             std::to_string(lines.size() - 1));
  std::vector<int> flat;
  flat.reserve((size_t)n * n);
  for (int r = 0; r < n; ++r) {
    std::istringstream rs(lines[r + 1]);
    int v, cnt = 0;
    while (rs >> v) {
      flat.push_back(v);
      ++cnt;
    }
    if (cnt != n)
      fail(errc::io_error, "row " + std::to_string(r) + " has " + std::to_string(cnt) +
                               " entries, expected " + std::to_string(n));
  }
  return LoopTable::validate_flat(n, std::move(flat));
}

LoopTable read_loop_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(errc::io_error, "cannot open " + path);
  return read_loop(f);
}

std::string to_text(const LoopTable& q) {
  std::ostringstream os;
  int n = q.order();
  os << n << "\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) os << ' ';
      os << q.mul(r, c);
    }
    os << "\n";
  }
  return os.str();
}

void write_loop_file(const std::string& path, const LoopTable& q) {
  std::ofstream f(path);
  if (!f) fail(errc::io_error, "cannot open " + path + " for writing");
  f << to_text(q);
}

LoopTable normalize_latin_square(const std::vector<std::vector<int>>& rows) {
  int n = (int)rows.size();
  if (n == 0) fail(errc::bad_entry, "empty table");
  for (const auto& r : rows) {
    if ((int)r.size() != n) fail(errc::bad_entry, "table is not square");
    for (int v : r)
      if (v < 0 || v >= n) fail(errc::bad_entry, "entry out of range");
  }
  // find the two-sided identity
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      if (rows[cand][j] != j || rows[j][cand] != j) ok = false;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e == -1) fail(errc::no_identity, "latin square has no two-sided identity");
  // swap labels 0 <-> e
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  std::swap(sigma[0], sigma[e]);
  std::vector<int> flat(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = sigma[rows[sigma[x]][sigma[y]]];
  return LoopTable::validate_flat(n, std::move(flat));
}

}  // namespace loops
