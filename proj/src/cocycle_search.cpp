#include "loops/search.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "loops/classify.hpp"
#include "loops/errors.hpp"
#include "loops/invariants.hpp"
#include "loops/perm_group.hpp"

namespace loops {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_pow(int b, int e, int p) {
  long long r = 1, x = b % p;
  for (; e > 0; e >>= 1, x = x * x % p)
    if (e & 1) r = r * x % p;
  return (int)r;
}

int mod_inv(int a, int p) { return mod_pow(a, p - 2, p); }

int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int x = g % p, ord = 1;
    while (x != 1) {
      x = (int)((long long)x * g % p);
      ++ord;
    }
    if (ord == p - 1) return g;
  }
  fail(errc::bad_entry, "no primitive root; modulus is not prime");
}

using Vec = std::vector<std::uint8_t>;

// in-place row operation: a <- a - c * b  (mod p)
void submul(Vec& a, const Vec& b, int c, int p) {
  for (size_t i = 0; i < a.size(); ++i)
    a[i] = (std::uint8_t)((a[i] + (p - c) * (long long)b[i]) % p);
}

// Reduced row echelon form; rows normalized to unit pivots, every pivot
// column cleared in all other rows.  pivots[k] = pivot column of row k.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<int> pivots;

  // reduce v against the rows (zeroes out the pivot coordinates)
  void reduce(Vec& v, int p) const {
    for (size_t k = 0; k < rows.size(); ++k) {
      int c = v[pivots[k]];
      if (c) submul(v, rows[k], c, p);
    }
  }

  // insert if independent; keeps the RREF invariant; returns true if added
  bool add(Vec v, int p) {
    reduce(v, p);
    size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    int inv = mod_inv(v[piv], p);
    for (auto& e : v) e = (std::uint8_t)((long long)e * inv % p);
    for (size_t k = 0; k < rows.size(); ++k) {
      int c = rows[k][piv];
      if (c) submul(rows[k], v, c, p);
    }
    rows.push_back(std::move(v));
    pivots.push_back((int)piv);
    return true;
  }
};

}  // namespace

Cocycle CocycleSpace::unpack(const Vec& vec) const {
  int m = factor.order();
  Cocycle c;
  c.p = p;
  c.m = m;
  c.theta.assign((size_t)m * m, 0);
  for (int x = 1; x < m; ++x)
    for (int y = 1; y < m; ++y) c.theta[x * m + y] = vec[(x - 1) * (m - 1) + (y - 1)];
  return c;
}

CocycleSpace bol_cocycle_space(int p, const LoopTable& f) {
  if (!is_prime(p)) fail(errc::bad_entry, "modulus must be prime");
  if (!is_associative(f)) fail(errc::not_a_group, "factor must be a group");
  int m = f.order();
  int w = m - 1;  // packed row width per first coordinate
  size_t U = (size_t)w * w;

  // kernel-basis elimination: maintain a basis of the space satisfied by all
  // equations so far; each new equation either holds on the span or cuts the
  // dimension by one.
  std::vector<Vec> kernel(U);
  for (size_t i = 0; i < U; ++i) {
    kernel[i].assign(U, 0);
    kernel[i][i] = 1;
  }

  auto idx = [&](int x, int y) { return (size_t)(x - 1) * w + (y - 1); };
  std::vector<int> dots;
  std::vector<std::pair<size_t, int>> terms;
  for (int x = 1; x < m; ++x) {
    for (int y = 1; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        terms.clear();
        int xy = f.mul(x, y), xyz = f.mul(f.mul(x, y), z);
        int yz = f.mul(y, z), yzy = f.mul(f.mul(y, z), y);
        auto term = [&](int a, int b, int c) {
          if (a == 0 || b == 0) return;  // theta vanishes on the identity
          size_t i = idx(a, b);
          for (auto& t : terms)
            if (t.first == i) {
              t.second = ((t.second + c) % p + p) % p;
              return;
            }
          terms.emplace_back(i, (c % p + p) % p);
        };
        term(x, y, 1);
        term(xy, z, 1);
        term(xyz, y, 1);
        term(y, z, -1);
        term(yz, y, -1);
        term(x, yzy, -1);
        terms.erase(std::remove_if(terms.begin(), terms.end(),
                                   [](auto& t) { return t.second == 0; }),
                    terms.end());
        if (terms.empty()) continue;

        dots.assign(kernel.size(), 0);
        bool any = false;
        for (size_t j = 0; j < kernel.size(); ++j) {
          long long d = 0;
          for (auto& t : terms) d += (long long)t.second * kernel[j][t.first];
          dots[j] = (int)(d % p);
          any |= dots[j] != 0;
        }
        if (!any) continue;
        size_t j0 = 0;
        while (dots[j0] == 0) ++j0;
        int inv = mod_inv(dots[j0], p);
        for (size_t j = 0; j < kernel.size(); ++j) {
          if (j == j0 || dots[j] == 0) continue;
          submul(kernel[j], kernel[j0], (int)((long long)dots[j] * inv % p), p);
        }
        kernel.erase(kernel.begin() + (long)j0);
      }
    }
  }

  CocycleSpace space;
  space.p = p;
  space.factor = f;
  space.solution_basis = std::move(kernel);

  // coboundaries theta_g(x,y) = g(xy) - g(x) - g(y), spanned by indicator g's
  Echelon cob;
  for (int v = 1; v < m; ++v) {
    Vec row(U, 0);
    for (int x = 1; x < m; ++x)
      for (int y = 1; y < m; ++y) {
        int val = (f.mul(x, y) == v) - (x == v) - (y == v);
        row[idx(x, y)] = (std::uint8_t)((val % p + p) % p);
      }
    cob.add(std::move(row), p);
  }
  for (auto& r : cob.rows) space.coboundary_basis.push_back(r);
  return space;
}

std::vector<LoopTable> central_extensions_in_variety(int p, const LoopTable& f) {
  CocycleSpace space = bol_cocycle_space(p, f);
  int m = f.order();
  int w = m - 1;
  size_t U = (size_t)w * w;

  Echelon cob;
  for (const Vec& v : space.coboundary_basis) cob.add(v, p);
  // complement of the coboundary subspace inside the solution space; each
  // cocycle class has a unique representative in its span
  Echelon quo;
  for (const Vec& v : space.solution_basis) {
    Vec r = v;
    cob.reduce(r, p);
    quo.add(std::move(r), p);
  }
  int q = (int)quo.rows.size();

  // coordinates of a coboundary-reduced solution vector in the quotient basis
  auto coords = [&](const Vec& v) {
    std::vector<int> c(q);
    for (int j = 0; j < q; ++j) c[j] = v[quo.pivots[j]];
    return c;
  };
  auto from_coords = [&](const std::vector<int>& c) {
    Vec v(U, 0);
    for (int j = 0; j < q; ++j)
      if (c[j]) submul(v, quo.rows[j], p - c[j], p);
    return v;
  };

  // induced action matrices of Aut(Z_p) x Aut(F) generators on coordinates
  std::vector<std::vector<std::vector<int>>> mats;
  if (p > 2) {
    int u0 = primitive_root(p);
    std::vector<std::vector<int>> scal(q, std::vector<int>(q, 0));
    for (int i = 0; i < q; ++i) scal[i][i] = u0;
    mats.push_back(std::move(scal));
  }
  for (const Perm& psi : automorphism_group(f).strong_generators()) {
    std::vector<std::vector<int>> mat(q, std::vector<int>(q));
    for (int j = 0; j < q; ++j) {
      Vec t(U, 0);
      for (int x = 1; x < m; ++x)
        for (int y = 1; y < m; ++y)
          t[(size_t)(x - 1) * w + (y - 1)] =
              quo.rows[j][(size_t)(psi(x) - 1) * w + (psi(y) - 1)];
      cob.reduce(t, p);
      std::vector<int> c = coords(t);
      // paranoid: the reduced image must lie in the quotient span
      Vec back = from_coords(c);
      if (back != t) fail(errc::ill_defined, "action left the quotient space");
      for (int i = 0; i < q; ++i) mat[i][j] = c[i];
    }
    mats.push_back(std::move(mat));
  }

  // orbit scan over GF(p)^q in ascending code order; the first unvisited
  // vector of each orbit is its lexicographically minimal representative
  unsigned long long total = 1;
  for (int j = 0; j < q; ++j) {
    if (total > (3ull << 30) / (unsigned)p)
      fail(errc::too_large_to_enumerate, "cocycle quotient space too large");
    total *= (unsigned)p;
  }
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  auto test_and_set = [&](unsigned long long code) {
    std::uint64_t& word = visited[code >> 6];
    std::uint64_t bit = 1ull << (code & 63);
    bool old = word & bit;
    word |= bit;
    return old;
  };

  std::vector<LoopTable> reps;
  std::vector<IsoTester> testers;
  std::vector<int> digits(q), out(q);
  std::vector<unsigned long long> queue;
  for (unsigned long long code = 0; code < total; ++code) {
    if (test_and_set(code)) continue;
    // expand the whole orbit of `code`
    queue.clear();
    queue.push_back(code);
    for (size_t h = 0; h < queue.size(); ++h) {
      unsigned long long cur = queue[h];
      for (int j = q - 1; j >= 0; --j) {
        digits[j] = (int)(cur % p);
        cur /= p;
      }
      for (const auto& mat : mats) {
        unsigned long long nc = 0;
        for (int i = 0; i < q; ++i) {
          long long acc = 0;
          for (int j = 0; j < q; ++j) acc += (long long)mat[i][j] * digits[j];
          out[i] = (int)(acc % p);
          nc = nc * p + (unsigned)out[i];
        }
        if (!test_and_set(nc)) queue.push_back(nc);
      }
    }
    // build the extension for the orbit representative
    unsigned long long cur = code;
    for (int j = q - 1; j >= 0; --j) {
      digits[j] = (int)(cur % p);
      cur /= p;
    }
    LoopTable ext = central_extension(p, f, space.unpack(from_coords(digits)));
    bool known = false;
    for (auto& t : testers)
      if (t.find(ext)) {
        known = true;
        break;
      }
    if (!known) {
      reps.push_back(ext);
      testers.emplace_back(ext);
    }
  }
  return reps;
}

std::vector<LoopTable> central_extensions_in_variety(int p) {
  LoopTable cp = cyclic_group(p);
  return central_extensions_in_variety(p, direct_product(cp, cp));
}

std::vector<CoverageRow> justify_trivial_center_coverage() {
  std::vector<CoverageRow> rows;
  for (const std::string& name : catalog_names()) {
    LoopTable q = make_loop(name);
    CoverageRow row;
    row.name = name;
    row.trivial_center = center(q).size() == 1;
    if (!row.trivial_center) {
      row.ok = true;  // covered by the nontrivial-center (extension) branch
      rows.push_back(row);
      continue;
    }
    std::vector<Elt> d = derived_subloop(q);
    row.derived_order = (int)d.size();
    std::vector<Elt> nl = left_nucleus(q);
    std::vector<Elt> meet;
    std::set_intersection(d.begin(), d.end(), nl.begin(), nl.end(),
                          std::back_inserter(meet));
    row.derived_meet_left_nucleus = (int)meet.size();
    if (row.derived_order == 9) {
      LoopTable sub = restriction(q, d);
      if (is_associative(sub) && is_commutative(sub)) {
        int e = exponent(sub);
        if (e == 3) row.derived_type = "elementary_abelian";
        if (e == 9) row.derived_type = "cyclic";
      }
    }
    row.ok = row.derived_order == 9 && row.derived_meet_left_nucleus > 1 &&
             !row.derived_type.empty();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace loops
