#include "loops/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "loops/classify.hpp"
#include "loops/constructions.hpp"

namespace loops {

Perm right_translation(const LoopTable& q, Elt x) {
  std::vector<int> img(q.order());
  for (int p = 0; p < q.order(); ++p) img[p] = q.mul(p, x);
  return Perm(std::move(img));
}

Perm left_translation(const LoopTable& q, Elt x) {
  std::vector<int> img(q.order());
  for (int p = 0; p < q.order(); ++p) img[p] = q.mul(x, p);
  return Perm(std::move(img));
}

PermGroup right_mlt(const LoopTable& q) {
  std::vector<Perm> gens;
  for (int x = 1; x < q.order(); ++x) gens.push_back(right_translation(q, x));
  return PermGroup::from_generators(q.order(), std::move(gens));
}

PermGroup left_mlt(const LoopTable& q) {
  std::vector<Perm> gens;
  for (int x = 1; x < q.order(); ++x) gens.push_back(left_translation(q, x));
  return PermGroup::from_generators(q.order(), std::move(gens));
}

PermGroup mlt(const LoopTable& q) {
  std::vector<Perm> gens;
  for (int x = 1; x < q.order(); ++x) {
    gens.push_back(right_translation(q, x));
    gens.push_back(left_translation(q, x));
  }
  return PermGroup::from_generators(q.order(), std::move(gens));
}

PermGroup right_inn(const LoopTable& q) { return right_mlt(q).point_stabilizer(0); }

std::vector<Elt> left_nucleus(const LoopTable& q) {
  int n = q.order();
  std::vector<Elt> out;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (q.mul(a, q.mul(x, y)) != q.mul(q.mul(a, x), y)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<Elt> middle_nucleus(const LoopTable& q) {
  int n = q.order();
  std::vector<Elt> out;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (q.mul(x, q.mul(a, y)) != q.mul(q.mul(x, a), y)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<Elt> right_nucleus(const LoopTable& q) {
  int n = q.order();
  std::vector<Elt> out;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (q.mul(x, q.mul(y, a)) != q.mul(q.mul(x, y), a)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(a);
  }
  return out;
}

namespace {
std::vector<Elt> intersect_sorted(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  std::vector<Elt> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
}  // namespace

std::vector<Elt> nucleus(const LoopTable& q) {
  return intersect_sorted(intersect_sorted(left_nucleus(q), middle_nucleus(q)),
                          right_nucleus(q));
}

std::vector<Elt> commutant(const LoopTable& q) {
  int n = q.order();
  std::vector<Elt> out;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (q.mul(a, x) != q.mul(x, a)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<Elt> center(const LoopTable& q) {
  return intersect_sorted(nucleus(q), commutant(q));
}

bool is_subloop(const LoopTable& q, const std::vector<Elt>& h) {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  int n = q.order();
  std::vector<char> in(n, 0);
  for (Elt e : h) {
    if (e < 0 || e >= n || in[e]) return false;
    in[e] = 1;
  }
  if (!in[0]) return false;
  for (Elt a : h)
    for (Elt b : h)
      if (!in[q.mul(a, b)]) return false;
  return true;
}

bool is_normal(const LoopTable& q, const std::vector<Elt>& h) {
  if (!is_subloop(q, h)) fail(errc::not_a_subloop, "normality asks for a subloop");
  int n = q.order();
  std::vector<char> in(n, 0);
  for (Elt e : h) in[e] = 1;
  for (Elt t : h) {
    for (int x = 0; x < n; ++x) {
      if (!in[q.ldiv(x, q.mul(t, x))]) return false;  // T_x
      for (int y = 0; y < n; ++y) {
        if (!in[q.rdiv(q.mul(q.mul(t, y), x), q.mul(y, x))]) return false;  // R_{x,y}
        if (!in[q.ldiv(q.mul(x, y), q.mul(x, q.mul(y, t)))]) return false;  // L_{x,y}
      }
    }
  }
  return true;
}

std::vector<std::vector<Elt>> all_subloops(const LoopTable& q) {
  int n = q.order();
  std::set<std::vector<Elt>> found;
  std::vector<std::vector<Elt>> queue;
  std::vector<Elt> triv{0};
  found.insert(triv);
  queue.push_back(triv);
  // every subloop arises from a smaller one by adjoining one element and closing
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<Elt> h = queue[qi];
    if ((int)h.size() == n) continue;
    std::vector<char> in(n, 0);
    for (Elt e : h) in[e] = 1;
    for (int x = 0; x < n; ++x) {
      if (in[x]) continue;
      std::vector<Elt> gens = h;
      gens.push_back(x);
      std::vector<Elt> k = subloop_generated(q, gens);
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  std::vector<std::vector<Elt>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<Elt>> all_normal_subloops(const LoopTable& q) {
  std::vector<std::vector<Elt>> out;
  for (auto& h : all_subloops(q))
    if (is_normal(q, h)) out.push_back(h);
  return out;
}

LoopTable restriction(const LoopTable& q, const std::vector<Elt>& h) {
  if (!is_subloop(q, h)) fail(errc::not_a_subloop, "restriction asks for a subloop");
  int m = (int)h.size();
  std::vector<int> idx(q.order(), -1);
  for (int i = 0; i < m; ++i) idx[h[i]] = i;
  std::vector<int> flat((size_t)m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) flat[i * m + j] = idx[q.mul(h[i], h[j])];
  return LoopTable::validate_flat(m, std::move(flat));
}

std::vector<int> coset_map(const LoopTable& q, const std::vector<Elt>& h) {
  if (!is_normal(q, h)) fail(errc::not_normal, "cosets ask for a normal subloop");
  int n = q.order();
  std::vector<int> coset(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (coset[x] != -1) continue;
    for (Elt t : h) {
      int e = q.mul(x, t);
      if (coset[e] != -1)
        fail(errc::ill_defined, "cosets of the subloop do not partition the loop");
      coset[e] = next;
    }
    ++next;
  }
  return coset;
}

LoopTable quotient(const LoopTable& q, const std::vector<Elt>& h) {
  std::vector<int> coset = coset_map(q, h);
  int n = q.order(), m = n / (int)h.size();
  std::vector<int> rep(m, -1);
  for (int x = n - 1; x >= 0; --x) rep[coset[x]] = x;  // minimal representative
  std::vector<int> flat((size_t)m * m, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int& cell = flat[coset[x] * m + coset[y]];
      int v = coset[q.mul(x, y)];
      if (cell == -1)
        cell = v;
      else if (cell != v)
        fail(errc::ill_defined, "coset multiplication is not well-defined");
    }
  return LoopTable::validate_flat(m, std::move(flat));
}

std::vector<Elt> derived_subloop(const LoopTable& q) {
  std::vector<std::vector<Elt>> cands;
  for (auto& h : all_normal_subloops(q)) {
    LoopTable f = quotient(q, h);
    if (is_associative(f) && is_commutative(f)) cands.push_back(h);
  }
  if (cands.empty()) fail(errc::ill_defined, "no abelian group quotient found");
  std::vector<Elt>* best = &cands[0];
  for (auto& c : cands)
    if (c.size() < best->size()) best = &c;
  // the minimum is unique: check containment in every candidate
  for (auto& c : cands)
    if (!std::includes(c.begin(), c.end(), best->begin(), best->end()))
      fail(errc::ill_defined, "derived subloop is not unique");
  return *best;
}

std::vector<std::vector<Elt>> derived_series(const LoopTable& q) {
  std::vector<std::vector<Elt>> series;
  std::vector<Elt> cur(q.order());
  std::iota(cur.begin(), cur.end(), 0);
  series.push_back(cur);
  while (cur.size() > 1) {
    LoopTable sub = restriction(q, cur);
    std::vector<Elt> d = derived_subloop(sub);
    std::vector<Elt> mapped;
    mapped.reserve(d.size());
    for (Elt e : d) mapped.push_back(cur[e]);
    if (mapped.size() == cur.size()) break;  // stabilized above the identity
    series.push_back(mapped);
    cur = std::move(mapped);
  }
  return series;
}

bool is_solvable(const LoopTable& q) {
  auto s = derived_series(q);
  return s.back().size() == 1;
}

Nilpotence central_nilpotence(const LoopTable& q) {
  LoopTable cur = q;
  int cls = 0;
  while (cur.order() > 1) {
    std::vector<Elt> z = center(cur);
    if (z.size() == 1) return {false, 0};
    cur = quotient(cur, z);
    ++cls;
  }
  return {true, cls};
}

PermGroup automorphism_group(const LoopTable& q) {
  std::vector<Perm> auts = all_isomorphisms(q, q);
  // keep a small generating set; PermGroup order still equals the count
  std::vector<Perm> gens;
  PermGroup grp = PermGroup::from_generators(q.order(), {});
  for (const Perm& p : auts) {
    if (grp.contains(p)) continue;
    gens.push_back(p);
    grp = PermGroup::from_generators(q.order(), gens);
  }
  if (grp.order() != auts.size())
    fail(errc::ill_defined, "automorphism closure count mismatch");
  return grp;
}

InvariantProfile profile(const LoopTable& q) {
  InvariantProfile pr;
  pr.order = q.order();
  pr.center_order = (int)center(q).size();
  pr.exponent = exponent(q);
  pr.order3_count = 0;
  for (int x = 0; x < q.order(); ++x)
    if (element_order(q, x) == 3) ++pr.order3_count;
  pr.derived_order = (int)derived_subloop(q).size();
  std::vector<Elt> nl = left_nucleus(q);
  pr.left_nucleus_order = (int)nl.size();
  pr.left_nucleus_exponent = exponent(restriction(q, nl));
  pr.commuting_pairs = count_commuting_pairs(q);
  pr.right_mlt_order = right_mlt(q).order();
  pr.left_mlt_order = left_mlt(q).order();
  pr.mlt_order = mlt(q).order();
  pr.aut_order = automorphism_group(q).order();
  pr.right_bruck = is_right_bruck(q);
  if (q.order() == 27) {
    try {
      LoopTable br = associated_bruck(q);
      for (const std::string& name : catalog_names()) {
        if (are_isomorphic(br, make_loop(name)).isomorphic) {
          pr.associated_bruck_name = name;
          break;
        }
      }
    } catch (const loop_error&) {
      // squaring not bijective: leave the tag empty
    }
  }
  return pr;
}

RMltProfile rmlt_profile(const LoopTable& q) {
  PermGroup g = right_mlt(q);
  RMltProfile r;
  r.order = g.order();
  r.exponent = g.exponent();
  r.center_order = g.center_order();
  return r;
}

LoopTable cayley_table(const PermGroup& g, unsigned long long cap) {
  std::vector<Perm> elems = g.elements(cap);
  int n = (int)elems.size();
  // identity becomes element 0; everything else keeps enumeration order
  std::stable_sort(elems.begin(), elems.end(), [](const Perm& a, const Perm& b) {
    return a.is_identity() > b.is_identity();
  });
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elems[i], i);
  std::vector<int> flat((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * n + j] = index.at(elems[i] * elems[j]);
  return LoopTable::validate_flat(n, std::move(flat));
}

}  // namespace loops
