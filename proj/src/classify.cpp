#include "loops/classify.hpp"

#include <algorithm>
#include <numeric>

#include "loops/errors.hpp"

namespace loops {

namespace {

int cycle_length_of_zero(const LoopTable& q, Elt x, bool right) {
  int p = 0, len = 0;
  do {
    p = right ? q.mul(p, x) : q.mul(x, p);
    ++len;
  } while (p != 0);
  return len;
}

}  // namespace

std::vector<std::array<int, 4>> element_fingerprints(const LoopTable& q) {
  int n = q.order();
  std::vector<std::array<int, 4>> fp(n);
  for (int x = 0; x < n; ++x) {
    int commuting = 0;
    for (int y = 0; y < n; ++y)
      if (q.mul(x, y) == q.mul(y, x)) ++commuting;
    fp[x] = {cycle_length_of_zero(q, x, true), cycle_length_of_zero(q, x, false),
             (int)subloop_generated(q, {x}).size(), commuting};
  }
  return fp;
}

IsoTester::IsoTester(LoopTable a) : a_(std::move(a)) {
  int n = a_.order();
  fpa_ = element_fingerprints(a_);
  fpa_sorted_ = fpa_;
  std::sort(fpa_sorted_.begin(), fpa_sorted_.end());
  // greedy generating sequence: repeatedly adjoin the element whose closure
  // with the current generators is largest (ties broken by smallest label)
  std::vector<char> in(n, 0);
  in[0] = 1;
  int covered = 1;
  while (covered < n) {
    int best = -1;
    size_t best_size = 0;
    std::vector<Elt> best_closure;
    for (int x = 0; x < n; ++x) {
      if (in[x]) continue;
      std::vector<Elt> g = gens_;
      g.push_back(x);
      std::vector<Elt> cl = subloop_generated(a_, g);
      if (cl.size() > best_size) {
        best_size = cl.size();
        best = x;
        best_closure = std::move(cl);
      }
    }
    gens_.push_back(best);
    for (Elt e : best_closure)
      if (!in[e]) {
        in[e] = 1;
        ++covered;
      }
  }
}

void IsoTester::search(const LoopTable& b, const std::vector<std::array<int, 4>>& fpb,
                       std::size_t limit, std::vector<Perm>& out) const {
  int n = a_.order();
  std::vector<int> map_a(n, -1);
  std::vector<char> used_b(n, 0);
  std::vector<Elt> dom;
  map_a[0] = 0;
  used_b[0] = 1;
  dom.push_back(0);

  // extend the partial map by one pair and close under products; returns
  // false (after recording nothing new beyond the trail) on contradiction
  auto close_from = [&](size_t start) -> bool {
    for (size_t pi = start; pi < dom.size(); ++pi) {
      Elt u = dom[pi];
      for (size_t vj = 0; vj <= pi; ++vj) {
        Elt v = dom[vj];
        const Elt pairs[2][2] = {{u, v}, {v, u}};
        for (auto& pr : pairs) {
          Elt p = a_.mul(pr[0], pr[1]);
          Elt img = b.mul(map_a[pr[0]], map_a[pr[1]]);
          if (map_a[p] == -1) {
            if (used_b[img]) return false;
            map_a[p] = img;
            used_b[img] = 1;
            dom.push_back(p);
          } else if (map_a[p] != img) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto undo_to = [&](size_t mark) {
    for (size_t i = mark; i < dom.size(); ++i) {
      used_b[map_a[dom[i]]] = 0;
      map_a[dom[i]] = -1;
    }
    dom.resize(mark);
  };

  // returns true when the enumeration limit is reached
  auto rec = [&](auto&& self, size_t gi) -> bool {
    if (gi == gens_.size()) {
      if ((int)dom.size() != n) fail(errc::ill_defined, "generators failed to generate");
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (map_a[a_.mul(x, y)] != b.mul(map_a[x], map_a[y]))
            fail(errc::ill_defined, "candidate map is not a homomorphism");
      out.push_back(Perm(map_a));
      return out.size() >= limit;
    }
    Elt g = gens_[gi];
    if (map_a[g] != -1) return self(self, gi + 1);  // already forced by closure
    for (int h = 0; h < n; ++h) {
      if (used_b[h] || fpb[h] != fpa_[g]) continue;
      size_t mark = dom.size();
      map_a[g] = h;
      used_b[h] = 1;
      dom.push_back(g);
      bool ok = close_from(mark);
      if (ok && self(self, gi + 1)) return true;
      undo_to(mark);
    }
    return false;
  };
  rec(rec, 0);
}

std::optional<Perm> IsoTester::find(const LoopTable& b) const {
  std::vector<Perm> out = all(b, 1);
  if (out.empty()) return std::nullopt;
  return out[0];
}

std::vector<Perm> IsoTester::all(const LoopTable& b, std::size_t limit) const {
  if (b.order() != a_.order() || limit == 0) return {};
  std::vector<std::array<int, 4>> fpb = element_fingerprints(b);
  std::vector<std::array<int, 4>> fpb_sorted = fpb;
  std::sort(fpb_sorted.begin(), fpb_sorted.end());
  if (fpb_sorted != fpa_sorted_) return {};
  std::vector<Perm> out;
  search(b, fpb, limit, out);
  return out;
}

IsoCertificate are_isomorphic(const LoopTable& a, const LoopTable& b) {
  IsoTester t(a);
  std::optional<Perm> m = t.find(b);
  if (!m) return {};
  return {true, *m};
}

std::vector<Perm> all_isomorphisms(const LoopTable& a, const LoopTable& b,
                                   std::size_t limit) {
  return IsoTester(a).all(b, limit);
}

bool are_isomorphic_naive(const LoopTable& a, const LoopTable& b) {
  int n = a.order();
  if (b.order() != n) return false;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (img[a.mul(x, y)] != b.mul(img[x], img[y])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(img.begin() + 1, img.end()));  // identity stays fixed
  return false;
}

std::vector<LoopTable> up_to_isomorphism(const std::vector<LoopTable>& in,
                                         std::vector<int>* class_of) {
  std::vector<LoopTable> reps;
  std::vector<IsoTester> testers;
  if (class_of) class_of->clear();
  for (const LoopTable& q : in) {
    int cls = -1;
    for (size_t i = 0; i < reps.size(); ++i) {
      if (reps[i].order() != q.order()) continue;
      if (testers[i].find(q)) {
        cls = (int)i;
        break;
      }
    }
    if (cls == -1) {
      cls = (int)reps.size();
      reps.push_back(q);
      testers.emplace_back(q);
    }
    if (class_of) class_of->push_back(cls);
  }
  return reps;
}

LoopTable principal_isotope(const LoopTable& q, Elt a, Elt b) {
  int n = q.order();
  if (a < 0 || a >= n || b < 0 || b >= n)
    fail(errc::point_out_of_range, "isotope parameters out of range");
  Elt e = q.mul(a, b);  // identity of the isotope before relabeling
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::swap(sigma[0], sigma[e]);
  std::vector<int> flat((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[sigma[x] * n + sigma[y]] = sigma[q.mul(q.rdiv(x, b), q.ldiv(a, y))];
  return LoopTable::validate_flat(n, std::move(flat));
}

IsotopyResult are_isotopic(const LoopTable& x, const LoopTable& y) {
  if (x.order() != y.order()) return {};
  IsoTester ty(y);
  for (int a = 0; a < x.order(); ++a)
    for (int b = 0; b < x.order(); ++b)
      if (ty.find(principal_isotope(x, a, b))) return {true, a, b};
  return {};
}

}  // namespace loops
