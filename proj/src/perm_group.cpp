#include "loops/perm_group.hpp"

#include <algorithm>
#include <numeric>

namespace loops {

namespace {
int smallest_moved(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return -1;
}
}  // namespace

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens) {
  if (degree < 1) fail(errc::empty_degree, "permutation group needs degree >= 1");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      fail(errc::degree_mismatch, "generator degree does not match group degree");
  PermGroup grp;
  grp.degree_ = degree;
  grp.gens_ = std::move(gens);
  grp.build({});
  return grp;
}

PermGroup PermGroup::point_stabilizer(int pt) const {
  if (pt < 0 || pt >= degree_) fail(errc::point_out_of_range, "stabilizer point out of range");
  PermGroup reordered;
  reordered.degree_ = degree_;
  reordered.gens_ = gens_;
  reordered.build({pt});
  PermGroup stab;
  stab.degree_ = degree_;
  if (reordered.base_.size() > 1) stab.gens_ = reordered.level_gens_[1];
  stab.build({});
  return stab;
}

void PermGroup::build(std::vector<int> forced_base) {
  base_ = std::move(forced_base);
  level_gens_.assign(base_.size() + 1, {});
  // distribute generators: g joins every level whose base prefix it fixes
  for (const Perm& g : gens_) {
    if (g.is_identity()) continue;
    size_t j = 0;
    while (j < base_.size() && g(base_[j]) == base_[j]) ++j;
    if (j == base_.size()) {
      base_.push_back(smallest_moved(g));
      level_gens_.push_back({});
    }
    for (size_t l = 0; l <= j; ++l) level_gens_[l].push_back(g);
  }
  orbit_.assign(base_.size(), {});
  transversal_.assign(base_.size(), {});
  in_orbit_.assign(base_.size(), {});
  for (int i = (int)base_.size() - 1; i >= 0; --i) sims_at(i);
}

void PermGroup::recompute_orbit(int level) {
  orbit_[level].clear();
  transversal_[level].assign(degree_, Perm());
  in_orbit_[level].assign(degree_, 0);
  int b = base_[level];
  orbit_[level].push_back(b);
  in_orbit_[level][b] = 1;
  transversal_[level][b] = Perm(degree_);
  for (size_t i = 0; i < orbit_[level].size(); ++i) {
    int p = orbit_[level][i];
    for (const Perm& s : level_gens_[level]) {
      int q = s(p);
      if (!in_orbit_[level][q]) {
        in_orbit_[level][q] = 1;
        orbit_[level].push_back(q);
        transversal_[level][q] = compose(s, transversal_[level][p]);
      }
    }
  }
}

std::pair<Perm, int> PermGroup::sift_from(const Perm& p, int level) const {
  Perm cur = p;
  for (int l = level; l < (int)base_.size(); ++l) {
    int q = cur(base_[l]);
    if (!in_orbit_[l][q]) return {cur, l};
    cur = compose(transversal_[l][q].inverse(), cur);
  }
  return {cur, (int)base_.size()};
}

void PermGroup::sims_at(int level) {
  recompute_orbit(level);
  for (size_t idx = 0; idx < orbit_[level].size(); ++idx) {
    int p = orbit_[level][idx];
    for (size_t si = 0; si < level_gens_[level].size(); ++si) {
      const Perm s = level_gens_[level][si];
      int q = s(p);
      Perm schreier =
          compose(transversal_[level][q].inverse(), compose(s, transversal_[level][p]));
      if (schreier.is_identity()) continue;
      auto [residue, stuck] = sift_from(schreier, level + 1);
      if (residue.is_identity()) continue;
      if (stuck == (int)base_.size()) {
        base_.push_back(smallest_moved(residue));
        level_gens_.push_back({});
        orbit_.push_back({});
        transversal_.push_back({});
        in_orbit_.push_back({});
      }
      for (int l = level + 1; l <= stuck; ++l) level_gens_[l].push_back(residue);
      for (int l = stuck; l > level; --l) sims_at(l);
    }
  }
}

unsigned long long PermGroup::order() const {
  unsigned long long o = 1;
  for (const auto& orb : orbit_) o *= (unsigned long long)orb.size();
  return o;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) fail(errc::degree_mismatch, "element degree does not match group degree");
  auto [res, lvl] = sift_from(p, 0);
  (void)lvl;
  return res.is_identity();
}

std::vector<int> PermGroup::orbit(int pt) const {
  if (pt < 0 || pt >= degree_) fail(errc::point_out_of_range, "orbit point out of range");
  std::vector<int> orb{pt};
  std::vector<char> seen(degree_, 0);
  seen[pt] = 1;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens_) {
      int q = g(orb[i]);
      if (!seen[q]) {
        seen[q] = 1;
        orb.push_back(q);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<int> PermGroup::fixed_points() const {
  std::vector<int> out;
  for (int p = 0; p < degree_; ++p) {
    bool fixed = true;
    for (const Perm& g : gens_)
      if (g(p) != p) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(p);
  }
  return out;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& lg : level_gens_)
    for (const Perm& g : lg)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

std::vector<Perm> PermGroup::elements(unsigned long long cap) const {
  if (order() > cap)
    fail(errc::too_large_to_enumerate,
         "group order " + std::to_string(order()) + " exceeds cap " + std::to_string(cap));
  std::vector<Perm> out{Perm(degree_)};
  // peel transversals from the deepest level out so each element appears once
  for (int l = (int)base_.size() - 1; l >= 0; --l) {
    std::vector<Perm> next;
    next.reserve(out.size() * orbit_[l].size());
    for (int p : orbit_[l])
      for (const Perm& e : out) next.push_back(compose(transversal_[l][p], e));
    out = std::move(next);
  }
  return out;
}

long PermGroup::exponent(unsigned long long cap) const {
  long e = 1;
  for (const Perm& p : elements(cap)) e = std::lcm(e, p.order());
  return e;
}

unsigned long long PermGroup::center_order(unsigned long long cap) const {
  unsigned long long cnt = 0;
  for (const Perm& p : elements(cap)) {
    bool central = true;
    for (const Perm& g : gens_)
      if (compose(p, g) != compose(g, p)) {
        central = false;
        break;
      }
    if (central) ++cnt;
  }
  return cnt;
}

}  // namespace loops
