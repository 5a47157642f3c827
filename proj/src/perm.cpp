#include "loops/perm.hpp"

#include <numeric>

namespace loops {

Perm::Perm(int n) : img_(n) {
  if (n < 0) fail(errc::empty_degree, "negative degree");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= (int)img_.size() || seen[v])
      fail(errc::bad_entry, "image vector is not a permutation");
    seen[v] = 1;
  }
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < (int)img_.size(); ++i) inv[img_[i]] = i;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < (int)img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

long Perm::order() const {
  int n = degree();
  std::vector<char> done(n, 0);
  long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    int len = 0, j = i;
    while (!done[j]) {
      done[j] = 1;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, (long)len);
  }
  return ord;
}

std::vector<int> Perm::moved_points() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) out.push_back(i);
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(errc::degree_mismatch, "composing permutations of different degree");
  std::vector<int> img(a.degree());
  for (int p = 0; p < a.degree(); ++p) img[p] = a(b(p));
  return Perm(std::move(img));
}

}  // namespace loops
