#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dlchar/weyl/group.hpp"

namespace dlchar::weyl {

WeylElement WeylElement::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint8_t>(i);
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::vector<std::uint8_t> r(b.img_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.img_[b.img_[i]];
  return WeylElement(std::move(r));
}

int DiagramAut::order() const {
  std::vector<int> cur(perm.size());
  std::iota(cur.begin(), cur.end(), 0);
  for (int k = 1; k <= 6; ++k) {
    for (auto& c : cur) c = perm[c];
    bool id = true;
    for (std::size_t i = 0; i < cur.size(); ++i) id = id && cur[i] == static_cast<int>(i);
    if (id) return k;
  }
  throw std::logic_error("diagram automorphism of unexpected order");
}

NodeSet DiagramAut::apply(NodeSet j) const {
  NodeSet out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (j >> i & 1U) out |= NodeSet{1} << perm[i];
  return out;
}

DiagramAut standard_twist(const CartanType& t) {
  DiagramAut s{std::vector<int>(t.rank)};
  std::iota(s.perm.begin(), s.perm.end(), 0);
  if (t.twist == 1) return s;
  const int n = t.rank;
  if (t.series == 'A') {
    for (int i = 0; i < n; ++i) s.perm[i] = n - 1 - i;
  } else if (t.series == 'D' && t.twist == 2) {
    std::swap(s.perm[n - 2], s.perm[n - 1]);
  } else if (t.series == 'D') {
    // nodes 1 -> 3 -> 4 -> 1
    s.perm[0] = 2;
    s.perm[2] = 3;
    s.perm[3] = 0;
  } else {
    s.perm[0] = 5;
    s.perm[5] = 0;
    s.perm[2] = 4;
    s.perm[4] = 2;
  }
  return s;
}

WeylGroup::WeylGroup(const CartanType& t) : type_(t), rs_(build_root_system(t)) {
  for (std::size_t i = 0; i < rs_.roots.size(); ++i) index_[rs_.roots[i]] = static_cast<int>(i);
  const int nr = num_roots();
  if (nr > 256) throw std::logic_error("root system too large for 8-bit permutations");
  std::vector<std::uint8_t> id(nr);
  std::iota(id.begin(), id.end(), 0);
  id_ = WeylElement(id);
  for (int j = 0; j < rank(); ++j) {
    std::vector<std::uint8_t> img(nr);
    for (int r = 0; r < nr; ++r) {
      std::vector<int> beta = rs_.roots[r];
      int pairing = 0;
      for (int i = 0; i < rank(); ++i) pairing += beta[i] * rs_.cartan[i][j];
      beta[j] -= pairing;
      img[r] = static_cast<std::uint8_t>(index_of(beta));
    }
    simple_.emplace_back(std::move(img));
  }
  sigma_ = make_aut(standard_twist(t).perm);
}

int WeylGroup::index_of(const std::vector<int>& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw std::logic_error("vector is not a root");
  return it->second;
}

int WeylGroup::length(const WeylElement& w) const {
  int l = 0;
  for (int i = 0; i < num_positive(); ++i) l += w[i] >= num_positive();
  return l;
}

WeylElement WeylGroup::longest_element(NodeSet J) const {
  WeylElement w = id_;
  for (;;) {
    int pick = -1;
    for (int j = 0; j < rank() && pick < 0; ++j)
      if ((J >> j & 1U) && !is_right_descent(w, j)) pick = j;
    if (pick < 0) return w;
    w = w * simple(pick);
  }
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& w) const {
  std::vector<int> rev;
  WeylElement cur = w;
  while (cur != id_) {
    int j = 0;
    while (!is_right_descent(cur, j)) ++j;
    rev.push_back(j);
    cur = cur * simple(j);
  }
  return {rev.rbegin(), rev.rend()};
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement w = id_;
  for (int j : word) {
    if (j < 0 || j >= rank()) throw std::out_of_range("generator index out of range");
    w = w * simple(j);
  }
  return w;
}

std::uint64_t WeylGroup::key(const WeylElement& w) const {
  std::uint64_t k = 0;
  for (int i = 0; i < rank(); ++i) k |= static_cast<std::uint64_t>(w[i]) << (8 * i);
  return k;
}

WeylElement WeylGroup::from_key(std::uint64_t k) const {
  const int n = rank();
  std::vector<const std::vector<int>*> img(n);
  for (int i = 0; i < n; ++i) img[i] = &rs_.roots[(k >> (8 * i)) & 0xFFU];
  std::vector<std::uint8_t> out(num_roots());
  std::vector<int> v(n);
  for (int r = 0; r < num_roots(); ++r) {
    std::fill(v.begin(), v.end(), 0);
    const auto& c = rs_.roots[r];
    for (int i = 0; i < n; ++i)
      if (c[i])
        for (int t = 0; t < n; ++t) v[t] += c[i] * (*img[i])[t];
    out[r] = static_cast<std::uint8_t>(index_of(v));
  }
  return WeylElement(std::move(out));
}

DiagramAut WeylGroup::trivial_aut(int rank) {
  DiagramAut s{std::vector<int>(rank)};
  std::iota(s.perm.begin(), s.perm.end(), 0);
  return s;
}

DiagramAut WeylGroup::make_aut(const std::vector<int>& perm) const {
  const auto n = static_cast<std::size_t>(rank());
  if (perm.size() != n) throw std::invalid_argument("automorphism has wrong size");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("automorphism is not a permutation");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rs_.cartan[i][j] != rs_.cartan[perm[i]][perm[j]])
        throw std::invalid_argument("permutation does not preserve the Cartan matrix");
  return DiagramAut{perm};
}

std::vector<std::uint8_t> WeylGroup::root_permutation(const DiagramAut& s) const {
  std::vector<std::uint8_t> p(num_roots());
  for (int r = 0; r < num_roots(); ++r) {
    const auto& c = rs_.roots[r];
    std::vector<int> v(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) v[s.perm[i]] = c[i];
    p[r] = static_cast<std::uint8_t>(index_of(v));
  }
  return p;
}

WeylElement WeylGroup::apply(const DiagramAut& s, const WeylElement& w) const {
  if (s.is_identity()) return w;
  return apply_root_perm(root_permutation(s), w);
}

WeylElement apply_root_perm(const std::vector<std::uint8_t>& p, const WeylElement& w) {
  std::vector<std::uint8_t> out(p.size());
  // sigma w sigma^{-1}: p(r) -> p(w(r))
  for (std::size_t r = 0; r < p.size(); ++r) out[p[r]] = p[w[r]];
  return WeylElement(std::move(out));
}

int WeylGroup::element_order(const WeylElement& x, int cap) const {
  WeylElement cur = x;
  for (int k = 1; k <= cap; ++k) {
    if (cur == id_) return k;
    cur = cur * x;
  }
  throw std::logic_error("element order exceeds cap");
}

}  // namespace dlchar::weyl
