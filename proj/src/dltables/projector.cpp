#include <stdexcept>

#include "internal.hpp"

namespace dlchar::dl {

UniformProjector::UniformProjector(const GroupData& g) : g_(g) {
  all_.reserve(g.family.size());
  for (const auto& r : g.family) all_.push_back(g.dl_character(r));
  for (std::size_t i = 0; i < all_.size(); ++i) {
    bool fresh = true;
    for (auto j : distinct_)
      if (all_[j] == all_[i]) {
        fresh = false;
        break;
      }
    if (fresh) distinct_.push_back(i);
  }
}

ClassFunction UniformProjector::apply(const ClassFunction& f) const {
  ClassFunction out(f.size());
  for (const auto& r : all_) {
    const CycNum c = inner_product(g_.classes, f, r);
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (!r[k].is_zero()) out[k] += c * r[k];
  }
  const Rational w(static_cast<long>(g_.datum->size()));
  for (auto& x : out) x /= w;
  return out;
}

ClassFunction UniformProjector::apply_gram(const ClassFunction& f) const {
  const std::size_t k = distinct_.size();
  // Gram entries are integers: dot products of multiplicity vectors
  std::vector<std::vector<Rational>> G(k, std::vector<Rational>(k));
  std::vector<CycNum> rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    const auto& ma = g_.family[distinct_[a]].mult;
    for (std::size_t b = 0; b < k; ++b) {
      const auto& mb = g_.family[distinct_[b]].mult;
      long s = 0;
      for (std::size_t i = 0; i < ma.size(); ++i) s += ma[i] * mb[i];
      G[a][b] = s;
    }
    rhs[a] = inner_product(g_.classes, f, all_[distinct_[a]]);
  }
  // Gauss-Jordan over Q with a cyclotomic right-hand side
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && G[piv][col] == 0) ++piv;
    if (piv == k) throw std::logic_error("Gram matrix of distinct R_w^theta is singular");
    std::swap(G[piv], G[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / G[col][col];
    for (auto& x : G[col]) x *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || G[r][col] == 0) continue;
      const Rational fct = G[r][col];
      for (std::size_t j = 0; j < k; ++j) G[r][j] -= fct * G[col][j];
      if (!rhs[col].is_zero()) rhs[r] -= rhs[col] * fct;
    }
  }
  ClassFunction out(f.size());
  for (std::size_t a = 0; a < k; ++a) {
    if (rhs[a].is_zero()) continue;
    const auto& r = all_[distinct_[a]];
    for (std::size_t c = 0; c < out.size(); ++c)
      if (!r[c].is_zero()) out[c] += rhs[a] * r[c];
  }
  return out;
}

ClassFunction UniformProjector::apply_class_sum(const ClassFunction& f) const {
  const auto& dw = *g_.datum;
  const auto& grp = dw.group();
  std::vector<char> seen(dw.size(), 0);
  ClassFunction out(f.size());
  for (std::size_t w = 0; w < dw.size(); ++w) {
    if (seen[w]) continue;
    for (auto x : weyl::twisted_class(grp, dw.store(), dw.element(w), grp.sigma())) seen[x] = 1;
    const auto stab = weyl::twisted_normalizer(grp, dw.store(), dw.element(w), dw.element(w), grp.sigma());
    const Rational weight(1, static_cast<unsigned long>(stab.size()));
    for (std::size_t i = 0; i < all_.size(); ++i) {
      if (g_.family[i].w != w) continue;
      const CycNum c = inner_product(g_.classes, f, all_[i]) * weight;
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < out.size(); ++k)
        if (!all_[i][k].is_zero()) out[k] += c * all_[i][k];
    }
  }
  return out;
}

Rational UniformProjector::rank() const {
  // diagonal entry at class c: (1/|W|) sum_R |c| R(c) conj(R(c)) / |G|
  CycNum tr;
  for (std::size_t c = 0; c < g_.classes.size(); ++c)
    for (const auto& r : all_)
      if (!r[c].is_zero()) tr += (r[c] * r[c].conj()) * Rational(g_.classes.sizes[c]);
  tr /= Rational(g_.classes.group_order);
  tr /= Rational(static_cast<long>(g_.datum->size()));
  return tr.to_rational();
}

}  // namespace dlchar::dl
