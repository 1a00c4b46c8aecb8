#include "dlchar/unipotent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlchar::unipotent {

CuspidalDatum CuspidalDatum::make(int order, int exp, std::int64_t m) {
  if (order < 1 || m < 1) throw std::invalid_argument("bad cuspidal datum");
  exp = ((exp % order) + order) % order;
  const int g = std::gcd(exp, order);  // gcd(0, n) = n
  return {order / g, exp / g, m};
}

std::string CuspidalDatum::omega_label() const {
  switch (order) {
    case 1: return "1";
    case 2: return "-1";
    case 3: return exp == 1 ? "theta" : "theta^2";
    case 4: return exp == 1 ? "i" : "-i";
    case 6: return exp == 1 ? "-theta^2" : "-theta";  // zeta_6 = -theta^2
    default: return "zeta" + std::to_string(order) + (exp == 1 ? "" : "^" + std::to_string(exp));
  }
}

std::string CuspidalDatum::to_string() const { return "(" + omega_label() + "," + std::to_string(m) + ")"; }

CuspidalDatum operator*(const CuspidalDatum& a, const CuspidalDatum& b) {
  const int n = std::lcm(a.order, b.order);
  return CuspidalDatum::make(n, a.exp * (n / a.order) + b.exp * (n / b.order), a.m * b.m);
}

namespace {

CuspidalDatum cd(int order, int exp, std::int64_t m) { return CuspidalDatum::make(order, exp, m); }

int sign_datum_order(int exponent) { return exponent % 2 ? 2 : 1; }

}  // namespace

CuspidalList xcirc_trivial() { return {cd(1, 0, 1)}; }

CuspidalList xcirc(const CartanType& t) {
  t.validate();
  const int n = t.rank;
  CuspidalList out;
  if (t.twist == 1) {
    switch (t.series) {
      case 'A': break;
      case 'B': case 'C':
        for (int l = 1; l * l + l <= n; ++l)
          if (l * l + l == n) out.push_back(cd(sign_datum_order(n / 2), n / 2 % 2, std::int64_t{1} << l));
        break;
      case 'D':
        for (int l = 1; 4 * l * l <= n; ++l)
          if (4 * l * l == n) out.push_back(cd(sign_datum_order(n / 4), n / 4 % 2, std::int64_t{1} << (2 * l - 1)));
        break;
      case 'G': out = {cd(1, 0, 6), cd(2, 1, 2), cd(3, 1, 3), cd(3, 2, 3)}; break;
      case 'F': out = {cd(1, 0, 8), cd(1, 0, 24), cd(2, 1, 4), cd(4, 1, 4), cd(4, 3, 4), cd(3, 1, 3), cd(3, 2, 3)}; break;
      case 'E':
        if (n == 6) out = {cd(3, 1, 3), cd(3, 2, 3)};
        if (n == 7) out = {cd(4, 1, 2), cd(4, 3, 2)};
        if (n == 8) {
          // theta = zeta_6^2, -theta = zeta_6^5, theta^2 = zeta_3^2, -theta^2 = zeta_6
          out = {cd(1, 0, 8), cd(1, 0, 120), cd(2, 1, 12), cd(4, 1, 4), cd(4, 3, 4), cd(3, 1, 6), cd(6, 5, 6),
                 cd(3, 2, 6), cd(6, 1, 6), cd(5, 1, 5), cd(5, 2, 5), cd(5, 3, 5), cd(5, 4, 5)};
        }
        break;
    }
  } else if (t.series == 'A') {
    for (int l = 1; l * (l - 1) / 2 <= n + 1; ++l)
      if (l * (l - 1) / 2 == n + 1) out.push_back(cd(sign_datum_order((n + 1) / 2), (n + 1) / 2 % 2, 1));
  } else if (t.series == 'D' && t.twist == 2) {
    for (int l = 1; (2 * l + 1) * (2 * l + 1) <= n; ++l)
      if ((2 * l + 1) * (2 * l + 1) == n) out.push_back(cd(1, 0, std::int64_t{1} << (2 * l)));
  } else if (t.series == 'D') {
    out = {cd(1, 0, 2), cd(2, 1, 2)};
  } else {
    out = {cd(1, 0, 6), cd(3, 1, 3), cd(3, 2, 3)};
  }
  std::sort(out.begin(), out.end());
  return out;
}

CuspidalList xcirc_levi(const weyl::WeylGroup& g, NodeSet J, const weyl::DiagramAut& s) {
  if (J & ~g.all_nodes()) throw std::invalid_argument("J contains nodes outside the diagram");
  if (s.apply(J) != J) throw std::invalid_argument("J = {" + weyl::format_nodes(J) + "} is not sigma-stable");
  const auto comps = weyl::components(g, J);
  std::vector<char> used(comps.size(), 0);
  CuspidalList acc = xcirc_trivial();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (used[c]) continue;
    // walk the sigma-orbit of this component
    int h = 0;
    NodeSet cur = comps[c].nodes;
    do {
      for (std::size_t d = 0; d < comps.size(); ++d)
        if (comps[d].nodes == cur) used[d] = 1;
      cur = s.apply(cur);
      ++h;
    } while (cur != comps[c].nodes);
    // sigma^h restricted to the component
    std::vector<int> sh(s.perm.size());
    std::iota(sh.begin(), sh.end(), 0);
    for (int k = 0; k < h; ++k)
      for (auto& x : sh) x = s.perm[x];
    int twist = 1;
    for (int i : weyl::node_list(comps[c].nodes)) {
      int j = i, o = 0;
      do { j = sh[j]; ++o; } while (j != i);
      twist = std::lcm(twist, o);
    }
    CartanType ct = comps[c].type;
    ct.twist = twist;
    const CuspidalList f = xcirc(ct);
    CuspidalList next;
    for (const auto& a : acc)
      for (const auto& b : f) next.push_back(a * b);
    acc = std::move(next);
    if (acc.empty()) break;
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

namespace {

bool node_order(NodeSet a, NodeSet b) { return weyl::node_list(a) < weyl::node_list(b); }

std::vector<NodeSet> stable_subsets(const weyl::WeylGroup& g) {
  std::vector<NodeSet> out;
  for (NodeSet J = 0; J <= g.all_nodes(); ++J)
    if (g.sigma().apply(J) == J) out.push_back(J);
  std::sort(out.begin(), out.end(), node_order);
  return out;
}

Series series_for(const weyl::WeylGroup& g, NodeSet J) {
  Series s;
  s.J = J;
  s.cuspidals = xcirc_levi(g, J, g.sigma());
  if (!s.cuspidals.empty()) {
    s.relative = weyl::relative_weyl_type(g, J, g.sigma());
    s.irr_count = weyl::class_count(s.relative);
  }
  return s;
}

std::vector<Series> compact(std::vector<Series> all) {
  std::vector<Series> out;
  for (auto& s : all)
    if (!s.cuspidals.empty()) out.push_back(std::move(s));
  return out;
}

}  // namespace

namespace serial {
std::vector<Series> series_breakdown(const CartanType& t) {
  const weyl::WeylGroup g(t);
  std::vector<Series> all;
  for (NodeSet J : stable_subsets(g)) all.push_back(series_for(g, J));
  return compact(std::move(all));
}
}  // namespace serial

namespace parallel {
std::vector<Series> series_breakdown(const CartanType& t) {
  const weyl::WeylGroup g(t);
  const auto subsets = stable_subsets(g);
  std::vector<Series> all(subsets.size());
  const auto n = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = series_for(g, subsets[static_cast<std::size_t>(i)]);
  return compact(std::move(all));
}
}  // namespace parallel

std::vector<XEntry> enumerate_X(const CartanType& t) {
  std::vector<XEntry> out;
  for (const auto& s : series_breakdown(t))
    for (std::uint64_t e = 0; e < s.irr_count; ++e)
      for (const auto& x : s.cuspidals) out.push_back({s.J, e, s.relative, x});
  return out;
}

std::uint64_t count_unipotent(const CartanType& t) {
  std::uint64_t c = 0;
  for (const auto& s : series_breakdown(t)) c += s.size();
  return c;
}

}  // namespace dlchar::unipotent
