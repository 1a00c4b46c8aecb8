#include <string>

#include "internal.hpp"

// SL2(F_q), q odd. Classes: I, -I, J, J', -J, -J', a^l (1 <= l <= (q-3)/2),
// b^m (1 <= m <= (q-1)/2) where a = S(xi0) is split and b = S(xi0') is
// anisotropic. eps = zeta_{q-1}, eta = zeta_{q+1}.

namespace dlchar::dl {

namespace {

struct Layout {
  std::int64_t q, h, na, nb;
  std::size_t a(std::int64_t l) const { return static_cast<std::size_t>(5 + l); }
  std::size_t b(std::int64_t m) const { return static_cast<std::size_t>(5 + na + m); }
};

Layout layout(std::int64_t q) { return {q, (q - 1) / 2, (q - 3) / 2, (q - 1) / 2}; }

CycNum eps(std::int64_t q, std::int64_t k) { return CycNum::root_of_unity(q - 1, k); }
CycNum eta(std::int64_t q, std::int64_t k) { return CycNum::root_of_unity(q + 1, k); }

}  // namespace

GroupData build_sl2(std::int64_t q) {
  detail::validate_q(q);
  const Layout L = layout(q);
  GroupData g;
  g.kind = GroupKind::SL2;
  g.name = "SL2";
  g.q = q;

  auto& c = g.classes;
  c.group_order = q * (q * q - 1);
  const std::int64_t jsize = (q * q - 1) / 2;
  const std::vector<std::string> fixed = {"I", "-I", "J", "J'", "-J", "-J'"};
  const std::vector<std::size_t> ss = {0, 1, 0, 0, 1, 1}, uu = {0, 0, 2, 3, 2, 3};
  const std::vector<int> grp = {0, 1, 2, 2, 3, 3};
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    c.labels.push_back(fixed[i]);
    c.sizes.push_back(i < 2 ? 1 : jsize);
    c.unipotent.push_back(i == 0 || i == 2 || i == 3);
    c.central.push_back(i < 2);
    c.grouping.push_back(grp[i]);
    c.semisimple_part.push_back(ss[i]);
    c.unipotent_part.push_back(uu[i]);
  }
  int next_group = 4;
  auto add_ss = [&](const std::string& label, std::int64_t size) {
    c.labels.push_back(label);
    c.sizes.push_back(size);
    c.unipotent.push_back(0);
    c.central.push_back(0);
    c.grouping.push_back(next_group++);
    c.semisimple_part.push_back(c.labels.size() - 1);
    c.unipotent_part.push_back(0);
  };
  for (std::int64_t l = 1; l <= L.na; ++l) add_ss("a^" + std::to_string(l), q * (q + 1));
  for (std::int64_t m = 1; m <= L.nb; ++m) add_ss("b^" + std::to_string(m), q * (q - 1));

  const std::size_t n = c.size();
  const CycNum s = sqrt_delta_q(q);
  const Rational half(1, 2);
  const long delta = L.h % 2 ? -1 : 1;
  auto& t = g.table;
  auto add_row = [&](const std::string& label, ClassFunction v) {
    t.labels.push_back(label);
    t.rows.push_back(std::move(v));
  };

  add_row("1", ClassFunction(n, CycNum(1L)));
  {
    ClassFunction v(n);
    v[0] = v[1] = CycNum(q);
    for (std::int64_t l = 1; l <= L.na; ++l) v[L.a(l)] = CycNum(1L);
    for (std::int64_t m = 1; m <= L.nb; ++m) v[L.b(m)] = CycNum(-1L);
    add_row("St", v);
  }
  for (std::int64_t i = 1; i <= L.na; ++i) {
    const long sg = i % 2 ? -1 : 1;
    ClassFunction v(n);
    v[0] = CycNum(q + 1);
    v[1] = CycNum(sg * (q + 1));
    v[2] = v[3] = CycNum(1L);
    v[4] = v[5] = CycNum(sg);
    for (std::int64_t l = 1; l <= L.na; ++l) v[L.a(l)] = eps(q, i * l) + eps(q, -i * l);
    add_row("rho_" + std::to_string(i), v);
  }
  for (std::int64_t j = 1; j <= L.nb; ++j) {
    const long sg = j % 2 ? -1 : 1;
    ClassFunction v(n);
    v[0] = CycNum(q - 1);
    v[1] = CycNum(sg * (q - 1));
    v[2] = v[3] = CycNum(-1L);
    v[4] = v[5] = CycNum(-sg);
    for (std::int64_t m = 1; m <= L.nb; ++m) v[L.b(m)] = -(eta(q, j * m) + eta(q, -j * m));
    add_row("pi_" + std::to_string(j), v);
  }
  for (int e : {1, -1}) {
    // rho0' takes (1+s)/2 on J, rho0'' takes (1-s)/2
    const CycNum x = (CycNum(1L) + s * Rational(e)) * half, y = (CycNum(1L) - s * Rational(e)) * half;
    ClassFunction v(n);
    v[0] = CycNum(Rational(q + 1, 2));
    v[1] = CycNum(Rational(delta * (q + 1), 2));
    v[2] = x;
    v[3] = y;
    v[4] = x * Rational(delta);
    v[5] = y * Rational(delta);
    for (std::int64_t l = 1; l <= L.na; ++l) v[L.a(l)] = CycNum(l % 2 ? -1L : 1L);
    add_row(e == 1 ? "rho0'" : "rho0''", v);
  }
  for (int e : {1, -1}) {
    const CycNum x = (CycNum(-1L) - s * Rational(e)) * half, y = (CycNum(-1L) + s * Rational(e)) * half;
    ClassFunction v(n);
    v[0] = CycNum(Rational(q - 1, 2));
    v[1] = CycNum(Rational(-delta * (q - 1), 2));
    v[2] = x;
    v[3] = y;
    v[4] = x * Rational(-delta);
    v[5] = y * Rational(-delta);
    for (std::int64_t m = 1; m <= L.nb; ++m) v[L.b(m)] = CycNum(m % 2 ? 1L : -1L);
    add_row(e == 1 ? "pi0'" : "pi0''", v);
  }

  detail::attach_datum(g, "SL2");
  g.torus_orders = {{q - 1}, {q + 1}};
  g.regular_unipotent = {2, 3};
  g.component_group_order = 2;

  const std::size_t rows = t.size();
  auto unit = [&](std::initializer_list<std::pair<std::string, int>> parts) {
    std::vector<int> m(rows, 0);
    for (const auto& [label, k] : parts) m[t.index(label)] = k;
    return m;
  };
  for (std::int64_t i = 0; i < q - 1; ++i) {
    const std::int64_t k = std::min(i, q - 1 - i);
    std::vector<int> m;
    if (k == 0) m = unit({{"1", 1}, {"St", 1}});
    else if (k == L.h) m = unit({{"rho0'", 1}, {"rho0''", 1}});
    else m = unit({{"rho_" + std::to_string(k), 1}});
    g.family.push_back({g.w_indices[0], {i}, {i}, m});
  }
  for (std::int64_t j = 0; j < q + 1; ++j) {
    const std::int64_t k = std::min(j, q + 1 - j);
    std::vector<int> m;
    if (k == 0) m = unit({{"1", 1}, {"St", -1}});
    else if (k == (q + 1) / 2) m = unit({{"pi0'", -1}, {"pi0''", -1}});
    else m = unit({{"pi_" + std::to_string(k), -1}});
    g.family.push_back({g.w_indices[1], {j}, {j}, m});
  }
  return g;
}

namespace detail {

std::size_t sl2_torus_class(const GroupData& g, std::size_t slot, const IntVector& t) {
  const Layout L = layout(g.q);
  if (slot == 0) {
    const std::int64_t a = mod(t[0], g.q - 1);
    if (a == 0) return 0;
    if (a == L.h) return 1;
    return L.a(std::min(a, g.q - 1 - a));
  }
  const std::int64_t b = mod(t[0], g.q + 1);
  if (b == 0) return 0;
  if (b == (g.q + 1) / 2) return 1;
  return L.b(std::min(b, g.q + 1 - b));
}

}  // namespace detail

}  // namespace dlchar::dl
