#include <map>
#include <string>

#include "internal.hpp"

// GL2(F_q), q odd. nu generates F_q^x, zeta generates F_{q^2}^x with
// zeta^{q+1} = nu. Classes: a_x = nu^x I, b_x = nu^x (unipotent Jordan block),
// c_{x,y} = diag(nu^x, nu^y) with x < y, d_z with eigenvalues zeta^z, zeta^{qz}.
// eps = zeta_{q-1}, omega = zeta_{q^2-1}.

namespace dlchar::dl {

namespace {

struct Layout {
  std::int64_t q;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> c_index;
  std::map<std::int64_t, std::size_t> d_index;  // every z with (q+1) not dividing z
  std::vector<std::int64_t> d_reps, x_reps;

  explicit Layout(std::int64_t q_) : q(q_) {
    std::size_t next = static_cast<std::size_t>(2 * (q - 1));
    for (std::int64_t x = 0; x < q - 1; ++x)
      for (std::int64_t y = x + 1; y < q - 1; ++y) c_index[{x, y}] = next++;
    const std::int64_t Q = q * q - 1;
    for (std::int64_t z = 0; z < Q; ++z) {
      if (z % (q + 1) == 0 || d_index.count(z)) continue;
      d_index[z] = d_index[mod(q * z, Q)] = next++;
      d_reps.push_back(z);
    }
    x_reps = d_reps;  // same orbit structure k ~ qk on characters
  }
  std::size_t a(std::int64_t x) const { return static_cast<std::size_t>(mod(x, q - 1)); }
  std::size_t b(std::int64_t x) const { return static_cast<std::size_t>(q - 1 + mod(x, q - 1)); }
  std::size_t c(std::int64_t x, std::int64_t y) const {
    x = mod(x, q - 1);
    y = mod(y, q - 1);
    return c_index.at({std::min(x, y), std::max(x, y)});
  }
  std::int64_t canon_k(std::int64_t k) const {
    const std::int64_t Q = q * q - 1;
    k = mod(k, Q);
    return std::min(k, mod(q * k, Q));
  }
};

CycNum eps(std::int64_t q, std::int64_t k) { return CycNum::root_of_unity(q - 1, k); }
CycNum omega(std::int64_t q, std::int64_t k) { return CycNum::root_of_unity(q * q - 1, k); }

}  // namespace

GroupData build_gl2(std::int64_t q) {
  detail::validate_q(q);
  const Layout L(q);
  GroupData g;
  g.kind = GroupKind::GL2;
  g.name = "GL2";
  g.q = q;

  auto& c = g.classes;
  c.group_order = q * (q - 1) * (q - 1) * (q + 1);
  auto add = [&](const std::string& label, std::int64_t size, bool uni, bool cen, std::size_t ss, std::size_t uu) {
    c.grouping.push_back(static_cast<int>(c.labels.size()));
    c.labels.push_back(label);
    c.sizes.push_back(size);
    c.unipotent.push_back(uni);
    c.central.push_back(cen);
    c.semisimple_part.push_back(ss);
    c.unipotent_part.push_back(uu);
  };
  for (std::int64_t x = 0; x < q - 1; ++x) add("a_" + std::to_string(x), 1, x == 0, true, L.a(x), L.a(0));
  for (std::int64_t x = 0; x < q - 1; ++x) add("b_" + std::to_string(x), q * q - 1, x == 0, false, L.a(x), L.b(0));
  std::vector<std::pair<std::int64_t, std::int64_t>> cpairs;
  for (std::int64_t x = 0; x < q - 1; ++x)
    for (std::int64_t y = x + 1; y < q - 1; ++y) {
      add("c_" + std::to_string(x) + "," + std::to_string(y), q * (q + 1), false, false, c.labels.size(), L.a(0));
      cpairs.push_back({x, y});
    }
  for (std::int64_t z : L.d_reps) add("d_" + std::to_string(z), q * (q - 1), false, false, c.labels.size(), L.a(0));

  const std::size_t n = c.size();
  auto& t = g.table;
  auto add_row = [&](const std::string& label, ClassFunction v) {
    t.labels.push_back(label);
    t.rows.push_back(std::move(v));
  };
  auto fill_cd = [&](ClassFunction& v, auto cfun, auto dfun) {
    for (auto [x, y] : cpairs) v[L.c(x, y)] = cfun(x, y);
    for (std::int64_t z : L.d_reps) v[L.d_index.at(z)] = dfun(z);
  };

  for (std::int64_t k = 0; k < q - 1; ++k) {
    ClassFunction u(n), v(n);
    for (std::int64_t x = 0; x < q - 1; ++x) {
      u[L.a(x)] = u[L.b(x)] = eps(q, 2 * k * x);
      v[L.a(x)] = eps(q, 2 * k * x) * Rational(q);
    }
    auto cf = [&](std::int64_t x, std::int64_t y) { return eps(q, k * (x + y)); };
    fill_cd(u, cf, [&](std::int64_t z) { return eps(q, k * z); });
    fill_cd(v, cf, [&](std::int64_t z) { return -eps(q, k * z); });
    add_row("U_" + std::to_string(k), u);
    add_row("V_" + std::to_string(k), v);
  }
  for (std::int64_t k1 = 0; k1 < q - 1; ++k1)
    for (std::int64_t k2 = k1 + 1; k2 < q - 1; ++k2) {
      ClassFunction v(n);
      for (std::int64_t x = 0; x < q - 1; ++x) {
        v[L.a(x)] = eps(q, (k1 + k2) * x) * Rational(q + 1);
        v[L.b(x)] = eps(q, (k1 + k2) * x);
      }
      fill_cd(
          v, [&](std::int64_t x, std::int64_t y) { return eps(q, k1 * x + k2 * y) + eps(q, k1 * y + k2 * x); },
          [](std::int64_t) { return CycNum(); });
      add_row("W_" + std::to_string(k1) + "," + std::to_string(k2), v);
    }
  for (std::int64_t k : L.x_reps) {
    ClassFunction v(n);
    for (std::int64_t x = 0; x < q - 1; ++x) {
      const CycNum phi = omega(q, k * (q + 1) * x);
      v[L.a(x)] = phi * Rational(q - 1);
      v[L.b(x)] = -phi;
    }
    fill_cd(
        v, [](std::int64_t, std::int64_t) { return CycNum(); },
        [&](std::int64_t z) { return -(omega(q, k * z) + omega(q, k * q * z)); });
    add_row("X_" + std::to_string(k), v);
  }

  detail::attach_datum(g, "GL2");
  g.torus_orders = {{q - 1, q - 1}, {q * q - 1}};
  g.regular_unipotent = {L.b(0)};
  g.component_group_order = 1;

  const std::size_t rows = t.size();
  auto unit = [&](std::initializer_list<std::pair<std::string, int>> parts) {
    std::vector<int> m(rows, 0);
    for (const auto& [label, k] : parts) m[t.index(label)] = k;
    return m;
  };
  for (std::int64_t k1 = 0; k1 < q - 1; ++k1)
    for (std::int64_t k2 = 0; k2 < q - 1; ++k2) {
      std::vector<int> m;
      if (k1 == k2) m = unit({{"U_" + std::to_string(k1), 1}, {"V_" + std::to_string(k1), 1}});
      else m = unit({{"W_" + std::to_string(std::min(k1, k2)) + "," + std::to_string(std::max(k1, k2)), 1}});
      g.family.push_back({g.w_indices[0], {k1, k2}, {k1, k2}, m});
    }
  for (std::int64_t k = 0; k < q * q - 1; ++k) {
    std::vector<int> m;
    if (k % (q + 1) == 0) {
      const std::string a = std::to_string(k / (q + 1));
      m = unit({{"U_" + a, 1}, {"V_" + a, -1}});
    } else {
      m = unit({{"X_" + std::to_string(L.canon_k(k)), -1}});
    }
    // lambda = (a, b) restricts to the character of exponent a + qb on T0[s]
    g.family.push_back({g.w_indices[1], {k}, {k, 0}, m});
  }
  return g;
}

namespace detail {

std::size_t gl2_torus_class(const GroupData& g, std::size_t slot, const IntVector& t) {
  const std::int64_t q = g.q;
  if (slot == 0) {
    const std::int64_t x = mod(t[0], q - 1), y = mod(t[1], q - 1);
    if (x == y) return static_cast<std::size_t>(x);
    return g.classes.index("c_" + std::to_string(std::min(x, y)) + "," + std::to_string(std::max(x, y)));
  }
  const std::int64_t Q = q * q - 1, z = mod(t[0], Q);
  if (z % (q + 1) == 0) return static_cast<std::size_t>(z / (q + 1));
  return g.classes.index("d_" + std::to_string(std::min(z, mod(q * z, Q))));
}

}  // namespace detail

}  // namespace dlchar::dl
