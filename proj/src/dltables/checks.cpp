#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "internal.hpp"

namespace dlchar::dl {

namespace {

std::string str(const CycNum& x) { return x.to_string(); }

// Class functions of the family and the SNF data of each torus, built once.
struct Context {
  const GroupData& g;
  std::vector<ClassFunction> R;
  std::map<std::size_t, rootdata::FiniteTorusStructure> tori;

  explicit Context(const GroupData& gd) : g(gd) {
    for (const auto& r : g.family) R.push_back(g.dl_character(r));
    for (auto w : g.w_indices) tori.emplace(w, rootdata::finite_torus_structure(*g.datum, w, g.q));
  }

  std::int64_t count(const DLCharacter& a, const DLCharacter& b) const {
    const auto& dw = *g.datum;
    const auto& grp = dw.group();
    const auto& S = tori.at(a.w);
    const auto target = rootdata::theta_from_lambda(S, a.lambda);
    std::int64_t n = 0;
    for (const auto& x : weyl::twisted_normalizer(grp, dw.store(), dw.element(a.w), dw.element(b.w), grp.sigma())) {
      const IntVector moved = mat_apply(dw.matrix(dw.index_of(x.inverse())), b.lambda);
      if (rootdata::theta_from_lambda(S, moved) == target) ++n;
    }
    return n;
  }
};

int sign_of_length(const GroupData& g, std::size_t w) { return g.datum->length(w) % 2 ? -1 : 1; }

CycNum q_rational_poly(const QPoly& p, std::int64_t q) { return CycNum(eval_at(p, q)); }

std::int64_t torus_size(const GroupData& g, std::size_t w) {
  std::int64_t n = 1;
  for (auto d : g.torus_orders[g.w_slot(w)]) n *= d;
  return n;
}

// Green function Q_w on unipotent classes, read off theta = 0.
ClassFunction green(const Context& ctx, std::size_t w) {
  for (std::size_t i = 0; i < ctx.g.family.size(); ++i) {
    const auto& r = ctx.g.family[i];
    if (r.w == w && std::all_of(r.theta.begin(), r.theta.end(), [](std::int64_t x) { return x == 0; })) {
      ClassFunction q = ctx.R[i];
      for (std::size_t c = 0; c < q.size(); ++c)
        if (!ctx.g.classes.unipotent[c]) q[c] = CycNum();
      return q;
    }
  }
  throw std::logic_error("family lacks the trivial character");
}

Report tables_impl(const GroupData& g) {
  Report rep;
  const auto& c = g.classes;
  const auto& t = g.table;
  const std::int64_t total = std::accumulate(c.sizes.begin(), c.sizes.end(), std::int64_t{0});
  rep.add("class-sizes", total == c.group_order,
          "sum of class sizes " + std::to_string(total) + ", |G| = " + std::to_string(c.group_order));
  const std::size_t expected = g.kind == GroupKind::SL2 ? static_cast<std::size_t>(g.q + 4)
                                                       : static_cast<std::size_t>(g.q * g.q - 1);
  rep.add("class-count", c.size() == expected && t.size() == expected,
          std::to_string(c.size()) + " classes, " + std::to_string(t.size()) + " characters, expected " +
              std::to_string(expected));
  const int groups = c.group_count();
  const int expected_groups = g.kind == GroupKind::SL2 ? static_cast<int>(g.q + 2) : static_cast<int>(expected);
  rep.add("class-grouping", groups == expected_groups,
          std::to_string(groups) + " F-stable classes of G meet G^F");

  bool first = true;
  std::string bad;
  for (std::size_t i = 0; i < t.size() && first; ++i)
    for (std::size_t j = i; j < t.size(); ++j) {
      const CycNum ip = inner_product(c, t.rows[i], t.rows[j]);
      if (ip != CycNum(i == j ? 1L : 0L)) {
        first = false;
        bad = "<" + t.labels[i] + "," + t.labels[j] + "> = " + str(ip);
        break;
      }
    }
  rep.add("row-orthogonality", first, bad);

  bool second = true;
  bad.clear();
  for (std::size_t a = 0; a < c.size() && second; ++a)
    for (std::size_t b = a; b < c.size(); ++b) {
      CycNum s;
      for (std::size_t i = 0; i < t.size(); ++i) s += t.rows[i][a] * t.rows[i][b].conj();
      Rational centraliser(c.group_order, c.sizes[a]);
      centraliser.canonicalize();
      const CycNum want = a == b ? CycNum(centraliser) : CycNum();
      if (s != want) {
        second = false;
        bad = "column " + c.labels[a] + " x " + c.labels[b] + " gives " + str(s);
        break;
      }
    }
  rep.add("column-orthogonality", second, bad);

  mpz_class sq = 0;
  bool positive = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Rational d = t.rows[i][0].to_rational();
    positive = positive && d > 0 && d.get_den() == 1;
    sq += d.get_num() * d.get_num();
  }
  rep.add("degree-squares", positive && sq == c.group_order, "sum of squared degrees " + sq.get_str());
  return rep;
}

Report family_impl(const GroupData& g) {
  Report rep;
  bool range = true;
  std::vector<char> seen(g.table.size(), 0);
  for (const auto& r : g.family)
    for (std::size_t i = 0; i < r.mult.size(); ++i) {
      range = range && r.mult[i] >= -1 && r.mult[i] <= 1;
      if (r.mult[i]) seen[i] = 1;
    }
  rep.add("multiplicities-in-range", range, "all multiplicities lie in {-1,0,1}");
  std::string missing;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) missing += g.table.labels[i] + " ";
  rep.add("every-irreducible-occurs", missing.empty(), missing);
  std::size_t expected = 0;
  for (std::size_t s = 0; s < g.w_indices.size(); ++s) expected += static_cast<std::size_t>(torus_size(g, g.w_indices[s]));
  rep.add("family-complete", g.family.size() == expected,
          std::to_string(g.family.size()) + " pairs (w, theta), expected " + std::to_string(expected));
  return rep;
}

Report dimension_impl(const Context& ctx) {
  Report rep;
  const auto& g = ctx.g;
  const auto& dw = *g.datum;
  const QPoly G = rootdata::group_order_poly(dw);
  const QPoly qN = QPoly::monomial(dw.datum().num_positive());
  rep.add("group-order-polynomial", eval_at(G, g.q) == g.classes.group_order,
          "|G|(q) = " + eval_at(G, g.q).get_str());
  bool tori = true;
  std::string bad;
  for (auto w : g.w_indices) {
    const auto T = eval_at(rootdata::torus_order_poly(dw, w), g.q);
    const auto snf = ctx.tori.at(w).order();
    if (T != torus_size(g, w) || T != snf) {
      tori = false;
      bad = "w index " + std::to_string(w) + ": |T_w|(q) = " + T.get_str() + ", SNF order " + std::to_string(snf);
    }
  }
  rep.add("torus-orders", tori, bad);
  bool ok = true;
  bad.clear();
  for (std::size_t i = 0; i < g.family.size(); ++i) {
    const auto w = g.family[i].w;
    const QPoly deg = divexact(G, qN * rootdata::torus_order_poly(dw, w));
    const CycNum want = q_rational_poly(deg, g.q) * Rational(sign_of_length(g, w));
    if (ctx.R[i][0] != want) {
      ok = false;
      bad = "R(1) = " + str(ctx.R[i][0]) + " but the dimension formula gives " + str(want);
      break;
    }
  }
  rep.add("dimension-formula", ok, bad);
  return rep;
}

Report scalar_impl(const Context& ctx) {
  Report rep;
  const auto& g = ctx.g;
  bool ok = true, dichotomy = true;
  std::string bad;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < g.family.size() && ok; ++a)
    for (std::size_t b = a; b < g.family.size(); ++b) {
      const CycNum ip = inner_product(g.classes, ctx.R[a], ctx.R[b]);
      const std::int64_t n = ctx.count(g.family[a], g.family[b]);
      ++pairs;
      if (ip != CycNum(n)) {
        ok = false;
        bad = "pair " + std::to_string(a) + "," + std::to_string(b) + ": inner product " + str(ip) +
              ", normalizer count " + std::to_string(n);
        break;
      }
      if (n != 0 && ctx.R[a] != ctx.R[b]) dichotomy = false;
    }
  rep.add("scalar-products", ok, ok ? std::to_string(pairs) + " pairs agree with twisted normalizer counts" : bad);
  rep.add("equal-or-orthogonal", dichotomy);
  return rep;
}

Report regular_impl(const Context& ctx) {
  Report rep;
  const auto& g = ctx.g;
  const Rational W(static_cast<long>(g.datum->size()));
  ClassFunction reg(g.classes.size());
  for (const auto& r : ctx.R)
    for (std::size_t c = 0; c < reg.size(); ++c)
      if (!r[c].is_zero()) reg[c] += r[0] * r[c];
  bool ok = true;
  for (std::size_t c = 0; c < reg.size(); ++c) {
    reg[c] /= W;
    ok = ok && reg[c] == CycNum(c == 0 ? g.classes.group_order : 0);
  }
  rep.add("regular-character", ok, "value at 1: " + str(reg[0]));
  bool deg = true;
  std::string bad;
  for (std::size_t i = 0; i < g.table.size(); ++i) {
    CycNum d;
    for (const auto& r : ctx.R) d += inner_product(g.classes, r, g.table.rows[i]) * r[0];
    d /= W;
    if (d != g.table.rows[i][0]) {
      deg = false;
      bad = g.table.labels[i] + ": recovered " + str(d);
    }
  }
  rep.add("degree-recovery", deg, bad);
  return rep;
}

Report green_impl(const Context& ctx) {
  Report rep;
  const auto& g = ctx.g;
  bool indep = true, sum_ok = true, reg_ok = true;
  std::string bad;
  for (auto w : g.w_indices) {
    const ClassFunction Q = green(ctx, w);
    ClassFunction sum(g.classes.size());
    for (std::size_t i = 0; i < g.family.size(); ++i) {
      if (g.family[i].w != w) continue;
      for (std::size_t c = 0; c < sum.size(); ++c) {
        sum[c] += ctx.R[i][c];
        if (g.classes.unipotent[c] && ctx.R[i][c] != Q[c]) indep = false;
      }
    }
    const Rational T(torus_size(g, w));
    for (std::size_t c = 0; c < sum.size(); ++c) {
      const CycNum want = g.classes.unipotent[c] ? Q[c] * T : CycNum();
      if (sum[c] != want) {
        sum_ok = false;
        bad = "class " + g.classes.labels[c] + ": sum " + str(sum[c]) + ", expected " + str(want);
      }
    }
    for (auto u : g.regular_unipotent) reg_ok = reg_ok && Q[u] == CycNum(1L);
  }
  rep.add("green-theta-independent", indep);
  rep.add("green-function-sum", sum_ok, bad);
  rep.add("green-regular-unipotent", reg_ok, "Q_w(u) = 1 on regular unipotent classes");
  return rep;
}

}  // namespace

std::int64_t scalar_product_count(const GroupData& g, const DLCharacter& a, const DLCharacter& b) {
  return Context(g).count(a, b);
}

Report check_tables(const GroupData& g) {
  Report rep = tables_impl(g);
  rep.merge(family_impl(g));
  return rep;
}

Report verify_dl_identities(const GroupData& g) {
  const Context ctx(g);
  Report rep = check_tables(g);
  rep.merge(dimension_impl(ctx));
  rep.merge(scalar_impl(ctx));
  rep.merge(regular_impl(ctx));
  rep.merge(green_impl(ctx));
  return rep;
}

Report projector_check(const GroupData& g) {
  Report rep;
  const UniformProjector P(g);
  const std::size_t n = g.classes.size();
  const Rational rank = P.rank();
  const std::size_t expected = g.kind == GroupKind::SL2 ? static_cast<std::size_t>(g.q + 2) : n;
  rep.add("projector-rank", rank == static_cast<long>(P.distinct_count()) && rank == static_cast<long>(expected),
          "trace " + rank.get_str() + ", distinct R_w^theta " + std::to_string(P.distinct_count()) + ", expected " +
              std::to_string(expected));

  std::vector<ClassFunction> img(n);
  bool forms = true, idem = true;
  std::string bad;
  for (std::size_t c = 0; c < n; ++c) {
    const ClassFunction e = indicator(g.classes, {c});
    img[c] = P.apply(e);
    if (P.apply_gram(e) != img[c] || P.apply_class_sum(e) != img[c]) {
      forms = false;
      bad = "class " + g.classes.labels[c];
    }
    if (P.apply(img[c]) != img[c]) idem = false;
  }
  rep.add("projector-forms-agree", forms, forms ? "w-sum, Gram solve and class sum coincide" : bad);
  rep.add("projector-idempotent", idem);
  bool adj = true;
  for (std::size_t a = 0; a < n && adj; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const ClassFunction ea = indicator(g.classes, {a}), eb = indicator(g.classes, {b});
      if (inner_product(g.classes, img[a], eb) != inner_product(g.classes, ea, img[b])) {
        adj = false;
        break;
      }
    }
  rep.add("projector-self-adjoint", adj);
  bool fixes = true;
  for (const auto& r : g.family) {
    const ClassFunction f = g.dl_character(r);
    if (P.apply(f) != f) fixes = false;
  }
  rep.add("projector-fixes-R", fixes);
  return rep;
}

Report luconj_check(const GroupData& g) {
  Report rep;
  const UniformProjector P(g);
  const int groups = g.classes.group_count();
  int fixed = 0;
  std::string bad;
  for (int k = 0; k < groups; ++k) {
    std::vector<std::size_t> members;
    for (std::size_t c = 0; c < g.classes.size(); ++c)
      if (g.classes.grouping[c] == k) members.push_back(c);
    const ClassFunction f = indicator(g.classes, members);
    if (P.apply(f) == f) ++fixed;
    else bad += g.classes.labels[members[0]] + " ";
  }
  rep.add("uniform-all", fixed == groups,
          std::to_string(fixed) + " of " + std::to_string(groups) + " characteristic functions of F-stable classes fixed" +
              (bad.empty() ? "" : "; failing: " + bad));
  return rep;
}

Report orthocomplement_check(const GroupData& g) {
  Report rep;
  const UniformProjector P(g);
  const std::size_t n = g.classes.size();
  const Rational rank = P.rank();
  if (g.kind == GroupKind::GL2) {
    rep.add("orthocomplement-dimension", rank == static_cast<long>(n), "complement is zero");
    return rep;
  }
  rep.add("orthocomplement-dimension", rank + 2 == static_cast<long>(n));
  const auto& t = g.table;
  const auto& c = g.classes;
  const std::size_t J = c.index("J");
  const ClassFunction fJ = indicator(c, {J});
  rep.add("single-class-not-uniform", P.apply(fJ) != fJ, "P(f_[J]) differs from f_[J]");

  auto row = [&](const std::string& l) { return t.index(l); };
  std::vector<CycNum> k1(t.size()), k2(t.size());
  const Rational h(1, 2);
  k1[row("rho0'")] = k2[row("rho0'")] = CycNum(h);
  k1[row("rho0''")] = k2[row("rho0''")] = CycNum(-h);
  k1[row("pi0'")] = CycNum(h);
  k1[row("pi0''")] = CycNum(-h);
  k2[row("pi0'")] = CycNum(-h);
  k2[row("pi0''")] = CycNum(h);
  const ClassFunction u1 = combine(t, k1), u2 = combine(t, k2);

  const CycNum s = sqrt_delta_q(g.q);
  const long delta = ((g.q - 1) / 2) % 2 ? -1 : 1;
  ClassFunction e1(n), e2(n);
  e1[c.index("-J")] = s * Rational(delta);
  e1[c.index("-J'")] = s * Rational(-delta);
  e2[J] = s;
  e2[c.index("J'")] = -s;
  auto neg = [](ClassFunction f) {
    for (auto& x : f) x = -x;
    return f;
  };
  const bool m1 = u1 == e1 || u1 == neg(e1), m2 = u2 == e2 || u2 == neg(e2);
  rep.add("orthocomplement-values", m1 && m2,
          std::string("sign realised: ") + (u1 == e1 ? "+" : "-") + " for the first function, " + (u2 == e2 ? "+" : "-") +
              " for the second (sqrt(delta q) = " + str(s) + ")");
  const bool orth = inner_product(c, u1, u1) == CycNum(1L) && inner_product(c, u2, u2) == CycNum(1L) &&
                    inner_product(c, u1, u2).is_zero();
  rep.add("orthocomplement-orthonormal", orth);
  const ClassFunction zero(n);
  rep.add("orthocomplement-killed", P.apply(u1) == zero && P.apply(u2) == zero);
  ClassFunction resid = fJ, pf = P.apply(fJ), expect(n);
  for (std::size_t i = 0; i < n; ++i) resid[i] -= pf[i];
  const CycNum a1 = inner_product(c, fJ, u1), a2 = inner_product(c, fJ, u2);
  for (std::size_t i = 0; i < n; ++i) expect[i] = a1 * u1[i] + a2 * u2[i];
  rep.add("orthocomplement-expansion", resid == expect, "(1-P) f_[J] lies in the span of the two functions");
  return rep;
}

Report lemma_app3_check(const GroupData& g, const std::string& s0) {
  const Context ctx(g);
  const auto& c = g.classes;
  const std::size_t cls = c.index(s0);
  if (c.semisimple_part[cls] != cls) throw std::invalid_argument("'" + s0 + "' is not a semisimple class");
  Report rep;
  for (const auto& [w, t] : g.torus_points(cls)) {
    const ClassFunction Q = green(ctx, w);
    const Rational T(torus_size(g, w));
    bool ok = true;
    std::string bad;
    for (std::size_t x = 0; x < c.size(); ++x) {
      CycNum lhs;
      for (std::size_t i = 0; i < g.family.size(); ++i) {
        if (g.family[i].w != w || ctx.R[i][x].is_zero()) continue;
        lhs += g.theta_value(w, g.family[i].theta, t).conj() * ctx.R[i][x];
      }
      lhs /= T;
      CycNum want;
      if (c.semisimple_part[x] == cls) {
        // H = G for central s0, H = T (Green function 1 on u = 1) otherwise
        want = c.central[cls] ? Q[c.unipotent_part[x]] : CycNum(x == cls ? 1L : 0L);
      }
      if (lhs != want) {
        ok = false;
        bad = "at " + c.labels[x] + ": " + str(lhs) + " vs " + str(want);
      }
    }
    rep.add("lemma-app3 s0=" + s0 + " w=" + (g.datum->length(w) ? "s" : "1"), ok, bad);
  }
  return rep;
}

Report lemma_app3_all(const GroupData& g) {
  Report rep;
  for (std::size_t x = 0; x < g.classes.size(); ++x)
    if (g.classes.semisimple_part[x] == x) rep.merge(lemma_app3_check(g, g.classes.labels[x]));
  return rep;
}

std::vector<RowDegree> degree_polynomials(const GroupData& g) {
  std::vector<RowDegree> out;
  for (std::size_t i = 0; i < g.table.size(); ++i) {
    std::vector<std::int64_t> per_w(g.datum->size(), 0);
    for (const auto& r : g.family) per_w[r.w] += r.mult[i];
    out.push_back({g.table.labels[i], rootdata::degree_polynomial(*g.datum, per_w)});
  }
  return out;
}

namespace {

bool principal_series(const GroupData& g, std::size_t row) {
  const auto w1 = g.w_indices[0];
  return std::any_of(g.family.begin(), g.family.end(), [&](const DLCharacter& r) { return r.w == w1 && r.mult[row]; });
}

int sigma_orbit_count(const GroupData& g) {
  const auto& grp = g.datum->group();
  return static_cast<int>(weyl::sigma_orbits(grp.sigma(), grp.all_nodes()).size());
}

QPoly expected_degree(const GroupData& g, const std::string& label) {
  const QPoly q = QPoly::q(), one(1L);
  const Rational h(1, 2);
  auto starts = [&](const char* p) { return label.rfind(p, 0) == 0; };
  if (g.kind == GroupKind::SL2) {
    if (label == "1") return one;
    if (label == "St") return q;
    if (starts("rho0")) return (q + one) * QPoly(h);
    if (starts("pi0")) return (q - one) * QPoly(h);
    if (starts("rho_")) return q + one;
    return q - one;
  }
  if (starts("U_")) return one;
  if (starts("V_")) return q;
  if (starts("W_")) return q + one;
  return q - one;
}

}  // namespace

Report degree_checks(const GroupData& g) {
  Report rep;
  const auto& dw = *g.datum;
  const QPoly G = rootdata::group_order_poly(dw);
  const QPoly qN = QPoly::monomial(dw.datum().num_positive());
  const int N = dw.datum().num_positive();
  const QPoly cusp_factor = pow(QPoly::q() - QPoly(1L), static_cast<unsigned>(sigma_orbit_count(g)));
  const auto degs = degree_polynomials(g);
  bool value = true, divs = true, torus_div = true, club = true, nW = true, range = true, cusp = true, formula = true,
       nrho = true;
  std::string bad;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    const auto& info = degs[i].info;
    const std::string& l = degs[i].label;
    if (eval_at(info.D, g.q) != g.table.rows[i][0].to_rational()) {
      value = false;
      bad += l + " value; ";
    }
    if (!dlchar::divides(info.D, G)) {
      divs = false;
      bad += l + " divides |G|; ";
    }
    for (const auto& r : g.family)
      if (r.mult[i] && !dlchar::divides(info.D, divexact(G, rootdata::torus_order_poly(dw, r.w)))) {
        torus_div = false;
        bad += l + " divides |G|/|T_w|; ";
      }
    club = club && info.clubsuit;
    nW = nW && info.n_divides_W;
    range = range && 0 <= info.a && info.a <= info.A && info.A <= N;
    const bool cuspidal = !principal_series(g, i);
    if (cuspidal != dlchar::divides(cusp_factor, info.D)) {
      cusp = false;
      bad += l + " cuspidality; ";
    }
    if (info.D != expected_degree(g, l)) {
      formula = false;
      bad += l + " = " + info.D.to_string() + "; ";
    }
    if (g.kind == GroupKind::SL2) {
      const bool half = l.rfind("rho0", 0) == 0 || l.rfind("pi0", 0) == 0;
      nrho = nrho && info.n == (half ? 2 : 1);
    }
  }
  (void)qN;
  rep.add("degree-value", value, "D(q) = rho(1) for every row");
  rep.add("degree-divides-order", divs);
  rep.add("degree-divides-torus-quotient", torus_div);
  rep.add("degree-shape", club, "n D has leading coefficient 1 and lowest coefficient +-1");
  rep.add("degree-n-divides-W", nW);
  rep.add("degree-a-A-range", range);
  rep.add("degree-cuspidality", cusp, "cuspidal iff (q-1)^{|S/sigma|} divides D");
  rep.add("degree-closed-forms", formula, bad);
  if (g.kind == GroupKind::SL2) rep.add("degree-denominators", nrho, "n = 2 exactly on the four half-degree rows");
  return rep;
}

std::vector<std::vector<std::size_t>> dl_graph_components(const GroupData& g) {
  const std::size_t n = g.table.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& r : g.family) {
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!r.mult[i]) continue;
      if (first == n) first = i;
      else parent[find(i)] = find(first);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, v] : comps) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

CycNum regular_average(const GroupData& g, std::size_t row) {
  CycNum s;
  for (auto u : g.regular_unipotent) s += g.table.rows[row][u];
  return s;
}

Report semisimple_and_depth(const GroupData& g) {
  Report rep;
  const auto degs = degree_polynomials(g);
  const int orbits = sigma_orbit_count(g);
  std::vector<char> semisimple(g.table.size());
  bool criterion = true, av_value = true, depth = true;
  std::string bad;
  for (std::size_t i = 0; i < g.table.size(); ++i) {
    const CycNum av = regular_average(g, i);
    semisimple[i] = !av.is_zero();
    if (static_cast<bool>(semisimple[i]) != (degs[i].info.a == 0)) {
      criterion = false;
      bad += g.table.labels[i] + " ";
    }
    if (semisimple[i]) {
      Rational want(mpz_class(g.component_group_order), degs[i].info.n);
      want.canonicalize();
      av_value = av_value && (av == CycNum(want) || av == CycNum(-want));
    }
    const int d = valuation(degs[i].info.D, QPoly::q() - QPoly(1L));
    const int t = orbits - d;
    const bool cuspidal = !principal_series(g, i);
    // rank one: the only proper sigma-stable J is empty, of depth |S/sigma|
    depth = depth && t >= 0 && (t == 0) == cuspidal && (cuspidal || t == orbits);
  }
  rep.add("semisimple-iff-a-zero", criterion, bad);
  rep.add("semisimple-average-value", av_value, "AV = +-|A(u)|/n on semisimple rows");
  rep.add("depth-from-degree", depth);
  const auto comps = dl_graph_components(g);
  bool each = true;
  for (const auto& comp : comps) {
    const auto k = std::count_if(comp.begin(), comp.end(), [&](std::size_t i) { return semisimple[i]; });
    each = each && (g.kind == GroupKind::GL2 ? k == 1 : k >= 1);
  }
  rep.add(g.kind == GroupKind::GL2 ? "unique-semisimple-per-component" : "semisimple-in-every-component", each,
          std::to_string(comps.size()) + " components");
  return rep;
}

std::vector<std::string> check_names() {
  return {"tables",     "identities", "projector", "uniform-all", "orthocomplement",
          "lemma-app3", "degrees",    "semisimple", "restriction"};
}

Report run_checks(const GroupData& g, const std::vector<std::string>& names) {
  const auto all = check_names();
  std::set<std::string> want(names.begin(), names.end());
  if (want.count("all")) want = {all.begin(), all.end()};
  for (const auto& n : want) {
    if (std::find(all.begin(), all.end(), n) == all.end()) throw std::invalid_argument("unknown check '" + n + "'");
  }
  Report rep;
  if (want.count("tables") && !want.count("identities")) rep.merge(check_tables(g));
  if (want.count("identities")) rep.merge(verify_dl_identities(g));
  if (want.count("projector")) rep.merge(projector_check(g));
  if (want.count("uniform-all")) rep.merge(luconj_check(g));
  if (want.count("orthocomplement")) rep.merge(orthocomplement_check(g));
  if (want.count("lemma-app3")) rep.merge(lemma_app3_all(g));
  if (want.count("degrees")) rep.merge(degree_checks(g));
  if (want.count("semisimple")) rep.merge(semisimple_and_depth(g));
  if (want.count("restriction")) rep.merge(restriction_suite(g.q));
  return rep;
}

}  // namespace dlchar::dl
