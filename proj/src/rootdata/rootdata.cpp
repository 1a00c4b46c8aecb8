#include "dlchar/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "dlchar/cyclotomic.hpp"

namespace dlchar::rootdata {

namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

IntMatrix swap_matrix(std::size_t n, std::size_t i, std::size_t j) {
  IntMatrix m = identity_matrix(n);
  m[i][i] = m[j][j] = 0;
  m[i][j] = m[j][i] = 1;
  return m;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"SL2", "GL2", "SL3", "GL3", "Sp4", "SU3"}; }

RootDatum builtin(const std::string& raw) {
  const std::string name = upper(raw);
  RootDatum d;
  if (name == "SL2") {
    // X = Z e1, e1(S(x)) = x
    d = {"SL2", 1, {'A', 1, 1}, {{{-1}}}, {{1}}, false, 0};
  } else if (name == "GL2") {
    d = {"GL2", 2, {'A', 1, 1}, {swap_matrix(2, 0, 1)}, identity_matrix(2), true, 1};
  } else if (name == "SL3") {
    // X = Z^3 / Z(1,1,1) with basis e1, e2 and e3 = -e1 - e2
    d = {"SL3", 2, {'A', 2, 1}, {swap_matrix(2, 0, 1), {{1, -1}, {0, -1}}}, identity_matrix(2), false, 0};
  } else if (name == "GL3") {
    d = {"GL3", 3, {'A', 2, 1}, {swap_matrix(3, 0, 1), swap_matrix(3, 1, 2)}, identity_matrix(3), true, 1};
  } else if (name == "SP4") {
    // X = Z^2 for diag(t1, t2, 1/t2, 1/t1); alpha1 = e1 - e2, alpha2 = 2 e2
    d = {"Sp4", 2, {'C', 2, 1}, {swap_matrix(2, 0, 1), {{1, 0}, {0, -1}}}, identity_matrix(2), false, 0};
  } else if (name == "SU3") {
    // SL3 lattice; F(t) = (t3, t2, t1)^{-q}, so phi0(e1, e2, e3) = -(e3, e2, e1)
    d = {"SU3", 2, {'A', 2, 2}, {swap_matrix(2, 0, 1), {{1, -1}, {0, -1}}}, {{1, 0}, {1, -1}}, false, 0};
  } else {
    throw std::invalid_argument("unknown root datum '" + raw + "' (known: SL2, GL2, SL3, GL3, Sp4, SU3)");
  }
  return d;
}

DatumWeyl::DatumWeyl(const RootDatum& d)
    : d_(d), g_(d.type), store_(weyl::serial::enumerate(g_)), phi0_inv_(unimodular_inverse(d.phi0)) {
  if (static_cast<int>(d.gens.size()) != g_.rank()) throw std::invalid_argument("datum has wrong number of generators");
  mats_.reserve(store_.size());
  for (const auto& w : store_.elements) mats_.push_back(matrix_of(w));
}

IntMatrix DatumWeyl::matrix_of(const weyl::WeylElement& w) const {
  IntMatrix m = identity_matrix(static_cast<std::size_t>(d_.rank));
  for (int j : g_.reduced_word(w)) m = mat_mul(m, d_.gens[j]);
  return m;
}

std::size_t DatumWeyl::sigma_index(std::size_t i) const {
  const IntMatrix s = mat_mul(phi0_inv_, mat_mul(mats_[i], d_.phi0));
  for (std::size_t j = 0; j < mats_.size(); ++j)
    if (mats_[j] == s) return j;
  throw std::logic_error("phi0 does not normalise W in datum " + d_.name);
}

std::vector<std::size_t> DatumWeyl::sigma_fixed() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (sigma_index(i) == i) out.push_back(i);
  return out;
}

bool DatumWeyl::consistent() const {
  const auto id = identity_matrix(static_cast<std::size_t>(d_.rank));
  const int r = g_.rank();
  for (int i = 0; i < r; ++i) {
    if (mat_mul(d_.gens[i], d_.gens[i]) != id) return false;
    for (int j = i + 1; j < r; ++j) {
      const int m = g_.element_order(g_.simple(i) * g_.simple(j));
      const IntMatrix p = mat_mul(d_.gens[i], d_.gens[j]);
      IntMatrix cur = p;
      for (int k = 1; k < m; ++k) {
        if (cur == id) return false;
        cur = mat_mul(cur, p);
      }
      if (cur != id) return false;
    }
    const int si = g_.sigma().perm[i];
    if (mat_mul(d_.gens[i], d_.phi0) != mat_mul(d_.phi0, d_.gens[si])) return false;
  }
  std::set<IntMatrix> distinct(mats_.begin(), mats_.end());
  return distinct.size() == mats_.size();
}

namespace {

using PolyMatrix = std::vector<std::vector<QPoly>>;

QPoly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return QPoly(1L);
  if (n == 1) return m[0][0];
  QPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const QPoly term = m[0][c] * poly_det(minor);
    acc = c % 2 ? acc - term : acc + term;
  }
  return acc;
}

}  // namespace

QPoly torus_order_poly(const DatumWeyl& dw, std::size_t w) {
  const IntMatrix a = mat_mul(dw.phi0_inverse(), dw.matrix(w));
  const std::size_t n = a.size();
  PolyMatrix m(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? QPoly::q() : QPoly()) - QPoly(static_cast<long>(a[i][j]));
  return poly_det(m);
}

QPoly group_order_poly(const DatumWeyl& dw) {
  QPoly sum;
  for (std::size_t i : dw.sigma_fixed()) sum += QPoly::monomial(dw.length(i));
  return QPoly::monomial(dw.datum().num_positive()) * torus_order_poly(dw, dw.identity_index()) * sum;
}

QPoly centre_order_poly(const RootDatum& d) {
  return pow(QPoly::q() - QPoly(1L), static_cast<unsigned>(d.dim_centre));
}

bool steinberg_identity_check(const DatumWeyl& dw) {
  QRatFun sum;
  for (std::size_t i = 0; i < dw.size(); ++i) sum = sum + QRatFun(QPoly(1L), torus_order_poly(dw, i));
  sum = sum * QRatFun(QPoly(mpq_class(1, static_cast<unsigned long>(dw.size()))));
  const QRatFun lhs = QRatFun(QPoly::monomial(2 * dw.datum().num_positive())) / sum;
  return lhs == QRatFun(group_order_poly(dw));
}

bool t1_factorization_check(const DatumWeyl& dw) {
  QPoly rhs = centre_order_poly(dw.datum());
  const auto& g = dw.group();
  for (weyl::NodeSet orb : weyl::sigma_orbits(g.sigma(), g.all_nodes()))
    rhs *= QPoly::monomial(std::popcount(orb)) - QPoly(1L);
  return rhs == torus_order_poly(dw, dw.identity_index());
}

std::int64_t FiniteTorusStructure::order() const {
  std::int64_t o = 1;
  for (auto d : invariant_factors) o *= d;
  return o;
}

FiniteTorusStructure finite_torus_structure(const DatumWeyl& dw, std::size_t w, std::int64_t q0) {
  if (q0 < 2) throw std::invalid_argument("q0 must be at least 2");
  const auto r = static_cast<std::size_t>(dw.datum().rank);
  const std::size_t winv = dw.index_of(dw.element(w).inverse());
  const IntMatrix fprime = mat_scale(mat_mul(dw.datum().phi0, dw.matrix(winv)), q0);
  const SmithForm s = smith_normal_form(mat_sub(fprime, identity_matrix(r)));
  const IntMatrix uinv = unimodular_inverse(s.U);
  FiniteTorusStructure out;
  out.w = w;
  out.q0 = q0;
  out.generators.assign(r, IntVector{});
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t d = s.D[i][i];
    if (d == 0) throw std::logic_error("F' - 1 is singular");
    if (d == 1) continue;
    out.invariant_factors.push_back(d);
    out.coordinates.push_back(s.U[i]);
    for (std::size_t k = 0; k < r; ++k) out.generators[k].push_back(uinv[k][i]);
  }
  return out;
}

ThetaIndex theta_from_lambda(const FiniteTorusStructure& s, const IntVector& lambda) {
  ThetaIndex t;
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    std::int64_t v = 0;
    for (std::size_t k = 0; k < lambda.size(); ++k) v += s.coordinates[i][k] * lambda[k];
    t.push_back(mod(v, s.invariant_factors[i]));
  }
  return t;
}

std::int64_t theta_order(const FiniteTorusStructure& s, const ThetaIndex& t) {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::int64_t d = s.invariant_factors[i];
    o = lcm64(o, d / std::gcd(t[i], d));
  }
  return o;
}

std::vector<ZEntry> compute_Z(const DatumWeyl& dw, const IntVector& lambda, std::int64_t n, std::int64_t q0) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const auto [p, f] = prime_power(q0);
  if (p == 0) throw std::invalid_argument("q0 must be a prime power");
  if (n % p == 0) throw std::invalid_argument("p divides n");
  if (static_cast<int>(lambda.size()) != dw.datum().rank) throw std::invalid_argument("lambda has wrong length");
  IntVector base = mat_apply(dw.datum().phi0, lambda);
  for (auto& x : base) x *= q0;
  std::vector<ZEntry> out;
  for (std::size_t w = 0; w < dw.size(); ++w) {
    const IntVector wl = mat_apply(dw.matrix(w), lambda);
    IntVector lw(lambda.size());
    bool ok = true;
    for (std::size_t k = 0; k < lambda.size() && ok; ++k) {
      const std::int64_t v = base[k] - wl[k];
      ok = v % n == 0;
      lw[k] = v / n;
    }
    if (ok) out.push_back({w, lw});
  }
  return out;
}

CosetReport reflection_coset_check(const DatumWeyl& dw, const std::vector<ZEntry>& z) {
  CosetReport rep;
  if (z.empty()) {
    rep.reason = "Z is empty";
    return rep;
  }
  const auto& g = dw.group();
  int best = 1 << 30, count = 0;
  for (const auto& e : z) {
    const int l = dw.length(e.w);
    if (l < best) { best = l; rep.w1 = e.w; count = 1; }
    else if (l == best) ++count;
  }
  if (count != 1) {
    rep.reason = "shortest element of Z is not unique";
    return rep;
  }
  const auto w1inv = dw.element(rep.w1).inverse();
  std::set<std::size_t> sub;
  for (const auto& e : z) sub.insert(dw.index_of(w1inv * dw.element(e.w)));
  if (!sub.count(dw.identity_index())) {
    rep.reason = "w1^{-1} Z does not contain 1";
    return rep;
  }
  for (auto a : sub)
    for (auto b : sub)
      if (!sub.count(dw.index_of(dw.element(a) * dw.element(b)))) {
        rep.reason = "w1^{-1} Z is not closed under multiplication";
        return rep;
      }
  // reflections of W are the conjugates of the simple reflections
  std::set<std::size_t> refl;
  for (std::size_t x = 0; x < dw.size(); ++x)
    for (int i = 0; i < g.rank(); ++i)
      refl.insert(dw.index_of(dw.element(x) * g.simple(i) * dw.element(x).inverse()));
  std::set<std::size_t> gen{dw.identity_index()};
  for (auto r : refl)
    if (sub.count(r)) gen.insert(r);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::size_t> cur(gen.begin(), gen.end());
    for (auto a : cur)
      for (auto b : cur) grew |= gen.insert(dw.index_of(dw.element(a) * dw.element(b))).second;
  }
  if (gen != sub) {
    rep.reason = "w1^{-1} Z is not generated by reflections";
    return rep;
  }
  rep.subgroup.assign(sub.begin(), sub.end());
  rep.ok = true;
  return rep;
}

DegreeInfo degree_polynomial(const DatumWeyl& dw, const std::vector<std::int64_t>& mult_sum_per_w) {
  if (mult_sum_per_w.size() != dw.size()) throw std::invalid_argument("multiplicity table does not cover W");
  const QPoly G = group_order_poly(dw);
  const QPoly qN = QPoly::monomial(dw.datum().num_positive());
  QPoly D;
  for (std::size_t w = 0; w < dw.size(); ++w) {
    if (!mult_sum_per_w[w]) continue;
    const QPoly base = divexact(G, qN * torus_order_poly(dw, w));
    const long sign = dw.length(w) % 2 ? -1 : 1;
    D += base * QPoly(sign * static_cast<long>(mult_sum_per_w[w]));
  }
  D = D * QPoly(mpq_class(1, static_cast<unsigned long>(dw.size())));
  if (D.is_zero()) throw std::domain_error("degree polynomial vanishes: inconsistent multiplicities");
  DegreeInfo info;
  info.D = D;
  info.a = D.low_degree();
  info.A = D.degree();
  info.n = denominator_clearing(D);
  const QPoly scaled = D * QPoly(mpq_class(info.n));
  info.clubsuit = scaled.leading() == 1 && abs(scaled.coeff(info.a)) == 1;
  for (const auto& c : scaled.coeffs()) info.clubsuit = info.clubsuit && c.get_den() == 1;
  info.n_divides_W = mpz_class(static_cast<unsigned long>(dw.size())) % info.n == 0;
  return info;
}

DegreeInfo degree_polynomial(const DatumWeyl& dw, const std::map<std::pair<std::size_t, ThetaIndex>, std::int64_t>& mults) {
  std::vector<std::int64_t> per_w(dw.size(), 0);
  for (const auto& [key, m] : mults) {
    if (key.first >= dw.size()) throw std::out_of_range("W index out of range");
    per_w[key.first] += m;
  }
  return degree_polynomial(dw, per_w);
}

}  // namespace dlchar::rootdata
