#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "internal.hpp"

namespace dlchar::dl {

std::size_t FiniteClassData::index(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown class '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

int FiniteClassData::group_count() const {
  return grouping.empty() ? 0 : *std::max_element(grouping.begin(), grouping.end()) + 1;
}

std::size_t CharTable::index(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown character '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

std::size_t GroupData::w_slot(std::size_t w) const {
  const auto it = std::find(w_indices.begin(), w_indices.end(), w);
  if (it == w_indices.end()) throw std::out_of_range("W index out of range");
  return static_cast<std::size_t>(it - w_indices.begin());
}

CycNum GroupData::theta_value(std::size_t w, const IntVector& theta, const IntVector& t) const {
  const IntVector& d = torus_orders[w_slot(w)];
  std::int64_t L = 1;
  for (auto x : d) L = lcm64(L, x);
  std::int64_t e = 0;
  for (std::size_t k = 0; k < d.size(); ++k) e = mod(e + mod(theta[k] * t[k], d[k]) * (L / d[k]), L);
  return CycNum::root_of_unity(L, e);
}

std::size_t GroupData::torus_class(std::size_t w, const IntVector& t) const {
  const std::size_t slot = w_slot(w);
  return kind == GroupKind::SL2 ? detail::sl2_torus_class(*this, slot, t) : detail::gl2_torus_class(*this, slot, t);
}

std::vector<std::pair<std::size_t, IntVector>> GroupData::torus_points(std::size_t cls) const {
  if (cls >= classes.size()) throw std::out_of_range("class index out of range");
  if (classes.semisimple_part[cls] != cls) throw std::invalid_argument(classes.labels[cls] + " is not semisimple");
  std::vector<std::pair<std::size_t, IntVector>> out;
  for (std::size_t slot = 0; slot < w_indices.size(); ++slot) {
    // walk T0[w] in natural coordinates and keep the first hit
    const IntVector& d = torus_orders[slot];
    IntVector t(d.size(), 0);
    for (bool more = true; more;) {
      if (torus_class(w_indices[slot], t) == cls) {
        out.emplace_back(w_indices[slot], t);
        break;
      }
      more = false;
      for (std::size_t k = 0; k < t.size() && !more; ++k) {
        if (++t[k] < d[k]) more = true;
        else t[k] = 0;
      }
    }
  }
  return out;
}

ClassFunction GroupData::dl_character(const DLCharacter& r) const {
  ClassFunction f(classes.size());
  for (std::size_t i = 0; i < r.mult.size(); ++i) {
    if (!r.mult[i]) continue;
    for (std::size_t c = 0; c < f.size(); ++c) f[c] += table.rows[i][c] * Rational(r.mult[i]);
  }
  return f;
}

GroupData build_group(const std::string& name, std::int64_t q) {
  std::string n = name;
  for (auto& c : n) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (n == "SL2") return build_sl2(q);
  if (n == "GL2") return build_gl2(q);
  throw std::invalid_argument("unknown group '" + name + "' (known: SL2, GL2)");
}

CycNum inner_product(const FiniteClassData& c, const ClassFunction& f, const ClassFunction& g) {
  if (f.size() != c.size() || g.size() != c.size()) throw std::invalid_argument("class function length mismatch");
  CycNum s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (f[i].is_zero() || g[i].is_zero()) continue;
    s += (f[i] * g[i].conj()) * Rational(c.sizes[i]);
  }
  return s / Rational(c.group_order);
}

ClassFunction indicator(const FiniteClassData& c, const std::vector<std::size_t>& classes) {
  ClassFunction f(c.size());
  for (auto i : classes) f.at(i) = CycNum(1L);
  return f;
}

ClassFunction combine(const CharTable& t, const std::vector<CycNum>& coeffs) {
  ClassFunction f(t.rows.empty() ? 0 : t.rows[0].size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t c = 0; c < f.size(); ++c) f[c] += coeffs[i] * t.rows[i][c];
  }
  return f;
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void Report::merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

namespace detail {

void validate_q(std::int64_t q) {
  const auto [p, f] = prime_power(q);
  if (p == 0 || p == 2) throw std::invalid_argument("q must be an odd prime power");
  if (q > 49) throw std::invalid_argument("q must be at most 49");
  (void)f;
}

void attach_datum(GroupData& g, const std::string& datum_name) {
  auto dw = std::make_shared<const rootdata::DatumWeyl>(rootdata::builtin(datum_name));
  g.w_indices = {dw->identity_index(), dw->index_of_word({0})};
  g.datum = std::move(dw);
}

}  // namespace detail

}  // namespace dlchar::dl
