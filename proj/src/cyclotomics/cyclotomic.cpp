#include "dlchar/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dlchar {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) { n /= p; ++k; }
    out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::pair<std::int64_t, int> prime_power(std::int64_t q) {
  if (q < 2) return {0, 0};
  auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return f[0];
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  // extended Euclid; m >= 1
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1) {
    std::int64_t t = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - t * a1);
    std::tie(x, x1) = std::make_pair(x1, x - t * x1);
  }
  if (g != 1) throw std::logic_error("inverse_mod: not invertible");
  return mod(x, m);
}

using Term = CycNum::Term;

void combine(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    Rational acc = std::move(t[i].second);
    while (j < t.size() && t[j].first == t[i].first) acc += t[j++].second;
    if (acc != 0) {
      t[w].first = t[i].first;
      t[w].second = std::move(acc);
      ++w;
    }
    i = j;
  }
  t.resize(w);
}

struct PrimeData {
  std::int64_t p;
  int k;
  std::int64_t pk;
  std::int64_t inv;  // (N/pk)^{-1} mod pk
};

std::vector<PrimeData> prime_data(std::int64_t n) {
  std::vector<PrimeData> out;
  for (auto [p, k] : factorize(n)) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    out.push_back({p, k, pk, inverse_mod(n / pk, pk)});
  }
  return out;
}

// Rewrites the terms in the canonical basis at order n (n not 2 mod 4).
void zumbroich_reduce(std::int64_t n, std::vector<Term>& t) {
  for (const auto& pd : prime_data(n)) {
    const std::int64_t top = pd.pk / pd.p;
    const std::int64_t step = n / pd.p;
    std::vector<Term> out;
    out.reserve(t.size());
    bool touched = false;
    for (auto& [e, c] : t) {
      const std::int64_t digit = mod(e, pd.pk) * pd.inv % pd.pk / top;
      if (pd.p == 2) {
        if (digit == 1) {
          out.push_back({mod(e + step, n), -c});
          touched = true;
        } else {
          out.push_back({e, std::move(c)});
        }
      } else if (digit == 0) {
        const Rational neg = -c;
        for (std::int64_t j = 1; j < pd.p; ++j) out.emplace_back(mod(e + j * step, n), neg);
        touched = true;
      } else {
        out.push_back({e, std::move(c)});
      }
    }
    t = std::move(out);
    if (touched) combine(t);
  }
}

// Lowers n while the canonical element lives in a proper subfield.
void reduce_conductor(std::int64_t& n, std::vector<Term>& t) {
  if (t.empty()) { n = 1; return; }
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    for (const auto& pd : prime_data(n)) {
      const bool divisible_step = (pd.p == 2 && pd.k >= 3) || (pd.p != 2 && pd.k >= 2);
      if (divisible_step || (pd.p == 2 && pd.k == 2)) {
        const std::int64_t d = divisible_step ? pd.p : 4;
        if (std::all_of(t.begin(), t.end(), [d](const Term& x) { return x.first % d == 0; })) {
          for (auto& x : t) x.first /= d;
          n /= d;
          changed = true;
          break;
        }
        continue;
      }
      // p || n, p odd: every fibre must carry one coefficient on digits 1..p-1
      if (t.size() % (pd.p - 1) != 0) continue;
      const std::int64_t m = n / pd.p;
      std::vector<std::pair<std::int64_t, std::size_t>> by_fibre;
      by_fibre.reserve(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) by_fibre.push_back({t[i].first % m, i});
      std::sort(by_fibre.begin(), by_fibre.end());
      bool ok = true;
      std::vector<Term> out;
      for (std::size_t i = 0; ok && i < by_fibre.size(); i += pd.p - 1) {
        const std::size_t lead = by_fibre[i].second;
        for (std::int64_t j = 1; j < pd.p - 1; ++j) {
          const auto& [r, idx] = by_fibre[i + j];
          if (r != by_fibre[i].first || t[idx].second != t[lead].second) { ok = false; break; }
        }
        if (i + pd.p - 1 < by_fibre.size() && by_fibre[i + pd.p - 1].first == by_fibre[i].first) ok = false;
        if (!ok) break;
        std::int64_t e0 = by_fibre[i].first;
        while (e0 % pd.p) e0 += m;
        out.push_back({e0 / pd.p, -t[lead].second});
      }
      if (!ok) continue;
      n = m;
      t = std::move(out);
      zumbroich_reduce(n, t);
      changed = true;
      break;
    }
  }
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  if (t.empty()) n = 1;
}

}  // namespace

CycNum CycNum::from_terms(std::int64_t n, std::vector<Term> terms) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  for (auto& x : terms) {
    x.first = mod(x.first, n);
    x.second.canonicalize();
  }
  if (n % 4 == 2) {
    const std::int64_t m = n / 2;
    for (auto& [e, c] : terms) {
      if (e % 2) c = -c;
      e = mod(e * ((m + 1) / 2), m);
    }
    n = m;
  }
  combine(terms);
  zumbroich_reduce(n, terms);
  reduce_conductor(n, terms);
  CycNum out;
  out.order_ = n;
  out.terms_ = std::move(terms);
  return out;
}

CycNum CycNum::root_of_unity(std::int64_t n, std::int64_t k) {
  std::vector<Term> t;
  t.push_back({k, Rational(1)});
  return from_terms(n, std::move(t));
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

std::vector<Term> CycNum::lifted(std::int64_t m) const {
  const std::int64_t f = m / order_;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({e * f, c});
  return out;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.terms_) x.second = -x.second;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::int64_t m = lcm64(order_, o.order_);
  std::vector<Term> t = lifted(m);
  auto rhs = o.lifted(m);
  t.insert(t.end(), std::make_move_iterator(rhs.begin()), std::make_move_iterator(rhs.end()));
  if (m == order_ && m == o.order_) {
    // both already in the canonical basis at m
    combine(t);
    std::int64_t n = m;
    reduce_conductor(n, t);
    order_ = n;
    terms_ = std::move(t);
    return *this;
  }
  return *this = from_terms(m, std::move(t));
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const Rational& r0) {
  Rational r = r0;  // gmp arithmetic assumes canonical operands
  r.canonicalize();
  if (r == 0) { terms_.clear(); order_ = 1; return *this; }
  for (auto& x : terms_) x.second *= r;
  return *this;
}

CycNum& CycNum::operator/=(const Rational& r0) {
  Rational r = r0;
  r.canonicalize();
  if (r == 0) throw std::domain_error("cyclotomic division by zero");
  for (auto& x : terms_) x.second /= r;
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return CycNum();
  if (a.is_rational()) return b * a.terms_[0].second;
  if (b.is_rational()) return a * b.terms_[0].second;
  const std::int64_t m = lcm64(a.order_, b.order_);
  const std::int64_t fa = m / a.order_, fb = m / b.order_;
  std::vector<Rational> acc(static_cast<std::size_t>(m));
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      const auto e = static_cast<std::size_t>((ea * fa + eb * fb) % m);
      acc[e] += ca * cb;
      used[e] = 1;
    }
  std::vector<Term> t;
  for (std::size_t e = 0; e < acc.size(); ++e)
    if (used[e] && acc[e] != 0) t.push_back({static_cast<std::int64_t>(e), std::move(acc[e])});
  return CycNum::from_terms(m, std::move(t));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum CycNum::galois(std::int64_t k) const {
  if (std::gcd(mod(k, order_), order_) != 1 && order_ > 1)
    throw std::invalid_argument("galois: exponent not coprime to order");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& [e, c] : terms_) t.push_back({e * k, c});
  return from_terms(order_, std::move(t));
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> z = 0;
  for (const auto& [e, c] : terms_) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(order_);
    z += c.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

std::string CycNum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational a = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << 'z' << order_;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

nlohmann::json CycNum::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, c] : terms_) coeffs.push_back({e, c.get_str()});
  return {{"order", order_}, {"coeffs", coeffs}};
}

CycNum CycNum::from_json(const nlohmann::json& j) {
  std::vector<Term> t;
  for (const auto& pair : j.at("coeffs")) {
    const auto& v = pair.at(1);
    t.push_back({pair.at(0).get<std::int64_t>(),
                 v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>())});
  }
  return from_terms(j.at("order").get<std::int64_t>(), std::move(t));
}

CycNum pow(const CycNum& x, unsigned e) {
  CycNum r(1L), b = x;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

namespace {
std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}
}  // namespace

CycNum gauss_sum(std::int64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("gauss_sum needs an odd prime");
  if (p > 1000003) throw std::invalid_argument("gauss_sum: prime too large for a dense sum");
  std::vector<Term> t;
  for (std::int64_t a = 1; a < p; ++a) {
    const std::int64_t l = powmod(a, (p - 1) / 2, p);
    t.push_back({a, Rational(l == 1 ? 1 : -1)});
  }
  return CycNum::from_terms(p, std::move(t));
}

CycNum sqrt_delta_q(std::int64_t q) {
  auto [p, f] = prime_power(q);
  if (p == 0 || p == 2) throw std::invalid_argument("sqrt_delta_q needs an odd prime power");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f / 2));
  if (f % 2 == 0) return CycNum(Rational(scale));
  return gauss_sum(p) * Rational(scale);
}

}  // namespace dlchar
