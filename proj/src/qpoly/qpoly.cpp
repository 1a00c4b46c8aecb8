#include "dlchar/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dlchar {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int deg, const mpq_class& c) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  std::vector<mpq_class> v(static_cast<std::size_t>(deg) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int i) const {
  return (i < 0 || i >= static_cast<int>(c_.size())) ? mpq_class(0) : c_[static_cast<std::size_t>(i)];
}

int QPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  throw std::domain_error("low_degree of zero polynomial");
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {QPoly(), *this};
  std::vector<mpq_class> quo(static_cast<std::size_t>(degree() - dd) + 1);
  for (int i = degree(); i >= dd; --i) {
    const mpq_class f = rem[static_cast<std::size_t>(i)] / d.c_.back();
    if (f == 0) continue;
    quo[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

mpq_class QPoly::eval_at(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r = *this;
  const mpq_class l = leading();
  for (auto& x : r.c_) x /= l;
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpq_class a = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

nlohmann::json QPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.push_back({i, c_[i].get_str()});
  return out;
}

QPoly QPoly::from_json(const nlohmann::json& j) {
  QPoly r;
  for (const auto& pair : j) {
    mpq_class c(pair.at(1).get<std::string>());
    c.canonicalize();
    r += monomial(pair.at(0).get<int>(), c);
  }
  return r;
}

QPoly pow(const QPoly& p, unsigned e) {
  QPoly r(1L), b = p;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

QPoly divexact(const QPoly& a, const QPoly& b) {
  auto [quo, rem] = a.divmod(b);
  if (!rem.is_zero()) throw std::domain_error("divexact: " + b.to_string() + " does not divide " + a.to_string());
  return quo;
}

bool divides(const QPoly& d, const QPoly& a) { return a.divmod(d).second.is_zero(); }

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

mpq_class eval_at(const QPoly& p, long q0) { return p.eval_at(mpq_class(q0)); }

int valuation(const QPoly& p, const QPoly& at) {
  if (p.is_zero()) throw std::domain_error("valuation of zero polynomial");
  if (at.degree() < 1) throw std::invalid_argument("valuation needs a nonconstant divisor");
  int v = 0;
  QPoly cur = p;
  for (;;) {
    auto [quo, rem] = cur.divmod(at);
    if (!rem.is_zero()) return v;
    cur = std::move(quo);
    ++v;
  }
}

mpz_class denominator_clearing(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("denominator_clearing of zero polynomial");
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

QRatFun::QRatFun(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = QPoly();
    den_ = QPoly(1L);
    return;
  }
  const QPoly g = gcd(num, den);
  QPoly n = divexact(num, g), d = divexact(den, g);
  const mpq_class l = d.leading();
  num_ = n * QPoly(1 / l);
  den_ = d.monic();
}

QRatFun QRatFun::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return QRatFun(den_, num_);
}

QRatFun operator+(const QRatFun& a, const QRatFun& b) { return QRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
QRatFun operator-(const QRatFun& a, const QRatFun& b) { return QRatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
QRatFun operator*(const QRatFun& a, const QRatFun& b) { return QRatFun(a.num_ * b.num_, a.den_ * b.den_); }
QRatFun operator/(const QRatFun& a, const QRatFun& b) { return a * b.inverse(); }

std::string QRatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace dlchar
