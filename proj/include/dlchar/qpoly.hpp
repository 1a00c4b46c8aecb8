#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace dlchar {

// Polynomial in q over Q, coefficients lowest degree first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) { if (c != 0) c_.push_back(mpq_class(c)); }
  QPoly(const mpq_class& c) { if (c != 0) c_.push_back(c); }
  explicit QPoly(std::vector<mpq_class> coeffs);

  static QPoly q() { return monomial(1, 1); }
  static QPoly monomial(int deg, const mpq_class& c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }
  int low_degree() const;  // smallest i with nonzero coefficient; throws on zero

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  // Euclidean division over Q; throws on zero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  mpq_class eval_at(const mpq_class& x) const;

  QPoly monic() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
  static QPoly from_json(const nlohmann::json& j);

 private:
  std::vector<mpq_class> c_;
  void trim();
};

QPoly pow(const QPoly& p, unsigned e);
QPoly divexact(const QPoly& a, const QPoly& b);  // throws std::domain_error if b does not divide a
bool divides(const QPoly& d, const QPoly& a);
QPoly gcd(QPoly a, QPoly b);  // monic, gcd(0,0) = 0
mpq_class eval_at(const QPoly& p, long q0);
// Largest i with at^i | p; p must be nonzero.
int valuation(const QPoly& p, const QPoly& at);
// Smallest positive integer n with n*p in Z[q].
mpz_class denominator_clearing(const QPoly& p);

// Rational function with monic denominator and coprime numerator/denominator.
class QRatFun {
 public:
  QRatFun() : den_(1) {}
  QRatFun(const QPoly& num) : num_(num), den_(1) {}
  QRatFun(const QPoly& num, const QPoly& den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  QRatFun inverse() const;

  friend QRatFun operator+(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator-(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator*(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator/(const QRatFun& a, const QRatFun& b);
  friend bool operator==(const QRatFun& a, const QRatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  std::string to_string() const;

 private:
  QPoly num_, den_;
};

}  // namespace dlchar
