#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace dlchar {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& r);

// Element of Q(zeta_n) kept in a canonical basis at its conductor.
// Basis: zeta_N^e where for every p^k || N the top base-p digit of the
// CRT coordinate of e lies in 1..p-1 (odd p) or is 0 (p = 2).
// N is never 2 mod 4; N = 1 for rationals.
class CycNum {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  CycNum() = default;
  CycNum(long v) : order_(1) { if (v != 0) terms_.push_back({0, Rational(v)}); }
  CycNum(Rational r) : order_(1) {
    r.canonicalize();
    if (r != 0) terms_.push_back({0, std::move(r)});
  }

  // Builds sum c_k zeta_n^k from arbitrary (possibly repeated, unreduced) terms.
  static CycNum from_terms(std::int64_t n, std::vector<Term> terms);
  static CycNum root_of_unity(std::int64_t n, std::int64_t k);

  std::int64_t order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return order_ == 1; }
  Rational to_rational() const;  // throws if not rational

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& r);
  CycNum& operator/=(const Rational& r);  // throws on zero

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const Rational& r) { return a *= r; }
  friend CycNum operator*(const Rational& r, CycNum a) { return a *= r; }
  friend CycNum operator/(CycNum a, const Rational& r) { return a /= r; }
  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  // Galois action zeta -> zeta^k, gcd(k, order) = 1.
  CycNum galois(std::int64_t k) const;
  CycNum conj() const { return galois(-1); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

  nlohmann::json to_json() const;
  static CycNum from_json(const nlohmann::json& j);

 private:
  std::int64_t order_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients

  // Expresses *this over zeta_m with order_ | m (not canonical afterwards).
  std::vector<Term> lifted(std::int64_t m) const;
};

CycNum pow(const CycNum& x, unsigned e);

// Quadratic Gauss sum sum_a (a/p) zeta_p^a for an odd prime p.
CycNum gauss_sum(std::int64_t p);

// sqrt(delta*q) with delta = (-1)^((q-1)/2), for q an odd prime power.
CycNum sqrt_delta_q(std::int64_t q);

// Small number theory helpers shared by other modules.
bool is_prime(std::int64_t n);
// Returns (p, f) with q = p^f, or (0, 0) if q is not a prime power.
std::pair<std::int64_t, int> prime_power(std::int64_t q);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace dlchar
