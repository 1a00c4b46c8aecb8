#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "dlchar/cyclotomic.hpp"

using dlchar::CycNum;
using dlchar::Rational;

namespace {

CycNum z(std::int64_t n, std::int64_t k) { return CycNum::root_of_unity(n, k); }

// Deterministic sample of small elements over a few conductors.
std::vector<CycNum> sample(unsigned seed, int count) {
  std::mt19937 rng(seed);
  const std::int64_t orders[] = {1, 3, 4, 5, 8, 12, 15, 7, 9};
  std::uniform_int_distribution<int> coeff(-3, 3), terms(1, 4), pick(0, 8);
  std::vector<CycNum> out;
  for (int i = 0; i < count; ++i) {
    const std::int64_t n = orders[pick(rng)];
    CycNum x;
    // deliberately non-canonical rationals such as 2/2
    for (int t = terms(rng); t > 0; --t) x += z(n, coeff(rng) + 10) * Rational(coeff(rng), 1 + (t % 2));
    out.push_back(x);
  }
  return out;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("roots of unity reduce to the canonical basis") {
  CHECK(z(1, 0) == CycNum(1L));
  CHECK(z(4, 2) == CycNum(-1L));
  CHECK(z(3, 1) + z(3, 2) == CycNum(-1L));
  CHECK(z(6, 1) * z(6, 1) == z(3, 1));
  CHECK(z(5, 1).conj() == z(5, 4));
  CHECK((z(7, 3) * CycNum()).is_zero());
  CHECK(z(12, 12) == CycNum(1L));
  CHECK(z(10, 5) == CycNum(-1L));
  // sum of primitive n-th roots is the Moebius function
  for (std::int64_t n : {5, 9, 12, 15, 30}) {
    CycNum s;
    for (std::int64_t k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) s += z(n, k);
    const long mu = n == 5 ? -1 : n == 15 ? 1 : n == 30 ? -1 : 0;
    CHECK(s == CycNum(mu));
  }
}

TEST_CASE("conductor drops to the minimal field") {
  CHECK(z(8, 2).order() == 4);
  CHECK((z(8, 1) + z(8, 1).conj()).order() == 8);
  CHECK((z(3, 1) - z(3, 2)) * (z(3, 1) - z(3, 2)) == CycNum(-3L));
  CHECK((z(3, 1) + z(3, 2)).is_rational());
}

TEST_CASE("ring axioms on a deterministic sample") {
  const auto xs = sample(7, 12), ys = sample(11, 12), ws = sample(13, 12);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto &a = xs[i], &b = ys[i], &c = ws[i];
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CycNum());
    CHECK(a * CycNum(1L) == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
    CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
    CHECK(CycNum::from_json(a.to_json()) == a);
  }
}

TEST_CASE("Gauss sums square to delta p") {
  CHECK(pow(dlchar::gauss_sum(5), 2) == CycNum(5L));
  CHECK(pow(dlchar::gauss_sum(3), 2) == CycNum(-3L));
  CHECK(pow(dlchar::gauss_sum(7), 2) == CycNum(-7L));
  for (std::int64_t p = 3; p <= 31; ++p) {
    if (!dlchar::is_prime(p)) continue;
    const long delta = ((p - 1) / 2) % 2 ? -1 : 1;
    CAPTURE(p);
    CHECK(pow(dlchar::gauss_sum(p), 2) == CycNum(delta * p));
  }
}

TEST_CASE("sqrt(delta q) for prime powers") {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
    const long delta = ((q - 1) / 2) % 2 ? -1 : 1;
    CAPTURE(q);
    CHECK(pow(dlchar::sqrt_delta_q(q), 2) == CycNum(delta * q));
  }
}

TEST_CASE("division and errors") {
  CycNum x = z(5, 1) * Rational(3);
  x /= Rational(3);
  CHECK(x == z(5, 1));
  CHECK_THROWS(x /= Rational(0));
  CHECK_THROWS(z(5, 1).to_rational());
  CHECK(CycNum(Rational(1, 2)).to_string() == "1/2");
  CHECK((z(5, 2) * Rational(1, 2) - z(5, 3)).to_string() == "1/2*z5^2 - z5^3");
}

TEST_CASE("number theory helpers") {
  CHECK(dlchar::prime_power(49) == std::pair<std::int64_t, int>{7, 2});
  CHECK(dlchar::prime_power(12).first == 0);
  CHECK(dlchar::mod(-3, 5) == 2);
  CHECK(dlchar::lcm64(4, 6) == 12);
}
