#include <doctest.h>

#include "dlchar/qpoly.hpp"

using dlchar::QPoly;

namespace {
const QPoly q = QPoly::q();
const QPoly one(1L);
}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(gcd(q * q - one, q - one) == q - one);
  CHECK(divexact(q * (q * q - one), q + one) == q * (q - one));
  CHECK((QPoly() * pow(q, 3)).is_zero());
  CHECK_THROWS_AS(divexact(q * q + one, q - one), std::domain_error);
  CHECK(divides(q - one, pow(q, 4) - one));
  CHECK_FALSE(divides(q + one, q * q + one));
  const auto [quo, rem] = (pow(q, 3) + one).divmod(q - one);
  CHECK(quo * (q - one) + rem == pow(q, 3) + one);
  CHECK(rem == QPoly(2L));
}

TEST_CASE("evaluation") {
  CHECK(eval_at(q * (q * q - one), 3) == 24);
  CHECK(eval_at(one, 97) == 1);
  CHECK(eval_at(q - one, 5) == 4);
}

TEST_CASE("valuation and denominators") {
  CHECK(valuation(q * q * (q - one), q) == 2);
  CHECK(valuation(q + one, q - one) == 0);
  CHECK(valuation((q - one) * QPoly(mpq_class(1, 2)) * QPoly(2L), q - one) == 1);
  CHECK(valuation((q - one) * QPoly(mpq_class(1, 2)), q - one) == 1);
  CHECK(denominator_clearing((q + one) * QPoly(mpq_class(1, 2))) == 2);
  CHECK(denominator_clearing(q - one) == 1);
  CHECK(denominator_clearing((pow(q, 3) + q) * QPoly(mpq_class(1, 6)) + q * q * QPoly(mpq_class(1, 4))) == 12);
}

TEST_CASE("rendering and json") {
  CHECK((pow(q, 4) - q * q + one).to_string() == "q^4 - q^2 + 1");
  const QPoly p = (q + one) * QPoly(mpq_class(1, 2));
  CHECK(QPoly::from_json(p.to_json()) == p);
}

TEST_CASE("rational functions") {
  using dlchar::QRatFun;
  const QRatFun a(one, q - one), b(one, q + one);
  const QRatFun s = a + b;
  CHECK(s.num() * (q * q - one) == s.den() * q * QPoly(2L));
  CHECK((s * s.inverse()) == QRatFun(one));
  CHECK((a - a).is_zero());
}
