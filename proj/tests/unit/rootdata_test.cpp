#include <doctest.h>

#include "dlchar/rootdata.hpp"

using namespace dlchar;
using namespace dlchar::rootdata;

namespace {

const QPoly q = QPoly::q();
const QPoly one(1L);

DatumWeyl dw(const char* name) { return DatumWeyl(builtin(name)); }

}  // namespace

TEST_CASE("Smith normal form") {
  const IntMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(m);
  CHECK(s.diagonal() == IntVector{2, 6, 12});
  CHECK(mat_mul(mat_mul(s.U, m), s.V) == s.D);
  CHECK(std::abs(mat_det(s.U)) == 1);
  CHECK(std::abs(mat_det(s.V)) == 1);
  CHECK(unimodular_inverse(s.U).size() == 3);
  CHECK_THROWS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("built-in data are consistent") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const DatumWeyl d(builtin(name));
    CHECK(d.consistent());
    CHECK(steinberg_identity_check(d));
    CHECK(t1_factorization_check(d));
    CHECK(valuation(group_order_poly(d), q) == d.datum().num_positive());
  }
  CHECK_THROWS_AS(builtin("E9"), std::invalid_argument);
  CHECK(builtin("sl2").name == "SL2");
}

TEST_CASE("order polynomials") {
  const auto sl2 = dw("SL2"), gl2 = dw("GL2"), sp4 = dw("Sp4");
  const auto s = sl2.index_of_word({0});
  CHECK(torus_order_poly(sl2, sl2.identity_index()) == q - one);
  CHECK(torus_order_poly(sl2, s) == q + one);
  CHECK(torus_order_poly(gl2, gl2.index_of_word({0})) == q * q - one);
  CHECK(group_order_poly(sl2) == q * (q * q - one));
  CHECK(group_order_poly(gl2) == q * (q - one) * (q * q - one));
  CHECK(group_order_poly(sp4) == pow(q, 4) * (q * q - one) * (pow(q, 4) - one));
  CHECK(centre_order_poly(gl2.datum()) == q - one);
  CHECK(centre_order_poly(sl2.datum()) == one);
  const auto su3 = dw("SU3");
  CHECK(group_order_poly(su3) == pow(q, 3) * (q * q - one) * (pow(q, 3) + one));
}

TEST_CASE("finite torus structure") {
  const auto sl2 = dw("SL2"), gl2 = dw("GL2");
  const auto s = sl2.index_of_word({0});
  const auto t1 = finite_torus_structure(sl2, sl2.identity_index(), 7);
  CHECK(t1.invariant_factors == IntVector{6});
  const auto ts = finite_torus_structure(sl2, s, 7);
  CHECK(ts.invariant_factors == IntVector{8});
  CHECK(finite_torus_structure(gl2, gl2.identity_index(), 5).invariant_factors == IntVector{4, 4});
  CHECK(finite_torus_structure(gl2, gl2.index_of_word({0}), 5).invariant_factors == IntVector{24});

  CHECK(theta_order(t1, theta_from_lambda(t1, {0})) == 1);
  CHECK(theta_order(t1, theta_from_lambda(t1, {3})) == 2);
  CHECK(theta_order(ts, theta_from_lambda(ts, {4})) == 2);
  // orders agree with the torus polynomial for every w in every datum
  for (const auto& name : builtin_names()) {
    const DatumWeyl d(builtin(name));
    for (std::size_t w = 0; w < d.size(); ++w)
      for (std::int64_t q0 : {3, 5}) CHECK(finite_torus_structure(d, w, q0).order() == eval_at(torus_order_poly(d, w), q0));
  }
}

TEST_CASE("Z sets") {
  const auto sl2 = dw("SL2");
  const auto s = sl2.index_of_word({0});
  const auto all = compute_Z(sl2, {0}, 1, 7);
  CHECK(all.size() == 2);
  for (const auto& z : all) CHECK(z.lambda_w == IntVector{0});
  const auto z2 = compute_Z(sl2, {1}, 2, 7);
  REQUIRE(z2.size() == 2);
  for (const auto& z : z2) CHECK(z.lambda_w == IntVector{z.w == s ? 4 : 3});
  const auto z3 = compute_Z(sl2, {1}, 3, 5);
  REQUIRE(z3.size() == 1);
  CHECK(z3[0].w == s);
  CHECK_THROWS(compute_Z(sl2, {1}, 7, 7));  // p divides n
  CHECK_THROWS(compute_Z(sl2, {1}, 2, 6));
  CHECK_THROWS(compute_Z(sl2, {1, 0}, 2, 7));
}

TEST_CASE("Z is a coset of a reflection subgroup for connected centre") {
  for (const char* name : {"GL2", "GL3"}) {
    const auto d = dw(name);
    const int r = d.datum().rank;
    for (std::int64_t n : {1, 2, 3, 4})
      for (std::int64_t a = 0; a < n; ++a) {
        IntVector lambda(static_cast<std::size_t>(r), 0);
        lambda[0] = a;
        const auto z = compute_Z(d, lambda, n, 7);
        if (z.empty()) continue;
        const auto rep = reflection_coset_check(d, z);
        CAPTURE(name);
        CAPTURE(n);
        CHECK_MESSAGE(rep.ok, rep.reason);
      }
  }
}

TEST_CASE("degree polynomials of SL2 unipotent characters") {
  const auto sl2 = dw("SL2");
  const auto s = sl2.index_of_word({0});
  std::vector<std::int64_t> triv(2, 0), st(2, 0), half(2, 0);
  triv[sl2.identity_index()] = triv[s] = 1;
  st[sl2.identity_index()] = 1;
  st[s] = -1;
  half[sl2.identity_index()] = 1;
  const auto a = degree_polynomial(sl2, triv), b = degree_polynomial(sl2, st), c = degree_polynomial(sl2, half);
  CHECK(a.D == one);
  CHECK((a.a == 0 && a.A == 0 && a.n == 1));
  CHECK(b.D == q);
  CHECK((b.a == 1 && b.A == 1 && b.n == 1));
  CHECK(c.D == (q + one) * QPoly(mpq_class(1, 2)));
  CHECK(c.n == 2);
  CHECK(a.clubsuit);
  CHECK(b.clubsuit);
  CHECK(c.clubsuit);
}
