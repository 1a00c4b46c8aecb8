#include <doctest.h>

#include <algorithm>

#include "dlchar/dltables.hpp"

using namespace dlchar;
using namespace dlchar::dl;

namespace {

const DLCharacter& find(const GroupData& g, std::size_t slot, std::int64_t theta) {
  for (const auto& r : g.family)
    if (r.w == g.w_indices[slot] && r.theta == IntVector{theta}) return r;
  throw std::logic_error("missing");
}

void require_ok(const Report& r) {
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.ok);
  }
}

}  // namespace

TEST_CASE("table shapes") {
  CHECK(build_sl2(7).table.size() == 11);
  CHECK(build_sl2(7).classes.size() == 11);
  std::vector<std::int64_t> degs;
  const auto g5 = build_sl2(5);
  for (std::size_t i = 0; i < g5.table.size(); ++i) degs.push_back(g5.table.degree(i));
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<std::int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  const auto g3 = build_sl2(3);
  CHECK(std::none_of(g3.table.labels.begin(), g3.table.labels.end(),
                     [](const std::string& l) { return l.rfind("rho_", 0) == 0; }));
  CHECK(build_gl2(3).classes.size() == 8);
  const auto gl5 = build_gl2(5);
  std::int64_t sq = 0, linear = 0;
  for (std::size_t i = 0; i < gl5.table.size(); ++i) {
    sq += gl5.table.degree(i) * gl5.table.degree(i);
    linear += gl5.table.degree(i) == 1;
  }
  CHECK(sq == 480);
  CHECK(linear == 4);
  CHECK_THROWS_AS(build_sl2(4), std::invalid_argument);
  CHECK_THROWS_AS(build_sl2(51), std::invalid_argument);
  CHECK_THROWS_AS(build_group("PGL2", 5), std::invalid_argument);
}

TEST_CASE("inner products") {
  const auto g = build_sl2(5);
  for (std::size_t i = 0; i < g.table.size(); ++i)
    CHECK(inner_product(g.classes, g.table.rows[i], g.table.rows[i]) == CycNum(1L));
  const auto r1 = g.dl_character(find(g, 0, 0));
  CHECK(inner_product(g.classes, r1, r1) == CycNum(2L));
  CHECK(inner_product(g.classes, g.dl_character(find(g, 0, 1)), g.dl_character(find(g, 1, 1))).is_zero());
  CHECK_THROWS(inner_product(g.classes, r1, ClassFunction(3)));
}

TEST_CASE("DL character values") {
  const auto g7 = build_sl2(7);
  CHECK(g7.dl_character(find(g7, 1, 2))[0] == CycNum(-6L));
  for (std::int64_t q : {3, 5, 7, 9}) {
    const auto g = build_sl2(q);
    CHECK(g.dl_character(find(g, 0, 0))[0] == CycNum(q + 1));
    CHECK(g.dl_character(find(g, 1, 0))[0] == CycNum(-(q - 1)));
  }
  const auto g5 = build_sl2(5);
  const auto J = g5.classes.index("J");
  CHECK(g5.dl_character(find(g5, 0, 0))[J] == CycNum(1L));
  CHECK(g5.dl_character(find(g5, 1, 0))[J] == CycNum(1L));
}

TEST_CASE("scalar products match twisted normalizer counts") {
  const auto g = build_sl2(5);
  const auto& a = find(g, 0, 0);
  CHECK(scalar_product_count(g, a, a) == 2);
  CHECK(scalar_product_count(g, find(g, 0, 1), find(g, 0, 3)) == 1);  // theta and its inverse
  CHECK(scalar_product_count(g, find(g, 0, 1), find(g, 1, 1)) == 0);
}

TEST_CASE("projector") {
  const auto g = build_sl2(7);
  const UniformProjector P(g);
  CHECK(P.rank() == 9);
  const auto r = g.dl_character(find(g, 0, 1));
  CHECK(P.apply(r) == r);
  const auto gl = build_gl2(3);
  CHECK(UniformProjector(gl).rank() == 8);
}

TEST_CASE("orthocomplement at q = 5") {
  const auto g = build_sl2(5);
  const auto& t = g.table;
  std::vector<CycNum> k(t.size());
  const Rational h(1, 2);
  k[t.index("rho0'")] = h;
  k[t.index("rho0''")] = Rational(-h);
  k[t.index("pi0'")] = Rational(-h);
  k[t.index("pi0''")] = h;
  const auto u = combine(t, k);
  const CycNum r5 = sqrt_delta_q(5);
  const bool plus = u[g.classes.index("J")] == r5 && u[g.classes.index("J'")] == -r5;
  const bool minus = u[g.classes.index("J")] == -r5 && u[g.classes.index("J'")] == r5;
  CHECK((plus || minus));
  CHECK(u[g.classes.index("-J")].is_zero());
}

TEST_CASE("lemma app3 examples") {
  const auto g5 = build_sl2(5);
  require_ok(lemma_app3_check(g5, "I"));
  require_ok(lemma_app3_check(g5, "-I"));
  const auto g7 = build_sl2(7);
  const auto rep = lemma_app3_check(g7, "a^1");
  CHECK(rep.checks.size() == 1);  // a^1 only meets the split torus
  require_ok(rep);
  CHECK_THROWS_AS(lemma_app3_check(g5, "J"), std::invalid_argument);
  CHECK_THROWS_AS(lemma_app3_check(g5, "nope"), std::out_of_range);
}

TEST_CASE("degree polynomials") {
  const auto g = build_sl2(5);
  for (const auto& [label, info] : degree_polynomials(g)) {
    CAPTURE(label);
    const bool half = label.rfind("rho0", 0) == 0 || label.rfind("pi0", 0) == 0;
    CHECK(info.n == (half ? 2 : 1));
    CHECK(info.clubsuit);
  }
}

TEST_CASE("semisimple characters and graph components") {
  const auto g = build_sl2(5);
  CHECK(regular_average(g, g.table.index("St")).is_zero());
  CHECK(regular_average(g, g.table.index("rho0'")) == CycNum(1L));
  CHECK(dl_graph_components(g).size() == 6);
  const auto gl = build_gl2(5);
  CHECK(dl_graph_components(gl).size() == 4 + 6 + 10);  // (q-1) + (q-1)(q-2)/2 + (q^2-q)/2
}

TEST_CASE("full check suites") {
  for (std::int64_t q : {3, 5}) {
    CAPTURE(q);
    require_ok(run_checks(build_sl2(q), {"all"}));
    require_ok(run_checks(build_gl2(q), {"all"}));
  }
  CHECK_THROWS_AS(run_checks(build_sl2(3), {"nope"}), std::invalid_argument);
}

TEST_CASE("restriction suite") {
  require_ok(restriction_suite(5));
  require_ok(restriction_suite(9));
}
