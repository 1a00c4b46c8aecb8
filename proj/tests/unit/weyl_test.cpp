#include <doctest.h>

#include "dlchar/weyl.hpp"

using namespace dlchar::weyl;

namespace {
CartanType T(const char* s) { return CartanType::parse(s); }
}  // namespace

TEST_CASE("Cartan type parsing") {
  CHECK(T("2e6").to_string() == "2E6");
  CHECK(T("3D4").twist == 3);
  CHECK_THROWS_AS(T("H3"), std::invalid_argument);
  CHECK_THROWS_AS(T("3A2"), std::invalid_argument);
  CHECK_THROWS_AS(T("B1"), std::invalid_argument);
}

TEST_CASE("root systems") {
  CHECK(build_root_system(T("A1")).roots.size() == 2);
  CHECK(build_root_system(T("G2")).roots.size() == 12);
  CHECK(build_root_system(T("E8")).roots.size() == 240);
  CHECK(build_root_system(T("F4")).roots.size() == 48);
  CHECK(num_positive_roots(T("E7")) == 63);
}

TEST_CASE("length and longest elements") {
  const WeylGroup a2(T("A2"));
  CHECK(a2.length(a2.identity()) == 0);
  CHECK(a2.length(a2.simple(1)) == 1);
  CHECK(a2.length(a2.longest_element(a2.all_nodes())) == 3);
  const WeylGroup b2(T("B2"));
  CHECK(b2.longest_element(0) == b2.identity());
  CHECK(b2.longest_element(1) == b2.simple(0));
  CHECK(b2.length(b2.longest_element(b2.all_nodes())) == 4);
  const WeylGroup e8(T("E8"));
  const auto w0 = e8.longest_element(e8.all_nodes());
  CHECK(e8.length(w0) == 120);
  CHECK(e8.from_word(e8.reduced_word(w0)) == w0);
  CHECK(e8.from_key(e8.key(w0)) == w0);
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_elements(WeylGroup(T("A1"))).size() == 2);
  CHECK(enumerate_elements(WeylGroup(T("G2"))).size() == 12);
  CHECK(enumerate_elements(WeylGroup(T("E6"))).size() == 51840);
  const auto b3 = enumerate_elements(WeylGroup(T("B3")));
  // Poincare polynomial (1+q)(1+q+q^2+q^3)(1+...+q^5)
  CHECK(b3.length_distribution() == std::vector<std::uint64_t>{1, 3, 5, 7, 8, 8, 7, 5, 3, 1});
}

TEST_CASE("serial and parallel enumeration agree") {
  for (const char* t : {"A4", "B4", "D5", "F4", "E6"}) {
    CAPTURE(t);
    const WeylGroup g(T(t));
    const auto s = serial::enumerate(g), p = parallel::enumerate(g);
    CHECK(s.keys == p.keys);
    CHECK(s.lengths == p.lengths);
    CHECK(s.size() == g.order());
  }
}

TEST_CASE("E7 enumerates without storing permutations") {
  const WeylGroup g(T("E7"));
  const auto s = parallel::enumerate(g, {.keep_elements = false});
  CHECK(s.size() == 2903040);
  CHECK_FALSE(s.has_elements());
  CHECK(s.length_distribution().size() == 64);
}

TEST_CASE("enumeration cap") {
  const WeylGroup g(T("E8"));
  CHECK_THROWS_AS(parallel::enumerate(g, {.keep_elements = false, .cap = 1000}), CapExceeded);
  CHECK_THROWS_AS(serial::enumerate(g, {.keep_elements = false, .cap = 1000}), CapExceeded);
}

TEST_CASE("twisted normalizers in A1") {
  const WeylGroup g(T("A1"));
  const auto st = enumerate_elements(g);
  const auto& one = g.identity();
  const auto& s = g.simple(0);
  CHECK(twisted_normalizer(g, st, one, one, g.sigma()).size() == 2);
  CHECK(twisted_normalizer(g, st, one, s, g.sigma()).empty());
  CHECK(twisted_normalizer(g, st, s, s, g.sigma()).size() == 2);
}

TEST_CASE("class counts from closed formulas") {
  CHECK(class_count(T("A1")) == 2);
  CHECK(class_count(T("B2")) == 5);
  CHECK(class_count(T("D4")) == 13);
  CHECK(class_count(T("E8")) == 112);
  CHECK(class_count(T("F4")) == 25);
  CHECK(class_count(T("G2")) == 6);
  CHECK_THROWS(class_count(T("2A3")));
}

TEST_CASE("brute force class labels match the formula and both kernels") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(t);
    const WeylGroup g(T(t));
    const auto st = enumerate_elements(g);
    const auto s = serial::class_labels(g, st, g.sigma()), p = parallel::class_labels(g, st, g.sigma());
    CHECK(s == p);
    CHECK(count_labels(p) == class_count(T(t)));
  }
}

TEST_CASE("twisted classes") {
  // sigma acts as conjugation by w0 here, so sigma-classes match ordinary ones
  const WeylGroup g(T("2A2"));
  const auto st = enumerate_elements(g);
  CHECK(count_labels(parallel::class_labels(g, st, g.sigma())) == 3);
  const WeylGroup d4(T("3D4"));
  const auto sd = enumerate_elements(d4);
  CHECK(count_labels(parallel::class_labels(d4, sd, d4.sigma())) == 7);
}

TEST_CASE("relative Weyl groups") {
  const WeylGroup e6(T("E6"));
  CHECK(to_string(relative_weyl_type(e6, 0, e6.sigma())) == "E6");
  CHECK(to_string(relative_weyl_type(e6, parse_nodes("2,3,4,5", 6), e6.sigma())) == "A2");
  const WeylGroup te6(T("2E6"));
  CHECK(to_string(relative_weyl_type(te6, 0, te6.sigma())) == "F4");
  CHECK(to_string(relative_weyl_type(WeylGroup(T("2A3")), 0, WeylGroup(T("2A3")).sigma())) == "B2");
  CHECK(to_string(relative_weyl_type(WeylGroup(T("3D4")), 0, WeylGroup(T("3D4")).sigma())) == "G2");
  CHECK(format_nodes(parse_nodes("1,3", 4)) == "1,3");
  CHECK_THROWS(parse_nodes("5", 4));
}

TEST_CASE("relative type order matches sigma-fixed elements") {
  for (const char* t : {"2A3", "2A5", "3D4", "2E6"}) {
    CAPTURE(t);
    const WeylGroup g(T(t));
    const auto st = enumerate_elements(g);
    std::uint64_t order = 1;
    for (const auto& c : relative_weyl_type(g, 0, g.sigma())) order *= weyl_group_order(c);
    CHECK(sigma_fixed(g, st, g.sigma()).size() == order);
  }
}
