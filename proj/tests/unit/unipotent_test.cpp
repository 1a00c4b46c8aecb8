#include <doctest.h>

#include <algorithm>
#include <map>

#include "dlchar/unipotent.hpp"

using namespace dlchar::unipotent;
using dlchar::weyl::CartanType;
using dlchar::weyl::parse_nodes;
using dlchar::weyl::WeylGroup;

namespace {

CartanType T(const char* s) { return CartanType::parse(s); }

std::vector<std::string> labels(const CuspidalList& l) {
  std::vector<std::string> out;
  for (const auto& x : l) out.push_back(x.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("cuspidal lists") {
  CHECK(xcirc(T("A1")).empty());
  CHECK(xcirc(T("A7")).empty());
  CHECK(labels(xcirc(T("B2"))) == std::vector<std::string>{"(-1,2)"});
  CHECK(labels(xcirc_trivial()) == std::vector<std::string>{"(1,1)"});
  CHECK(labels(xcirc(T("2E6"))) == sorted({"(1,6)", "(theta,3)", "(theta^2,3)"}));
  CHECK(labels(xcirc(T("E8"))) ==
        sorted({"(1,8)", "(1,120)", "(-1,12)", "(i,4)", "(-i,4)", "(theta,6)", "(-theta,6)", "(theta^2,6)",
                "(-theta^2,6)", "(zeta5,5)", "(zeta5^2,5)", "(zeta5^3,5)", "(zeta5^4,5)"}));
}

TEST_CASE("cuspidal counts") {
  const std::map<std::string, std::size_t> want = {{"G2", 4}, {"F4", 7},  {"E6", 2}, {"E7", 2}, {"E8", 13},
                                                   {"2E6", 3}, {"2A5", 1}, {"B2", 1}, {"D4", 1}, {"C2", 1}};
  for (const auto& [t, n] : want) {
    CAPTURE(t);
    CHECK(xcirc(CartanType::parse(t)).size() == n);
  }
  // arithmetic side conditions
  CHECK(xcirc(T("B6")).size() == 1);  // 6 = 2^2 + 2
  CHECK(xcirc(T("B3")).empty());
  CHECK(xcirc(T("D9")).empty());
  CHECK(xcirc(T("2A2")).size() == 1);  // 3 = 3*2/2
  CHECK(xcirc(T("2A3")).empty());
}

TEST_CASE("cuspidal data of Levi subdiagrams") {
  const WeylGroup g(T("2E6"));
  CHECK(labels(xcirc_levi(g, 0, g.sigma())) == std::vector<std::string>{"(1,1)"});
  CHECK(xcirc_levi(g, parse_nodes("1,3,5,6", 6), g.sigma()).empty());
  CHECK(labels(xcirc_levi(g, parse_nodes("1,3,4,5,6", 6), g.sigma())) == std::vector<std::string>{"(-1,1)"});
}

TEST_CASE("parametrization sizes") {
  CHECK(enumerate_X(T("A1")).size() == 2);
  const auto e6 = series_breakdown(T("E6"));
  std::map<std::string, std::uint64_t> split;
  for (const auto& s : e6) split[dlchar::weyl::format_nodes(s.J)] = s.size();
  CHECK(split[""] == 25);
  CHECK(split["2,3,4,5"] == 3);
  CHECK(split["1,2,3,4,5,6"] == 2);
  CHECK(enumerate_X(T("E6")).size() == 30);
  const auto g2 = series_breakdown(T("G2"));
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].size() == 6);
  CHECK(g2[1].size() == 4);
}

TEST_CASE("unipotent totals for exceptional types") {
  const std::map<std::string, std::uint64_t> want = {{"G2", 10}, {"F4", 37}, {"E6", 30},
                                                     {"2E6", 30}, {"E7", 76}, {"E8", 166}, {"3D4", 8}};
  for (const auto& [t, n] : want) {
    CAPTURE(t);
    CHECK(count_unipotent(CartanType::parse(t)) == n);
  }
}

TEST_CASE("type A has only the principal series") {
  const std::uint64_t partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(count_unipotent(CartanType{'A', n, 1}) == partitions[n + 1]);
    CHECK(series_breakdown(CartanType{'A', n, 1}).size() == 1);
  }
}

TEST_CASE("serial and parallel series breakdowns agree") {
  for (const char* t : {"E6", "2E6", "E7", "F4", "D6", "B5"}) {
    CAPTURE(t);
    const auto s = serial::series_breakdown(T(t)), p = parallel::series_breakdown(T(t));
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].J == p[i].J);
      CHECK(s[i].relative == p[i].relative);
      CHECK(s[i].cuspidals == p[i].cuspidals);
      CHECK(s[i].irr_count == p[i].irr_count);
    }
  }
}
