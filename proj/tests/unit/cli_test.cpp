#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dlchar/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dlchar::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("unipotent census") {
  const auto r = run({"unipotent", "census", "--type", "E8", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["schema"] == dlchar::cli::kSchema);
  CHECK(j["total"] == 166);
  CHECK(j["cuspidal_count"] == 13);
  CHECK(run({"unipotent", "census", "--type", "E8", "--format", "json"}).out == r.out);
  const auto csv = run({"unipotent", "census", "--type", "G2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("J,relative,cuspidals,irr_count,size\n", 0) == 0);
  CHECK(json_of(run({"unipotent", "xcirc", "--type", "2E6", "--format", "json"}))["count"] == 3);
}

TEST_CASE("weyl commands") {
  const auto r = run({"weyl", "relative", "--type", "2E6", "--J", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "F4\n");
  CHECK(run({"weyl", "relative", "--type", "E6", "--J", "2,3,4,5"}).out == "A2\n");
  CHECK(run({"weyl", "relative", "--type", "2E6", "--J", "1"}).code == 2);  // not sigma-stable
  CHECK(json_of(run({"weyl", "info", "--type", "F4", "--format", "json"}))["class_count"] == 25);
  const auto c = run({"weyl", "classes", "--type", "D4", "--format", "json"});
  CHECK(c.code == 0);
  CHECK(json_of(c)["twisted_classes"] == 13);
}

TEST_CASE("rootdata commands") {
  const auto o = run({"rootdata", "orders", "--group", "SL2", "--format", "json"});
  REQUIRE(o.code == 0);
  CHECK(json_of(o)["order"] == "q^3 - q");
  const auto z = run({"rootdata", "zset", "--group", "SL2", "--n", "2", "--q", "7", "--lambda", "1", "--format", "json"});
  REQUIRE(z.code == 0);
  CHECK(json_of(z)["Z"].size() == 2);
  CHECK(run({"rootdata", "zset", "--group", "SL2", "--n", "2", "--q", "7", "--lambda", "x"}).code == 2);
  const auto t = run({"rootdata", "torus", "--group", "GL2", "--q", "5", "--format", "json"});
  REQUIRE(t.code == 0);
  CHECK(json_of(t)["tori"][0]["invariant_factors"] == nlohmann::json::array({4, 4}));
}

TEST_CASE("dl commands") {
  const auto t = run({"dl", "table", "--group", "SL2", "--q", "7", "--format", "json"});
  REQUIRE(t.code == 0);
  CHECK(json_of(t)["characters"].size() == 11);
  CHECK(run({"dl", "verify", "--group", "GL2", "--q", "3", "--check", "uniform-all"}).code == 0);
  const auto v = run({"dl", "verify", "--group", "SL2", "--q", "5", "--all", "--format", "json"});
  CHECK(v.code == 0);
  CHECK(json_of(v)["failed"] == 0);
  CHECK(run({"dl", "verify", "--group", "SL2", "--q", "5"}).code == 2);
  CHECK(run({"dl", "verify", "--group", "SL2", "--q", "5", "--check", "bogus"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"dl", "table", "--group", "SL2", "--q", "7", "--bogus"}).code == 2);
  CHECK(run({"dl", "table", "--group", "SL2", "--q", "8"}).code == 2);
  CHECK(run({"dl", "table", "--group", "SL2", "--q", "7", "--format", "xml"}).code == 2);
  CHECK(run({"unipotent", "census", "--type", "Q9"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
