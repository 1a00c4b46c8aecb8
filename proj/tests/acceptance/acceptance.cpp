// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "dlchar/cyclotomic.hpp"
#include "dlchar/dltables.hpp"
#include "dlchar/rootdata.hpp"
#include "dlchar/unipotent.hpp"
#include "dlchar/weyl.hpp"

using namespace dlchar;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (note.size() < 400) note += (note.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Requires every check in the report whose name starts with one of the prefixes.
void require_checks(Outcome& o, const dl::Report& r, const std::vector<std::string>& prefixes, const std::string& ctx) {
  std::size_t matched = 0;
  for (const auto& c : r.checks)
    for (const auto& p : prefixes)
      if (c.name.rfind(p, 0) == 0) {
        ++matched;
        o.require(c.ok, ctx + " " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        break;
      }
  o.require(matched > 0, ctx + ": no checks matched");
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::map<std::string, std::uint64_t> want = {{"G2", 10}, {"F4", 37}, {"E6", 30},
                                                     {"2E6", 30}, {"E7", 76}, {"E8", 166}};
  for (const auto& [t, n] : want) {
    const auto got = unipotent::count_unipotent(weyl::CartanType::parse(t));
    o.require(got == n, t + " gave " + std::to_string(got));
  }
  const double s = seconds_since(t0);
  o.require(s < 60, "runtime " + std::to_string(s) + " s");
  o.note = o.ok ? "six totals exact in " + std::to_string(s) + " s" : o.note;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const std::map<std::string, std::size_t> want = {{"G2", 4},  {"F4", 7},  {"E6", 2}, {"E7", 2}, {"E8", 13},
                                                   {"2E6", 3}, {"2A5", 1}, {"B2", 1}, {"D4", 1}};
  for (const auto& [t, n] : want) {
    const auto got = unipotent::xcirc(weyl::CartanType::parse(t)).size();
    o.require(got == n, t + " gave " + std::to_string(got));
  }
  for (int n = 1; n <= 20; ++n)
    o.require(unipotent::xcirc(weyl::CartanType{'A', n, 1}).empty(), "A" + std::to_string(n) + " nonempty");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const QPoly q = QPoly::q(), one(1L);
  const rootdata::DatumWeyl sl2(rootdata::builtin("SL2"));
  o.require(rootdata::group_order_poly(sl2) == q * (q * q - one), "SL2 order polynomial");
  for (const auto& name : rootdata::builtin_names()) {
    const rootdata::DatumWeyl d(rootdata::builtin(name));
    o.require(rootdata::steinberg_identity_check(d), name + " Steinberg identity");
    o.require(rootdata::t1_factorization_check(d), name + " |T_1| factorization");
    o.require(valuation(rootdata::group_order_poly(d), q) == d.datum().num_positive(), name + " valuation");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0;
  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = dl::build_sl2(q);
    const auto ctx = "q=" + std::to_string(q);
    o.require(g.table.size() == static_cast<std::size_t>(q + 4), ctx + " row count");
    require_checks(o, dl::verify_dl_identities(g),
                   {"row-orthogonality", "column-orthogonality", "degree-squares", "dimension-formula",
                    "scalar-products", "class-count"},
                   ctx);
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    o.require(s < 30, ctx + " took " + std::to_string(s) + " s");
  }
  if (o.ok) o.note = "slowest q took " + std::to_string(worst) + " s";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::string signs;
  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    const auto g = dl::build_sl2(q);
    const auto ctx = "q=" + std::to_string(q);
    require_checks(o, dl::projector_check(g), {"projector-"}, ctx);
    require_checks(o, dl::luconj_check(g), {"uniform-all"}, ctx);
    const auto oc = dl::orthocomplement_check(g);
    require_checks(o, oc, {"orthocomplement-", "single-class-not-uniform"}, ctx);
    for (const auto& c : oc.checks)
      if (c.name == "orthocomplement-values" && q == 5) signs = c.detail;
  }
  if (o.ok) o.note = "q=5 " + signs;
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::int64_t q : {3, 5, 7}) {
    const auto g = dl::build_gl2(q);
    const auto ctx = "GL2 q=" + std::to_string(q);
    require_checks(o, dl::luconj_check(g), {"uniform-all"}, ctx);
    require_checks(o, dl::projector_check(g), {"projector-rank"}, ctx);
    require_checks(o, dl::semisimple_and_depth(g), {"unique-semisimple-per-component"}, ctx);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (std::int64_t q : {5, 7}) {
    const auto g = dl::build_sl2(q);
    for (const char* s0 : {"I", "-I", "a^1"})
      require_checks(o, dl::lemma_app3_check(g, s0), {"lemma-app3"}, "q=" + std::to_string(q) + " s0=" + s0);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (std::int64_t q : {3, 5, 7}) require_checks(o, dl::restriction_suite(q), {"restriction-"}, "q=" + std::to_string(q));
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (std::int64_t q : {3, 5, 7}) {
    require_checks(o, dl::degree_checks(dl::build_sl2(q)), {"degree-"}, "SL2 q=" + std::to_string(q));
    require_checks(o, dl::degree_checks(dl::build_gl2(q)), {"degree-"}, "GL2 q=" + std::to_string(q));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  // cyclotomic ring axioms on roots of unity up to conductor 30
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t a = 0; a < n; a += 3)
      for (std::int64_t b = 1; b < n; b += 4) {
        const CycNum x = CycNum::root_of_unity(n, a) + CycNum(Rational(1, 2)),
                     y = CycNum::root_of_unity(n, b) - CycNum::root_of_unity(n, a + b);
        const CycNum z = CycNum::root_of_unity(6, 1);
        o.require(x * (y + z) == x * y + x * z, "distributivity n=" + std::to_string(n));
        o.require((x * y) * z == x * (y * z), "associativity n=" + std::to_string(n));
        o.require(x * y == y * x && x + y == y + x, "commutativity n=" + std::to_string(n));
        o.require(x - x == CycNum(), "additive inverse n=" + std::to_string(n));
      }
  for (std::int64_t p = 3; p <= 31; ++p) {
    if (!is_prime(p)) continue;
    const long delta = ((p - 1) / 2) % 2 ? -1 : 1;
    o.require(pow(gauss_sum(p), 2) == CycNum(delta * p), "Gauss sum p=" + std::to_string(p));
  }
  // class counts by brute force for every irreducible type with |W| <= 51840
  std::vector<std::string> types;
  for (int n = 1; n <= 7; ++n) types.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) types.push_back("B" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) types.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) types.push_back("D" + std::to_string(n));
  for (const char* t : {"G2", "F4", "E6"}) types.emplace_back(t);
  for (const auto& name : types) {
    const auto t = weyl::CartanType::parse(name);
    const weyl::WeylGroup g(t);
    const auto st = weyl::enumerate_elements(g);
    const auto brute = weyl::count_labels(weyl::parallel::class_labels(g, st, g.sigma()));
    o.require(brute == weyl::class_count(t), name + " class count " + std::to_string(brute));
  }
  for (const char* name : {"2A3", "2A5", "3D4", "2E6"}) {
    const weyl::WeylGroup g(weyl::CartanType::parse(name));
    const auto st = weyl::enumerate_elements(g);
    const auto rel = weyl::relative_weyl_type(g, 0, g.sigma());
    std::uint64_t order = 1;
    for (const auto& c : rel) order *= weyl::weyl_group_order(c);
    const auto fixed = weyl::sigma_fixed(g, st, g.sigma()).size();
    o.require(order == fixed, std::string(name) + ": " + weyl::to_string(rel) + " vs |W^sigma| = " + std::to_string(fixed));
    int rank = 0;
    for (const auto& c : rel) rank += c.rank;
    o.require(rank == static_cast<int>(weyl::sigma_orbits(g.sigma(), g.all_nodes()).size()),
              std::string(name) + ": relative rank differs from the number of sigma-orbits");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::printf("%s criterion %zu%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
