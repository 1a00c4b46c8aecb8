#include "dlchar/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dlchar/dltables.hpp"
#include "dlchar/rootdata.hpp"
#include "dlchar/unipotent.hpp"
#include "dlchar/weyl.hpp"
#include "render.hpp"

namespace dlchar::cli {

namespace {

using render::json;

struct Options {
  std::string type, group, format = "pretty", J, lambda;
  std::int64_t q = 0, n = 0;
  std::vector<std::string> checks;
  bool all = false;
};

// Thrown for requests that parse but make no sense for the given inputs.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

IntVector parse_lambda(const std::string& s) {
  IntVector v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("--lambda expects comma-separated integers, got '" + s + "'");
    }
  }
  return v;
}

// Representatives of the sigma-twisted classes of W: smallest index in each class.
std::vector<std::pair<std::size_t, std::size_t>> twisted_reps(const rootdata::DatumWeyl& dw) {
  std::vector<char> seen(dw.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> reps;
  for (std::size_t w = 0; w < dw.size(); ++w) {
    if (seen[w]) continue;
    const auto cls = weyl::twisted_class(dw.group(), dw.store(), dw.element(w), dw.group().sigma());
    for (auto x : cls) seen[x] = 1;
    reps.push_back({w, cls.size()});
  }
  return reps;
}

std::string word_of(const rootdata::DatumWeyl& dw, std::size_t w) {
  return word_string(dw.group().reduced_word(dw.element(w)));
}

// ---- unipotent ----

int unipotent_census(const Options& o, std::ostream& out) {
  const auto t = weyl::CartanType::parse(o.type);
  const auto series = unipotent::series_breakdown(t);
  std::uint64_t total = 0;
  for (const auto& s : series) total += s.size();
  const auto cusp = unipotent::xcirc(t);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& s : series) {
      json c = json::array();
      for (const auto& x : s.cuspidals) c.push_back(x.to_string());
      arr.push_back({{"J", weyl::format_nodes(s.J)},
                     {"relative", weyl::to_string(s.relative)},
                     {"cuspidals", c},
                     {"irr_count", s.irr_count}});
    }
    emit(out, {{"schema", kSchema},
               {"type", t.to_string()},
               {"total", total},
               {"cuspidal_count", cusp.size()},
               {"series", arr}});
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"J", "relative", "cuspidals", "irr_count", "size"}};
  for (const auto& s : series) {
    std::string c;
    for (const auto& x : s.cuspidals) c += (c.empty() ? "" : " ") + x.to_string();
    rows.push_back({weyl::format_nodes(s.J), weyl::to_string(s.relative), c, std::to_string(s.irr_count),
                    std::to_string(s.size())});
  }
  if (o.format == "csv") {
    render::csv(out, rows);
    return kOk;
  }
  out << t.to_string() << ": " << total << " unipotent characters, " << cusp.size() << " cuspidal\n";
  render::pretty_table(out, rows);
  return kOk;
}

int unipotent_xcirc(const Options& o, std::ostream& out) {
  const auto t = weyl::CartanType::parse(o.type);
  const auto cusp = unipotent::xcirc(t);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& x : cusp) arr.push_back({{"omega", x.omega_label()}, {"m", x.m}, {"label", x.to_string()}});
    emit(out, {{"schema", kSchema}, {"type", t.to_string()}, {"count", cusp.size()}, {"cuspidals", arr}});
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"omega", "m"}};
  for (const auto& x : cusp) rows.push_back({x.omega_label(), std::to_string(x.m)});
  if (o.format == "csv") {
    render::csv(out, rows);
    return kOk;
  }
  out << t.to_string() << ": " << cusp.size() << " cuspidal unipotent characters\n";
  render::pretty_table(out, rows);
  return kOk;
}

// ---- rootdata ----

int rootdata_orders(const Options& o, std::ostream& out) {
  const rootdata::DatumWeyl dw(rootdata::builtin(o.group));
  const QPoly G = rootdata::group_order_poly(dw);
  const int N = dw.datum().num_positive();
  const bool val = valuation(G, QPoly::q()) == N;
  const bool st = rootdata::steinberg_identity_check(dw), t1 = rootdata::t1_factorization_check(dw),
             cons = dw.consistent();
  const bool ok = val && st && t1 && cons;
  const auto reps = twisted_reps(dw);
  if (o.format == "json") {
    json tori = json::array();
    for (auto [w, size] : reps)
      tori.push_back({{"w", word_of(dw, w)},
                      {"class_size", size},
                      {"order", rootdata::torus_order_poly(dw, w).to_string()},
                      {"coeffs", rootdata::torus_order_poly(dw, w).to_json()}});
    emit(out, {{"schema", kSchema},
               {"group", dw.datum().name},
               {"order", G.to_string()},
               {"order_coeffs", G.to_json()},
               {"num_positive_roots", N},
               {"centre", rootdata::centre_order_poly(dw.datum()).to_string()},
               {"tori", tori},
               {"checks",
                {{"valuation_equals_N", val}, {"steinberg", st}, {"t1_factorization", t1}, {"datum_consistent", cons}}}});
    return ok ? kOk : kVerificationFailed;
  }
  out << "|G| = " << G.to_string() << "\n";
  out << "|Z°| = " << rootdata::centre_order_poly(dw.datum()).to_string() << "\n";
  std::vector<std::vector<std::string>> rows{{"w", "class_size", "|T_w|"}};
  for (auto [w, size] : reps)
    rows.push_back({word_of(dw, w), std::to_string(size), rootdata::torus_order_poly(dw, w).to_string()});
  render::pretty_table(out, rows);
  auto flag = [&](const char* name, bool b) { out << (b ? "ok    " : "FAIL  ") << name << '\n'; };
  flag("valuation of |G| at q equals N", val);
  flag("Steinberg identity", st);
  flag("|T_1| factorization", t1);
  flag("datum consistency", cons);
  return ok ? kOk : kVerificationFailed;
}

int rootdata_zset(const Options& o, std::ostream& out) {
  const rootdata::DatumWeyl dw(rootdata::builtin(o.group));
  const IntVector lambda = parse_lambda(o.lambda);
  if (static_cast<int>(lambda.size()) != dw.datum().rank)
    throw UsageError("--lambda needs " + std::to_string(dw.datum().rank) + " coordinates for " + dw.datum().name);
  const auto Z = rootdata::compute_Z(dw, lambda, o.n, o.q);
  std::optional<rootdata::CosetReport> coset;
  if (dw.datum().connected_centre && !Z.empty()) coset = rootdata::reflection_coset_check(dw, Z);
  const bool ok = !coset || coset->ok;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& z : Z) arr.push_back({{"w", word_of(dw, z.w)}, {"lambda_w", z.lambda_w}});
    json j = {{"schema", kSchema}, {"group", dw.datum().name}, {"n", o.n}, {"q", o.q}, {"lambda", lambda}, {"Z", arr}};
    if (coset) {
      json sub = json::array();
      for (auto x : coset->subgroup) sub.push_back(word_of(dw, x));
      j["coset"] = {{"ok", coset->ok}, {"w1", word_of(dw, coset->w1)}, {"subgroup", sub}, {"reason", coset->reason}};
    }
    emit(out, j);
    return ok ? kOk : kVerificationFailed;
  }
  out << "Z has " << Z.size() << " element" << (Z.size() == 1 ? "" : "s") << "\n";
  std::vector<std::vector<std::string>> rows{{"w", "lambda_w"}};
  for (const auto& z : Z) {
    std::string l;
    for (auto x : z.lambda_w) l += (l.empty() ? "" : ",") + std::to_string(x);
    rows.push_back({word_of(dw, z.w), "(" + l + ")"});
  }
  render::pretty_table(out, rows);
  if (coset)
    out << (coset->ok ? "ok    " : "FAIL  ") << "Z = w1 W' with w1 = " << word_of(dw, coset->w1) << ", |W'| = "
        << coset->subgroup.size() << (coset->reason.empty() ? "" : " (" + coset->reason + ")") << '\n';
  return ok ? kOk : kVerificationFailed;
}

int rootdata_torus(const Options& o, std::ostream& out) {
  const rootdata::DatumWeyl dw(rootdata::builtin(o.group));
  bool ok = true;
  json arr = json::array();
  std::vector<std::vector<std::string>> rows{{"w", "invariant_factors", "order", "|T_w|(q)"}};
  for (auto [w, size] : twisted_reps(dw)) {
    (void)size;
    const auto S = rootdata::finite_torus_structure(dw, w, o.q);
    const mpq_class expect = eval_at(rootdata::torus_order_poly(dw, w), o.q);
    ok = ok && expect == S.order();
    std::string f;
    for (auto d : S.invariant_factors) f += (f.empty() ? "" : " x ") + std::to_string(d);
    arr.push_back({{"w", word_of(dw, w)},
                   {"invariant_factors", S.invariant_factors},
                   {"order", S.order()},
                   {"polynomial_value", expect.get_str()}});
    rows.push_back({word_of(dw, w), f.empty() ? "trivial" : "Z/" + f, std::to_string(S.order()), expect.get_str()});
  }
  if (o.format == "json") emit(out, {{"schema", kSchema}, {"group", dw.datum().name}, {"q", o.q}, {"tori", arr}});
  else if (o.format == "csv") render::csv(out, rows);
  else render::pretty_table(out, rows);
  return ok ? kOk : kVerificationFailed;
}

// ---- dl ----

int dl_table(const Options& o, std::ostream& out) {
  const auto g = dl::build_group(o.group, o.q);
  if (o.format == "json") emit(out, render::char_table_json(g));
  else if (o.format == "csv") render::csv(out, render::char_table_rows(g));
  else render::pretty_table(out, render::char_table_rows(g));
  return kOk;
}

int dl_verify(const Options& o, std::ostream& out) {
  if (!o.all && o.checks.empty()) throw UsageError("dl verify needs --check NAME or --all");
  std::vector<std::string> names = o.checks;
  if (o.all) names.push_back("all");
  const auto known = dl::check_names();
  for (const auto& n : names)
    if (n != "all" && std::find(known.begin(), known.end(), n) == known.end()) {
      std::string list;
      for (const auto& k : known) list += " " + k;
      throw UsageError("unknown check '" + n + "'; available:" + list);
    }
  const auto g = dl::build_group(o.group, o.q);
  const auto rep = dl::run_checks(g, names);
  if (o.format == "json") {
    json j = render::report_json(rep);
    j["schema"] = kSchema;
    j["group"] = g.name;
    j["q"] = g.q;
    emit(out, j);
  } else {
    render::report_pretty(out, rep);
  }
  return rep.ok() ? kOk : kVerificationFailed;
}

// ---- weyl ----

int weyl_relative(const Options& o, std::ostream& out) {
  const auto t = weyl::CartanType::parse(o.type);
  const weyl::WeylGroup g(t);
  const auto J = weyl::parse_nodes(o.J, g.rank());
  if (g.sigma().apply(J) != J) throw UsageError("J = {" + o.J + "} is not sigma-stable");
  const auto rel = weyl::relative_weyl_type(g, J, g.sigma());
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : rel) arr.push_back(c.to_string());
    emit(out, {{"schema", kSchema},
               {"type", t.to_string()},
               {"J", weyl::format_nodes(J)},
               {"relative", weyl::to_string(rel)},
               {"components", arr}});
  } else {
    out << weyl::to_string(rel) << '\n';
  }
  return kOk;
}

int weyl_info(const Options& o, std::ostream& out) {
  const auto t = weyl::CartanType::parse(o.type);
  const weyl::WeylGroup g(t);
  const auto orbits = weyl::sigma_orbits(g.sigma(), g.all_nodes());
  json j = {{"schema", kSchema},
            {"type", t.to_string()},
            {"rank", g.rank()},
            {"order", g.order()},
            {"num_positive_roots", g.num_positive()},
            {"twist_order", g.sigma().order()},
            {"sigma_orbits", orbits.size()}};
  if (t.twist == 1) j["class_count"] = weyl::class_count(t);
  if (o.format == "json") {
    emit(out, j);
    return kOk;
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "schema") out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  return kOk;
}

int weyl_classes(const Options& o, std::ostream& out) {
  const auto t = weyl::CartanType::parse(o.type);
  const weyl::WeylGroup g(t);
  const auto store = weyl::parallel::enumerate(g);
  const auto labels = weyl::parallel::class_labels(g, store, g.sigma());
  const std::size_t brute = weyl::count_labels(labels);
  bool ok = true;
  json j = {{"schema", kSchema}, {"type", t.to_string()}, {"order", store.size()}, {"twisted_classes", brute}};
  if (t.twist == 1) {
    const auto formula = weyl::class_count(t);
    j["class_count_formula"] = formula;
    ok = formula == brute;
  }
  if (o.format == "json") emit(out, j);
  else
    out << t.to_string() << ": |W| = " << store.size() << ", " << brute << " sigma-classes"
        << (j.contains("class_count_formula") ? std::string(ok ? " (matches closed formula)" : " (MISMATCH with closed formula)")
                                              : std::string())
        << '\n';
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Deligne-Lusztig computations for finite groups of Lie type", "dlchar"};
  app.require_subcommand(1, 1);
  Options o;
  const std::set<std::string> formats{"json", "csv", "pretty"};
  auto fmt = [&](CLI::App* c) { c->add_option("--format", o.format, "json | csv | pretty")->check(CLI::IsMember(formats)); };
  auto type = [&](CLI::App* c) { c->add_option("--type", o.type, "Cartan type, e.g. E8, 2E6, 3D4")->required(); };
  auto group = [&](CLI::App* c) { c->add_option("--group", o.group, "built-in root datum")->required(); };
  auto q = [&](CLI::App* c) { c->add_option("--q", o.q, "odd prime power")->required(); };

  auto* uni = app.add_subcommand("unipotent", "unipotent character counts");
  uni->require_subcommand(1, 1);
  auto* census = uni->add_subcommand("census", "Harish-Chandra series breakdown");
  type(census);
  fmt(census);
  auto* xcirc = uni->add_subcommand("xcirc", "cuspidal unipotent data (omega, m)");
  type(xcirc);
  fmt(xcirc);

  auto* rd = app.add_subcommand("rootdata", "order polynomials, tori and Z-sets");
  rd->require_subcommand(1, 1);
  auto* orders = rd->add_subcommand("orders", "|G| and |T_w| as polynomials in q");
  group(orders);
  fmt(orders);
  auto* zset = rd->add_subcommand("zset", "w with q0 phi0(lambda) - w(lambda) in nX");
  group(zset);
  zset->add_option("--n", o.n, "modulus")->required();
  zset->add_option("--q", o.q, "prime power q0")->required();
  zset->add_option("--lambda", o.lambda, "comma-separated coordinates")->required();
  fmt(zset);
  auto* torus = rd->add_subcommand("torus", "structure of the finite tori T0[w]");
  group(torus);
  q(torus);
  fmt(torus);

  auto* dlc = app.add_subcommand("dl", "rank-one Deligne-Lusztig tables");
  dlc->require_subcommand(1, 1);
  auto* table = dlc->add_subcommand("table", "character table");
  group(table);
  q(table);
  fmt(table);
  auto* verify = dlc->add_subcommand("verify", "run identity checks");
  group(verify);
  q(verify);
  verify->add_option("--check", o.checks, "check name (repeatable, comma-separated)")->delimiter(',');
  verify->add_flag("--all", o.all, "run every check");
  verify->add_option("--format", o.format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));

  auto* wc = app.add_subcommand("weyl", "Weyl group data");
  wc->require_subcommand(1, 1);
  auto* relative = wc->add_subcommand("relative", "type of the relative Weyl group of J");
  type(relative);
  relative->add_option("--J", o.J, "Bourbaki nodes, e.g. \"1,3\"; empty for J = {}")->required();
  relative->add_option("--format", o.format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));
  auto* info = wc->add_subcommand("info", "order, rank, twist");
  type(info);
  info->add_option("--format", o.format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));
  auto* classes = wc->add_subcommand("classes", "sigma-class count by enumeration");
  type(classes);
  classes->add_option("--format", o.format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (census->parsed()) return unipotent_census(o, out);
    if (xcirc->parsed()) return unipotent_xcirc(o, out);
    if (orders->parsed()) return rootdata_orders(o, out);
    if (zset->parsed()) return rootdata_zset(o, out);
    if (torus->parsed()) return rootdata_torus(o, out);
    if (table->parsed()) return dl_table(o, out);
    if (verify->parsed()) return dl_verify(o, out);
    if (relative->parsed()) return weyl_relative(o, out);
    if (info->parsed()) return weyl_info(o, out);
    if (classes->parsed()) return weyl_classes(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const weyl::CapExceeded& e) {
    err << "error: " << e.what() << " (raise DLCHAR_W_ENUM_CAP to allow it)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace dlchar::cli
