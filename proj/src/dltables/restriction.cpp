#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "internal.hpp"

// Restriction from GL2(F_q) to SL2(F_q). Linear characters of GL2 trivial on
// SL2 are the U_k = alpha_k o det.

namespace dlchar::dl {

namespace {

std::vector<std::size_t> class_map(const GroupData& sl, const GroupData& gl) {
  const std::int64_t q = sl.q, h = (q - 1) / 2, Q = q * q - 1;
  std::vector<std::size_t> m(sl.classes.size());
  const auto& c = sl.classes;
  const auto& G = gl.classes;
  const std::string ah = "a_" + std::to_string(h), bh = "b_" + std::to_string(h);
  m[c.index("I")] = G.index("a_0");
  m[c.index("-I")] = G.index(ah);
  m[c.index("J")] = m[c.index("J'")] = G.index("b_0");
  m[c.index("-J")] = m[c.index("-J'")] = G.index(bh);
  for (std::size_t i = 6; i < c.size(); ++i) {
    const std::string& l = c.labels[i];
    const std::int64_t e = std::stoll(l.substr(2));
    if (l[0] == 'a') {
      m[i] = G.index("c_" + std::to_string(e) + "," + std::to_string(q - 1 - e));
    } else {
      const std::int64_t z = e * (q - 1);
      m[i] = G.index("d_" + std::to_string(std::min(z, mod(q * z, Q))));
    }
  }
  return m;
}

// theta of the SL2 torus obtained by restricting a GL2 torus character.
std::int64_t restrict_theta(const GroupData& gl, const DLCharacter& r, std::size_t slot) {
  const std::int64_t q = gl.q;
  return slot == 0 ? mod(r.theta[0] - r.theta[1], q - 1) : mod(r.theta[0], q + 1);
}

std::size_t find_row(const CharTable& t, const ClassFunction& f) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.rows[i] == f) return i;
  return t.size();
}

bool is_semisimple(const GroupData& g, std::size_t row) { return !regular_average(g, row).is_zero(); }

}  // namespace

Report restriction_suite(std::int64_t q) {
  const GroupData sl = build_sl2(q), gl = build_gl2(q);
  const auto cmap = class_map(sl, gl);
  Report rep;

  {
    std::int64_t total = 0;
    std::vector<std::int64_t> hits(gl.classes.size(), 0);
    for (std::size_t i = 0; i < cmap.size(); ++i) hits[cmap[i]] += sl.classes.sizes[i];
    bool ok = true;
    for (std::size_t i = 0; i < cmap.size(); ++i) {
      total += sl.classes.sizes[i];
      // each GL2-class meeting SL2 splits into at most two SL2-classes
      ok = ok && sl.classes.sizes[i] <= gl.classes.sizes[cmap[i]];
    }
    for (std::size_t j = 0; j < hits.size(); ++j)
      if (hits[j]) ok = ok && hits[j] == gl.classes.sizes[j];
    rep.add("restriction-class-map", ok && total == sl.classes.group_order,
            "SL2-classes tile the GL2-classes they meet");
  }

  const std::size_t nG = gl.table.size(), nS = sl.table.size();
  std::vector<std::size_t> linear;  // rows U_k
  for (std::size_t i = 0; i < nG; ++i)
    if (gl.table.labels[i].rfind("U_", 0) == 0) linear.push_back(i);

  // twist[i][k]: row of U_k (x) rho_i
  std::vector<std::vector<std::size_t>> twist(nG);
  bool closed = true;
  for (std::size_t i = 0; i < nG; ++i)
    for (auto u : linear) {
      ClassFunction f(gl.classes.size());
      for (std::size_t c = 0; c < f.size(); ++c) f[c] = gl.table.rows[u][c] * gl.table.rows[i][c];
      const std::size_t j = find_row(gl.table, f);
      closed = closed && j < nG;
      twist[i].push_back(j);
    }
  rep.add("restriction-twists-permute-rows", closed);

  // restriction multiplicities
  std::vector<std::vector<std::int64_t>> res(nG, std::vector<std::int64_t>(nS));
  bool integral = true;
  for (std::size_t i = 0; i < nG; ++i) {
    ClassFunction f(sl.classes.size());
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = gl.table.rows[i][cmap[c]];
    for (std::size_t j = 0; j < nS; ++j) {
      const CycNum ip = inner_product(sl.classes, f, sl.table.rows[j]);
      if (!ip.is_rational() || ip.to_rational().get_den() != 1) integral = false;
      else res[i][j] = ip.to_rational().get_num().get_si();
    }
  }
  rep.add("restriction-integral", integral);

  const auto gdeg = degree_polynomials(gl), sdeg = degree_polynomials(sl);
  bool stab = true, mfree = true, degs = true, lemma = true, covered = true, semis = true;
  std::string bad;
  std::vector<char> seen(nS, 0);
  for (std::size_t i = 0; i < nG; ++i) {
    std::set<std::size_t> orbit(twist[i].begin(), twist[i].end());
    const auto r = static_cast<std::int64_t>(std::count(twist[i].begin(), twist[i].end(), i));
    stab = stab && (r == 1 || r == 2) && orbit.size() * static_cast<std::size_t>(r) == linear.size();
    std::int64_t parts = 0;
    for (std::size_t j = 0; j < nS; ++j) {
      if (res[i][j] == 0) continue;
      seen[j] = 1;
      ++parts;
      mfree = mfree && res[i][j] == 1;
      if (gdeg[i].info.D != sdeg[j].info.D * QPoly(r)) {
        degs = false;
        bad += gl.table.labels[i] + " -> " + sl.table.labels[j] + "; ";
      }
      if (is_semisimple(gl, i) && !is_semisimple(sl, j)) semis = false;
    }
    mfree = mfree && parts == r;
    // restrictions agree exactly on twists and are disjoint otherwise
    for (std::size_t k = 0; k < nG; ++k) {
      bool share = false;
      for (std::size_t j = 0; j < nS; ++j) share = share || (res[i][j] && res[k][j]);
      const bool twisted = orbit.count(k) > 0;
      lemma = lemma && share == twisted && (!twisted || res[i] == res[k]);
    }
  }
  for (auto s : seen) covered = covered && s;
  rep.add("restriction-stabiliser-order", stab, "|Theta(rho)| is 1 or 2 and the twist orbit has (q-1)/|Theta| members");
  rep.add("restriction-multiplicity-free", mfree);
  rep.add("restriction-twist-classes", lemma, "res agrees exactly on twists, disjoint otherwise");
  rep.add("restriction-covers-irr", covered);
  rep.add("restriction-degree-split", degs, bad);
  rep.add("restriction-semisimple-constituents", semis);

  // Multiplicities of SL2 constituents through GL2 lifts of theta.
  bool formula = true;
  bad.clear();
  for (const auto& rs : sl.family) {
    const std::size_t slot = sl.w_slot(rs.w);
    std::vector<const DLCharacter*> lifts;
    for (const auto& rg : gl.family)
      if (gl.w_slot(rg.w) == slot && restrict_theta(gl, rg, slot) == rs.theta[0]) lifts.push_back(&rg);
    for (std::size_t i0 = 0; i0 < nG; ++i0) {
      const std::set<std::size_t> orbit(twist[i0].begin(), twist[i0].end());
      const bool hit = std::any_of(lifts.begin(), lifts.end(), [&](const DLCharacter* l) { return l->mult[i0] != 0; });
      std::int64_t predicted = 0;
      if (hit)
        for (auto k : orbit) predicted += lifts.front()->mult[k];
      for (std::size_t j = 0; j < nS; ++j)
        if (res[i0][j] && rs.mult[j] != predicted) {
          formula = false;
          bad = "theta " + std::to_string(rs.theta[0]) + " at " + sl.table.labels[j] + " from " + gl.table.labels[i0];
        }
    }
  }
  rep.add("restriction-multiplicity-formula", formula, bad);

  // Three partitions of Irr(SL2) should coincide.
  auto normal = [](std::vector<std::vector<std::size_t>> p) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end());
    return p;
  };
  const auto graph = normal(dl_graph_components(sl));
  std::vector<std::vector<std::size_t>> series;
  for (const auto& comp : dl_graph_components(gl)) {
    std::set<std::size_t> block;
    for (auto i : comp)
      for (std::size_t j = 0; j < nS; ++j)
        if (res[i][j]) block.insert(j);
    series.emplace_back(block.begin(), block.end());
  }
  series = normal(series);
  series.erase(std::unique(series.begin(), series.end()), series.end());
  std::vector<std::vector<std::size_t>> named;
  auto idx = [&](const std::string& l) { return sl.table.index(l); };
  named.push_back({idx("1"), idx("St")});
  for (std::size_t j = 0; j < nS; ++j) {
    const auto& l = sl.table.labels[j];
    if (l.rfind("rho_", 0) == 0 || l.rfind("pi_", 0) == 0) named.push_back({j});
  }
  named.push_back({idx("rho0'"), idx("rho0''")});
  named.push_back({idx("pi0'"), idx("pi0''")});
  named = normal(named);
  rep.add("restriction-series-partition", graph == named && series == named,
          std::to_string(graph.size()) + " graph components, " + std::to_string(series.size()) +
              " restriction blocks, expected " + std::to_string(q + 1));
  return rep;
}

}  // namespace dlchar::dl
