#include "dlchar/weyl/relative.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dlchar::weyl {

NodeSet parse_nodes(const std::string& s, int rank) {
  NodeSet out = 0;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad node index '" + tok + "'");
    }
    if (v < 1 || v > rank) throw std::invalid_argument("node " + tok + " outside 1.." + std::to_string(rank));
    out |= NodeSet{1} << (v - 1);
  }
  return out;
}

std::string format_nodes(NodeSet J) {
  std::string s;
  for (int i = 0; i < 32; ++i)
    if (J >> i & 1U) {
      if (!s.empty()) s += ',';
      s += std::to_string(i + 1);
    }
  return s;
}

std::vector<int> node_list(NodeSet J) {
  std::vector<int> v;
  for (int i = 0; i < 32; ++i)
    if (J >> i & 1U) v.push_back(i);
  return v;
}

std::vector<NodeSet> sigma_orbits(const DiagramAut& s, NodeSet within) {
  std::vector<NodeSet> out;
  NodeSet done = 0;
  for (int i : node_list(within)) {
    if (done >> i & 1U) continue;
    NodeSet orb = 0;
    for (int j = i; !(orb >> j & 1U); j = s.perm[j]) orb |= NodeSet{1} << j;
    done |= orb;
    out.push_back(orb);
  }
  return out;
}

namespace {

CartanType recognize_one(const std::vector<std::vector<int>>& m, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return {'A', 1, 1};
  std::vector<std::vector<int>> adj(k);
  int edges = 0, fours = 0, sixes = 0;
  int four_a = -1, four_b = -1;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const int v = m[nodes[a]][nodes[b]];
      if (v == 2) continue;
      if (v != 3 && v != 4 && v != 6) throw std::domain_error("Coxeter label " + std::to_string(v) + " is not crystallographic");
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++edges;
      if (v == 4) { ++fours; four_a = a; four_b = b; }
      if (v == 6) ++sixes;
    }
  if (edges != k - 1) throw std::domain_error("Coxeter graph has a cycle");
  if (sixes) {
    if (k != 2) throw std::domain_error("label 6 outside rank 2");
    return {'G', 2, 1};
  }
  std::vector<int> branch;
  for (int a = 0; a < k; ++a) {
    if (adj[a].size() > 3) throw std::domain_error("Coxeter graph node of degree > 3");
    if (adj[a].size() == 3) branch.push_back(a);
  }
  if (fours > 1) throw std::domain_error("more than one label 4");
  if (fours == 1) {
    if (!branch.empty()) throw std::domain_error("branched graph with label 4");
    if (k == 2) return {'B', 2, 1};
    const bool end_edge = adj[four_a].size() == 1 || adj[four_b].size() == 1;
    if (end_edge) return {'B', k, 1};
    if (k == 4) return {'F', 4, 1};
    throw std::domain_error("label 4 in the middle of a long path");
  }
  if (branch.empty()) return {'A', k, 1};
  if (branch.size() > 1) throw std::domain_error("Coxeter graph with two branch points");
  std::vector<int> arms;
  for (int start : adj[branch[0]]) {
    int len = 1, prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', k, 1};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', k, 1};
  throw std::domain_error("branched Coxeter graph of infinite type");
}

std::vector<std::vector<int>> connected_pieces(const std::vector<std::vector<int>>& m, const std::vector<int>& within) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(m.size(), 0);
  for (int start : within) {
    if (seen[start]) continue;
    std::vector<int> comp{start}, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : within)
        if (!seen[b] && m[a][b] != 2) {
          seen[b] = 1;
          comp.push_back(b);
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

std::vector<std::vector<int>> coxeter_from_cartan(const std::vector<std::vector<int>>& c) {
  const std::size_t n = c.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      static constexpr int table[] = {2, 3, 4, 6};
      m[i][j] = table[c[i][j] * c[j][i]];
    }
  return m;
}

}  // namespace

std::vector<CartanType> recognize_coxeter(const std::vector<std::vector<int>>& m) {
  std::vector<int> all(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<CartanType> out;
  for (const auto& comp : connected_pieces(m, all)) out.push_back(recognize_one(m, comp));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Component> components(const WeylGroup& g, NodeSet J) {
  const auto m = coxeter_from_cartan(g.root_system().cartan);
  std::vector<Component> out;
  for (const auto& comp : connected_pieces(m, node_list(J))) {
    NodeSet mask = 0;
    for (int i : comp) mask |= NodeSet{1} << i;
    out.push_back({mask, recognize_one(m, comp)});
  }
  return out;
}

std::vector<CartanType> relative_weyl_type(const WeylGroup& g, NodeSet J, const DiagramAut& s) {
  if (J & ~g.all_nodes()) throw std::invalid_argument("J contains nodes outside the diagram");
  if (s.apply(J) != J) throw std::invalid_argument("J = {" + format_nodes(J) + "} is not sigma-stable");
  const WeylElement w0J = g.longest_element(J);
  std::vector<WeylElement> gens;
  for (NodeSet orb : sigma_orbits(s, g.all_nodes() & ~J)) {
    WeylElement c = g.longest_element(J | orb) * w0J;
    for (int j : node_list(J)) {
      const int img = c[g.simple_root(j)];
      if (img >= g.rank() || !(J >> img & 1U))
        throw std::domain_error("canonical generator for orbit {" + format_nodes(orb) + "} does not normalise J = {" +
                                format_nodes(J) + "}");
    }
    gens.push_back(std::move(c));
  }
  const std::size_t k = gens.size();
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 1));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) m[a][b] = m[b][a] = g.element_order(gens[a] * gens[b]);
  return recognize_coxeter(m);
}

}  // namespace dlchar::weyl
