#include "dlchar/weyl/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dlchar::weyl {

CartanType CartanType::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  CartanType t;
  std::size_t pos = 0;
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0]))) {
    t.twist = s[0] - '0';
    pos = 1;
  }
  if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
    throw std::invalid_argument("bad Cartan type: '" + raw + "'");
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
  const std::string digits = s.substr(pos + 1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad Cartan type: '" + raw + "'");
  t.rank = std::stoi(digits);
  t.validate();
  return t;
}

void CartanType::validate() const {
  auto fail = [this](const std::string& why) {
    throw std::invalid_argument("inadmissible Cartan type " + std::to_string(twist) + series +
                                std::to_string(rank) + ": " + why);
  };
  switch (series) {
    case 'A': if (rank < 1) fail("rank must be >= 1"); break;
    case 'B': case 'C': if (rank < 2) fail("rank must be >= 2"); break;
    case 'D': if (rank < 4) fail("rank must be >= 4"); break;
    case 'E': if (rank < 6 || rank > 8) fail("E needs rank 6, 7 or 8"); break;
    case 'F': if (rank != 4) fail("F needs rank 4"); break;
    case 'G': if (rank != 2) fail("G needs rank 2"); break;
    default: fail("unknown series");
  }
  if (rank > 30) fail("rank too large");
  if (twist == 1) return;
  const bool ok = (twist == 2 && series == 'A' && rank >= 2) || (twist == 2 && series == 'D') ||
                  (twist == 3 && series == 'D' && rank == 4) || (twist == 2 && series == 'E' && rank == 6);
  if (!ok) fail("no such twisted form");
}

std::string CartanType::to_string() const {
  std::string s;
  if (twist != 1) s += std::to_string(twist);
  s += series;
  s += std::to_string(rank);
  return s;
}

std::string to_string(const std::vector<CartanType>& types) {
  if (types.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += "x";
    s += types[i].to_string();
  }
  return s;
}

std::vector<std::vector<int>> gram_matrix(const CartanType& t) {
  t.validate();
  const int n = t.rank;
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto edge = [&](int i, int j, int v) { b[i - 1][j - 1] = b[j - 1][i - 1] = v; };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) edge(i, i + 1, -1);
  };
  for (int i = 0; i < n; ++i) b[i][i] = 2;
  switch (t.series) {
    case 'A': chain(1, n); break;
    case 'B':
      for (int i = 0; i < n - 1; ++i) b[i][i] = 4;
      for (int i = 1; i < n; ++i) edge(i, i + 1, -2);
      break;
    case 'C':
      chain(1, n - 1);
      b[n - 1][n - 1] = 4;
      edge(n - 1, n, -2);
      break;
    case 'D':
      chain(1, n - 1);
      edge(n - 2, n, -1);
      break;
    case 'E':
      edge(1, 3, -1);
      edge(2, 4, -1);
      chain(3, n);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      edge(1, 2, -2);
      edge(2, 3, -2);
      edge(3, 4, -1);
      break;
    case 'G':
      b[1][1] = 6;
      edge(1, 2, -3);
      break;
  }
  return b;
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const auto b = gram_matrix(t);
  const std::size_t n = b.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = 2 * b[i][j] / b[j][j];
  return c;
}

std::uint64_t weyl_group_order(const CartanType& t) {
  t.validate();
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = t.rank;
  switch (t.series) {
    case 'A': return fact(n + 1);
    case 'B': case 'C': return (std::uint64_t{1} << n) * fact(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    default: return 12;
  }
}

int num_positive_roots(const CartanType& t) {
  t.validate();
  const int n = t.rank;
  switch (t.series) {
    case 'A': return n * (n + 1) / 2;
    case 'B': case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

int RootSystem::index_of(const std::vector<int>& v) const {
  // roots are few (<= 240); positive half is sorted by height so a scan is fine
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

int RootSystem::height(int i) const {
  return std::accumulate(roots[static_cast<std::size_t>(i)].begin(), roots[static_cast<std::size_t>(i)].end(), 0);
}

RootSystem build_root_system(const CartanType& t) {
  RootSystem rs;
  rs.type = t.untwisted();
  rs.rank = t.rank;
  rs.cartan = cartan_matrix(t);
  const int n = t.rank;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier)
      for (int j = 0; j < n; ++j) {
        int pairing = 0;
        for (int i = 0; i < n; ++i) pairing += beta[i] * rs.cartan[i][j];
        if (pairing == 0) continue;
        std::vector<int> img = beta;
        img[j] -= pairing;
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> pos;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (static_cast<int>(pos.size()) != num_positive_roots(t) || seen.size() != 2 * pos.size())
    throw std::logic_error("root closure produced the wrong number of roots for " + t.to_string());
  rs.num_positive = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const auto& r : pos) {
    std::vector<int> neg(r);
    for (int& c : neg) c = -c;
    rs.roots.push_back(std::move(neg));
  }
  return rs;
}

}  // namespace dlchar::weyl
