#include "dlchar/weyl/classes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dlchar::weyl {

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

namespace {

// Partitions of n with all parts even.
std::uint64_t even_partition_count(int n) { return n % 2 ? 0 : partition_count(n / 2); }

// t[k][l]: partitions of k with exactly l parts.
std::vector<std::vector<std::uint64_t>> partitions_by_parts(int n) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  t[0][0] = 1;
  // t[k][l] = t[k-1][l-1] (a part equal to 1) + t[k-l][l] (all parts >= 2, subtract 1 from each)
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= k; ++l) t[k][l] = t[k - 1][l - 1] + (k - l >= l ? t[k - l][l] : 0);
  return t;
}

}  // namespace

std::uint64_t class_count(const CartanType& t) {
  t.validate();
  if (t.twist != 1) throw std::invalid_argument("class_count expects an untwisted type, got " + t.to_string());
  const int n = t.rank;
  switch (t.series) {
    case 'A': return partition_count(n + 1);
    case 'B': case 'C': {
      std::uint64_t c = 0;
      for (int k = 0; k <= n; ++k) c += partition_count(k) * partition_count(n - k);
      return c;
    }
    case 'D': {
      const auto byparts = partitions_by_parts(n);
      std::uint64_t c = 0;
      for (int k = 0; k <= n; ++k) {
        std::uint64_t even_beta = 0;
        for (int l = 0; l <= k; l += 2) even_beta += byparts[k][l];
        c += partition_count(n - k) * even_beta;
      }
      return c + even_partition_count(n);
    }
    case 'E': return n == 6 ? 25 : n == 7 ? 60 : 112;
    case 'F': return 25;
    default: return 6;
  }
}

std::uint64_t class_count(const std::vector<CartanType>& product) {
  std::uint64_t c = 1;
  for (const auto& t : product) c *= class_count(t);
  return c;
}

namespace {

std::uint64_t conj_key(const WeylGroup& g, const WeylElement& x, int s, int sigma_s) {
  // key of s x sigma(s): images of the simple roots
  const auto& a = g.simple(s);
  const auto& b = g.simple(sigma_s);
  std::uint64_t k = 0;
  for (int j = 0; j < g.rank(); ++j) k |= static_cast<std::uint64_t>(a[x[b[j]]]) << (8 * j);
  return k;
}

void require_elements(const ElementStore& st) {
  if (!st.has_elements()) throw std::invalid_argument("class computations need stored elements");
}

}  // namespace

namespace serial {

std::vector<std::uint32_t> class_labels(const WeylGroup& g, const ElementStore& st, const DiagramAut& sig) {
  require_elements(st);
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(st.size(), unset);
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (label[i] != unset) continue;
    label[i] = static_cast<std::uint32_t>(i);
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (int s = 0; s < g.rank(); ++s) {
        const auto y = st.find(conj_key(g, st.elements[x], s, sig.perm[s]));
        if (label[y] == unset) {
          label[y] = static_cast<std::uint32_t>(i);
          stack.push_back(y);
        }
      }
    }
  }
  return label;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> class_labels(const WeylGroup& g, const ElementStore& st, const DiagramAut& sig) {
  require_elements(st);
  const auto n = static_cast<std::int64_t>(st.size());
  const int r = g.rank();
  std::vector<std::uint32_t> nb(st.size() * static_cast<std::size_t>(r));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    for (int s = 0; s < r; ++s)
      nb[static_cast<std::size_t>(i) * r + s] =
          static_cast<std::uint32_t>(st.find(conj_key(g, st.elements[static_cast<std::size_t>(i)], s, sig.perm[s])));

  // union-find keeping the smallest index as root
  std::vector<std::uint32_t> parent(st.size());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < st.size(); ++i)
    for (int s = 0; s < r; ++s) {
      auto a = find(static_cast<std::uint32_t>(i)), b = find(nb[i * r + s]);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent[b] = a;
    }
  std::vector<std::uint32_t> label(st.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint32_t x = static_cast<std::uint32_t>(i);
    while (parent[x] != x) x = parent[x];
    label[static_cast<std::size_t>(i)] = x;
  }
  return label;
}

}  // namespace parallel

std::size_t count_labels(const std::vector<std::uint32_t>& labels) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) c += labels[i] == i;
  return c;
}

std::vector<WeylElement> twisted_normalizer(const WeylGroup& g, const ElementStore& st, const WeylElement& w,
                                            const WeylElement& w2, const DiagramAut& sig) {
  require_elements(st);
  const auto p = g.root_permutation(sig);
  std::vector<WeylElement> out;
  for (const auto& x : st.elements) {
    const WeylElement sx_inv = apply_root_perm(p, x.inverse());
    if (x * w * sx_inv == w2) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> twisted_class(const WeylGroup& g, const ElementStore& st, const WeylElement& w,
                                       const DiagramAut& sig) {
  require_elements(st);
  const auto start = st.find(g.key(w));
  std::vector<char> seen(st.size(), 0);
  std::vector<std::size_t> out{start}, stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (int s = 0; s < g.rank(); ++s) {
      const auto y = st.find(conj_key(g, st.elements[x], s, sig.perm[s]));
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dlchar::weyl
