#include "dlchar/weyl/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include <omp.h>

namespace dlchar::weyl {

std::size_t ElementStore::find(std::uint64_t key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  return (it != keys.end() && *it == key) ? static_cast<std::size_t>(it - keys.begin()) : npos;
}

std::vector<std::uint64_t> ElementStore::length_distribution() const {
  std::vector<std::uint64_t> d;
  for (auto l : lengths) {
    if (l >= d.size()) d.resize(l + 1U, 0);
    ++d[l];
  }
  return d;
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("DLCHAR_W_ENUM_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("DLCHAR_W_ENUM_CAP is not an integer: ") + env);
    }
  }
  return 3'000'000;
}

namespace {

void check_cap(const WeylGroup& g, const EnumerateOptions& opt) {
  const std::uint64_t cap = opt.cap ? opt.cap : enumeration_cap();
  if (g.order() > cap)
    throw CapExceeded("|W(" + g.type().to_string() + ")| = " + std::to_string(g.order()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
}

// Sorts the parallel arrays by key and checks the key is injective.
ElementStore finish(std::vector<std::uint64_t> keys, std::vector<std::uint8_t> lengths,
                    std::vector<WeylElement> elems, const WeylGroup& g) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  ElementStore st;
  st.keys.reserve(keys.size());
  st.lengths.reserve(keys.size());
  for (auto i : order) {
    st.keys.push_back(keys[i]);
    st.lengths.push_back(lengths[i]);
  }
  if (!elems.empty()) {
    st.elements.reserve(elems.size());
    for (auto i : order) st.elements.push_back(std::move(elems[i]));
  }
  if (std::adjacent_find(st.keys.begin(), st.keys.end()) != st.keys.end())
    throw std::logic_error("element key collision");
  if (st.size() != g.order())
    throw std::logic_error("enumeration of " + g.type().to_string() + " found " + std::to_string(st.size()) +
                           " elements, expected " + std::to_string(g.order()));
  return st;
}

}  // namespace

namespace serial {

ElementStore enumerate(const WeylGroup& g, const EnumerateOptions& opt) {
  check_cap(g, opt);
  std::set<std::uint64_t> seen{g.key(g.identity())};
  std::vector<std::uint64_t> keys{g.key(g.identity())};
  std::vector<std::uint8_t> lengths{0};
  std::vector<WeylElement> elems;
  if (opt.keep_elements) elems.push_back(g.identity());
  std::vector<WeylElement> frontier{g.identity()};
  for (std::uint8_t len = 1; !frontier.empty(); ++len) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int s = 0; s < g.rank(); ++s) {
        if (g.is_right_descent(w, s)) continue;
        WeylElement c = w * g.simple(s);
        const auto k = g.key(c);
        if (!seen.insert(k).second) continue;
        keys.push_back(k);
        lengths.push_back(len);
        if (opt.keep_elements) elems.push_back(c);
        next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return finish(std::move(keys), std::move(lengths), std::move(elems), g);
}

}  // namespace serial

namespace parallel {

ElementStore enumerate(const WeylGroup& g, const EnumerateOptions& opt) {
  check_cap(g, opt);
  std::vector<std::uint64_t> keys{g.key(g.identity())};
  std::vector<std::uint8_t> lengths{0};
  std::vector<WeylElement> elems;
  if (opt.keep_elements) elems.push_back(g.identity());
  std::vector<WeylElement> frontier{g.identity()};
  const int rank = g.rank();
  for (std::uint8_t len = 1; !frontier.empty(); ++len) {
    const int nthreads = omp_get_max_threads();
    std::vector<std::vector<WeylElement>> local(static_cast<std::size_t>(nthreads));
    const auto n = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel num_threads(nthreads)
    {
      auto& out = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) {
        const WeylElement& w = frontier[static_cast<std::size_t>(i)];
        for (int s = 0; s < rank; ++s) {
          if (g.is_right_descent(w, s)) continue;
          WeylElement c = w * g.simple(s);
          bool first_descent = true;
          for (int t = 0; t < s && first_descent; ++t) first_descent = !g.is_right_descent(c, t);
          if (first_descent) out.push_back(std::move(c));
        }
      }
    }
    std::vector<WeylElement> next;
    for (auto& v : local)
      for (auto& c : v) next.push_back(std::move(c));
    for (const auto& c : next) {
      keys.push_back(g.key(c));
      lengths.push_back(len);
    }
    if (opt.keep_elements) elems.insert(elems.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return finish(std::move(keys), std::move(lengths), std::move(elems), g);
}

}  // namespace parallel

std::vector<std::size_t> sigma_fixed(const WeylGroup& g, const ElementStore& store, const DiagramAut& s) {
  if (!store.has_elements()) throw std::invalid_argument("sigma_fixed needs stored elements");
  const auto p = g.root_permutation(s);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < store.size(); ++i)
    if (apply_root_perm(p, store.elements[i]) == store.elements[i]) out.push_back(i);
  return out;
}

}  // namespace dlchar::weyl
