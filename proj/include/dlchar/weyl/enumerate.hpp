#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dlchar/weyl/group.hpp"

namespace dlchar::weyl {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All elements of W, sorted by key. `elements` is filled only on request
// since full permutations of E7 would cost ~400 MB.
struct ElementStore {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<std::uint64_t> keys;
  std::vector<std::uint8_t> lengths;
  std::vector<WeylElement> elements;

  std::size_t size() const { return keys.size(); }
  bool has_elements() const { return elements.size() == keys.size(); }
  std::size_t find(std::uint64_t key) const;
  // Coefficient i = number of elements of length i.
  std::vector<std::uint64_t> length_distribution() const;
};

// DLCHAR_W_ENUM_CAP overrides the default of 3,000,000.
std::uint64_t enumeration_cap();

struct EnumerateOptions {
  bool keep_elements = true;
  std::uint64_t cap = 0;  // 0 means enumeration_cap()
};

namespace serial {
// Reference: breadth-first closure with a std::set of visited keys.
ElementStore enumerate(const WeylGroup& g, const EnumerateOptions& opt = {});
}  // namespace serial

namespace parallel {
// Layer-by-layer by length; a child w*s is kept only when s is its smallest
// right descent, so every element has one parent and no dedupe is needed.
ElementStore enumerate(const WeylGroup& g, const EnumerateOptions& opt = {});
}  // namespace parallel

inline ElementStore enumerate_elements(const WeylGroup& g, const EnumerateOptions& opt = {}) {
  return parallel::enumerate(g, opt);
}

// Elements fixed by sigma.
std::vector<std::size_t> sigma_fixed(const WeylGroup& g, const ElementStore& store, const DiagramAut& s);

}  // namespace dlchar::weyl
