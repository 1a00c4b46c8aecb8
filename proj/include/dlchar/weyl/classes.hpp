#pragma once

#include <cstdint>
#include <vector>

#include "dlchar/weyl/enumerate.hpp"

namespace dlchar::weyl {

std::uint64_t partition_count(int n);

// Number of conjugacy classes of an untwisted Weyl group, from closed formulas.
std::uint64_t class_count(const CartanType& t);
std::uint64_t class_count(const std::vector<CartanType>& product);  // 1 for the trivial group

// Brute-force sigma-twisted classes x ~ s x sigma(s). Each element is labelled
// by the smallest store index in its class, so both kernels agree exactly.
namespace serial {
std::vector<std::uint32_t> class_labels(const WeylGroup& g, const ElementStore& store, const DiagramAut& s);
}
namespace parallel {
std::vector<std::uint32_t> class_labels(const WeylGroup& g, const ElementStore& store, const DiagramAut& s);
}
std::size_t count_labels(const std::vector<std::uint32_t>& labels);

// N_{W,sigma}(w, w') = { x : x w sigma(x)^{-1} = w' }.
std::vector<WeylElement> twisted_normalizer(const WeylGroup& g, const ElementStore& store, const WeylElement& w,
                                            const WeylElement& w2, const DiagramAut& s);
// Store indices of the sigma-twisted class of w.
std::vector<std::size_t> twisted_class(const WeylGroup& g, const ElementStore& store, const WeylElement& w,
                                       const DiagramAut& s);

}  // namespace dlchar::weyl
