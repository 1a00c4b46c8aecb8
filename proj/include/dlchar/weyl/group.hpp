#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dlchar/weyl/cartan.hpp"

namespace dlchar::weyl {

// Weyl group element as a permutation of the root list; (a*b)(r) = a(b(r)).
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<std::uint8_t> images) : img_(std::move(images)) {}

  std::uint8_t operator[](std::size_t r) const { return img_[r]; }
  std::size_t size() const { return img_.size(); }
  const std::vector<std::uint8_t>& images() const { return img_; }
  WeylElement inverse() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

using NodeSet = std::uint32_t;  // bit i <-> node i+1 in Bourbaki numbering

// Permutation of the simple nodes (0-based) preserving the Cartan matrix.
struct DiagramAut {
  std::vector<int> perm;
  int order() const;
  bool is_identity() const { return order() == 1; }
  NodeSet apply(NodeSet j) const;
};

class WeylGroup {
 public:
  // The twist of t selects the default automorphism sigma.
  explicit WeylGroup(const CartanType& t);

  const CartanType& type() const { return type_; }
  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank; }
  int num_positive() const { return rs_.num_positive; }
  int num_roots() const { return 2 * rs_.num_positive; }
  std::uint64_t order() const { return weyl_group_order(type_); }
  NodeSet all_nodes() const { return (NodeSet{1} << rank()) - 1; }

  const WeylElement& identity() const { return id_; }
  const WeylElement& simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  int simple_root(int i) const { return i; }  // simple roots come first in the root list

  int length(const WeylElement& w) const;
  // Right descent test: l(w s_i) < l(w).
  bool is_right_descent(const WeylElement& w, int i) const { return w[static_cast<std::size_t>(i)] >= num_positive(); }
  WeylElement longest_element(NodeSet J) const;
  std::vector<int> reduced_word(const WeylElement& w) const;  // 0-based generators, w = s_{i1} ... s_{ik}
  WeylElement from_word(const std::vector<int>& word) const;

  // Injective 64-bit key: images of the simple roots, 8 bits each.
  std::uint64_t key(const WeylElement& w) const;
  WeylElement from_key(std::uint64_t key) const;

  const DiagramAut& sigma() const { return sigma_; }
  DiagramAut make_aut(const std::vector<int>& perm) const;  // throws if Cartan matrix not preserved
  static DiagramAut trivial_aut(int rank);
  // sigma(w) = sigma o w o sigma^{-1} on roots.
  WeylElement apply(const DiagramAut& s, const WeylElement& w) const;
  std::vector<std::uint8_t> root_permutation(const DiagramAut& s) const;

  // Order of x (x^k = 1); throws if above the cap.
  int element_order(const WeylElement& x, int cap = 64) const;

 private:
  CartanType type_;
  RootSystem rs_;
  WeylElement id_;
  std::vector<WeylElement> simple_;
  DiagramAut sigma_;
  std::map<std::vector<int>, int> index_;

  int index_of(const std::vector<int>& v) const;
};

DiagramAut standard_twist(const CartanType& t);
// p o w o p^{-1} for a precomputed root permutation p.
WeylElement apply_root_perm(const std::vector<std::uint8_t>& p, const WeylElement& w);

}  // namespace dlchar::weyl
