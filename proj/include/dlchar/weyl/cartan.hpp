#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dlchar::weyl {

// Irreducible Cartan type with twist order (1 = split). Nodes use Bourbaki numbering.
struct CartanType {
  char series = 'A';
  int rank = 1;
  int twist = 1;

  static CartanType parse(const std::string& s);  // "A3", "2A5", "3D4", "2e6"; throws std::invalid_argument
  std::string to_string() const;
  CartanType untwisted() const { return {series, rank, 1}; }
  void validate() const;  // throws std::invalid_argument

  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

std::string to_string(const std::vector<CartanType>& types);  // "A1xB2", "trivial" when empty

// Symmetric Gram matrix of the simple roots (scaled to integers).
std::vector<std::vector<int>> gram_matrix(const CartanType& t);
// C[i][j] = <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> cartan_matrix(const CartanType& t);

// |W| for an untwisted type.
std::uint64_t weyl_group_order(const CartanType& t);
// Number of positive roots.
int num_positive_roots(const CartanType& t);

struct RootSystem {
  CartanType type;
  int rank = 0;
  int num_positive = 0;
  std::vector<std::vector<int>> cartan;
  // roots[i] for i < N are positive (sorted by height); roots[N + i] = -roots[i].
  std::vector<std::vector<int>> roots;

  int index_of(const std::vector<int>& v) const;  // -1 if not a root
  int negate(int i) const { return i < num_positive ? i + num_positive : i - num_positive; }
  bool positive(int i) const { return i < num_positive; }
  int height(int i) const;
};

RootSystem build_root_system(const CartanType& t);

}  // namespace dlchar::weyl
