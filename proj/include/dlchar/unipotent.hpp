#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dlchar/weyl.hpp"

namespace dlchar::unipotent {

using weyl::CartanType;
using weyl::NodeSet;

// (omega, m) with omega = zeta_order^exp, gcd(exp, order) = 1.
struct CuspidalDatum {
  int order = 1;
  int exp = 0;
  std::int64_t m = 1;

  static CuspidalDatum make(int order, int exp, std::int64_t m);
  std::string omega_label() const;  // "1", "-1", "i", "-i", "theta", "-theta^2", "zeta^3", ...
  std::string to_string() const;    // "(theta,3)"

  friend CuspidalDatum operator*(const CuspidalDatum& a, const CuspidalDatum& b);
  friend auto operator<=>(const CuspidalDatum&, const CuspidalDatum&) = default;
};
using CuspidalList = std::vector<CuspidalDatum>;

// Cuspidal set of an irreducible (W, sigma); the twist of t selects sigma.
CuspidalList xcirc(const CartanType& t);
CuspidalList xcirc_trivial();

// Product over sigma-orbits of components of the parabolic subdiagram J.
CuspidalList xcirc_levi(const weyl::WeylGroup& g, NodeSet J, const weyl::DiagramAut& s);

struct XEntry {
  NodeSet J = 0;
  std::uint64_t eps_index = 0;
  std::vector<CartanType> relative;
  CuspidalDatum x;
};

struct Series {
  NodeSet J = 0;
  std::vector<CartanType> relative;
  CuspidalList cuspidals;
  std::uint64_t irr_count = 0;  // |Irr| of the relative Weyl group
  std::uint64_t size() const { return cuspidals.size() * irr_count; }
};

// Harish-Chandra series with nonempty cuspidal part, ordered by J as a sorted node list.
namespace serial {
std::vector<Series> series_breakdown(const CartanType& t);
}
namespace parallel {
std::vector<Series> series_breakdown(const CartanType& t);
}
inline std::vector<Series> series_breakdown(const CartanType& t) { return parallel::series_breakdown(t); }

std::vector<XEntry> enumerate_X(const CartanType& t);
std::uint64_t count_unipotent(const CartanType& t);

}  // namespace dlchar::unipotent
