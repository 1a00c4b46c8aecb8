#pragma once

#include <string>
#include <vector>

#include "dlchar/weyl/group.hpp"

namespace dlchar::weyl {

// "1,3,4" (Bourbaki, 1-based) -> bitmask; empty string -> empty set.
NodeSet parse_nodes(const std::string& s, int rank);
std::string format_nodes(NodeSet J);
std::vector<int> node_list(NodeSet J);  // 0-based

std::vector<NodeSet> sigma_orbits(const DiagramAut& s, NodeSet within);

// Connected component of a parabolic subdiagram; B and C are reported as B.
struct Component {
  NodeSet nodes = 0;
  CartanType type;
};
std::vector<Component> components(const WeylGroup& g, NodeSet J);

// Types of the connected components of a finite Coxeter matrix (entries m_ij,
// diagonal 1). Throws std::domain_error for non-crystallographic graphs.
std::vector<CartanType> recognize_coxeter(const std::vector<std::vector<int>>& m);

// Type of the relative Weyl group {w : sigma(w) = w, w J w^{-1} = J} via the
// generators w0(J u O) w0(J), one per sigma-orbit O on S \ J. Never enumerates W.
std::vector<CartanType> relative_weyl_type(const WeylGroup& g, NodeSet J, const DiagramAut& s);

}  // namespace dlchar::weyl
