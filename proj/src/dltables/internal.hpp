#pragma once

#include "dlchar/dltables.hpp"

namespace dlchar::dl::detail {

void validate_q(std::int64_t q);

// slot 0 is w = 1, slot 1 is w = s
std::size_t sl2_torus_class(const GroupData& g, std::size_t slot, const IntVector& t);
std::size_t gl2_torus_class(const GroupData& g, std::size_t slot, const IntVector& t);

// Shared tail of both builders: datum, w indices.
void attach_datum(GroupData& g, const std::string& datum_name);

}  // namespace dlchar::dl::detail
