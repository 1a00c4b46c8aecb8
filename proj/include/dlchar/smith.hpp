#pragma once

#include <cstdint>
#include <vector>

namespace dlchar {

// Row-major integer matrix; acts on column vectors.
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using IntVector = std::vector<std::int64_t>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVector mat_apply(const IntMatrix& a, const IntVector& v);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_scale(const IntMatrix& a, std::int64_t s);
std::int64_t mat_det(const IntMatrix& a);            // Bareiss, exact
IntMatrix unimodular_inverse(const IntMatrix& a);    // throws unless det = +-1

// U * M * V = D with U, V unimodular and D = diag(d1 | d2 | ...), d_i >= 0.
// Arithmetic is checked; overflow throws std::overflow_error.
struct SmithForm {
  IntMatrix U, D, V;
  IntVector diagonal() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace dlchar
