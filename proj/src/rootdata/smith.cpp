#include "dlchar/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace dlchar {

namespace {

std::int64_t cmul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

std::int64_t csub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

std::int64_t cadd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

// row_i -= f * row_j in both A and its companion
void row_axpy(IntMatrix& a, std::size_t i, std::size_t j, std::int64_t f) {
  for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] = csub(a[i][c], cmul(f, a[j][c]));
}

void col_axpy(IntMatrix& a, std::size_t i, std::size_t j, std::int64_t f) {
  for (auto& row : a) row[i] = csub(row[i], cmul(f, row[j]));
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix r(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] = cadd(r[i][j], cmul(a[i][k], b[k][j]));
    }
  return r;
}

IntVector mat_apply(const IntMatrix& a, const IntVector& v) {
  IntVector r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] = cadd(r[i], cmul(a[i][j], v[j]));
  }
  return r;
}

IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = csub(a[i][j], b[i][j]);
  return r;
}

IntMatrix mat_scale(const IntMatrix& a, std::int64_t s) {
  IntMatrix r = a;
  for (auto& row : r)
    for (auto& x : row) x = cmul(x, s);
  return r;
}

std::int64_t mat_det(const IntMatrix& in) {
  const std::size_t n = in.size();
  if (n == 0) return 1;
  IntMatrix a = in;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = csub(cmul(a[i][j], a[k][k]), cmul(a[i][k], a[k][j])) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntVector SmithForm::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  SmithForm s{identity_matrix(rows), m, identity_matrix(cols)};
  IntMatrix& a = s.D;
  // U tracks row operations, V column operations
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.U[i], s.U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : s.V) std::swap(r[i], r[j]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return s;  // remaining block is zero
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t f = a[i][t] / a[t][t];
        if (f) {
          row_axpy(a, i, t, f);
          row_axpy(s.U, i, t, f);
        }
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t f = a[t][j] / a[t][t];
        if (f) {
          col_axpy(a, j, t, f);
          col_axpy(s.V, j, t, f);
        }
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and retry
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t]) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_axpy(a, t, bad, -1);
      row_axpy(s.U, t, bad, -1);
    }
    if (a[t][t] < 0) {
      for (auto& r : a) r[t] = -r[t];
      for (auto& r : s.V) r[t] = -r[t];
    }
  }
  return s;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (s.D[i][i] != 1) throw std::domain_error("matrix is not unimodular");
  return mat_mul(s.V, s.U);
}

}  // namespace dlchar
