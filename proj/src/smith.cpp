#include "eigensolver/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace eigensolver {

IntMatrix int_identity(std::size_t n) {
  IntMatrix I(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = a[0].size();
  if (b.size() != inner) throw std::invalid_argument("int_multiply: shape mismatch");
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, long long q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, long long q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t r = A.size();
  const std::size_t c = r ? A[0].size() : 0;
  for (const auto& row : A)
    if (row.size() != c) throw std::invalid_argument("smith_normal_form: ragged matrix");

  SmithForm out;
  out.S = A;
  out.U = int_identity(r);
  out.V = int_identity(c);
  IntMatrix& S = out.S;

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    while (true) {
      // Pivot on the smallest nonzero magnitude in the trailing block.
      std::size_t pi = r, pj = c;
      long long best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (S[i][j] != 0 && (best == 0 || std::llabs(S[i][j]) < best)) {
            best = std::llabs(S[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) return out;
      std::swap(S[t], S[pi]);
      std::swap(out.U[t], out.U[pi]);
      swap_cols(S, t, pj);
      swap_cols(out.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        long long q = S[i][t] / S[t][t];
        if (q != 0) {
          row_axpy(S, i, t, q);
          row_axpy(out.U, i, t, q);
        }
        if (S[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        long long q = S[t][j] / S[t][t];
        if (q != 0) {
          col_axpy(S, j, t, q);
          col_axpy(out.V, j, t, q);
        }
        if (S[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (S[i][j] % S[t][t] != 0) {
            row_axpy(S, t, i, -1);
            row_axpy(out.U, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S[t][t] < 0) {
      for (auto& v : S[t]) v = -v;
      for (auto& v : out.U[t]) v = -v;
    }
    out.invariants.push_back(S[t][t]);
  }
  return out;
}

}  // namespace eigensolver
