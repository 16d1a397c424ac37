#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "weylell/simple_type.hpp"

namespace weylell {

using IntMatrix = std::vector<std::vector<Int>>;

namespace detail {
inline Int checked_narrow(__int128 v, const char* where) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error(std::string("integer overflow in ") + where);
  return static_cast<Int>(v);
}
}  // namespace detail

/// Determinant, adjugate and leading principal minors of an integer matrix,
/// by fraction-free (Bareiss) Gauss-Jordan elimination. All divisions are
/// exact; intermediate entries are minors of the input, so they stay small
/// for Cartan-type matrices. Requires nonzero leading minors (true for
/// finite-type Cartan matrices, whose leading minors are positive).
struct ExactInverse {
  Int det = 1;
  IntMatrix adjugate;             // adjugate = det * A^{-1}
  std::vector<Int> leading_minors;  // k-th leading principal minor, k = 1..n
};

inline ExactInverse bareiss_adjugate(const IntMatrix& A) {
  const std::size_t n = A.size();
  ExactInverse out;
  out.adjugate.assign(n, std::vector<Int>(n, 0));
  if (n == 0) return out;

  // working matrix [A | I]
  std::vector<std::vector<Int>> M(n, std::vector<Int>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("bareiss_adjugate: matrix not square");
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j];
    M[i][n + i] = 1;
  }

  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Int piv = M[k][k];
    if (piv == 0)
      throw std::invalid_argument("bareiss_adjugate: zero leading minor (matrix not finite-type)");
    out.leading_minors.push_back(piv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const Int mrk = M[r][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        const __int128 num =
            static_cast<__int128>(M[r][j]) * piv - static_cast<__int128>(mrk) * M[k][j];
        if (num % prev != 0)
          throw std::logic_error("bareiss_adjugate: inexact division");
        M[r][j] = detail::checked_narrow(num / prev, "bareiss_adjugate");
      }
    }
    prev = piv;
  }

  // after full elimination the left block is det(A) * I
  out.det = M[n - 1][n - 1];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.adjugate[i][j] = M[i][n + j];
  return out;
}

inline int sign_of(Int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace weylell
