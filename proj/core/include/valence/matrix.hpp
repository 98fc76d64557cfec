#ifndef VALENCE_MATRIX_HPP
#define VALENCE_MATRIX_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "valence/errors.hpp"
#include "valence/rings.hpp"

namespace valence {

/// Dense row-major matrix over an arbitrary coefficient domain. Internal
/// helper for resultants, norm forms and the Bezout solver.
template <class T>
struct Matrix {
  int n = 0, m = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(int rows, int cols, const T& fill) : n(rows), m(cols), a(rows * cols, fill) {}
  T& at(int i, int j) { return a[i * m + j]; }
  const T& at(int i, int j) const { return a[i * m + j]; }
};

/// Determinant by fraction-free (Bareiss) elimination. Exact over any
/// integral domain: every division performed is exact.
template <class T>
T bareiss_det(Matrix<T> mat) {
  if (mat.n != mat.m) throw domain_error(errc::invalid_input, "determinant of non-square matrix");
  int n = mat.n;
  if (n == 0) throw domain_error(errc::invalid_input, "determinant of empty matrix");
  T zero = zero_like(mat.at(0, 0));
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (is_zero(mat.at(k, k))) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(mat.at(i, k))) {
          pivot = i;
          break;
        }
      if (pivot < 0) return zero;
      for (int j = 0; j < n; ++j) std::swap(mat.at(k, j), mat.at(pivot, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = mat.at(i, j) * mat.at(k, k) - mat.at(i, k) * mat.at(k, j);
        mat.at(i, j) = (k == 0) ? num : divexact(num, mat.at(k - 1, k - 1));
      }
      mat.at(i, k) = zero;
    }
  }
  T det = mat.at(n - 1, n - 1);
  return negate ? -det : det;
}

namespace detail {

// Expansion over row subsets, memoized by bitmask: O(2^n * n) ring ops and
// no divisions, so it is usable over rings with zero divisors (truncated
// local rings) where Bareiss is not. Single-row subsets bottom out
// directly, so no multiplicative unit is ever synthesized.
template <class T>
T subset_det(const Matrix<T>& mat, std::uint32_t rows, int col, std::map<std::uint32_t, T>& memo,
             const T& zero) {
  if ((rows & (rows - 1)) == 0) {
    // exactly one row left
    for (int i = 0; i < mat.n; ++i)
      if (rows & (1u << i)) return mat.at(i, col);
  }
  auto it = memo.find(rows);
  if (it != memo.end()) return it->second;
  T acc = zero;
  bool plus = true;
  for (int i = 0; i < mat.n; ++i) {
    if (!(rows & (1u << i))) continue;
    if (!is_zero(mat.at(i, col))) {
      T sub = subset_det(mat, rows & ~(1u << i), col + 1, memo, zero);
      T term = mat.at(i, col) * sub;
      acc = plus ? acc + term : acc - term;
    }
    plus = !plus;
  }
  memo.emplace(rows, acc);
  return acc;
}

}  // namespace detail

/// Division-free determinant (subset expansion); n <= 20.
template <class T>
T division_free_det(const Matrix<T>& mat) {
  if (mat.n != mat.m) throw domain_error(errc::invalid_input, "determinant of non-square matrix");
  if (mat.n == 0) throw domain_error(errc::invalid_input, "determinant of empty matrix");
  if (mat.n > 20) throw budget_error("division-free determinant limited to n <= 20");
  T zero = zero_like(mat.at(0, 0));
  std::map<std::uint32_t, T> memo;
  return detail::subset_det(mat, (1u << mat.n) - 1u, 0, memo, zero);
}

/// Minor: determinant of mat with row i and column j removed.
template <class T>
T minor_det(const Matrix<T>& mat, int row, int col) {
  Matrix<T> sub(mat.n - 1, mat.m - 1, zero_like(mat.at(0, 0)));
  for (int i = 0, si = 0; i < mat.n; ++i) {
    if (i == row) continue;
    for (int j = 0, sj = 0; j < mat.m; ++j) {
      if (j == col) continue;
      sub.at(si, sj) = mat.at(i, j);
      ++sj;
    }
    ++si;
  }
  return division_free_det(sub);
}

}  // namespace valence

#endif
