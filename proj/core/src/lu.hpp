#pragma once

// Small dense LU factorization with partial pivoting, shared by the real
// determinant/inverse code and the complex Vandermonde solve.

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace atrig::detail {

template <typename T>
double magnitude(const T& v) {
  return std::abs(v);
}

/// Row-major n x n matrix factored in place. `sign` tracks row swaps.
template <typename T>
struct LuFactors {
  int n = 0;
  std::vector<T> a;
  std::vector<int> perm;
  int sign = 1;
  bool singular = false;

  T& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const T& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

template <typename T>
LuFactors<T> lu_factor(int n, std::vector<T> row_major) {
  LuFactors<T> f;
  f.n = n;
  f.a = std::move(row_major);
  f.perm.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f.perm[i] = i;

  for (int k = 0; k < n; ++k) {
    int pivot = k;
    double best = magnitude(f.at(k, k));
    for (int r = k + 1; r < n; ++r) {
      const double m = magnitude(f.at(r, k));
      if (m > best) {
        best = m;
        pivot = r;
      }
    }
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    if (pivot != k) {
      for (int c = 0; c < n; ++c) std::swap(f.at(k, c), f.at(pivot, c));
      std::swap(f.perm[k], f.perm[pivot]);
      f.sign = -f.sign;
    }
    for (int r = k + 1; r < n; ++r) {
      const T factor = f.at(r, k) / f.at(k, k);
      f.at(r, k) = factor;
      for (int c = k + 1; c < n; ++c) f.at(r, c) -= factor * f.at(k, c);
    }
  }
  return f;
}

template <typename T>
T lu_determinant(const LuFactors<T>& f) {
  if (f.singular) return T(0);
  T det = T(f.sign);
  for (int i = 0; i < f.n; ++i) det *= f.at(i, i);
  return det;
}

template <typename T>
std::optional<std::vector<T>> lu_solve(const LuFactors<T>& f, const std::vector<T>& rhs) {
  if (f.singular) return std::nullopt;
  const int n = f.n;
  std::vector<T> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = rhs[static_cast<std::size_t>(f.perm[i])];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= f.at(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= f.at(i, j) * x[j];
    x[i] /= f.at(i, i);
  }
  return x;
}

}  // namespace atrig::detail
