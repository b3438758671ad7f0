#pragma once

// Reference computations that share no code with the library paths they
// check: binomial expansion, Leibniz determinants, plain Taylor sums.

#include <cmath>
#include <numeric>
#include <vector>

namespace atrig::testing {

/// Coefficients (ascending) of q(k + s) by expanding each power with the
/// binomial theorem.
inline std::vector<double> binomial_shift(const std::vector<double>& q, double s) {
  std::vector<double> out(q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    double binom = 1.0;
    for (std::size_t j = 0; j <= i; ++j) {
      // term C(i, j) k^j s^(i-j)
      out[j] += q[i] * binom * std::pow(s, static_cast<double>(i - j));
      binom = binom * static_cast<double>(i - j) / static_cast<double>(j + 1);
    }
  }
  return out;
}

/// Determinant by the permutation (Leibniz) expansion. m is row-major n x n.
inline double leibniz_determinant(const std::vector<double>& m, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    double prod = inversions % 2 ? -1.0 : 1.0;
    for (int r = 0; r < n; ++r) prod *= m[static_cast<std::size_t>(r * n + perm[r])];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Product of two coordinate vectors modulo monic p, by expanding into a
/// full polynomial and reducing with long double arithmetic, top degree
/// first.
inline std::vector<double> schoolbook_mul(const std::vector<double>& a, const std::vector<double>& b,
                                          const std::vector<double>& modulus) {
  const std::size_t n = modulus.size();
  std::vector<long double> prod(2 * n - 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += static_cast<long double>(a[i]) * b[j];
  for (std::size_t d = 2 * n - 1; d-- > n;)
    for (std::size_t i = 0; i < n; ++i) prod[d - n + i] -= static_cast<long double>(modulus[i]) * prod[d];
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n)};
}

/// exp by a plain (unscaled) Taylor sum in long double, 400 terms. Only
/// suitable for small arguments.
inline std::vector<double> taylor_exp(const std::vector<double>& z, const std::vector<double>& modulus) {
  const std::size_t n = modulus.size();
  std::vector<double> sum(n, 0.0), term(n, 0.0);
  sum[0] = term[0] = 1.0;
  std::vector<long double> acc(sum.begin(), sum.end());
  for (int m = 1; m < 400; ++m) {
    term = schoolbook_mul(term, z, modulus);
    for (auto& t : term) t /= m;
    for (std::size_t i = 0; i < n; ++i) acc[i] += term[i];
  }
  return {acc.begin(), acc.end()};
}

}  // namespace atrig::testing
