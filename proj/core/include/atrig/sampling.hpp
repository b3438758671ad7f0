#pragma once

// Seeded random presentations and elements for property sweeps.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "atrig/algebra.hpp"
#include "atrig/spectral.hpp"

namespace atrig {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::vector<double> reals(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  Element element(const PresentationPtr& pres, double lo = -1.0, double hi = 1.0) {
    return Element(pres, reals(static_cast<std::size_t>(pres->degree()), lo, hi));
  }

  /// Monic depressed p of the given degree, other coefficients in [lo, hi].
  PresentationPtr depressed(int degree, double lo = -2.0, double hi = 2.0) {
    auto c = reals(static_cast<std::size_t>(degree), lo, hi);
    c.back() = 0.0;
    return Presentation::make(std::move(c));
  }

  /// Monic p with every coefficient in [lo, hi] (not necessarily depressed).
  PresentationPtr general(int degree, double lo = -2.0, double hi = 2.0) {
    return Presentation::make(reals(static_cast<std::size_t>(degree), lo, hi));
  }

  /// Coefficients p/q with q in 1..4, value in [-2, 2].
  PresentationPtr rational(int degree) {
    std::vector<double> c(static_cast<std::size_t>(degree));
    for (auto& x : c) {
      const int q = integer(1, 4);
      x = static_cast<double>(integer(-2 * q, 2 * q)) / q;
    }
    return Presentation::make(std::move(c));
  }

  /// Product of linear and quadratic factors built from well separated
  /// random roots (pairwise distance at least 0.5), so the algebra is
  /// semisimple by construction and the power basis stays well conditioned.
  PresentationPtr semisimple(int degree) {
    while (true) {
      std::vector<std::complex<double>> roots;
      int remaining = degree;
      while (remaining > 0) {
        if (remaining >= 2 && integer(0, 1) == 1) {
          roots.emplace_back(uniform(-1.5, 1.5), uniform(0.3, 1.5));
          roots.push_back(std::conj(roots.back()));
          remaining -= 2;
        } else {
          roots.emplace_back(uniform(-1.5, 1.5), 0.0);
          remaining -= 1;
        }
      }
      double sep = 1e300;
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) sep = std::min(sep, std::abs(roots[i] - roots[j]));
      if (sep < 0.5) continue;
      // Expand prod (k - r) with complex arithmetic; the result is real.
      std::vector<std::complex<double>> poly{1.0};
      for (const auto& r : roots) {
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] += poly[i];
          next[i] -= r * poly[i];
        }
        poly = std::move(next);
      }
      std::vector<double> c(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(i)].real();
      return Presentation::make(std::move(c));
    }
  }

  /// Element whose real components lie in [lo, hi] and whose complex
  /// components have real part in [lo, hi] and imaginary part in
  /// (-3, 3). Its exponential is a log-domain sample of moderate size and
  /// log(exp(x)) = x on the principal branch.
  Element spectral_element(const SpectralDecomposition& dec, double lo = -1.0, double hi = 1.0) {
    ComponentVector v;
    for (int i = 0; i < dec.real_count(); ++i) v.real_parts.push_back(uniform(lo, hi));
    for (int i = 0; i < dec.complex_count(); ++i) v.complex_parts.emplace_back(uniform(lo, hi), uniform(-3.0, 3.0));
    return from_components(v, dec);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace atrig
