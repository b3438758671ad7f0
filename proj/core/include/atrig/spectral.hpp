#pragma once

// Numerical factorization of p(k) and the Chinese-remainder isomorphism
//   phi: R[k]/<p(k)>  ->  R^r x C^c,   q(k) |-> (q(xi_1), ..., q(xi_{r+c}))
// for semisimple p (n distinct roots over C).

#include <complex>
#include <string>
#include <vector>

#include "atrig/algebra.hpp"

namespace atrig {

struct RootFinderOptions {
  /// Residual certificate: |p(xi)| <= root_tolerance * max(1, |xi|^n).
  double root_tolerance = 1e-10;
  int max_iterations = 200;
  /// Aberth iteration stops when every step is below this, relative to max(1, |xi|).
  double step_tolerance = 1e-13;
  /// |Im xi| <= real_snap * max(1, |xi|) is treated as a real root.
  double real_snap = 1e-8;
  /// Roots closer than separation * max(1, max|xi|) are treated as repeated.
  double separation = 1e-7;
};

struct SpectralDecomposition {
  PresentationPtr presentation;
  std::vector<double> real_roots;                  // ascending
  std::vector<std::complex<double>> complex_roots;  // Im > 0, one per conjugate pair
  double root_tolerance = 0.0;

  int real_count() const noexcept { return static_cast<int>(real_roots.size()); }
  int complex_count() const noexcept { return static_cast<int>(complex_roots.size()); }
};

struct ComponentVector {
  std::vector<double> real_parts;
  std::vector<std::complex<double>> complex_parts;
};

/// All roots of p by Aberth-Ehrlich iteration with Newton polishing.
/// Throws NonSemisimple for repeated roots and NoConvergence when the
/// iteration cap is hit or a residual certificate fails.
SpectralDecomposition find_roots(const PresentationPtr& pres, const RootFinderOptions& options = {});

/// Evaluates the coordinate polynomial of z at every root. Throws PresentationMismatch.
ComponentVector to_components(const Element& z, const SpectralDecomposition& dec);

/// Inverse of to_components by interpolation at the roots. Throws
/// ShapeMismatch or IllConditioned.
Element from_components(const ComponentVector& v, const SpectralDecomposition& dec);

/// {"real_roots":[...], "complex_roots":[[re,im],...]}
std::string to_json(const SpectralDecomposition& dec);

}  // namespace atrig
