#pragma once

// Exponential, generalized trigonometric components, modulus, branch-aware
// logarithm, argument and generalized polar form.

#include <vector>

#include "atrig/algebra.hpp"
#include "atrig/spectral.hpp"

namespace atrig {

/// Truncation controls for the exponential series.
struct SeriesPolicy {
  double tolerance = 1e-15;
  int max_terms = 200;
  /// z is halved until |z|_inf <= squaring_threshold before summing.
  double squaring_threshold = 0.5;
};

/// One integer per complex component; the logarithm of that component is
/// the principal value plus 2*pi*i*index. Empty means all zero.
struct BranchSpec {
  std::vector<long> indices;
};

struct PolarForm {
  double rho = 0.0;
  /// Pure part k*theta_1 + ... + k^(n-1)*theta_(n-1); first coordinate is 0.
  Element arg;
};

/// Sum of z^m/m! by scaling and squaring. Throws NoConvergence.
Element exp(const Element& z, const SeriesPolicy& policy = {});

/// Coordinates s_1(theta), ..., s_n(theta) of exp(k^m theta).
/// Throws InvalidPower unless 1 <= m <= n-1 (m = 1 is accepted for n = 1).
std::vector<double> trig_components(const PresentationPtr& pres, int m, double theta,
                                    const SeriesPolicy& policy = {});

/// n-th root of F(z); only defined when k^n = a. Throws UnsupportedAlgebra or
/// NonPositivePythagorean.
double modulus(const Element& z);

/// Logarithm on the nil path (p = k^n) or through the component
/// isomorphism for semisimple p. A decomposition may be supplied to skip
/// root finding. Throws OutsideLogDomain, NonSemisimple,
/// PresentationMismatch or ShapeMismatch (branch length).
Element log(const Element& z, const BranchSpec& branch = {}, const SpectralDecomposition* dec = nullptr);

/// log(z) with its first coordinate cleared.
Element arg(const Element& z, const BranchSpec& branch = {}, const SpectralDecomposition* dec = nullptr);

/// rho = modulus(z) and arg(z).
PolarForm polar(const Element& z, const BranchSpec& branch = {}, const SpectralDecomposition* dec = nullptr);

/// exp(ln(rho) + arg).
Element recombine(const PolarForm& form, const SeriesPolicy& policy = {});

/// {"rho": r, "arg": [0, t1, ...]}
std::string to_json(const PolarForm& form);

}  // namespace atrig
