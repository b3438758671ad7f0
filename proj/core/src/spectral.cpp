#include "atrig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "atrig/error.hpp"
#include "lu.hpp"

namespace atrig {

namespace {

using cplx = std::complex<double>;

// Monic coefficients a_0..a_n with a_n = 1.
std::vector<double> monic(const Presentation& pres) {
  std::vector<double> a(pres.coeffs().begin(), pres.coeffs().end());
  a.push_back(1.0);
  return a;
}

template <typename T>
struct ValueAndSlope {
  T value;
  T slope;
};

template <typename T>
ValueAndSlope<T> horner_with_derivative(const std::vector<double>& a, T x) {
  T p = T(a.back());
  T dp = T(0);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * x + p;
    p = p * x + T(a[i]);
  }
  return {p, dp};
}

// Running rounding-error bound for Horner evaluation of p at |x|.
double horner_error_bound(const std::vector<double>& a, double abs_x) {
  double acc = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * abs_x + std::abs(a[i]);
  return 4.0 * static_cast<double>(a.size()) * std::numeric_limits<double>::epsilon() * acc;
}

template <typename T>
T horner(std::span<const double> coords, T x) {
  T acc = T(0);
  for (std::size_t i = coords.size(); i-- > 0;) acc = acc * x + T(coords[i]);
  return acc;
}

[[noreturn]] void throw_repeated(const Presentation& pres) {
  throw Error(ErrorCode::NonSemisimple, "p(k) = " + pres.polynomial_string() + " has a repeated root");
}

double min_pairwise_distance(const std::vector<cplx>& roots) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) best = std::min(best, std::abs(roots[i] - roots[j]));
  return best;
}

double max_modulus(const std::vector<cplx>& roots) {
  double m = 0.0;
  for (const auto& r : roots) m = std::max(m, std::abs(r));
  return m;
}

// Simultaneous Aberth-Ehrlich iteration. Returns false if the cap was hit.
bool aberth(const std::vector<double>& a, std::vector<cplx>& z, const RootFinderOptions& opt) {
  const std::size_t n = z.size();
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [p, dp] = horner_with_derivative(a, z[i]);
      if (p == cplx(0)) continue;
      cplx repulsion(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      cplx step;
      if (dp == cplx(0)) {
        step = -1.0 / repulsion;
      } else {
        const cplx ratio = p / dp;
        step = ratio / (1.0 - ratio * repulsion);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst <= opt.step_tolerance) return true;
  }
  return false;
}

template <typename T>
T newton_polish(const std::vector<double>& a, T x) {
  for (int i = 0; i < 3; ++i) {
    const auto [p, dp] = horner_with_derivative(a, x);
    if (p == T(0) || dp == T(0)) break;
    const T next = x - p / dp;
    if (std::abs(horner_with_derivative(a, next).value) >= std::abs(p)) break;
    x = next;
  }
  return x;
}

}  // namespace

SpectralDecomposition find_roots(const PresentationPtr& pres, const RootFinderOptions& opt) {
  const int n = pres->degree();
  const std::vector<double> a = monic(*pres);

  // Circle around the root centroid, radius from the shifted polynomial's
  // coefficients (the Fujiwara-style bound without the factor 2).
  const double center = -a[static_cast<std::size_t>(n - 1)] / n;
  std::vector<double> shifted = a;
  for (std::size_t i = 0; i + 1 < shifted.size(); ++i)
    for (std::size_t j = shifted.size() - 1; j-- > i;) shifted[j] += center * shifted[j + 1];
  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = std::abs(shifted[static_cast<std::size_t>(i)]);
    if (c != 0.0) radius = std::max(radius, std::pow(c, 1.0 / (n - i)));
  }

  std::vector<cplx> z(static_cast<std::size_t>(n));
  if (radius == 0.0) {
    // p(k) = (k - center)^n
    if (n > 1) throw_repeated(*pres);
    z[0] = center;
  } else {
    for (int j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / n + 0.4;
      z[static_cast<std::size_t>(j)] = center + radius * std::polar(1.0, angle);
    }
    const bool converged = aberth(a, z, opt);
    const double sep = opt.separation * std::max(1.0, max_modulus(z));
    if (min_pairwise_distance(z) <= sep) throw_repeated(*pres);
    if (!converged)
      throw Error(ErrorCode::NoConvergence, "Aberth iteration did not settle within " +
                                                std::to_string(opt.max_iterations) + " sweeps");
  }

  SpectralDecomposition dec;
  dec.presentation = pres;
  dec.root_tolerance = opt.root_tolerance;

  std::vector<cplx> upper, lower;
  for (const auto& root : z) {
    if (std::abs(root.imag()) <= opt.real_snap * std::max(1.0, std::abs(root)))
      dec.real_roots.push_back(newton_polish(a, root.real()));
    else if (root.imag() > 0)
      upper.push_back(root);
    else
      lower.push_back(root);
  }
  if (upper.size() != lower.size())
    throw Error(ErrorCode::NoConvergence, "non-real roots do not pair into conjugates");
  for (const auto& u : upper) {
    auto it = std::min_element(lower.begin(), lower.end(), [&](const cplx& x, const cplx& y) {
      return std::abs(x - std::conj(u)) < std::abs(y - std::conj(u));
    });
    const cplx merged = 0.5 * (u + std::conj(*it));
    lower.erase(it);
    cplx polished = newton_polish(a, merged);
    if (polished.imag() < 0) polished = std::conj(polished);
    dec.complex_roots.push_back(polished);
  }
  std::sort(dec.real_roots.begin(), dec.real_roots.end());
  std::sort(dec.complex_roots.begin(), dec.complex_roots.end(), [](const cplx& x, const cplx& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });

  // Certification over the full root list (conjugates included).
  std::vector<cplx> all(dec.real_roots.begin(), dec.real_roots.end());
  for (const auto& c : dec.complex_roots) {
    all.push_back(c);
    all.push_back(std::conj(c));
  }
  for (const auto& root : all) {
    const double residual = std::abs(horner_with_derivative(a, root).value);
    if (residual > opt.root_tolerance * std::max(1.0, std::pow(std::abs(root), n)))
      throw Error(ErrorCode::NoConvergence, "root residual exceeds certificate tolerance");
  }
  if (n > 1) {
    const double sep = opt.separation * std::max(1.0, max_modulus(all));
    if (min_pairwise_distance(all) <= sep) throw_repeated(*pres);
    // Inclusion disks: each holds a true root; disjoint disks certify n
    // distinct roots.
    std::vector<double> disk(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      const double residual = std::abs(horner_with_derivative(a, all[i]).value) +
                              horner_error_bound(a, std::abs(all[i]));
      double denom = 1.0;
      for (std::size_t j = 0; j < all.size(); ++j)
        if (j != i) denom *= std::abs(all[i] - all[j]);
      disk[i] = n * residual / denom;
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (std::abs(all[i] - all[j]) <= disk[i] + disk[j]) throw_repeated(*pres);
  }
  return dec;
}

ComponentVector to_components(const Element& z, const SpectralDecomposition& dec) {
  if (!z.presentation()->same_ring(*dec.presentation))
    throw Error(ErrorCode::PresentationMismatch, "element and decomposition belong to different algebras");
  ComponentVector v;
  v.real_parts.reserve(dec.real_roots.size());
  for (double r : dec.real_roots) v.real_parts.push_back(horner(z.coords(), r));
  v.complex_parts.reserve(dec.complex_roots.size());
  for (const auto& c : dec.complex_roots) v.complex_parts.push_back(horner(z.coords(), c));
  return v;
}

Element from_components(const ComponentVector& v, const SpectralDecomposition& dec) {
  if (v.real_parts.size() != dec.real_roots.size() || v.complex_parts.size() != dec.complex_roots.size())
    throw Error(ErrorCode::ShapeMismatch, "component vector does not match the decomposition");
  const int n = dec.presentation->degree();

  std::vector<cplx> nodes, values;
  nodes.reserve(static_cast<std::size_t>(n));
  values.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < dec.real_roots.size(); ++i) {
    nodes.emplace_back(dec.real_roots[i]);
    values.emplace_back(v.real_parts[i]);
  }
  for (std::size_t i = 0; i < dec.complex_roots.size(); ++i) {
    nodes.push_back(dec.complex_roots[i]);
    values.push_back(v.complex_parts[i]);
    nodes.push_back(std::conj(dec.complex_roots[i]));
    values.push_back(std::conj(v.complex_parts[i]));
  }

  std::vector<cplx> vandermonde(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    cplx power(1.0);
    for (int c = 0; c < n; ++c) {
      vandermonde[static_cast<std::size_t>(r) * n + c] = power;
      power *= nodes[static_cast<std::size_t>(r)];
    }
  }
  const auto lu = detail::lu_factor(n, vandermonde);
  const auto solution = detail::lu_solve(lu, values);
  if (!solution) throw Error(ErrorCode::IllConditioned, "Vandermonde system is singular");

  std::vector<double> coords(static_cast<std::size_t>(n));
  double coord_scale = 1.0;
  double imag_residue = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx c = (*solution)[static_cast<std::size_t>(i)];
    coords[static_cast<std::size_t>(i)] = c.real();
    coord_scale = std::max(coord_scale, std::abs(c.real()));
    imag_residue = std::max(imag_residue, std::abs(c.imag()));
  }
  if (imag_residue > 1e-8 * coord_scale)
    throw Error(ErrorCode::IllConditioned, "interpolant is not real to working precision");

  double value_scale = 1.0;
  for (const auto& x : values) value_scale = std::max(value_scale, std::abs(x));
  const double tolerance = 1e-9 * value_scale;
  for (int r = 0; r < n; ++r) {
    const cplx fitted = horner(std::span<const double>(coords), nodes[static_cast<std::size_t>(r)]);
    if (std::abs(fitted - values[static_cast<std::size_t>(r)]) > tolerance)
      throw Error(ErrorCode::IllConditioned, "interpolation residual exceeds tolerance");
  }
  return Element(dec.presentation, std::move(coords));
}

std::string to_json(const SpectralDecomposition& dec) {
  nlohmann::json out;
  out["real_roots"] = dec.real_roots;
  auto complex = nlohmann::json::array();
  for (const auto& c : dec.complex_roots) complex.push_back({c.real(), c.imag()});
  out["complex_roots"] = std::move(complex);
  return out.dump();
}

}  // namespace atrig
