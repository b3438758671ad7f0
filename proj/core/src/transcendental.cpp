#include "atrig/transcendental.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "atrig/error.hpp"

namespace atrig {

Element exp(const Element& z, const SeriesPolicy& policy) {
  const double norm = z.norm_inf();
  int squarings = 0;
  if (norm > policy.squaring_threshold)
    squarings = static_cast<int>(std::ceil(std::log2(norm / policy.squaring_threshold)));
  const Element scaled = z * std::ldexp(1.0, -squarings);

  Element sum = Element::one(z.presentation());
  Element term = sum;
  bool converged = false;
  for (int m = 1; m <= policy.max_terms; ++m) {
    term = mul(term, scaled) * (1.0 / m);
    sum += term;
    if (term.norm_inf() <= policy.tolerance * sum.norm_inf()) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw Error(ErrorCode::NoConvergence,
                "exponential series did not reach tolerance in " + std::to_string(policy.max_terms) + " terms");

  for (int i = 0; i < squarings; ++i) sum = mul(sum, sum);
  return sum;
}

std::vector<double> trig_components(const PresentationPtr& pres, int m, double theta, const SeriesPolicy& policy) {
  const int n = pres->degree();
  if (m < 1 || m > std::max(1, n - 1))
    throw Error(ErrorCode::InvalidPower, "generator power " + std::to_string(m) + " outside 1.." +
                                             std::to_string(std::max(1, n - 1)));
  const Element e = exp(Element::generator_power(pres, m) * theta, policy);
  return {e.coords().begin(), e.coords().end()};
}

double modulus(const Element& z) {
  const auto& pres = *z.presentation();
  if (!pres.is_pure_power())
    throw Error(ErrorCode::UnsupportedAlgebra,
                "modulus needs k^n = a; p(k) = " + pres.polynomial_string() + " has intermediate terms");
  const double f = pythagorean(z);
  if (!(f > 0.0)) throw Error(ErrorCode::NonPositivePythagorean, "F(z) <= 0 has no positive n-th root");
  return std::pow(f, 1.0 / pres.degree());
}

namespace {

Element nil_log(const Element& z) {
  const int n = z.degree();
  const double lead = z[0];
  if (!(lead > 0.0)) throw Error(ErrorCode::OutsideLogDomain, "nil logarithm needs a positive real part");

  // z = lead * (1 + w) with w nilpotent, so the log series stops at w^(n-1).
  Element w = z * (1.0 / lead);
  std::vector<double> wc(w.coords().begin(), w.coords().end());
  wc[0] = 0.0;
  w = Element(z.presentation(), std::move(wc));

  Element result = Element::scalar(z.presentation(), std::log(lead));
  Element power = w;
  for (int m = 1; m < n; ++m) {
    result += power * ((m % 2 == 1 ? 1.0 : -1.0) / m);
    power = mul(power, w);
  }
  return result;
}

std::complex<double> branch_log(std::complex<double> c, long branch) {
  double angle = std::arg(c);
  if (angle <= -std::numbers::pi) angle = std::numbers::pi;
  return {std::log(std::abs(c)), angle + 2.0 * std::numbers::pi * static_cast<double>(branch)};
}

}  // namespace

Element log(const Element& z, const BranchSpec& branch, const SpectralDecomposition* dec) {
  if (z.presentation()->is_nil()) {
    if (!branch.indices.empty())
      throw Error(ErrorCode::ShapeMismatch, "nil algebras have no complex components to take branches on");
    return nil_log(z);
  }

  SpectralDecomposition owned;
  if (dec == nullptr) {
    owned = find_roots(z.presentation());
    dec = &owned;
  } else if (!z.presentation()->same_ring(*dec->presentation)) {
    throw Error(ErrorCode::PresentationMismatch, "decomposition belongs to a different algebra");
  }
  if (!branch.indices.empty() && static_cast<int>(branch.indices.size()) != dec->complex_count())
    throw Error(ErrorCode::ShapeMismatch, "branch spec has " + std::to_string(branch.indices.size()) +
                                              " entries for " + std::to_string(dec->complex_count()) +
                                              " complex components");

  ComponentVector v = to_components(z, *dec);
  for (double& x : v.real_parts) {
    if (!(x > 0.0)) throw Error(ErrorCode::OutsideLogDomain, "a real component is not positive");
    x = std::log(x);
  }
  for (std::size_t i = 0; i < v.complex_parts.size(); ++i) {
    if (v.complex_parts[i] == std::complex<double>(0.0))
      throw Error(ErrorCode::OutsideLogDomain, "a complex component vanishes");
    v.complex_parts[i] = branch_log(v.complex_parts[i], branch.indices.empty() ? 0 : branch.indices[i]);
  }
  return from_components(v, *dec);
}

Element arg(const Element& z, const BranchSpec& branch, const SpectralDecomposition* dec) {
  const Element l = log(z, branch, dec);
  std::vector<double> c(l.coords().begin(), l.coords().end());
  c[0] = 0.0;
  return Element(l.presentation(), std::move(c));
}

PolarForm polar(const Element& z, const BranchSpec& branch, const SpectralDecomposition* dec) {
  const double rho = modulus(z);
  return PolarForm{rho, arg(z, branch, dec)};
}

Element recombine(const PolarForm& form, const SeriesPolicy& policy) {
  return exp(Element::scalar(form.arg.presentation(), std::log(form.rho)) + form.arg, policy);
}

std::string to_json(const PolarForm& form) {
  nlohmann::json out;
  out["rho"] = form.rho;
  out["arg"] = std::vector<double>(form.arg.coords().begin(), form.arg.coords().end());
  return out.dump();
}

}  // namespace atrig
