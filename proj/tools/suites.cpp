#include "suites.hpp"

#include <algorithm>
#include <cmath>

#include "atrig/identities.hpp"
#include "atrig/sampling.hpp"
#include "atrig/transcendental.hpp"

namespace atrig::cli {

namespace {

struct Defaults {
  int samples;
  double tolerance;
};

Defaults defaults_for(Suite s) {
  switch (s) {
    case Suite::kthagorean:
    case Suite::only_pure_power:
      return {100, 1e-9};
    case Suite::lemma:
      return {10, 1e-6};
    case Suite::roundtrip:
      return {500, 1e-8};
    case Suite::identities:
      return {200, 1e-9};
  }
  return {100, 1e-9};
}

std::string name_of(const Presentation& p) { return p.label().value_or(p.polynomial_string()); }

std::vector<PresentationPtr> presets(int lo, int hi, bool include_nil = true) {
  std::vector<PresentationPtr> out;
  for (auto kind : {PresetKind::hyperbolic, PresetKind::complicated, PresetKind::nil}) {
    if (kind == PresetKind::nil && !include_nil) continue;
    for (int n = lo; n <= hi; ++n) out.push_back(preset(kind, n));
  }
  return out;
}

double max_abs_diff(const Element& a, const Element& b) {
  double m = 0.0;
  for (int i = 0; i < a.presentation()->degree(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

CaseResult kthagorean_case(const PresentationPtr& given, int samples, Sampler& s) {
  CaseResult r;
  PresentationPtr p = given;
  if (!p->is_depressed()) {
    p = depress(given).presentation;
    r.note = "checked on the depressed presentation";
  }
  r.algebra = name_of(*given);
  r.samples = samples;
  const auto k = Element::generator_power(p, 1);
  for (int i = 0; i < samples; ++i)
    r.worst = std::max(r.worst, std::abs(pythagorean(exp(k * s.uniform(-3, 3))) - 1.0));
  return r;
}

CaseResult gate_case(const PresentationPtr& p, int samples, Sampler& s) {
  CaseResult r{name_of(*p), samples, 0.0, false, {}};
  for (int m = 1; m < p->degree(); ++m) {
    const auto km = Element::generator_power(p, m);
    for (int i = 0; i < samples; ++i)
      r.worst = std::max(r.worst, std::abs(pythagorean(exp(km * s.uniform(-3, 3))) - 1.0));
  }
  return r;
}

CaseResult lemma_case(const PresentationPtr& p, int samples, Sampler& s) {
  constexpr double h = 1e-5;
  const int n = p->degree();
  CaseResult r{name_of(*p), samples, 0.0, false, {}};
  const auto k = Element::generator_power(p, 1);
  for (int i = 0; i < samples; ++i) {
    const double theta = s.uniform(-1, 1);
    const auto m = rep_matrix(exp(k * theta));
    const auto plus = rep_matrix(exp(k * (theta + h)));
    const auto minus = rep_matrix(exp(k * (theta - h)));
    for (int col = 0; col < n; ++col) {
      for (int row = 0; row < n; ++row) {
        double expected = 0.0;
        if (col + 1 < n)
          expected = m(row, col + 1);
        else
          for (int j = 0; j < n; ++j) expected -= p->coeff(j) * m(row, j);
        r.worst = std::max(r.worst, std::abs((plus(row, col) - minus(row, col)) / (2 * h) - expected));
      }
    }
  }
  return r;
}

CaseResult roundtrip_case(const PresentationPtr& p, int samples, Sampler& s) {
  CaseResult r{name_of(*p), samples, 0.0, false, {}};
  const bool nil = p->is_nil();
  SpectralDecomposition dec;
  if (!nil) dec = find_roots(p);
  for (int i = 0; i < samples; ++i) {
    const auto x = nil ? s.element(p) : s.spectral_element(dec);
    const auto z = exp(x);
    const auto l = log(z, {}, nil ? nullptr : &dec);
    r.worst = std::max({r.worst, max_abs_diff(exp(l), z), max_abs_diff(l, x)});
  }
  return r;
}

CaseResult identities_case(const PresentationPtr& p, int samples, double tol, std::uint64_t seed) {
  CaseResult r{name_of(*p), samples, 0.0, false, {}};
  r.worst = verify_identity(adding_angle(p), samples, tol, seed).worst();
  for (int l = 1; l <= 4; ++l) r.worst = std::max(r.worst, verify_identity(de_moivre(p, l), samples, tol, seed).worst());
  r.note = "adding-angle and De Moivre l = 1..4";
  return r;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (auto s : {Suite::kthagorean, Suite::lemma, Suite::roundtrip, Suite::identities, Suite::only_pure_power})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kthagorean:
      return "kthagorean";
    case Suite::lemma:
      return "lemma";
    case Suite::roundtrip:
      return "roundtrip";
    case Suite::identities:
      return "identities";
    case Suite::only_pure_power:
      return "only-pure-power";
  }
  return "";
}

SuiteReport run_suite(Suite suite, const SuiteOptions& options) {
  const Defaults d = defaults_for(suite);
  const int samples = options.samples.value_or(d.samples);
  SuiteReport report;
  report.suite = suite;
  report.tolerance = options.tolerance.value_or(d.tolerance);
  Sampler s(options.seed);

  std::vector<PresentationPtr> algebras;
  if (options.algebra) {
    algebras.push_back(options.algebra);
  } else {
    switch (suite) {
      case Suite::kthagorean:
      case Suite::only_pure_power:
        algebras = presets(2, 6);
        if (suite == Suite::kthagorean)
          for (int i = 0; i < 50; ++i) algebras.push_back(s.depressed(s.integer(2, 6)));
        break;
      case Suite::lemma:
        for (int i = 0; i < 20; ++i) algebras.push_back(s.depressed(s.integer(2, 6)));
        break;
      case Suite::roundtrip:
        algebras = presets(2, 6);
        for (int i = 0; i < 10; ++i) algebras.push_back(s.semisimple(s.integer(2, 6)));
        break;
      case Suite::identities:
        algebras = presets(2, 5);
        for (int i = 0; i < 20; ++i) algebras.push_back(s.rational(s.integer(2, 5)));
        break;
    }
  }

  for (const auto& p : algebras) {
    CaseResult r;
    switch (suite) {
      case Suite::kthagorean:
        r = kthagorean_case(p, samples, s);
        break;
      case Suite::only_pure_power:
        r = gate_case(p, samples, s);
        break;
      case Suite::lemma:
        r = lemma_case(p, samples, s);
        break;
      case Suite::roundtrip:
        r = roundtrip_case(p, samples, s);
        break;
      case Suite::identities:
        r = identities_case(p, samples, report.tolerance, options.seed);
        break;
    }
    r.passed = r.worst <= report.tolerance;
    report.cases.push_back(std::move(r));
  }

  if (suite == Suite::only_pure_power && !options.algebra) {
    // k^3 + k is not a pure power, so some exp(k^m theta) must leave F = 1.
    auto witness = gate_case(Presentation::make({0, 1, 0}), samples, s);
    witness.passed = witness.worst > 1e-3;
    witness.note = "necessity witness: passes when worst > 1e-3";
    report.cases.push_back(std::move(witness));
  }

  report.passed = std::all_of(report.cases.begin(), report.cases.end(), [](const CaseResult& c) { return c.passed; });
  return report;
}

}  // namespace atrig::cli
