#include "atrig/identities.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "atrig/error.hpp"
#include "atrig/transcendental.hpp"

namespace atrig {

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

using Vec = std::vector<SymPoly>;

// Product of two algebra elements with symbolic coordinates, reduced by
// k^n = -(c_0 + c_1 k + ... + c_{n-1} k^{n-1}).
Vec multiply_reduce(const Vec& a, const Vec& b, const std::vector<Rational>& modulus) {
  const std::size_t n = modulus.size();
  const int functions = a.front().functions();
  Vec prod(2 * n - 1, SymPoly(functions));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  for (std::size_t d = prod.size(); d-- > n;) {
    if (prod[d].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (modulus[i] == 0) continue;
      prod[d - n + i] -= prod[d] * modulus[i];
    }
  }
  prod.resize(n, SymPoly(functions));
  return prod;
}

Vec generic_exponential(int n, AngleTag tag) {
  Vec v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v.push_back(SymPoly::symbol(n, {i, tag}));
  return v;
}

// Rational from the exact binary value of x via continued fraction convergents.
std::optional<Rational> simplest_rational(double x, long max_denominator) {
  const Rational exact(x);
  mpz_class num = exact.get_num();
  mpz_class den = exact.get_den();
  // Convergent recurrence h_i = a_i h_{i-1} + h_{i-2}, seeded with
  // h_{-1}/k_{-1} = 1/0 and h_{-2}/k_{-2} = 0/1.
  mpz_class h = 1, h_prev = 0, k = 0, k_prev = 1;
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class h_next = a * h + h_prev;
    const mpz_class k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (k > max_denominator) break;
    if (h.fits_slong_p() && std::abs(h.get_si()) < (1L << 53)) {
      const double approx = static_cast<double>(h.get_si()) / static_cast<double>(k.get_si());
      if (approx == x) return Rational(h, k);
    }
    const mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  if (exact.get_den() <= max_denominator) return exact;
  return std::nullopt;
}

// -- rendering ---------------------------------------------------------------

enum class Naming { generic, hyperbolic, complicated };

Naming naming_for(const IdentitySet& ids) {
  const std::size_t n = ids.modulus.size();
  if (n < 2) return Naming::generic;
  for (std::size_t i = 1; i < n; ++i)
    if (ids.modulus[i] != 0) return Naming::generic;
  if (ids.modulus[0] == -1) return Naming::hyperbolic;
  if (ids.modulus[0] == 1) return Naming::complicated;
  return Naming::generic;
}

std::string subscript(int v) {
  const std::string s = std::to_string(v);
  return s.size() == 1 ? s : "{" + s + "}";
}

std::string latex_function(Naming naming, int n, int index) {
  if (naming == Naming::generic) return "s_" + subscript(index);
  const bool hyper = naming == Naming::hyperbolic;
  const std::string even = hyper ? "\\cosh" : "\\cos";
  const std::string odd = hyper ? "\\sinh" : "\\sin";
  if (n == 2) return index == 1 ? even : odd;
  if (index == 1) return even + "_" + subscript(n);
  return odd + "_{" + std::to_string(n) + "," + std::to_string(index - 1) + "}";
}

std::string latex_coefficient(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string latex_poly(const SymPoly& p, Naming naming, int n) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    const bool negative = coeff < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = abs(coeff);
    const bool constant = total_degree(mono) == 0;
    if (magnitude != 1 || constant) out += latex_coefficient(magnitude);
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      const int index = static_cast<int>(v % static_cast<std::size_t>(n)) + 1;
      out += latex_function(naming, n, index);
      if (mono[v] > 1) out += "^{" + std::to_string(mono[v]) + "}";
      out += v < static_cast<std::size_t>(n) ? "(\\alpha)" : "(\\beta)";
    }
  }
  return out;
}

std::string symbol_name(int index, bool beta) { return "s" + std::to_string(index) + (beta ? "b" : "a"); }

nlohmann::ordered_json json_coefficient(const Rational& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return c.get_str();
}

Rational parse_json_coefficient(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      Rational r(j.get<std::string>());
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error(ErrorCode::ParseError, "identity coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

// ---------------------------------------------------------------------------

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](std::uint16_t x, std::uint16_t y) { return x > y; });
}

SymPoly SymPoly::symbol(int functions, TrigSymbol s) {
  SymPoly p(functions);
  Monomial m(2 * static_cast<std::size_t>(functions), 0);
  const std::size_t offset = s.tag == AngleTag::beta ? static_cast<std::size_t>(functions) : 0;
  m[offset + static_cast<std::size_t>(s.index - 1)] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

SymPoly SymPoly::constant(int functions, const Rational& c) {
  SymPoly p(functions);
  p.add_term(Monomial(2 * static_cast<std::size_t>(functions), 0), c);
  return p;
}

bool SymPoly::uses_beta() const noexcept {
  for (const auto& [mono, coeff] : terms_)
    for (std::size_t v = static_cast<std::size_t>(functions_); v < mono.size(); ++v)
      if (mono[v] != 0) return true;
  return false;
}

void SymPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SymPoly SymPoly::operator*(const SymPoly& other) const {
  SymPoly out(functions_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

SymPoly SymPoly::operator*(const Rational& c) const {
  SymPoly out(functions_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

double SymPoly::evaluate(std::span<const double> alpha, std::span<const double> beta) const {
  const auto n = static_cast<std::size_t>(functions_);
  double total = 0.0;
  for (const auto& [mono, coeff] : terms_) {
    double term = coeff.get_d();
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      const double base = v < n ? alpha[v] : beta[v - n];
      term *= std::pow(base, static_cast<int>(mono[v]));
    }
    total += term;
  }
  return total;
}

SymPoly SymPoly::beta_as_alpha() const {
  const auto n = static_cast<std::size_t>(functions_);
  SymPoly out(functions_);
  for (const auto& [mono, coeff] : terms_) {
    Monomial m(mono.size(), 0);
    for (std::size_t v = 0; v < mono.size(); ++v) m[v % n] = static_cast<std::uint16_t>(m[v % n] + mono[v]);
    out.add_term(m, coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Rational> exact_coefficients(const Presentation& pres, long max_denominator) {
  std::vector<Rational> out;
  for (int i = 0; i < pres.degree(); ++i) {
    auto r = simplest_rational(pres.coeff(i), max_denominator);
    if (!r)
      throw Error(ErrorCode::NonRationalCoefficients,
                  "coefficient c" + std::to_string(i) + " has no rational form with denominator <= " +
                      std::to_string(max_denominator));
    out.push_back(*r);
  }
  return out;
}

IdentitySet adding_angle(const PresentationPtr& pres) {
  IdentitySet ids;
  ids.presentation = pres;
  ids.modulus = exact_coefficients(*pres);
  ids.kind = IdentityKind::adding_angle;
  const int n = pres->degree();
  ids.formulas =
      multiply_reduce(generic_exponential(n, AngleTag::alpha), generic_exponential(n, AngleTag::beta), ids.modulus);
  return ids;
}

IdentitySet de_moivre(const PresentationPtr& pres, int l, int max_power) {
  if (l < 1 || l > max_power)
    throw Error(ErrorCode::InvalidPower,
                "De Moivre power " + std::to_string(l) + " outside 1.." + std::to_string(max_power));
  IdentitySet ids;
  ids.presentation = pres;
  ids.modulus = exact_coefficients(*pres);
  ids.kind = IdentityKind::de_moivre;
  ids.power = l;
  const Vec base = generic_exponential(pres->degree(), AngleTag::alpha);
  Vec acc = base;
  for (int i = 1; i < l; ++i) acc = multiply_reduce(acc, base, ids.modulus);
  ids.formulas = std::move(acc);
  return ids;
}

double VerificationReport::worst() const {
  double w = 0.0;
  for (double r : max_residual) w = std::max(w, r);
  return w;
}

VerificationReport verify_identity(const IdentitySet& ids, int samples, double tol, std::uint64_t seed) {
  const auto n = ids.formulas.size();
  VerificationReport report;
  report.max_residual.assign(n, 0.0);
  report.tolerance = tol;
  report.samples = samples;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    const double alpha = angle(rng);
    std::vector<double> lhs, sa, sb;
    sa = trig_components(ids.presentation, 1, alpha);
    if (ids.kind == IdentityKind::adding_angle) {
      const double beta = angle(rng);
      sb = trig_components(ids.presentation, 1, beta);
      lhs = trig_components(ids.presentation, 1, alpha + beta);
    } else {
      lhs = trig_components(ids.presentation, 1, ids.power * alpha);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double residual = std::abs(lhs[i] - ids.formulas[i].evaluate(sa, sb));
      report.max_residual[i] = std::isnan(residual) ? std::numeric_limits<double>::infinity() : std::max(report.max_residual[i], residual);
    }
  }
  report.formula_passed.resize(n);
  report.passed = true;
  for (std::size_t i = 0; i < n; ++i) {
    report.formula_passed[i] = report.max_residual[i] <= tol;
    report.passed = report.passed && report.formula_passed[i];
  }
  return report;
}

std::string render(const IdentitySet& ids, RenderFormat format) {
  const int n = static_cast<int>(ids.formulas.size());
  if (format == RenderFormat::json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (int i = 0; i < n; ++i) {
      auto terms = nlohmann::ordered_json::array();
      for (const auto& [mono, coeff] : ids.formulas[static_cast<std::size_t>(i)].terms()) {
        auto symbols = nlohmann::ordered_json::array();
        for (std::size_t v = 0; v < mono.size(); ++v)
          for (int e = 0; e < mono[v]; ++e)
            symbols.push_back(symbol_name(static_cast<int>(v % static_cast<std::size_t>(n)) + 1,
                                          v >= static_cast<std::size_t>(n)));
        terms.push_back(nlohmann::ordered_json::array({json_coefficient(coeff), std::move(symbols)}));
      }
      out["s" + std::to_string(i + 1)] = std::move(terms);
    }
    return out.dump();
  }

  const Naming naming = naming_for(ids);
  std::string argument;
  if (ids.kind == IdentityKind::adding_angle)
    argument = "\\alpha+\\beta";
  else
    argument = ids.power == 1 ? "\\alpha" : std::to_string(ids.power) + "\\alpha";
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    os << "\\[ " << latex_function(naming, n, i + 1) << "(" << argument
       << ") = " << latex_poly(ids.formulas[static_cast<std::size_t>(i)], naming, n) << " \\]\n";
  }
  return os.str();
}

IdentitySet parse_identity_json(std::string_view text, const PresentationPtr& pres, IdentityKind kind, int power) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("identity json: ") + e.what());
  }
  const int n = pres->degree();
  IdentitySet ids;
  ids.presentation = pres;
  ids.modulus = exact_coefficients(*pres);
  ids.kind = kind;
  ids.power = power;
  if (!doc.is_object() || static_cast<int>(doc.size()) != n)
    throw Error(ErrorCode::ParseError, "identity json needs one entry per component function");
  for (int i = 1; i <= n; ++i) {
    const std::string key = "s" + std::to_string(i);
    if (!doc.contains(key) || !doc[key].is_array()) throw Error(ErrorCode::ParseError, "missing formula " + key);
    SymPoly poly(n);
    for (const auto& term : doc[key]) {
      if (!term.is_array() || term.size() != 2 || !term[1].is_array())
        throw Error(ErrorCode::ParseError, "formula terms are [coefficient, [symbols...]] pairs");
      Monomial m(2 * static_cast<std::size_t>(n), 0);
      for (const auto& sym : term[1]) {
        const std::string name = sym.is_string() ? sym.get<std::string>() : std::string();
        if (name.size() < 3 || name.front() != 's' || (name.back() != 'a' && name.back() != 'b'))
          throw Error(ErrorCode::ParseError, "bad symbol '" + name + "'");
        int index = 0;
        try {
          index = std::stoi(name.substr(1, name.size() - 2));
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, "bad symbol '" + name + "'");
        }
        if (index < 1 || index > n) throw Error(ErrorCode::ParseError, "symbol index out of range in '" + name + "'");
        const std::size_t offset = name.back() == 'b' ? static_cast<std::size_t>(n) : 0;
        ++m[offset + static_cast<std::size_t>(index - 1)];
      }
      poly.add_term(m, parse_json_coefficient(term[0]));
    }
    ids.formulas.push_back(std::move(poly));
  }
  return ids;
}

}  // namespace atrig
