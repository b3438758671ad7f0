#pragma once

// Exact symbolic adding-angle and De Moivre identities for the component
// functions s_1..s_n of exp(k theta), with numeric certification and
// LaTeX/JSON rendering.
//
// Formula i of an identity set is a polynomial in the symbols
// s_j(alpha) (and s_j(beta) for adding-angle sets) equal to s_i(alpha+beta)
// or s_i(l alpha). Coefficients are exact rationals.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "atrig/algebra.hpp"

namespace atrig {

using Rational = mpq_class;

enum class AngleTag { alpha, beta };

struct TrigSymbol {
  int index = 1;  // 1-based: s_1 .. s_n
  AngleTag tag = AngleTag::alpha;
};

/// Exponent vector over the 2n symbols ordered s_1(a)..s_n(a), s_1(b)..s_n(b).
using Monomial = std::vector<std::uint16_t>;

/// Graded order, higher total degree first; ties broken lexicographically
/// so that a larger exponent on an earlier symbol comes first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in the trig symbols with exact rational coefficients. Zero
/// coefficients are never stored.
class SymPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  explicit SymPoly(int functions) : functions_(functions) {}

  static SymPoly symbol(int functions, TrigSymbol s);
  static SymPoly constant(int functions, const Rational& c);

  int functions() const noexcept { return functions_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool uses_beta() const noexcept;

  void add_term(const Monomial& m, const Rational& c);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly operator+(const SymPoly& other) const { return SymPoly(*this) += other; }
  SymPoly operator-(const SymPoly& other) const { return SymPoly(*this) -= other; }
  SymPoly operator*(const SymPoly& other) const;
  SymPoly operator*(const Rational& c) const;
  bool operator==(const SymPoly& other) const { return functions_ == other.functions_ && terms_ == other.terms_; }

  /// Substitutes numeric values; beta may be empty when no beta symbol occurs.
  double evaluate(std::span<const double> alpha, std::span<const double> beta) const;

  /// Replaces every s_j(beta) by s_j(alpha).
  SymPoly beta_as_alpha() const;

 private:
  int functions_;
  Terms terms_;
};

enum class IdentityKind { adding_angle, de_moivre };

struct IdentitySet {
  PresentationPtr presentation;
  std::vector<Rational> modulus;  // exact c_0..c_{n-1}
  IdentityKind kind = IdentityKind::adding_angle;
  int power = 0;  // l for De Moivre sets
  std::vector<SymPoly> formulas;
};

/// Exact rational for each coefficient: the simplest fraction with
/// denominator <= max_denominator whose nearest double is the stored value.
/// Throws NonRationalCoefficients.
std::vector<Rational> exact_coefficients(const Presentation& pres, long max_denominator = 1'000'000);

/// s_i(alpha+beta) from exp(k alpha) exp(k beta) reduced modulo p.
IdentitySet adding_angle(const PresentationPtr& pres);

/// s_i(l alpha) from exp(k alpha)^l reduced modulo p. Throws InvalidPower
/// when l < 1 or l > max_power.
IdentitySet de_moivre(const PresentationPtr& pres, int l, int max_power = 12);

struct VerificationReport {
  std::vector<double> max_residual;  // per formula
  std::vector<bool> formula_passed;
  double tolerance = 0.0;
  int samples = 0;
  bool passed = false;

  double worst() const;
};

/// Compares each formula against trig_components at random angles drawn
/// uniformly from [-1, 1]; residuals are absolute, so wider angles would
/// measure the growth of exp(k l alpha) rather than the formulas.
VerificationReport verify_identity(const IdentitySet& ids, int samples, double tol, std::uint64_t seed = 0);

enum class RenderFormat { latex, json };

std::string render(const IdentitySet& ids, RenderFormat format);

/// Inverse of render(json) for a known presentation and kind.
IdentitySet parse_identity_json(std::string_view text, const PresentationPtr& pres, IdentityKind kind,
                                int power = 0);

}  // namespace atrig
