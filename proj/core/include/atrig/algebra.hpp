#pragma once

// Principal real algebras R[k]/<p(k)> with p monic, their elements in the
// power basis {1, k, ..., k^(n-1)}, and the regular representation.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atrig {

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// The algebra R[k]/<p(k)> where
///   p(k) = k^n + c_{n-1} k^{n-1} + ... + c_1 k + c_0.
/// Only c_0..c_{n-1} are stored; the leading coefficient is always 1.
class Presentation {
 public:
  /// Throws EmptyCoefficients or NonFiniteCoefficient.
  static PresentationPtr make(std::vector<double> coeffs,
                              std::optional<std::string> label = std::nullopt);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::optional<std::string>& label() const noexcept { return label_; }

  bool is_depressed() const noexcept { return depressed_; }
  bool is_pure_power() const noexcept { return pure_power_; }
  /// p(k) = k^n exactly.
  bool is_nil() const noexcept { return pure_power_ && coeffs_[0] == 0.0; }

  /// Same ring: equal degree and bitwise-equal coefficients. Labels are
  /// cosmetic and ignored.
  bool same_ring(const Presentation& other) const noexcept;

  /// "k^2 - 1" style rendering of p.
  std::string polynomial_string() const;

 private:
  Presentation(std::vector<double> coeffs, std::optional<std::string> label);

  std::vector<double> coeffs_;
  std::optional<std::string> label_;
  bool depressed_ = false;
  bool pure_power_ = false;
};

enum class PresetKind { hyperbolic, complicated, nil };

/// H_n (k^n - 1), C_n (k^n + 1) or Gamma_n (k^n). Throws InvalidDegree for n < 1.
PresentationPtr preset(PresetKind kind, int n);
/// Kind by name: "hyperbolic", "complicated" or "nil". Throws InvalidKind.
PresentationPtr preset(std::string_view kind, int n);

/// Parses a short algebra name: H<n>, C<n> or Gamma<n>. Throws ParseError.
PresentationPtr parse_preset_name(std::string_view name);

/// Parses the algebra file format {"label": "...", "coeffs": [c0, ...]}.
PresentationPtr parse_algebra_json(std::string_view text);

/// Coordinates x_1..x_n of x_1 + x_2 k + ... + x_n k^(n-1).
class Element {
 public:
  /// Throws ShapeMismatch if coords.size() != degree.
  Element(PresentationPtr pres, std::vector<double> coords);

  static Element zero(PresentationPtr pres);
  static Element scalar(PresentationPtr pres, double value);
  static Element one(PresentationPtr pres) { return scalar(std::move(pres), 1.0); }
  /// k^power, reduced modulo p.
  static Element generator_power(PresentationPtr pres, int power);

  const PresentationPtr& presentation() const noexcept { return pres_; }
  int degree() const noexcept { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  double norm_inf() const noexcept;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(double s) noexcept;

 private:
  PresentationPtr pres_;
  std::vector<double> coords_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(Element a, double s);
Element operator*(double s, Element a);

/// Algebra product: polynomial product reduced modulo p(k).
/// Throws PresentationMismatch.
Element mul(const Element& z, const Element& w);
inline Element operator*(const Element& z, const Element& w) { return mul(z, w); }

/// Throws PresentationMismatch unless both elements live in the same ring.
void require_same_ring(const Element& z, const Element& w);

/// Parses "x1,x2,...,xn" (ascending powers of k). Throws ParseError or ShapeMismatch.
Element parse_element(PresentationPtr pres, std::string_view literal);

/// Matrix of left multiplication by z. Column j holds the coordinates of
/// z * k^j (0-based), so column 0 is z itself.
class RepMatrix {
 public:
  explicit RepMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const noexcept { return n_; }
  double operator()(int row, int col) const { return data_[index(row, col)]; }
  double& operator()(int row, int col) { return data_[index(row, col)]; }
  std::span<const double> column(int col) const {
    return std::span<const double>(data_).subspan(static_cast<std::size_t>(col) * n_, n_);
  }

  RepMatrix operator*(const RepMatrix& rhs) const;
  std::vector<double> apply(std::span<const double> v) const;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(col) * n_ + static_cast<std::size_t>(row);
  }

  int n_;
  std::vector<double> data_;  // column-major
};

RepMatrix rep_matrix(const Element& z);

/// Determinant by LU with partial pivoting.
double determinant(const RepMatrix& m);

/// F(z) = det M(z).
double pythagorean(const Element& z);

/// z is a unit iff |F(z)| > 1e-12 * max(1, |z|_inf^n).
bool is_unit(const Element& z);

/// Solves M(z) w = e_1. Throws NotAUnit.
Element invert(const Element& z);

struct Depressed {
  PresentationPtr presentation;
  /// s = -c_{n-1}/n; the old generator maps to (new generator + s).
  double shift = 0.0;
};

/// Presentation of R[k]/<p(k + s)>, which has no k^(n-1) term.
Depressed depress(const PresentationPtr& pres);

/// Carries an element of the original ring into the depressed ring by
/// substituting k -> k + shift.
Element to_depressed(const Element& z, const Depressed& target);

}  // namespace atrig
