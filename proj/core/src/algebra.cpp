#include "atrig/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "atrig/error.hpp"
#include "lu.hpp"

namespace atrig {

namespace {

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// In-place reduction of a coefficient list of any length to degree < n.
void reduce_in_place(std::vector<double>& poly, std::span<const double> modulus) {
  const std::size_t n = modulus.size();
  for (std::size_t d = poly.size(); d-- > n;) {
    const double lead = poly[d];
    poly[d] = 0.0;
    if (lead == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) poly[d - n + i] -= modulus[i] * lead;
  }
  poly.resize(n);
}

// Coefficients of q(k + s) given those of q(k), ascending order.
void taylor_shift(std::vector<double>& a, double s) {
  const std::size_t m = a.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = m - 1; j-- > i;) a[j] += s * a[j + 1];
}

}  // namespace

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(std::vector<double> coeffs, std::optional<std::string> label)
    : coeffs_(std::move(coeffs)), label_(std::move(label)) {
  depressed_ = coeffs_.back() == 0.0;
  pure_power_ = std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](double c) { return c == 0.0; });
}

PresentationPtr Presentation::make(std::vector<double> coeffs, std::optional<std::string> label) {
  if (coeffs.empty()) throw Error(ErrorCode::EmptyCoefficients, "modulus polynomial needs at least one coefficient");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!std::isfinite(coeffs[i]))
      throw Error(ErrorCode::NonFiniteCoefficient, "coefficient c" + std::to_string(i) + " is not finite");
  }
  return PresentationPtr(new Presentation(std::move(coeffs), std::move(label)));
}

bool Presentation::same_ring(const Presentation& other) const noexcept {
  return this == &other || coeffs_ == other.coeffs_;
}

std::string Presentation::polynomial_string() const {
  std::ostringstream os;
  const int n = degree();
  os << "k";
  if (n > 1) os << "^" << n;
  for (int i = n - 1; i >= 0; --i) {
    const double c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0.0) continue;
    os << (c < 0 ? " - " : " + ");
    const double a = std::abs(c);
    if (a != 1.0 || i == 0) os << format_real(a);
    if (i >= 1) os << "k";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

PresentationPtr preset(PresetKind kind, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDegree, "preset degree must be >= 1, got " + std::to_string(n));
  std::vector<double> coeffs(static_cast<std::size_t>(n), 0.0);
  std::string label;
  switch (kind) {
    case PresetKind::hyperbolic:
      coeffs[0] = -1.0;
      label = "H" + std::to_string(n);
      break;
    case PresetKind::complicated:
      coeffs[0] = 1.0;
      label = "C" + std::to_string(n);
      break;
    case PresetKind::nil:
      label = "Gamma" + std::to_string(n);
      break;
  }
  return Presentation::make(std::move(coeffs), std::move(label));
}

PresentationPtr preset(std::string_view kind, int n) {
  if (kind == "hyperbolic") return preset(PresetKind::hyperbolic, n);
  if (kind == "complicated") return preset(PresetKind::complicated, n);
  if (kind == "nil") return preset(PresetKind::nil, n);
  throw Error(ErrorCode::InvalidKind, "unknown preset kind '" + std::string(kind) + "'");
}

PresentationPtr parse_preset_name(std::string_view name) {
  name = trim(name);
  PresetKind kind;
  std::string_view digits;
  if (name.starts_with("Gamma")) {
    kind = PresetKind::nil;
    digits = name.substr(5);
  } else if (name.starts_with("H")) {
    kind = PresetKind::hyperbolic;
    digits = name.substr(1);
  } else if (name.starts_with("C")) {
    kind = PresetKind::complicated;
    digits = name.substr(1);
  } else {
    throw Error(ErrorCode::ParseError, "unknown algebra name '" + std::string(name) + "'");
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 4)
    throw Error(ErrorCode::ParseError, "bad algebra dimension in '" + std::string(name) + "'");
  return preset(kind, std::stoi(std::string(digits)));
}

PresentationPtr parse_algebra_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("algebra file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
    throw Error(ErrorCode::ParseError, "algebra file must be an object with a \"coeffs\" array");
  std::vector<double> coeffs;
  for (const auto& c : doc["coeffs"]) {
    if (!c.is_number()) throw Error(ErrorCode::ParseError, "algebra coefficients must be numbers");
    coeffs.push_back(c.get<double>());
  }
  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw Error(ErrorCode::ParseError, "algebra label must be a string");
    label = doc["label"].get<std::string>();
  }
  return Presentation::make(std::move(coeffs), std::move(label));
}

// ---------------------------------------------------------------------------
// Element

Element::Element(PresentationPtr pres, std::vector<double> coords) : pres_(std::move(pres)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != pres_->degree())
    throw Error(ErrorCode::ShapeMismatch, "element has " + std::to_string(coords_.size()) +
                                              " coordinates but the algebra has dimension " +
                                              std::to_string(pres_->degree()));
}

Element Element::zero(PresentationPtr pres) {
  const auto n = static_cast<std::size_t>(pres->degree());
  return Element(std::move(pres), std::vector<double>(n, 0.0));
}

Element Element::scalar(PresentationPtr pres, double value) {
  const auto n = static_cast<std::size_t>(pres->degree());
  std::vector<double> c(n, 0.0);
  c[0] = value;
  return Element(std::move(pres), std::move(c));
}

Element Element::generator_power(PresentationPtr pres, int power) {
  if (power < 0) throw Error(ErrorCode::InvalidPower, "negative generator power");
  std::vector<double> poly(static_cast<std::size_t>(std::max(power + 1, pres->degree())), 0.0);
  poly[static_cast<std::size_t>(power)] = 1.0;
  reduce_in_place(poly, pres->coeffs());
  return Element(std::move(pres), std::move(poly));
}

double Element::norm_inf() const noexcept {
  double m = 0.0;
  for (double c : coords_) m = std::max(m, std::abs(c));
  return m;
}

Element& Element::operator+=(const Element& other) {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Element& Element::operator*=(double s) noexcept {
  for (double& c : coords_) c *= s;
  return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(Element a, double s) { return a *= s; }
Element operator*(double s, Element a) { return a *= s; }

void require_same_ring(const Element& z, const Element& w) {
  if (!z.presentation()->same_ring(*w.presentation()))
    throw Error(ErrorCode::PresentationMismatch,
                z.presentation()->polynomial_string() + " vs " + w.presentation()->polynomial_string());
}

Element mul(const Element& z, const Element& w) {
  require_same_ring(z, w);
  const std::size_t n = static_cast<std::size_t>(z.degree());
  std::vector<double> prod(2 * n - 1, 0.0);
  const auto a = z.coords();
  const auto b = w.coords();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  reduce_in_place(prod, z.presentation()->coeffs());
  return Element(z.presentation(), std::move(prod));
}

Element parse_element(PresentationPtr pres, std::string_view literal) {
  std::vector<double> coords;
  std::string_view rest = literal;
  while (true) {
    const auto comma = rest.find(',');
    const std::string token(trim(rest.substr(0, comma)));
    if (token.empty()) throw Error(ErrorCode::ParseError, "empty coordinate in '" + std::string(literal) + "'");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || errno == ERANGE || !std::isfinite(v))
      throw Error(ErrorCode::ParseError, "bad coordinate '" + token + "'");
    coords.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Element(std::move(pres), std::move(coords));
}

// ---------------------------------------------------------------------------
// Regular representation

RepMatrix RepMatrix::operator*(const RepMatrix& rhs) const {
  RepMatrix out(n_);
  for (int c = 0; c < n_; ++c)
    for (int k = 0; k < n_; ++k) {
      const double b = rhs(k, c);
      if (b == 0.0) continue;
      for (int r = 0; r < n_; ++r) out(r, c) += (*this)(r, k) * b;
    }
  return out;
}

std::vector<double> RepMatrix::apply(std::span<const double> v) const {
  std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
  for (int c = 0; c < n_; ++c)
    for (int r = 0; r < n_; ++r) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

RepMatrix rep_matrix(const Element& z) {
  const int n = z.degree();
  RepMatrix m(n);
  for (int j = 0; j < n; ++j) {
    const Element col = mul(z, Element::generator_power(z.presentation(), j));
    for (int i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

namespace {

std::vector<double> row_major(const RepMatrix& m) {
  const int n = m.size();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r) * n + c] = m(r, c);
  return a;
}

}  // namespace

double determinant(const RepMatrix& m) {
  return detail::lu_determinant(detail::lu_factor(m.size(), row_major(m)));
}

double pythagorean(const Element& z) { return determinant(rep_matrix(z)); }

bool is_unit(const Element& z) {
  const double scale = std::max(1.0, std::pow(z.norm_inf(), z.degree()));
  return std::abs(pythagorean(z)) > 1e-12 * scale;
}

Element invert(const Element& z) {
  if (!is_unit(z)) throw Error(ErrorCode::NotAUnit, "Pythagorean function vanishes at this element");
  const RepMatrix m = rep_matrix(z);
  const auto lu = detail::lu_factor(m.size(), row_major(m));
  std::vector<double> e1(static_cast<std::size_t>(m.size()), 0.0);
  e1[0] = 1.0;
  auto w = detail::lu_solve(lu, e1);
  if (!w) throw Error(ErrorCode::NotAUnit, "regular representation is singular");
  return Element(z.presentation(), std::move(*w));
}

// ---------------------------------------------------------------------------
// Depression

Depressed depress(const PresentationPtr& pres) {
  if (pres->is_depressed()) return {pres, 0.0};
  const int n = pres->degree();
  const double s = -pres->coeff(n - 1) / n;
  std::vector<double> full(pres->coeffs().begin(), pres->coeffs().end());
  full.push_back(1.0);
  taylor_shift(full, s);
  full.pop_back();
  full.back() = 0.0;  // vanishes analytically; drop the rounding residue
  std::optional<std::string> label;
  if (pres->label()) label = *pres->label() + "-depressed";
  return {Presentation::make(std::move(full), std::move(label)), s};
}

Element to_depressed(const Element& z, const Depressed& target) {
  if (z.degree() != target.presentation->degree())
    throw Error(ErrorCode::PresentationMismatch, "element does not belong to the source of this depression");
  std::vector<double> c(z.coords().begin(), z.coords().end());
  taylor_shift(c, target.shift);
  return Element(target.presentation, std::move(c));
}

}  // namespace atrig
