#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "atrig/error.hpp"
#include "atrig/identities.hpp"
#include "support/random.hpp"

namespace atrig {
namespace {

using testing::Sampler;

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(ATRIG_GOLDEN_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SymPoly s(int n, int index, AngleTag tag = AngleTag::alpha) { return SymPoly::symbol(n, {index, tag}); }
SymPoly a(int n, int index) { return s(n, index, AngleTag::alpha); }
SymPoly b(int n, int index) { return s(n, index, AngleTag::beta); }

SymPoly sum(std::initializer_list<SymPoly> terms) {
  SymPoly out(terms.begin()->functions());
  for (const auto& t : terms) out += t;
  return out;
}

std::vector<PresentationPtr> presets(int lo, int hi) {
  std::vector<PresentationPtr> out;
  for (int n = lo; n <= hi; ++n)
    for (auto kind : {PresetKind::hyperbolic, PresetKind::complicated, PresetKind::nil}) out.push_back(preset(kind, n));
  return out;
}

TEST(AddingAngle, HyperbolicThree) {
  const auto ids = adding_angle(preset(PresetKind::hyperbolic, 3));
  ASSERT_EQ(ids.formulas.size(), 3u);
  const int n = 3;
  EXPECT_EQ(ids.formulas[0], sum({a(n, 1) * b(n, 1), a(n, 2) * b(n, 3), a(n, 3) * b(n, 2)}));
  EXPECT_EQ(ids.formulas[1], sum({a(n, 1) * b(n, 2), a(n, 2) * b(n, 1), a(n, 3) * b(n, 3)}));
  EXPECT_EQ(ids.formulas[2], sum({a(n, 1) * b(n, 3), a(n, 2) * b(n, 2), a(n, 3) * b(n, 1)}));
}

TEST(AddingAngle, ComplexAndDual) {
  const int n = 2;
  const auto c = adding_angle(preset(PresetKind::complicated, 2));
  SymPoly cos_sum = a(n, 1) * b(n, 1);
  cos_sum -= a(n, 2) * b(n, 2);
  EXPECT_EQ(c.formulas[0], cos_sum);
  EXPECT_EQ(c.formulas[1], sum({a(n, 1) * b(n, 2), a(n, 2) * b(n, 1)}));

  const auto g = adding_angle(preset(PresetKind::nil, 2));
  EXPECT_EQ(g.formulas[0], a(n, 1) * b(n, 1));
  EXPECT_EQ(g.formulas[1], sum({a(n, 1) * b(n, 2), a(n, 2) * b(n, 1)}));
  EXPECT_EQ(render(g, RenderFormat::json),
            R"({"s1":[[1,["s1a","s1b"]]],"s2":[[1,["s1a","s2b"]],[1,["s2a","s1b"]]]})");
}

TEST(AddingAngle, GeneralModulusReducesTopPower) {
  // k^2 = 3 - 2k: s1 gets 3 s2(a) s2(b), s2 gets -2 s2(a) s2(b).
  const int n = 2;
  const auto ids = adding_angle(Presentation::make({-3, 2}));
  EXPECT_EQ(ids.formulas[0], sum({a(n, 1) * b(n, 1), a(n, 2) * b(n, 2) * Rational(3)}));
  EXPECT_EQ(ids.formulas[1], sum({a(n, 1) * b(n, 2), a(n, 2) * b(n, 1), a(n, 2) * b(n, 2) * Rational(-2)}));
}

TEST(DeMoivre, Examples) {
  const int n = 2;
  const auto h = de_moivre(preset(PresetKind::hyperbolic, 2), 3);
  EXPECT_EQ(h.formulas[0], sum({a(n, 1) * a(n, 1) * a(n, 1), a(n, 1) * a(n, 2) * a(n, 2) * Rational(3)}));
  EXPECT_EQ(h.formulas[1], sum({a(n, 2) * a(n, 2) * a(n, 2), a(n, 2) * a(n, 1) * a(n, 1) * Rational(3)}));

  const auto c = de_moivre(preset(PresetKind::complicated, 2), 2);
  SymPoly cos2 = a(n, 1) * a(n, 1);
  cos2 -= a(n, 2) * a(n, 2);
  EXPECT_EQ(c.formulas[0], cos2);
  EXPECT_EQ(c.formulas[1], a(n, 1) * a(n, 2) * Rational(2));

  for (const auto& p : presets(1, 5)) {
    const auto one = de_moivre(p, 1);
    for (int i = 0; i < p->degree(); ++i) EXPECT_EQ(one.formulas[static_cast<std::size_t>(i)], a(p->degree(), i + 1));
  }
  EXPECT_EQ(render(de_moivre(preset(PresetKind::complicated, 2), 1), RenderFormat::json),
            R"({"s1":[[1,["s1a"]]],"s2":[[1,["s2a"]]]})");
}

TEST(DeMoivre, InvalidPower) {
  auto h2 = preset(PresetKind::hyperbolic, 2);
  for (int l : {0, -1, 13}) {
    try {
      de_moivre(h2, l);
      ADD_FAILURE() << "accepted l = " << l;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidPower);
    }
  }
  EXPECT_NO_THROW(de_moivre(h2, 12));
  EXPECT_NO_THROW(de_moivre(h2, 20, 20));
}

TEST(DeMoivre, SquareIsDiagonalAddingAngle) {
  Sampler sampler(61);
  std::vector<PresentationPtr> algebras = presets(1, 5);
  for (int i = 0; i < 20; ++i) algebras.push_back(sampler.rational(sampler.integer(2, 5)));
  for (const auto& p : algebras) {
    const auto square = de_moivre(p, 2);
    const auto add = adding_angle(p);
    for (std::size_t i = 0; i < square.formulas.size(); ++i) {
      EXPECT_FALSE(square.formulas[i].uses_beta());
      EXPECT_EQ(square.formulas[i], add.formulas[i].beta_as_alpha()) << p->polynomial_string() << " formula " << i;
    }
  }
}

TEST(ExactCoefficients, Conversion) {
  const auto q = exact_coefficients(*Presentation::make({-5.0 / 3.0, 0.25, 2.0}));
  EXPECT_EQ(q[0], Rational(-5, 3));
  EXPECT_EQ(q[1], Rational(1, 4));
  EXPECT_EQ(q[2], Rational(2));

  try {
    exact_coefficients(*Presentation::make({std::numbers::pi, 1.0}));
    FAIL() << "pi has no small-denominator preimage";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonRationalCoefficients);
  }
  EXPECT_THROW(adding_angle(Presentation::make({std::sqrt(2.0)})), Error);
  EXPECT_EQ(exact_coefficients(*Presentation::make({1.0 / 999983.0}))[0], Rational(1, 999983));
}

TEST(Verify, PassesAndCatchesMutation) {
  const auto h3 = adding_angle(preset(PresetKind::hyperbolic, 3));
  const auto report = verify_identity(h3, 200, 1e-9);
  EXPECT_TRUE(report.passed);
  EXPECT_LT(report.worst(), 1e-10);
  EXPECT_EQ(report.samples, 200);
  EXPECT_TRUE(verify_identity(de_moivre(preset(PresetKind::complicated, 2), 3), 200, 1e-9).passed);

  auto mutated = h3;
  auto terms = mutated.formulas[1].terms();
  const auto first = terms.begin();
  mutated.formulas[1].add_term(first->first, Rational(1, 1000));
  const auto bad = verify_identity(mutated, 200, 1e-9);
  EXPECT_FALSE(bad.passed);
  EXPECT_TRUE(bad.formula_passed[0]);
  EXPECT_FALSE(bad.formula_passed[1]);
  EXPECT_TRUE(bad.formula_passed[2]);
}

TEST(Verify, SoundOnPresetsAndRationalPresentations) {
  Sampler sampler(62);
  std::vector<PresentationPtr> algebras = presets(2, 5);
  for (int i = 0; i < 20; ++i) algebras.push_back(sampler.rational(sampler.integer(2, 5)));
  for (const auto& p : algebras) {
    EXPECT_TRUE(verify_identity(adding_angle(p), 200, 1e-9).passed) << p->polynomial_string();
    for (int l = 1; l <= 4; ++l)
      EXPECT_TRUE(verify_identity(de_moivre(p, l), 200, 1e-9).passed) << p->polynomial_string() << " l=" << l;
  }
}

TEST(Render, LatexGoldens) {
  EXPECT_EQ(render(adding_angle(preset(PresetKind::hyperbolic, 3)), RenderFormat::latex),
            read_golden("h3_add_angle.tex"));
  EXPECT_EQ(render(de_moivre(preset(PresetKind::hyperbolic, 2), 3), RenderFormat::latex),
            read_golden("h2_de_moivre_3.tex"));
}

TEST(Render, LatexNaming) {
  const auto c3 = render(adding_angle(preset(PresetKind::complicated, 3)), RenderFormat::latex);
  EXPECT_NE(c3.find("\\cos_3(\\alpha+\\beta) = \\cos_3(\\alpha)\\cos_3(\\beta) - "), std::string::npos) << c3;
  const auto c2 = render(de_moivre(preset(PresetKind::complicated, 2), 2), RenderFormat::latex);
  EXPECT_EQ(c2, "\\[ \\cos(2\\alpha) = \\cos^{2}(\\alpha) - \\sin^{2}(\\alpha) \\]\n"
                "\\[ \\sin(2\\alpha) = 2\\cos(\\alpha)\\sin(\\alpha) \\]\n");
  const auto g = render(adding_angle(Presentation::make({-1.0 / 3.0, 0.5})), RenderFormat::latex);
  EXPECT_NE(g.find("s_1(\\alpha+\\beta) = s_1(\\alpha)s_1(\\beta) + \\frac{1}{3}s_2(\\alpha)s_2(\\beta)"),
            std::string::npos)
      << g;
}

TEST(Render, JsonRoundTrip) {
  Sampler sampler(63);
  std::vector<PresentationPtr> algebras = presets(1, 4);
  for (int i = 0; i < 10; ++i) algebras.push_back(sampler.rational(sampler.integer(2, 4)));
  for (const auto& p : algebras) {
    const auto add = adding_angle(p);
    const auto back = parse_identity_json(render(add, RenderFormat::json), p, IdentityKind::adding_angle);
    ASSERT_EQ(back.formulas.size(), add.formulas.size());
    for (std::size_t i = 0; i < add.formulas.size(); ++i) EXPECT_EQ(back.formulas[i], add.formulas[i]);

    const auto dm = de_moivre(p, 3);
    const auto back_dm = parse_identity_json(render(dm, RenderFormat::json), p, IdentityKind::de_moivre, 3);
    for (std::size_t i = 0; i < dm.formulas.size(); ++i) EXPECT_EQ(back_dm.formulas[i], dm.formulas[i]);
    EXPECT_EQ(back_dm.power, 3);
  }
  auto h2 = preset(PresetKind::hyperbolic, 2);
  for (const char* bad : {"[", R"({"s1":[[1,["s3a"]]],"s2":[]})", R"({"s1":[[1.5,["s1a"]]],"s2":[]})", R"({"s1":[]})"}) {
    try {
      parse_identity_json(bad, h2, IdentityKind::de_moivre, 1);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(SymPoly, Arithmetic) {
  const int n = 2;
  const auto x = a(n, 1), y = b(n, 2);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(x * y, y * x);
  EXPECT_EQ((x + y) * (x + y), sum({x * x, x * y * Rational(2), y * y}));
  const std::vector<double> alpha{0.5, -2.0}, beta{3.0, 4.0};
  EXPECT_DOUBLE_EQ(((x + y) * x * Rational(1, 2)).evaluate(alpha, beta), (0.5 + 4.0) * 0.5 / 2);
  EXPECT_EQ(SymPoly::constant(n, 0).terms().size(), 0u);
}

}  // namespace
}  // namespace atrig
