#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "rigidity/error.hpp"
#include "rigidity/isoparametric.hpp"

using namespace rigidity;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

std::vector<Scalar> values(const PrincipalSpectrum& s) {
  std::vector<Scalar> out;
  for (const auto& pc : s) out.push_back(pc.value);
  return out;
}

// Float oracle: lambda_a = cot(theta + (a-1) pi / g) with cot(theta) = lambda_1.
std::vector<double> cot_ladder(int g, double lambda1) {
  const double theta = std::atan2(1.0, lambda1);
  std::vector<double> out;
  for (int a = 0; a < g; ++a) out.push_back(1.0 / std::tan(theta + a * std::numbers::pi / g));
  return out;
}

// Float oracle for a spectrum's mean curvature and traceless norm.
std::pair<double, double> h2_rho2(const std::vector<std::pair<double, int>>& spectrum) {
  double n = 0, trace = 0, sq = 0;
  for (auto [l, m] : spectrum) {
    n += m;
    trace += m * l;
    sq += m * l * l;
  }
  const double h = trace / n;
  return {h * h, sq - n * h * h};
}

bool is_zero(const Scalar& x) { return x.is_exact() ? x.is_zero() : std::abs(x.to_double()) < 1e-10; }

}  // namespace

TEST(Ladder, ClosedFormExamples) {
  const std::vector<int> m3{1, 1, 1};
  EXPECT_EQ(values(spectrum_from_lambda1(3, m3, sqrt_exact(3)).spectrum),
            (std::vector<Scalar>{sqrt_exact(3), Scalar(0), -sqrt_exact(3)}));

  const std::vector<int> m4{2, 2, 2, 2};
  EXPECT_EQ(values(spectrum_from_lambda1(4, m4, S("1+sqrt(2)")).spectrum),
            (std::vector<Scalar>{S("1+sqrt(2)"), S("-1+sqrt(2)"), S("1-sqrt(2)"), S("-1-sqrt(2)")}));

  const std::vector<int> m6{1, 1, 1, 1, 1, 1};
  EXPECT_EQ(values(spectrum_from_lambda1(6, m6, S("2+sqrt(3)")).spectrum),
            (std::vector<Scalar>{S("2+sqrt(3)"), Scalar(1), S("2-sqrt(3)"), S("-2+sqrt(3)"), Scalar(-1),
                                 S("-2-sqrt(3)")}));
}

TEST(Ladder, AgreesWithCotangentAddition) {
  const std::vector<int> m3{2, 2, 2}, m4{1, 2, 1, 2}, m6{2, 2, 2, 2, 2, 2}, m2{3, 4};
  for (const char* l : {"2", "7/3", "1+sqrt(3)", "3*sqrt(3)"}) {
    for (auto [g, mult] : {std::pair{3, &m3}, std::pair{6, &m6}, std::pair{2, &m2}}) {
      const auto iso = spectrum_from_lambda1(g, *mult, S(l));
      const auto oracle = cot_ladder(g, S(l).to_double());
      ASSERT_EQ(iso.spectrum.size(), static_cast<std::size_t>(g));
      for (int a = 0; a < g; ++a) {
        EXPECT_TRUE(iso.spectrum[a].value.is_exact()) << g << ' ' << l;
        EXPECT_NEAR(iso.spectrum[a].value.to_double(), oracle[a], 1e-9) << g << ' ' << l << ' ' << a;
      }
    }
  }
  for (const char* l : {"2", "3/2", "1+sqrt(2)", "5*sqrt(2)"}) {
    const auto iso = spectrum_from_lambda1(4, m4, S(l));
    const auto oracle = cot_ladder(4, S(l).to_double());
    for (int a = 0; a < 4; ++a) EXPECT_NEAR(iso.spectrum[a].value.to_double(), oracle[a], 1e-9);
  }
}

TEST(Ladder, RejectsOutOfDomain) {
  const std::vector<int> m3{1, 1, 1}, m4{1, 2, 1, 2}, m6{1, 1, 1, 1, 1, 1}, m2{1, 1};
  EXPECT_THROW(spectrum_from_lambda1(3, m3, Scalar(Rational(1, 2))), ParameterError);
  EXPECT_THROW(spectrum_from_lambda1(4, m4, Scalar(1)), ParameterError);
  EXPECT_THROW(spectrum_from_lambda1(6, m6, Scalar(1)), ParameterError);
  EXPECT_THROW(spectrum_from_lambda1(2, m2, Scalar(-1)), ParameterError);
  const std::vector<int> bad3{1, 2, 1}, bad4{1, 2, 2, 1};
  EXPECT_THROW(spectrum_from_lambda1(3, bad3, Scalar(2)), ParameterError);
  EXPECT_THROW(spectrum_from_lambda1(4, bad4, Scalar(2)), ParameterError);
  EXPECT_THROW(spectrum_from_lambda1(5, m2, Scalar(2)), ParameterError);
}

TEST(ExtremalityResidual, Examples) {
  for (const Rational k : {Rational(1), Rational(5, 2), Rational(9)}) {
    for (int m = 1; m <= 5; ++m) {
      EXPECT_TRUE(extremality_residual({{Scalar(1), m}, {Scalar(-1), m}}, k).is_zero());
      EXPECT_TRUE(extremality_residual({{sqrt_exact(3), m}, {Scalar(0), m}, {-sqrt_exact(3), m}}, k).is_zero());
    }
  }
  const PrincipalSpectrum t31{{-sqrt_exact(5), 3}, {sqrt_exact(Rational(1, 5)), 7}};
  EXPECT_TRUE(extremality_residual(t31, 1).is_zero());
  const auto [h2, rho2] = h2_rho2({{-std::sqrt(5.0), 3}, {1 / std::sqrt(5.0), 7}});
  EXPECT_NEAR(h2, 16.0 / 125, 1e-14);
  EXPECT_NEAR(rho2 + 10 * h2, 82.0 / 5, 1e-13);
  EXPECT_THROW(extremality_residual(t31, Rational(1, 2)), ParameterError);
}

TEST(SolveG2, Examples) {
  const auto c22 = solve_g2(4, 2, 1);
  ASSERT_TRUE(c22.torus);
  EXPECT_EQ(c22.torus->radius_sq_first, Rational(1, 2));
  EXPECT_TRUE(c22.torus->mean_norm_sq.is_zero());

  const auto t31 = solve_g2(10, 3, 1);
  ASSERT_TRUE(t31.torus);
  EXPECT_EQ(t31.torus->radius_sq_first, Rational(1, 6));
  EXPECT_EQ(t31.torus->mean_norm_sq, Scalar(Rational(16, 125)));
  EXPECT_EQ(t31.torus->rho_sq, Scalar(Rational(378, 25)));
  EXPECT_TRUE(extremality_residual(t31.torus->spectrum, 1).is_zero());

  const auto none = solve_g2(8, 1, 3);
  EXPECT_FALSE(none.torus);
  EXPECT_NE(none.violated.find("n-2k < m < 2k (2 < 1 < 6 fails)"), std::string::npos) << none.violated;
}

TEST(EnumerateTori, Examples) {
  const auto four = enumerate_tori(4, 1);
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].m, 2);

  std::vector<int> ms;
  for (const auto& t : enumerate_tori(10, 1)) ms.push_back(t.m);
  EXPECT_EQ(ms, (std::vector<int>{3, 4, 5, 6, 7}));

  const auto six = enumerate_tori(6, 3);
  ASSERT_EQ(six.size(), 5u);
  for (const auto& t : six) {
    EXPECT_EQ(t.radius_sq_first, Rational(6 - t.m, 6));
    // Willmore torus W_{m,6-m} has first radius^2 = (n-m)/n.
    const auto w = std::get<PrincipalSpectrum>(catalog::willmore(t.m, 6 - t.m).geometry);
    EXPECT_EQ(w, t.spectrum);
  }
}

TEST(SolveG3, Examples) {
  const auto unique = solve_g3(1, 1);
  EXPECT_EQ(unique.kind, Classification::Kind::unique);
  ASSERT_EQ(unique.solutions.size(), 1u);
  EXPECT_EQ(unique.solutions[0].lambda1, sqrt_exact(3));
  EXPECT_EQ(values(unique.solutions[0].spectrum),
            (std::vector<Scalar>{sqrt_exact(3), Scalar(0), -sqrt_exact(3)}));
  EXPECT_EQ(solve_g3(2, 1).kind, Classification::Kind::all_extremal);
  EXPECT_EQ(solve_g3(8, 4).kind, Classification::Kind::all_extremal);
  EXPECT_THROW(solve_g3(3, 1), ParameterError);
}

TEST(SolveG4, EqualMultiplicities) {
  for (int m = 1; m <= 6; ++m) {
    for (const Rational k : {Rational(1), Rational(3, 2), Rational(5)}) {
      if (2 * k == m) {
        EXPECT_EQ(solve_g4(m, m, k).kind, Classification::Kind::all_extremal);
        continue;
      }
      const auto c = solve_g4(m, m, k);
      ASSERT_EQ(c.kind, Classification::Kind::unique);
      ASSERT_EQ(c.roots.size(), 1u);
      EXPECT_EQ(c.roots[0], Scalar(4));
      EXPECT_EQ(c.solutions[0].lambda1, S("1+sqrt(2)"));
    }
  }
}

TEST(SolveG4, GenericRootAndEmptyCase) {
  const auto c = solve_g4(4, 5, 1);
  ASSERT_EQ(c.kind, Classification::Kind::unique);
  ASSERT_EQ(c.roots.size(), 1u);
  EXPECT_EQ(c.roots[0], S("5/14+1/14*sqrt(5485)"));
  EXPECT_NEAR(c.roots[0].to_double(), 5.6472, 1e-4);
  // Oracle: float quadratic formula on 7x^2 - 5x - 195 = 0.
  EXPECT_NEAR(c.roots[0].to_double(), (5 + std::sqrt(25.0 + 4 * 7 * 195)) / 14, 1e-12);
  EXPECT_EQ(c.polynomial, (std::vector<Rational>{-112, 80, 3120}));
  const Scalar r = extremality_residual(c.solutions[0].spectrum, 1);
  EXPECT_LT(std::abs(r.to_double()), 1e-10);

  const auto none = solve_g4(4, 5, 2);
  EXPECT_EQ(none.kind, Classification::Kind::none);
  EXPECT_TRUE(none.roots.empty());
  EXPECT_EQ(none.polynomial, (std::vector<Rational>{0, 80, 1040}));
}

TEST(SolveG4, FlagsStatementMismatchAndAdmissibility) {
  // k = 2 lies in [m1, m2] = [1, 3]; 2k = 4 does not lie in [1, 3].
  const auto c = solve_g4(1, 3, 2);
  bool mismatch = false;
  for (const auto& note : c.notes) mismatch |= note.find("mismatch") != std::string::npos;
  EXPECT_TRUE(mismatch);
  EXPECT_TRUE(g4_multiplicities_admissible(2, 2));
  EXPECT_TRUE(g4_multiplicities_admissible(4, 5));
  EXPECT_TRUE(g4_multiplicities_admissible(1, 2));
  EXPECT_FALSE(g4_multiplicities_admissible(3, 3));
}

TEST(SolveG6, Examples) {
  for (auto [m, k] : {std::pair{1, Rational(1)}, std::pair{2, Rational(3)}}) {
    const auto c = solve_g6(m, k);
    ASSERT_EQ(c.kind, Classification::Kind::unique);
    EXPECT_EQ(c.solutions[0].lambda1, S("2+sqrt(3)"));
  }
  EXPECT_EQ(solve_g6(2, 1).kind, Classification::Kind::all_extremal);
  EXPECT_THROW(solve_g6(3, 1), ParameterError);
}

// Properties

TEST(IsoProperty, NormalFlipNegatesResidual) {
  for (std::uint64_t t = 0; t < 1'000; ++t) {
    auto e = gen::engine(20, t);
    const int d = gen::squarefree(e);
    PrincipalSpectrum s, flipped;
    const int g = uniform_int(e, 1, 5);
    for (int i = 0; i < g; ++i) {
      const Scalar v = gen::scalar_in(e, uniform_int(e, 0, 1) ? d : 0);
      const int m = uniform_int(e, 1, 4);
      s.push_back({v, m});
      flipped.push_back({-v, m});
    }
    const Rational k(uniform_int(e, 2, 20), 2);
    const Scalar r = extremality_residual(s, k);
    ASSERT_TRUE(r.is_exact());
    ASSERT_EQ(extremality_residual(flipped, k), -r);
  }
}

TEST(IsoProperty, ToriSatisfyTheRhoIdentity) {
  for (int n = 2; n <= 16; ++n) {
    for (int twice_k = 2; twice_k <= 2 * n; ++twice_k) {
      const Rational k(twice_k, 2);
      for (const auto& t : enumerate_tori(n, k)) {
        ASSERT_GT(t.radius_sq_first, 0);
        ASSERT_LT(t.radius_sq_first, 1);
        const Scalar h2 = t.mean_norm_sq;
        ASSERT_EQ(t.rho_sq, Scalar(n) + Scalar(Rational(n) * (Rational(n) / (2 * k) - 1)) * h2);
        ASSERT_TRUE(extremality_residual(t.spectrum, k).is_zero());
        // Float oracle from the radii.
        const double a2 = to_double(t.radius_sq_first);
        const auto [fh2, frho2] =
            h2_rho2({{-std::sqrt((1 - a2) / a2), t.m}, {std::sqrt(a2 / (1 - a2)), n - t.m}});
        ASSERT_NEAR(h2.to_double(), fh2, 1e-9 * std::max(1.0, fh2));
        ASSERT_NEAR(t.rho_sq.to_double(), frho2, 1e-9 * std::max(1.0, frho2));
      }
    }
  }
}

TEST(IsoProperty, ClosedFormSolutionsAreMinimal) {
  const auto minimal = [](const IsoSpectrum& s) {
    Scalar sum(0);
    for (const auto& pc : s.spectrum) sum += Scalar(pc.multiplicity) * pc.value;
    return sum.is_zero();
  };
  for (int m : {1, 2, 4, 8}) {
    for (int tk = 2; tk <= 16; ++tk) {
      const Rational k(tk, 2);
      const auto c = solve_g3(m, k);
      for (const auto& s : c.solutions) EXPECT_TRUE(minimal(s));
    }
  }
  for (int m : {1, 2}) {
    for (int tk = 2; tk <= 8; ++tk) {
      for (const auto& s : solve_g6(m, Rational(tk, 2)).solutions) EXPECT_TRUE(minimal(s));
    }
  }
  for (int m = 1; m <= 6; ++m) {
    for (const auto& s : solve_g4(m, m, 1).solutions) EXPECT_TRUE(minimal(s));
  }
}

TEST(IsoProperty, G4RootCountTrichotomy) {
  for (int m2 = 2; m2 <= 10; ++m2) {
    for (int m1 = 1; m1 < m2; ++m1) {
      for (int tk = 2; tk <= 16; ++tk) {
        const Rational k(tk, 2);
        const auto c = solve_g4(m1, m2, k);
        const bool window = m1 <= tk && tk <= m2;
        ASSERT_EQ(c.roots.size(), window ? 0u : 1u) << m1 << ' ' << m2 << ' ' << tk;
        // Float oracle: count positive roots of the quadratic directly.
        const double a = (tk - m1) * m1 * (m1 + 2.0 * m2);
        const double b = 4.0 * m1 * m2 * (m2 - m1);
        const double cc = -16.0 * (tk - m2) * m2 * (2.0 * m1 + m2);
        std::vector<double> roots;
        if (a == 0) {
          roots.push_back(-cc / b);
        } else {
          const double disc = b * b - 4 * a * cc;
          if (disc >= 0) {
            roots.push_back((-b + std::sqrt(disc)) / (2 * a));
            roots.push_back((-b - std::sqrt(disc)) / (2 * a));
          }
        }
        std::size_t positive = 0;
        for (double r : roots) positive += r > 1e-12;
        ASSERT_EQ(c.roots.size(), positive);
        for (const auto& s : c.solutions) {
          ASSERT_TRUE(is_zero(extremality_residual(s.spectrum, k))) << m1 << ' ' << m2 << ' ' << tk;
        }
      }
    }
  }
}
