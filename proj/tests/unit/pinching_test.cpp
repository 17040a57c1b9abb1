#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rigidity/error.hpp"
#include "rigidity/isoparametric.hpp"
#include "rigidity/pinching.hpp"

using namespace rigidity;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }
Scalar Q(long num, long den = 1) { return Scalar(Rational(num, den)); }

// Independent float derivation of the Sobolev constants.
double ball_volume(int n) { return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1); }
double sobolev_c(int n) {
  return std::pow(2.0, n) * std::pow(n + 1.0, 1 + 1.0 / n) / ((n - 1.0) * std::pow(ball_volume(n), 1.0 / n));
}
double frak_a(int n, double t) {
  const double c = sobolev_c(n);
  return (n - 2.0) * (n - 2.0) / (4 * (n - 1.0) * (n - 1.0) * (1 + t)) / (c * c);
}

double eps(EpsilonVariant v, int n, int p, Rational k, Rational h0_sq, Rational delta0) {
  EpsilonInputs in;
  in.variant = v;
  in.n = n;
  in.p = p;
  in.k = k;
  in.H0_sq = h0_sq;
  in.delta0 = delta0;
  return epsilon(in).epsilon;
}

}  // namespace

TEST(Bounds, C1Examples) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(c1(n, 1, Q(0), Q(3), 2).is_zero());
  EXPECT_EQ(c1(2, 2, Q(0), Q(5), 1), Q(1, 3));
  EXPECT_EQ(c1(4, 1, Q(1), Q(0), 2), Q(1));
  EXPECT_THROW(c1(4, 1, Q(-1), Q(0), 2), ParameterError);
  EXPECT_THROW(c1(4, 1, Q(1), Q(0), Rational(1, 2)), ParameterError);
}

TEST(Bounds, C1PrimeExamples) {
  EXPECT_EQ(c1_prime(2, Q(0), Q(7), 1), Q(1, 3));
  EXPECT_EQ(c1_prime(4, Q(0), Q(7), 3), Q(2, 5));
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(c1_prime(n, Q(0), Q(0), Rational(n, 2)), Q(n, 2 * (n + 1)));
}

TEST(Bounds, C2Examples) {
  for (int n = 4; n <= 7; ++n) EXPECT_EQ(c2(n, Q(0), Q(2), 3), Q(n - 2));
  EXPECT_EQ(c2(4, Q(1), Q(0), 1), Q(4));
  const Scalar v = c2(6, Q(1), Q(1), 3);
  EXPECT_TRUE(v.is_exact());
  EXPECT_EQ(v, Q(9) + Q(16) / sqrt_exact(30));
  EXPECT_NEAR(v.to_double(), 9 + 16 / std::sqrt(30.0), 1e-14);
  EXPECT_THROW(c2(3, Q(0), Q(0), 1), ParameterError);
}

TEST(Bounds, C3Examples) {
  for (int n = 2; n <= 8; ++n) {
    for (const Rational k : {Rational(1), Rational(3, 2), Rational(4)}) {
      const Scalar h = S("1/2+1/3*sqrt(2)");
      EXPECT_EQ(c3(n, 1, h, k), Q(n) + Q(n) * (Scalar(Rational(n) / (2 * k)) - Q(1)) * h * h);
      EXPECT_EQ(c3(n, 1, Q(0), k), Q(n));
    }
  }
  EXPECT_EQ(c3(2, 2, Q(0), 1), Q(4, 3));
}

TEST(Bounds, CrossTermWithMixedFieldsDegrades) {
  const Scalar v = c1(5, 1, S("1+sqrt(2)"), sqrt_exact(3), 1);
  EXPECT_FALSE(v.is_exact());
  const double h = 1 + std::sqrt(2.0);
  const double cross = 3 * h * std::sqrt(3.0) / std::sqrt(20.0);
  EXPECT_NEAR(v.to_double(), cross + (1 - 1.5) * h * h, 1e-12);
  const Scalar pure = c1(5, 1, sqrt_exact(2), sqrt_exact(3), 1);
  EXPECT_TRUE(pure.is_exact());
  EXPECT_EQ(pure, Q(3) * sqrt_exact(Rational(3, 10)) - Q(1));
}

TEST(Verdict, CliffordSaturatesScalarAndSectional) {
  for (int m = 1; m <= 6; ++m) {
    for (const Rational k : {Rational(1), Rational(2), Rational(m)}) {
      const auto r = verdict(catalog::clifford(m, m), k);
      EXPECT_EQ(r.rho_sq, Q(2 * m));
      EXPECT_EQ(r.c3, Q(2 * m));
      EXPECT_TRUE(r.k_min.is_zero());
      EXPECT_TRUE(r.c1.is_zero());
      EXPECT_EQ(r.verdict("thm_scal").status, Status::saturated);
      EXPECT_EQ(r.verdict("thm_sec").status, Status::saturated);
      EXPECT_TRUE(r.verdict("thm_scal").margin->is_exact());
    }
  }
}

TEST(Verdict, Veronese) {
  const auto r = verdict(catalog::veronese_surface(), 1);
  EXPECT_EQ(r.rho_sq, Q(4, 3));
  EXPECT_EQ(r.c3, Q(4, 3));
  EXPECT_EQ(r.k_min, Q(1, 3));
  EXPECT_EQ(r.c1_prime, Q(1, 3));
  EXPECT_EQ(r.verdict("thm_scal").status, Status::saturated);
  EXPECT_EQ(r.verdict("thm_sec_n").status, Status::saturated);
  EXPECT_EQ(r.verdict("thm_ricci").status, Status::not_applicable);
  EXPECT_FALSE(r.c2);
  for (const auto& e : r.el_residual) EXPECT_TRUE(e.is_zero());
}

TEST(Verdict, RoundSpheresHoldStrictly) {
  for (int n = 4; n <= 6; ++n) {
    for (const Rational k : {Rational(1), Rational(n, 2)}) {
      for (const char* h : {"0", "1/2", "2"}) {
        const auto r = verdict(catalog::round_sphere(n, S(h)), k);
        EXPECT_TRUE(r.rho_sq.is_zero());
        for (const auto& v : r.verdicts) {
          EXPECT_EQ(v.status, Status::holds_strictly) << n << ' ' << h << ' ' << v.theorem;
        }
      }
    }
  }
}

TEST(Verdict, MarginClassification) {
  EXPECT_EQ(classify_margin(Q(0)), Status::saturated);
  EXPECT_EQ(classify_margin(Q(1, 1000000)), Status::holds_strictly);
  EXPECT_EQ(classify_margin(Q(-1, 1000000)), Status::fails);
  EXPECT_EQ(classify_margin(Scalar::approximate(5e-11)), Status::saturated);
  EXPECT_EQ(classify_margin(Scalar::approximate(-5e-11)), Status::saturated);
  EXPECT_EQ(classify_margin(Scalar::approximate(2e-10)), Status::holds_strictly);
}

TEST(Sobolev, Examples) {
  EXPECT_NEAR(sobolev_constants(4, 1).B, 1.0 / 9, 1e-15);
  EXPECT_NEAR(sobolev_constants(3, 2).B, 1.0 / 32, 1e-15);
  EXPECT_NEAR(sobolev_constants(3, 1).A / sobolev_constants(3, 3).A, 2, 1e-14);
  EXPECT_LT(sobolev_constants(5, 1e12).A, 1e-12);
  for (int n = 3; n <= 8; ++n) {
    const auto c = sobolev_constants(n, 0.5);
    EXPECT_NEAR(c.omega, ball_volume(n), 1e-14 * ball_volume(n));
    EXPECT_NEAR(c.C, sobolev_c(n), 1e-12 * sobolev_c(n));
    EXPECT_NEAR(c.A, frak_a(n, 0.5), 1e-12 * frak_a(n, 0.5));
  }
  EXPECT_NEAR(sobolev_constants(2 + 1, 1).omega, 4 * std::numbers::pi / 3, 1e-14);
  EXPECT_THROW(sobolev_constants(3, 0), ParameterError);
  EXPECT_THROW(sobolev_constants(2, 1), ParameterError);
}

TEST(Epsilon, RicciWorkedExample) {
  EpsilonInputs in;
  in.variant = EpsilonVariant::ricci;
  in.n = 4;
  in.k = 1;
  in.H0_sq = 0;
  in.delta0 = 1;
  const auto r = epsilon(in);
  EXPECT_EQ(r.kato, Rational(3, 2));
  EXPECT_EQ(r.t, Rational(1, 24));
  const double expected = 0.25 * 1.5 * frak_a(4, 1.0 / 24);
  EXPECT_NEAR(r.epsilon, expected, 1e-12 * expected);
}

TEST(Epsilon, SecVariantAtHypersurfaceCodimension) {
  for (int n = 3; n <= 6; ++n) {
    const Rational k(3, 2);
    const auto r = epsilon({EpsilonVariant::sec, n, 1, k, Rational(1, 4), Rational(2)});
    EXPECT_EQ(r.coefficient, n);
    const double kato = (2 * 1.5 * n - n + 2) / (n * 2.25);
    EXPECT_NEAR(r.epsilon, kato * frak_a(n, to_double(r.t)) / n, 1e-12 * r.epsilon);
    // t from kato * B(n,t) * (1 + H0^2) = n * delta0.
    const double base = (n - 2.0) * (n - 2.0) / (4 * (n - 1.0) * (n - 1.0));
    EXPECT_NEAR(to_double(r.t), kato * base * 1.25 / (n * 2.0), 1e-15);
  }
}

TEST(Epsilon, RejectsInvalidInputs) {
  EXPECT_THROW(epsilon({EpsilonVariant::ricci, 3, 1, 1, 0, 1}), ParameterError);
  EXPECT_THROW(epsilon({EpsilonVariant::sec, 4, 1, 1, 0, 0}), ParameterError);
  EXPECT_THROW(epsilon({EpsilonVariant::scal_lowk, 4, 1, 2, 0, 1}), ParameterError);
  EXPECT_THROW(epsilon({EpsilonVariant::sec, 2, 1, 1, 0, 1}), ParameterError);
  EXPECT_THROW(parse_epsilon_variant("scalar"), ParameterError);
  EXPECT_EQ(parse_epsilon_variant("sec-n"), EpsilonVariant::sec_n);
}

// Properties

TEST(PinchingProperty, EpsilonMonotoneOnGrid) {
  const EpsilonVariant variants[] = {EpsilonVariant::sec, EpsilonVariant::sec_n, EpsilonVariant::ricci,
                                     EpsilonVariant::scal, EpsilonVariant::scal_lowk};
  for (auto v : variants) {
    for (int p : {1, 3}) {
      const int n = 6;
      const Rational k(1);
      for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
          const Rational h(i, 4), d(j + 1, 10);
          const double here = eps(v, n, p, k, h, d);
          ASSERT_GT(here, 0);
          if (i + 1 < 10) {
            const double next = eps(v, n, p, k, Rational(i + 1, 4), d);
            if (v == EpsilonVariant::scal_lowk) {
              ASSERT_EQ(next, here);
            } else {
              ASSERT_LT(next, here) << to_string(v);
            }
          }
          if (j + 1 < 10) ASSERT_GT(eps(v, n, p, k, h, Rational(j + 2, 10)), here) << to_string(v);
        }
      }
    }
  }
}

TEST(PinchingProperty, C3AtZeroMeanCurvatureIsIndependentOfK) {
  for (int n = 2; n <= 10; ++n) {
    for (int p = 1; p <= 4; ++p) {
      const Scalar base = c3(n, p, Q(0), 1);
      for (int tk = 3; tk <= 20; ++tk) ASSERT_EQ(c3(n, p, Q(0), Rational(tk, 2)), base);
    }
  }
}

TEST(PinchingProperty, ToriAttainC3) {
  for (int n = 2; n <= 14; ++n) {
    for (int tk = 2; tk <= 2 * n; ++tk) {
      const Rational k(tk, 2);
      for (const auto& t : enumerate_tori(n, k)) {
        const Scalar h = sqrt(t.mean_norm_sq);
        ASSERT_EQ(t.rho_sq, c3(n, 1, h, k)) << n << ' ' << t.m << ' ' << to_string(k);
      }
    }
  }
}

TEST(PinchingProperty, ZeroMeanHypersurfaceAndVeroneseValues) {
  for (int n = 2; n <= 8; ++n) {
    for (const char* rho : {"0", "1", "3/2+sqrt(5)"}) ASSERT_TRUE(c1(n, 1, Q(0), S(rho), 1).is_zero());
  }
  for (int tk = 2; tk <= 10; ++tk) {
    ASSERT_EQ(c1_prime(2, Q(0), Q(1), Rational(tk, 2)), Q(1, 3));
  }
}
