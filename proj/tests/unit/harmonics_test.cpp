// Copyright 2026 The qdiff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdiff/error.hpp"
#include "qdiff/harmonics.hpp"

namespace qdiff {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Harmonic, ClosedForms) {
  for (double colat : {0.0, 0.3, 1.2, kPi}) {
    EXPECT_NEAR(harmonic(0, 0, colat, 0.7).real(), 1.0 / std::sqrt(4.0 * kPi), 1e-15);
    EXPECT_NEAR(harmonic(1, 0, colat, 0.7).real(), std::sqrt(3.0 / (4.0 * kPi)) * std::cos(colat), 1e-15);
  }
  // Condon-Shortley: Y_{1,1} = -sqrt(3/8pi) sin(theta) e^{i phi}.
  const Complex y11 = harmonic(1, 1, 0.8, 0.3);
  EXPECT_NEAR(std::abs(y11 + std::sqrt(3.0 / (8.0 * kPi)) * std::sin(0.8) * std::polar(1.0, 0.3)), 0.0, 1e-15);
}

TEST(Harmonic, MatchesStandardLibrary) {
  oracles::Rng rng(41);
  std::uniform_real_distribution<double> uc(0.0, kPi);
  std::uniform_real_distribution<double> ul(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const double c = uc(rng);
    const double p = ul(rng);
    for (int l = 0; l <= 24; ++l) {
      for (int m = -l; m <= l; ++m) {
        const Complex ref = oracles::reference_harmonic(l, m, c, p);
        ASSERT_NEAR(std::abs(harmonic(l, m, c, p) - ref), 0.0, 1e-12) << l << "," << m;
      }
    }
  }
}

TEST(Harmonic, ConjugationSymmetry) {
  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      EXPECT_NEAR(std::abs(std::conj(harmonic(l, m, 1.1, 2.3)) - sign * harmonic(l, -m, 1.1, 2.3)), 0.0, 1e-15);
    }
}

TEST(Harmonic, RejectsBadIndices) {
  EXPECT_THROW(harmonic(2, 3, 0.1, 0.1), Error);
  EXPECT_THROW(harmonic(2, 1, -0.1, 0.1), Error);
}

TEST(GaussLegendre, WeightsIntegratePolynomials) {
  std::vector<double> colat;
  std::vector<double> w;
  gauss_legendre(9, colat, w);
  double sum = 0.0;
  double x8 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sum += w[i];
    x8 += w[i] * std::pow(std::cos(colat[i]), 16);
  }
  EXPECT_NEAR(sum, 2.0, 1e-14);
  EXPECT_NEAR(x8, 2.0 / 17.0, 1e-14);
  for (std::size_t i = 1; i < colat.size(); ++i) EXPECT_GT(colat[i], colat[i - 1]);
}

TEST(Transforms, AnalyzeSingleHarmonic) {
  GridField g = make_grid(8, 15);
  for (int i = 0; i < g.nlat(); ++i)
    for (int k = 0; k < g.nlon; ++k) g.at(i, k) = harmonic(2, 1, g.colat[static_cast<std::size_t>(i)], g.longitude(k));
  const HarmonicCoefficients c = analyze(g, 6);
  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m) EXPECT_NEAR(std::abs(c(l, m) - Complex(l == 2 && m == 1 ? 1.0 : 0.0)), 0.0, 1e-12);
}

TEST(Transforms, ZeroAndConstant) {
  const HarmonicCoefficients zero = analyze(make_grid(5, 9), 4);
  EXPECT_EQ(zero.norm(), 0.0);
  HarmonicCoefficients c(3);
  c(0, 0) = std::sqrt(4.0 * kPi);
  const GridField g = synthesize(c, 6, 11);
  for (const Complex& v : g.values) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-14);
  HarmonicCoefficients y10(2);
  y10(1, 0) = 1.0;
  const GridField gy = synthesize(y10, 4, 7);
  EXPECT_NEAR(std::abs(gy.at(1, 3) - harmonic(1, 0, gy.colat[1], gy.longitude(3))), 0.0, 1e-15);
}

TEST(Transforms, RoundTripAndPointEvaluation) {
  oracles::Rng rng(42);
  const int lmax = 12;
  const HarmonicCoefficients c = oracles::random_complex_coefficients(lmax, rng);
  const GridField g = synthesize(c, lmax + 1, 2 * lmax + 1);
  EXPECT_LT((analyze(g, lmax) - c).norm(), 1e-12 * c.norm());
  EXPECT_NEAR(std::abs(evaluate(c, g.colat[4], g.longitude(7)) - g.at(4, 7)), 0.0, 1e-12 * c.norm());
  // Parseval on the quadrature grid.
  EXPECT_NEAR(l2_norm(g), c.norm(), 1e-12 * c.norm());
}

TEST(Transforms, InsufficientResolution) {
  try {
    analyze(make_grid(4, 7), 4);
    FAIL() << "expected a resolution error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResolution);
  }
}

TEST(Coefficients, RealSymmetryAndAlgebra) {
  oracles::Rng rng(43);
  const HarmonicCoefficients r = oracles::random_real_coefficients(5, rng);
  EXPECT_TRUE(r.is_real(1e-14));
  const GridField g = synthesize(r, 6, 11);
  for (const Complex& v : g.values) EXPECT_NEAR(v.imag(), 0.0, 1e-13);
  const HarmonicCoefficients c = oracles::random_complex_coefficients(5, rng);
  EXPECT_FALSE(c.is_real(1e-6));
  const HarmonicCoefficients wide = c.resized(8);
  EXPECT_EQ(wide.lmax(), 8);
  EXPECT_EQ(wide(5, -2), c(5, -2));
  EXPECT_EQ(wide(7, 3), Complex(0.0));
  EXPECT_NEAR((c + c - Complex(2.0) * c).norm(), 0.0, 1e-15);
}

}  // namespace
}  // namespace qdiff
