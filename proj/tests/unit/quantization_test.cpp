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
#include "qdiff/dynamics.hpp"
#include "qdiff/expm.hpp"
#include "qdiff/error.hpp"
#include "qdiff/quantization.hpp"
#include "qdiff/reference_flows.hpp"

namespace qdiff {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Coefficients of x, y, z obtained by quadrature of point samples.
HarmonicCoefficients coordinate_function(int k) {
  GridField g = make_grid(4, 7);
  for (int i = 0; i < g.nlat(); ++i) {
    const double c = g.colat[static_cast<std::size_t>(i)];
    for (int j = 0; j < g.nlon; ++j) {
      const double p = g.longitude(j);
      const double v[3] = {std::sin(c) * std::cos(p), std::sin(c) * std::sin(p), std::cos(c)};
      g.at(i, j) = v[k];
    }
  }
  return analyze(g, 3);
}

struct Fixture : ::testing::Test {
  static constexpr int kN = 12;
  SpinBasis basis{kN};
  LaplacianEigenbasis eig = build_eigenbasis(basis);
};

TEST_F(Fixture, QuantizeIdentityAndZero) {
  HarmonicCoefficients c(3);
  c(0, 0) = std::sqrt(double(kN));
  EXPECT_LT((quantize(c, eig) - Matrix::Identity(kN, kN)).norm(), 1e-14);
  EXPECT_EQ(quantize(HarmonicCoefficients(4), eig).norm(), 0.0);
}

TEST_F(Fixture, RealFunctionsLandInUnitaryAlgebra) {
  oracles::Rng rng(51);
  const HarmonicCoefficients f = oracles::random_real_coefficients(kN - 1, rng);
  const Matrix h = quantize(f, eig);
  EXPECT_LT((h - h.adjoint()).norm(), 1e-12 * h.norm());
  const Matrix w = quantize(Complex(0.0, 1.0) * f, eig);
  EXPECT_LT((w + w.adjoint()).norm(), 1e-12 * w.norm());
  const Matrix g = quantize_function(f, eig);
  EXPECT_LT((g + g.adjoint()).norm(), 1e-12 * g.norm());
}

TEST_F(Fixture, DequantizeExamples) {
  const HarmonicCoefficients a = dequantize(eig.at(2, -2).dense(), eig);
  for (int l = 0; l < kN; ++l)
    for (int m = -l; m <= l; ++m) EXPECT_NEAR(std::abs(a(l, m) - Complex(l == 2 && m == -2)), 0.0, 1e-12);
  const HarmonicCoefficients id = dequantize(Matrix::Identity(kN, kN), eig);
  EXPECT_NEAR(id(0, 0).real(), std::sqrt(double(kN)), 1e-13);
  EXPECT_NEAR((id - id.resized(0).resized(kN - 1)).norm(), 0.0, 1e-13);
}

TEST(Quantize, RoundTripAndTruncation) {
  oracles::Rng rng(52);
  const LaplacianEigenbasis eig = build_eigenbasis(SpinBasis(16));
  const HarmonicCoefficients c = oracles::random_complex_coefficients(15, rng);
  EXPECT_LT((dequantize(quantize(c, eig), eig) - c).norm(), 1e-12 * c.norm());
  // Degrees past N - 1 are dropped.
  const HarmonicCoefficients wide = oracles::random_complex_coefficients(20, rng);
  EXPECT_LT((dequantize(quantize(wide, eig), eig) - wide.resized(15)).norm(), 1e-12 * wide.norm());
}

TEST_F(Fixture, CoordinateFunctionsMapToScaledGenerators) {
  for (int k = 0; k < 3; ++k) {
    const Matrix q = quantize_function(coordinate_function(k), eig);
    EXPECT_LT((q - double(kN) * basis.x(k)).norm(), 1e-12) << "k=" << k;
  }
  EXPECT_NEAR(function_scale(kN), std::sqrt(kN * (kN * kN - 1.0) / (16.0 * kPi)), 1e-14);
  oracles::Rng rng(53);
  const HarmonicCoefficients f = oracles::random_complex_coefficients(kN - 1, rng);
  EXPECT_LT((dequantize_function(quantize_function(f, eig), eig) - f).norm(), 1e-12 * f.norm());
}

TEST_F(Fixture, BracketOfCoordinatesIsExact) {
  const Matrix x = quantize_function(coordinate_function(0), eig);
  const Matrix y = quantize_function(coordinate_function(1), eig);
  const Matrix z = quantize_function(coordinate_function(2), eig);
  EXPECT_LT((commutator(x, y) - z).norm(), 1e-11);
}

TEST_F(Fixture, RotationRotatesDequantizedFields) {
  oracles::Rng rng(54);
  const HarmonicCoefficients f = oracles::random_complex_coefficients(5, rng);
  const Matrix b = quantize(f, eig);
  const UnitVector3 axis = UnitVector3::normalized(0.3, -0.5, 0.8);
  const double angle = 0.9;
  const Matrix r = rotation_operator(basis, axis, angle);
  const HarmonicCoefficients rotated = dequantize(r * b * r.adjoint(), eig);
  // The rotated field at p equals the original at Rot^{-1} p.
  const Eigen::AngleAxisd inverse(-angle, axis.vec());
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const UnitVector3 p = UnitVector3::normalized(u(rng), u(rng), u(rng));
    const UnitVector3 q = UnitVector3::normalized(inverse * p.vec());
    worst = std::max(worst, std::abs(evaluate(rotated, p.colatitude(), p.longitude()) -
                                     evaluate(f, q.colatitude(), q.longitude())));
  }
  EXPECT_LT(worst, 1e-10 * f.norm());
}

TEST_F(Fixture, GeneratorOfRigidRotation) {
  // psi = z generates unit-speed counter-clockwise rotation about z.
  const HarmonicCoefficients z = coordinate_function(2);
  const Matrix p = quantize_generator(z, eig);
  EXPECT_LT((matrix_exponential(1.3 * p) - rotation_operator(basis, UnitVector3(0, 0, 1), 1.3)).norm(), 1e-11);
  const Matrix b = blob_at(basis, UnitVector3(1, 0, 0)).matrix;
  const Matrix moved = act_density(flow_of_stream(p, 0.5 * kPi), b);
  const UnitVector3 c = blob_center(basis, moved);
  EXPECT_LT(angular_distance(c, UnitVector3(0, 1, 0)), 1e-10);
}

TEST_F(Fixture, GeneratorOfConstantVanishes) {
  HarmonicCoefficients c(2);
  c(0, 0) = 3.0 - 2.0 * kI;
  EXPECT_LT(quantize_generator(c, eig).norm(), 1e-13);
}

TEST_F(Fixture, ExampleGeneratorIsDiagonal) {
  Matrix p = quantize_generator(example_generator(), eig);
  EXPECT_LT(std::abs(p.trace()), 1e-13);
  EXPECT_GT(p.norm(), 1.0);
  p.diagonal().setZero();
  EXPECT_LT(p.norm(), 1e-13);
}

TEST(Blob, NorthBlob) {
  const BlobMatrix b = blob_north(3);
  Matrix expected = Matrix::Zero(3, 3);
  expected(2, 2) = kI;
  EXPECT_EQ(b.matrix, expected);
  EXPECT_EQ(b.matrix.trace(), kI);
  EXPECT_THROW(blob_north(1), Error);
}

TEST(Blob, NorthBlobDensityPeaksNearPole) {
  for (int n : {8, 16, 32}) {
    const LaplacianEigenbasis eig = build_eigenbasis(SpinBasis(n));
    const HarmonicCoefficients d = density_coefficients(blob_north(n).matrix, eig);
    double best = -1e300;
    double best_colat = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double colat = kPi * i / 400.0;
      const double v = evaluate(d, colat, 0.0).real();
      if (v > best) {
        best = v;
        best_colat = colat;
      }
    }
    EXPECT_LT(best_colat, 2.0 / std::sqrt(double(n))) << "N=" << n;
    EXPECT_LT(d.packed().back().imag(), 1e-12);
  }
}

TEST_F(Fixture, BlobPlacement) {
  EXPECT_EQ(blob_at(basis, UnitVector3(0, 0, 1)).matrix, blob_north(kN).matrix);
  Matrix south = blob_at(basis, UnitVector3(0, 0, -1)).matrix;
  EXPECT_NEAR(std::abs(south(0, 0) - kI), 0.0, 1e-13);
  south(0, 0) = 0.0;
  EXPECT_LT(south.norm(), 1e-13);

  oracles::Rng rng(55);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const UnitVector3 y0 = UnitVector3::normalized(u(rng), u(rng), u(rng));
    const Matrix b = blob_at(basis, y0).matrix;
    EXPECT_LT((b + b.adjoint()).norm(), 1e-13);
    EXPECT_NEAR(std::abs(b.trace() - kI), 0.0, 1e-13);
    EXPECT_LT(angular_distance(blob_center(basis, b), y0), 1e-10);
  }
}

TEST(Blob, CenterOfNorthBlobAndDegenerateInput) {
  const SpinBasis basis(32);
  const UnitVector3 c = blob_center(basis, blob_north(32).matrix);
  EXPECT_NEAR(c.z(), 1.0, 1e-15);
  const UnitVector3 w = blob_center(basis, blob_at(basis, UnitVector3(-1, 0, 0)).matrix);
  EXPECT_LT(angular_distance(w, UnitVector3(-1, 0, 0)), 0.15);
  try {
    blob_center(basis, (kI / 32.0) * Matrix::Identity(32, 32));
    FAIL() << "expected a degenerate-center error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
  EXPECT_THROW(blob_center(basis, Matrix::Zero(32, 32)), Error);
}

}  // namespace
}  // namespace qdiff
