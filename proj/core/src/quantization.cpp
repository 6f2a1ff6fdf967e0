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

#include "qdiff/quantization.hpp"

#include <cmath>
#include <numbers>

#include "qdiff/error.hpp"

namespace qdiff {

Matrix quantize(const HarmonicCoefficients& coeffs, const LaplacianEigenbasis& eig) {
  std::vector<Complex> packed = coeffs.packed();
  packed.resize(static_cast<std::size_t>(eig.count()), Complex(0.0));
  return eig.expand(packed);
}

HarmonicCoefficients dequantize(const Matrix& m, const LaplacianEigenbasis& eig) {
  return HarmonicCoefficients(eig.size() - 1, eig.project(m));
}

double function_scale(int n) {
  const double nn = n;
  return std::sqrt(nn * (nn * nn - 1.0) / (16.0 * std::numbers::pi));
}

Matrix quantize_function(const HarmonicCoefficients& coeffs, const LaplacianEigenbasis& eig) {
  return Complex(0.0, -function_scale(eig.size())) * quantize(coeffs, eig);
}

HarmonicCoefficients dequantize_function(const Matrix& m, const LaplacianEigenbasis& eig) {
  return Complex(0.0, 1.0 / function_scale(eig.size())) * dequantize(m, eig);
}

Matrix quantize_generator(const HarmonicCoefficients& psi, const LaplacianEigenbasis& eig) {
  Matrix p = quantize_function(psi, eig);
  const auto n = p.rows();
  p.diagonal().array() -= p.trace() / static_cast<double>(n);
  return p;
}

BlobMatrix blob_north(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "blob needs N >= 2");
  BlobMatrix b{Matrix::Zero(n, n)};
  b.matrix(n - 1, n - 1) = Complex(0.0, 1.0);
  return b;
}

BlobMatrix blob_at(const SpinBasis& basis, const UnitVector3& y0) {
  BlobMatrix north = blob_north(basis.size());
  // z x y0 = (-y, x, 0).
  const double rho = std::hypot(y0.x(), y0.y());
  if (rho < 1e-15) {
    if (y0.z() > 0.0) return north;
    const Matrix r = rotation_operator(basis, UnitVector3(1.0, 0.0, 0.0), std::numbers::pi);
    return {r * north.matrix * r.adjoint()};
  }
  const UnitVector3 axis = UnitVector3::normalized(-y0.y(), y0.x(), 0.0);
  const double angle = std::atan2(rho, y0.z());
  const Matrix r = rotation_operator(basis, axis, angle);
  return {r * north.matrix * r.adjoint()};
}

UnitVector3 blob_center(const SpinBasis& basis, const Matrix& b) {
  require_square(b, basis.size(), "blob_center");
  const Complex tr = b.trace();
  if (std::abs(tr) < 1e-14 * std::max(1.0, b.norm())) {
    throw Error(ErrorCode::kDegenerate, "blob_center: trace is zero");
  }
  const Matrix normalized = b / tr;
  const auto c = coordinate_matrices(basis);
  Vec3 center;
  for (int k = 0; k < 3; ++k) {
    center(k) = (c[static_cast<std::size_t>(k)].cwiseProduct(normalized.transpose())).sum().real();
  }
  if (center.norm() < 1e-10) {
    throw Error(ErrorCode::kDegenerate, "blob_center: density has no center");
  }
  return UnitVector3::normalized(center);
}

HarmonicCoefficients density_coefficients(const Matrix& m, const LaplacianEigenbasis& eig) {
  const Complex tr = m.trace();
  const Complex phase = std::abs(tr) > 0.0 ? tr / std::abs(tr) : Complex(1.0);
  return dequantize(m * std::conj(phase), eig);
}

}  // namespace qdiff
