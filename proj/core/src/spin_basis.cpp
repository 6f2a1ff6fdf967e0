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

#include "qdiff/spin_basis.hpp"

#include <cmath>
#include <string>

#include "qdiff/error.hpp"
#include "qdiff/expm.hpp"

namespace qdiff {

SpinBasis::SpinBasis(int n) : n_(n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "spin basis needs N >= 2, got " + std::to_string(n));
  }
  const double s = spin();
  weight_.resize(static_cast<std::size_t>(n));
  ladder_.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double m = -s + j;
    weight_[static_cast<std::size_t>(j)] = m;
    ladder_[static_cast<std::size_t>(j)] = j + 1 < n ? std::sqrt(s * (s + 1) - m * (m + 1)) : 0.0;
  }

  // J_1 = (J_+ + J_-)/2, J_2 = (J_+ - J_-)/(2i), J_3 diagonal; X_k = -(i/N) J_k.
  const Complex scale(0.0, -1.0 / n);
  Matrix j1 = Matrix::Zero(n, n);
  Matrix j2 = Matrix::Zero(n, n);
  Matrix j3 = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    j3(j, j) = weight(j);
    if (j + 1 < n) {
      const double c = ladder(j);
      j1(j + 1, j) = 0.5 * c;
      j1(j, j + 1) = 0.5 * c;
      j2(j + 1, j) = Complex(0.0, -0.5 * c);
      j2(j, j + 1) = Complex(0.0, 0.5 * c);
    }
  }
  x_ = {scale * j1, scale * j2, scale * j3};
}

SpinBasis build_spin_basis(int n) { return SpinBasis(n); }

Matrix rotation_operator(const SpinBasis& basis, const UnitVector3& axis, double angle) {
  const double n = basis.size();
  const Matrix generator =
      (angle * n) * (axis.x() * basis.x(0) + axis.y() * basis.x(1) + axis.z() * basis.x(2));
  return matrix_exponential(generator);
}

std::array<Matrix, 3> coordinate_matrices(const SpinBasis& basis) {
  // C_k = 2 J_k / sqrt(N^2 - 1) and J_k = i N X_k.
  const double n = basis.size();
  const Complex scale(0.0, 2.0 * n / std::sqrt(n * n - 1.0));
  return {scale * basis.x(0), scale * basis.x(1), scale * basis.x(2)};
}

}  // namespace qdiff
