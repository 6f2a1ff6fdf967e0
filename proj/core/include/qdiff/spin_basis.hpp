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

#pragma once

#include <array>
#include <vector>

#include "qdiff/types.hpp"

namespace qdiff {

/// Generators X_1, X_2, X_3 of the spin-(N-1)/2 representation, scaled so
/// that [X_1, X_2] = X_3 / N (and cyclic). Basis index j carries the J_3
/// weight -s + j, so the last index is the north pole.
class SpinBasis {
 public:
  explicit SpinBasis(int n);

  int size() const noexcept { return n_; }
  double spin() const noexcept { return 0.5 * (n_ - 1); }

  /// X_{k+1} for k = 0, 1, 2.
  const Matrix& x(int k) const { return x_.at(static_cast<std::size_t>(k)); }
  const std::array<Matrix, 3>& generators() const noexcept { return x_; }

  /// J_3 eigenvalue of basis vector j.
  double weight(int j) const { return weight_[static_cast<std::size_t>(j)]; }
  /// <j+1| J_+ |j>; zero for the last index.
  double ladder(int j) const { return ladder_[static_cast<std::size_t>(j)]; }

 private:
  int n_;
  std::vector<double> weight_;
  std::vector<double> ladder_;
  std::array<Matrix, 3> x_;
};

SpinBasis build_spin_basis(int n);

/// exp(angle * N * (u . X)). Conjugation B -> R B R^* rotates quantized
/// objects by `angle` about `axis` (right-hand rule).
Matrix rotation_operator(const SpinBasis& basis, const UnitVector3& axis, double angle);

/// Hermitian position observables C_k = 2 J_k / sqrt(N^2 - 1); sum C_k^2 = I.
std::array<Matrix, 3> coordinate_matrices(const SpinBasis& basis);

}  // namespace qdiff
