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

#include "qdiff/quantization.hpp"
#include "qdiff/spin_basis.hpp"
#include "qdiff/types.hpp"

namespace qdiff {

/// Quantized vector field of the stream matrix P seen from the blob B.
///
/// P splits into P_ham = (P - P^*)/2 and P_grad = -i (P + P^*)/2, both
/// skew-Hermitian. With c = blob_center(B) and s = 2N/(N-1):
///   V_k = s ( -N[X_k, P_grad] + sum_ij eps_kij c_i N[X_j, P_ham] ).
/// Tr(V_k B) is then the k-th component of N (c x v(c)), the rotation rate
/// that moves c with velocity v under the step exponent h sum a_k X_k.
std::array<Matrix, 3> quantized_vector_field(const SpinBasis& basis, const Matrix& p,
                                             const BlobMatrix& blob);

/// a_k = Re Tr(V_k B). Throws Error(kDegenerate) if the discarded imaginary
/// part exceeds 1e-8 |V_k| |B|.
Vec3 blob_components(const std::array<Matrix, 3>& v, const BlobMatrix& blob);

/// B -> E B E^*, E = exp(h sum a_k X_k).
BlobMatrix blob_step(const SpinBasis& basis, const BlobMatrix& blob, const Vec3& a, double h);

struct BlobTrajectory {
  double h = 0.0;
  std::vector<BlobMatrix> steps;  // steps[0] is the initial blob
  std::vector<Vec3> components;   // components[n] drove steps[n] -> steps[n+1]
};

/// Lie-Poisson Euler recursion on the blob.
BlobTrajectory transport_blob(const SpinBasis& basis, const Matrix& p, const BlobMatrix& b0,
                              int n_steps, double h);

}  // namespace qdiff
