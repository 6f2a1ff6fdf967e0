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

#include "qdiff/blob_transport.hpp"

#include <cmath>
#include <string>

#include "qdiff/error.hpp"
#include "qdiff/expm.hpp"

namespace qdiff {

std::array<Matrix, 3> quantized_vector_field(const SpinBasis& basis, const Matrix& p,
                                             const BlobMatrix& blob) {
  const int n = basis.size();
  require_square(p, n, "quantized_vector_field");
  require_square(blob.matrix, n, "quantized_vector_field");

  const Matrix ham = 0.5 * (p - p.adjoint());
  const Matrix grad = Complex(0.0, -0.5) * (p + p.adjoint());
  const auto grad_part = quantized_gradient(basis, grad);
  const auto ham_part = quantized_gradient(basis, ham);

  std::array<Matrix, 3> v;
  const bool has_ham = ham.norm() > 0.0;
  Vec3 c = Vec3::Zero();
  if (has_ham) c = blob_center(basis, blob.matrix).vec();

  const double scale = 2.0 * n / (n - 1.0);
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    Matrix vk = -grad_part[static_cast<std::size_t>(k)];
    if (has_ham) {
      // (c x r)_k for the Hamiltonian components r.
      vk += c(i) * ham_part[static_cast<std::size_t>(j)] - c(j) * ham_part[static_cast<std::size_t>(i)];
    }
    v[static_cast<std::size_t>(k)] = scale * vk;
  }
  return v;
}

Vec3 blob_components(const std::array<Matrix, 3>& v, const BlobMatrix& blob) {
  Vec3 a;
  const double bnorm = blob.matrix.norm();
  for (int k = 0; k < 3; ++k) {
    const Matrix& vk = v[static_cast<std::size_t>(k)];
    require_square(vk, blob.matrix.rows(), "blob_components");
    const Complex tr = (vk.cwiseProduct(blob.matrix.transpose())).sum();
    if (std::abs(tr.imag()) > 1e-8 * vk.norm() * bnorm) {
      throw Error(ErrorCode::kDegenerate,
                  "blob component " + std::to_string(k + 1) + " has imaginary part " +
                      std::to_string(tr.imag()));
    }
    a(k) = tr.real();
  }
  return a;
}

BlobMatrix blob_step(const SpinBasis& basis, const BlobMatrix& blob, const Vec3& a, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step size must be positive");
  require_square(blob.matrix, basis.size(), "blob_step");
  const Matrix gen = h * (a(0) * basis.x(0) + a(1) * basis.x(1) + a(2) * basis.x(2));
  const Matrix e = matrix_exponential(gen);
  return {e * blob.matrix * e.adjoint()};
}

BlobTrajectory transport_blob(const SpinBasis& basis, const Matrix& p, const BlobMatrix& b0,
                              int n_steps, double h) {
  if (n_steps < 1) throw Error(ErrorCode::kInvalidArgument, "n_steps must be >= 1");
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step size must be positive");
  BlobTrajectory out;
  out.h = h;
  out.steps.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.components.reserve(static_cast<std::size_t>(n_steps));
  out.steps.push_back(b0);
  for (int s = 0; s < n_steps; ++s) {
    const BlobMatrix& current = out.steps.back();
    const Vec3 a = blob_components(quantized_vector_field(basis, p, current), current);
    out.components.push_back(a);
    out.steps.push_back(blob_step(basis, current, a, h));
  }
  return out;
}

}  // namespace qdiff
