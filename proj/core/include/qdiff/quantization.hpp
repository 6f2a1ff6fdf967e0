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

#include "qdiff/harmonics.hpp"
#include "qdiff/laplacian.hpp"
#include "qdiff/spin_basis.hpp"
#include "qdiff/types.hpp"

namespace qdiff {

/// sum a_{l,m} T_{l,m}; degrees above N-1 are dropped.
Matrix quantize(const HarmonicCoefficients& coeffs, const LaplacianEigenbasis& eig);

/// a_{l,m} = Tr(T_{l,m}^* M), lmax = N-1. Left inverse of quantize.
HarmonicCoefficients dequantize(const Matrix& m, const LaplacianEigenbasis& eig);

/// Scale linking quantize to the bracket-preserving function map:
/// quantize_function = -i * function_scale(N) * quantize.
/// Equals sqrt(N (N^2 - 1) / (16 pi)), fixed by x_k -> N X_k.
double function_scale(int n);

/// Complex-linear map sending x_k to N X_k, so that real functions land in
/// u(N) and N^2 [X_i, X_j] reproduces {x_i, x_j} exactly.
Matrix quantize_function(const HarmonicCoefficients& coeffs, const LaplacianEigenbasis& eig);
HarmonicCoefficients dequantize_function(const Matrix& m, const LaplacianEigenbasis& eig);

/// Stream matrix of a complex generator: quantize_function projected
/// trace-free. exp(P t) transports quantized densities along the classical
/// flow of X_psi = X_{Re psi} + grad Im psi.
Matrix quantize_generator(const HarmonicCoefficients& psi, const LaplacianEigenbasis& eig);

/// Rank-one skew-Hermitian matrix with Tr = i (a quantized point mass).
struct BlobMatrix {
  Matrix matrix;
};

BlobMatrix blob_north(int n);

/// Rotates blob_north onto y0 about z x y0 (x axis for y0 = -z).
BlobMatrix blob_at(const SpinBasis& basis, const UnitVector3& y0);

/// Normalized (Tr(C_k B / Tr B))_k. Throws Error(kDegenerate) when Tr B
/// or the center vector is numerically zero.
UnitVector3 blob_center(const SpinBasis& basis, const Matrix& b);

/// Coefficients of the density carried by M after removing the phase of
/// Tr M, so a blob (Tr = i) and F F^* (Tr > 0) both dequantize to a real,
/// positive-mass field.
HarmonicCoefficients density_coefficients(const Matrix& m, const LaplacianEigenbasis& eig);

}  // namespace qdiff
