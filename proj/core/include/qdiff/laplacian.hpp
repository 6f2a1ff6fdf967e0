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

#include "qdiff/spin_basis.hpp"
#include "qdiff/types.hpp"

namespace qdiff {

/// N-by-N matrix supported on a single diagonal; offset = row - col.
struct BandMatrix {
  int n = 0;
  int offset = 0;
  std::vector<Complex> entries;  // entries[j] sits at (j + max(offset,0), j + max(-offset,0))

  Matrix dense() const;
};

enum class Model { kEuler, kEpdiff };

/// N^2 sum_k [X_k, [X_k, M]], applied diagonal by diagonal.
Matrix apply_laplacian(const SpinBasis& basis, const Matrix& m);

/// Eigenmatrices T_{l,m} of the quantized Laplacian, l = 0..N-1, |m| <= l.
///
/// T_{l,m} lives on diagonal offset m (row - col = m), is Frobenius
/// orthonormal and satisfies T_{l,m}^* = (-1)^m T_{l,-m}. Phases follow the
/// spherical-harmonic ladder convention: T_{l,0} has a positive (N,N) entry
/// and [J_+, T_{l,m}] = sqrt(l(l+1) - m(m+1)) T_{l,m+1}.
class LaplacianEigenbasis {
 public:
  LaplacianEigenbasis(int n, std::vector<BandMatrix> t);

  int size() const noexcept { return n_; }
  int count() const noexcept { return n_ * n_; }

  static int index(int l, int m) { return l * l + l + m; }

  const BandMatrix& at(int l, int m) const;
  const BandMatrix& at_index(int i) const { return t_[static_cast<std::size_t>(i)]; }

  static double eigenvalue(int l) { return 0.0 - static_cast<double>(l) * (l + 1); }

  /// c_{l,m} = Tr(T_{l,m}^* M), packed by index(l, m).
  std::vector<Complex> project(const Matrix& m) const;
  /// sum c_{l,m} T_{l,m}; entries past count() are ignored.
  Matrix expand(const std::vector<Complex>& coeffs) const;

 private:
  int n_;
  std::vector<BandMatrix> t_;
};

/// Solves each diagonal's tridiagonal eigenproblem; diagonals run on the
/// worker pool. Throws Error(kNotConverged) naming the offending diagonal.
LaplacianEigenbasis build_eigenbasis(const SpinBasis& basis);

/// Trace-free Psi with Delta_N Psi = W - (Tr W / N) I.
Matrix solve_poisson(const LaplacianEigenbasis& eig, const Matrix& w);

/// Euler: Delta_N^{-1} W. EPDiff: (1 - Delta_N)^{-1} Delta_N^{-1} W.
Matrix solve_stream(const LaplacianEigenbasis& eig, const Matrix& w, Model model);

/// (N[X_1,P], N[X_2,P], N[X_3,P]).
std::array<Matrix, 3> quantized_gradient(const SpinBasis& basis, const Matrix& p);

}  // namespace qdiff
