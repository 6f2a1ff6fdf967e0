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

#include "qdiff/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qdiff/error.hpp"
#include "qdiff/parallel.hpp"

namespace qdiff {
namespace {

// Position of entries[j] for a diagonal with the given offset.
inline Eigen::Index row_of(int offset, int j) { return j + std::max(offset, 0); }
inline Eigen::Index col_of(int offset, int j) { return j + std::max(-offset, 0); }

struct BandSpectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns
};

// Delta_N restricted to diagonal d >= 0, as a symmetric tridiagonal matrix
// on v_j = M(j + d, j):
//   (Delta v)_j = (2 mu_{j+d} mu_j - 2 s(s+1)) v_j
//               + c_{j+d-1} c_{j-1} v_{j-1} + c_{j+d} c_j v_{j+1}.
BandSpectrum solve_band(const SpinBasis& basis, int d) {
  const int n = basis.size();
  const int len = n - d;
  const double s = basis.spin();
  Eigen::VectorXd diag(len);
  Eigen::VectorXd sub(std::max(len - 1, 0));
  for (int j = 0; j < len; ++j) {
    diag(j) = 2.0 * basis.weight(j + d) * basis.weight(j) - 2.0 * s * (s + 1.0);
    if (j + 1 < len) sub(j) = basis.ladder(j + d) * basis.ladder(j);
  }
  BandSpectrum out;
  if (len == 1) {
    out.eigenvalues = diag;
    out.eigenvectors = Eigen::MatrixXd::Ones(1, 1);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotConverged,
                "eigensolver failed on diagonal m=" + std::to_string(d));
  }
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

}  // namespace

Matrix BandMatrix::dense() const {
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < entries.size(); ++j) {
    m(row_of(offset, static_cast<int>(j)), col_of(offset, static_cast<int>(j))) = entries[j];
  }
  return m;
}

Matrix apply_laplacian(const SpinBasis& basis, const Matrix& m) {
  const int n = basis.size();
  require_square(m, n, "apply_laplacian");
  const double s = basis.spin();
  Matrix out(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      Complex acc = (2.0 * basis.weight(i) * basis.weight(j) - 2.0 * s * (s + 1.0)) * m(i, j);
      if (i > 0 && j > 0) acc += basis.ladder(i - 1) * basis.ladder(j - 1) * m(i - 1, j - 1);
      if (i + 1 < n && j + 1 < n) acc += basis.ladder(i) * basis.ladder(j) * m(i + 1, j + 1);
      out(i, j) = acc;
    }
  }
  return out;
}

LaplacianEigenbasis::LaplacianEigenbasis(int n, std::vector<BandMatrix> t)
    : n_(n), t_(std::move(t)) {
  if (static_cast<int>(t_.size()) != n * n) {
    throw Error(ErrorCode::kSizeMismatch, "eigenbasis needs N^2 matrices");
  }
}

const BandMatrix& LaplacianEigenbasis::at(int l, int m) const {
  if (l < 0 || l >= n_ || std::abs(m) > l) {
    throw Error(ErrorCode::kInvalidArgument,
                "T index out of range: l=" + std::to_string(l) + " m=" + std::to_string(m));
  }
  return t_[static_cast<std::size_t>(index(l, m))];
}

std::vector<Complex> LaplacianEigenbasis::project(const Matrix& m) const {
  require_square(m, n_, "project");
  std::vector<Complex> out(t_.size());
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const BandMatrix& t = t_[i];
    Complex acc = 0.0;
    for (std::size_t j = 0; j < t.entries.size(); ++j) {
      acc += std::conj(t.entries[j]) *
             m(row_of(t.offset, static_cast<int>(j)), col_of(t.offset, static_cast<int>(j)));
    }
    out[i] = acc;
  }
  return out;
}

Matrix LaplacianEigenbasis::expand(const std::vector<Complex>& coeffs) const {
  Matrix out = Matrix::Zero(n_, n_);
  const std::size_t count = std::min(coeffs.size(), t_.size());
  for (std::size_t i = 0; i < count; ++i) {
    const Complex c = coeffs[i];
    if (c == Complex(0.0)) continue;
    const BandMatrix& t = t_[i];
    for (std::size_t j = 0; j < t.entries.size(); ++j) {
      out(row_of(t.offset, static_cast<int>(j)), col_of(t.offset, static_cast<int>(j))) +=
          c * t.entries[j];
    }
  }
  return out;
}

LaplacianEigenbasis build_eigenbasis(const SpinBasis& basis) {
  const int n = basis.size();
  std::vector<BandSpectrum> bands(static_cast<std::size_t>(n));
  parallel_for(0, n, [&](int d) { bands[static_cast<std::size_t>(d)] = solve_band(basis, d); });

  std::vector<BandMatrix> t(static_cast<std::size_t>(n * n));
  for (int d = 0; d < n; ++d) {
    const BandSpectrum& band = bands[static_cast<std::size_t>(d)];
    const int len = n - d;
    for (int k = 0; k < len; ++k) {
      // Ascending eigenvalues: column k carries l = N - 1 - k.
      const int l = n - 1 - k;
      const double expected = LaplacianEigenbasis::eigenvalue(l);
      if (std::abs(band.eigenvalues(k) - expected) > 1e-8 * std::max(1.0, std::abs(expected))) {
        throw Error(ErrorCode::kNotConverged,
                    "diagonal m=" + std::to_string(d) + ": eigenvalue " +
                        std::to_string(band.eigenvalues(k)) + " does not match -l(l+1) for l=" +
                        std::to_string(l));
      }
      Eigen::VectorXd v = band.eigenvectors.col(k);
      v.normalize();

      if (d == 0) {
        if (v(len - 1) < 0.0) v = -v;
      } else {
        // Align with [J_+, T_{l,d-1}] / sqrt(l(l+1) - (d-1)d).
        const BandMatrix& prev = t[static_cast<std::size_t>(LaplacianEigenbasis::index(l, d - 1))];
        double overlap = 0.0;
        for (int j = 0; j < len; ++j) {
          const double raised = basis.ladder(j + d - 1) * prev.entries[static_cast<std::size_t>(j)].real() -
                                basis.ladder(j) * prev.entries[static_cast<std::size_t>(j + 1)].real();
          overlap += raised * v(j);
        }
        if (overlap < 0.0) v = -v;
      }

      BandMatrix up{n, d, std::vector<Complex>(static_cast<std::size_t>(len))};
      for (int j = 0; j < len; ++j) up.entries[static_cast<std::size_t>(j)] = v(j);
      if (d > 0) {
        BandMatrix down{n, -d, up.entries};
        if (d % 2 != 0) {
          for (auto& e : down.entries) e = -e;
        }
        t[static_cast<std::size_t>(LaplacianEigenbasis::index(l, -d))] = std::move(down);
      }
      t[static_cast<std::size_t>(LaplacianEigenbasis::index(l, d))] = std::move(up);
    }
  }
  return LaplacianEigenbasis(n, std::move(t));
}

namespace {

Matrix apply_inverse(const LaplacianEigenbasis& eig, const Matrix& w, Model model) {
  std::vector<Complex> c = eig.project(w);
  c[0] = 0.0;
  for (int l = 1; l < eig.size(); ++l) {
    const double lambda = LaplacianEigenbasis::eigenvalue(l);
    double factor = 1.0 / lambda;
    if (model == Model::kEpdiff) factor /= (1.0 - lambda);
    for (int m = -l; m <= l; ++m) c[static_cast<std::size_t>(LaplacianEigenbasis::index(l, m))] *= factor;
  }
  return eig.expand(c);
}

}  // namespace

Matrix solve_poisson(const LaplacianEigenbasis& eig, const Matrix& w) {
  return apply_inverse(eig, w, Model::kEuler);
}

Matrix solve_stream(const LaplacianEigenbasis& eig, const Matrix& w, Model model) {
  return apply_inverse(eig, w, model);
}

std::array<Matrix, 3> quantized_gradient(const SpinBasis& basis, const Matrix& p) {
  const int n = basis.size();
  require_square(p, n, "quantized_gradient");
  std::array<Matrix, 3> out;
  for (int k = 0; k < 3; ++k) out[static_cast<std::size_t>(k)] = double(n) * commutator(basis.x(k), p);
  return out;
}

}  // namespace qdiff
