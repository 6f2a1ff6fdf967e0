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

#include "oracles.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "qdiff/bracket.hpp"

namespace qdiff::oracles {
namespace {

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

}  // namespace

HarmonicCoefficients random_real_coefficients(int lmax, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  HarmonicCoefficients c(lmax);
  for (int l = 0; l <= lmax; ++l) {
    c(l, 0) = n(rng);
    for (int m = 1; m <= l; ++m) {
      const Complex a = gaussian_complex(rng) / std::sqrt(2.0);
      c(l, m) = a;
      c(l, -m) = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(a);
    }
  }
  return c;
}

HarmonicCoefficients random_complex_coefficients(int lmax, Rng& rng) {
  HarmonicCoefficients c(lmax);
  for (auto& a : c.packed()) a = gaussian_complex(rng);
  return c;
}

Matrix random_matrix(int n, Rng& rng) {
  Matrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = gaussian_complex(rng);
  return m;
}

Matrix random_traceless(int n, Rng& rng) {
  Matrix m = random_matrix(n, rng);
  m.diagonal().array() -= m.trace() / static_cast<double>(n);
  return m;
}

Matrix random_skew_traceless(int n, Rng& rng) {
  Matrix a = random_matrix(n, rng);
  Matrix m = 0.5 * (a - a.adjoint());
  m.diagonal().array() -= m.trace() / static_cast<double>(n);
  return m;
}

Matrix dense_laplacian(const SpinBasis& basis) {
  const int n = basis.size();
  const int n2 = n * n;
  Matrix op(n2, n2);
  for (int col = 0; col < n2; ++col) {
    Matrix e = Matrix::Zero(n, n);
    e(col % n, col / n) = 1.0;
    Matrix out = Matrix::Zero(n, n);
    for (const Matrix& x : basis.generators()) {
      const Matrix inner = x * e - e * x;
      out += x * inner - inner * x;
    }
    out *= static_cast<double>(n) * n;
    op.col(col) = out.reshaped();
  }
  return op;
}

Complex reference_harmonic(int l, int m, double colat, double lon) {
  const int am = std::abs(m);
  // std::sph_legendre includes the Condon-Shortley phase and the L2 norm.
  const double theta_part = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(am), colat);
  Complex y = theta_part * std::polar(1.0, am * lon);
  if (m < 0) y = (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
  return y;
}

double finite_difference_bracket(const HarmonicCoefficients& f, const HarmonicCoefficients& g,
                                 double colat, double lon) {
  const double d = 1e-3;
  auto deriv = [&](const HarmonicCoefficients& c, bool along_colat) {
    auto at = [&](double s) {
      return along_colat ? evaluate(c, colat + s, lon).real() : evaluate(c, colat, lon + s).real();
    };
    return (-at(2 * d) + 8 * at(d) - 8 * at(-d) + at(-2 * d)) / (12 * d);
  };
  const double ft = deriv(f, true);
  const double fp = deriv(f, false);
  const double gt = deriv(g, true);
  const double gp = deriv(g, false);
  return (ft * gp - fp * gt) / std::sin(colat);
}

HarmonicCoefficients classical_vorticity(const HarmonicCoefficients& omega0, int lmax, double t, double h) {
  const int nlat = 2 * lmax + 2;
  const int nlon = 4 * lmax + 4;
  auto rhs = [&](const HarmonicCoefficients& w) {
    HarmonicCoefficients psi(lmax);
    for (int l = 1; l <= lmax; ++l)
      for (int m = -l; m <= l; ++m) psi(l, m) = w(l, m) / (-static_cast<double>(l) * (l + 1));
    const GridField b = classical_bracket(synthesize(psi, nlat, nlon), synthesize(w, nlat, nlon));
    return analyze(b, lmax);
  };
  HarmonicCoefficients w = omega0.resized(lmax);
  const int steps = static_cast<int>(std::ceil(t / h - 1e-12));
  for (int s = 0; s < steps; ++s) {
    const double dt = (s == steps - 1) ? t - s * h : h;
    const auto k1 = rhs(w);
    const auto k2 = rhs(w + Complex(0.5 * dt) * k1);
    const auto k3 = rhs(w + Complex(0.5 * dt) * k2);
    const auto k4 = rhs(w + Complex(dt) * k3);
    w = w + Complex(dt / 6.0) * (k1 + Complex(2.0) * k2 + Complex(2.0) * k3 + k4);
  }
  return w;
}

Matrix reference_expm(const Matrix& m) { return m.exp(); }

}  // namespace qdiff::oracles
