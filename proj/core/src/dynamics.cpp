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

#include "qdiff/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qdiff/error.hpp"
#include "qdiff/expm.hpp"

namespace qdiff {

Matrix vorticity_rhs(const LaplacianEigenbasis& eig, const VorticityState& state) {
  require_square(state.w, eig.size(), "vorticity_rhs");
  const Matrix p = solve_stream(eig, state.w, state.model);
  return commutator(p, state.w);
}

VorticityState step_isospectral_midpoint(const LaplacianEigenbasis& eig,
                                         const VorticityState& state, double h,
                                         const IsospectralOptions& options) {
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step size must be positive");
  const int n = eig.size();
  require_square(state.w, n, "step_isospectral_midpoint");
  const Matrix ident = Matrix::Identity(n, n);
  const double scale = std::max(1.0, state.w.norm());

  // W~ = (I - h/2 P~)^{-1} W_n (I + h/2 P~)^{-1}, iterated to a fixed point.
  Matrix mid = state.w;
  Matrix p = solve_stream(eig, mid, state.model);
  bool converged = false;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const Matrix left = ident - (0.5 * h) * p;
    const Matrix right = ident + (0.5 * h) * p;
    // X right = W_n  <=>  right^T X^T = W_n^T.
    const Matrix tmp = right.transpose().partialPivLu().solve(state.w.transpose()).transpose();
    const Matrix next = left.partialPivLu().solve(tmp);
    const double delta = (next - mid).norm();
    mid = next;
    p = solve_stream(eig, mid, state.model);
    if (!mid.allFinite()) break;
    if (delta <= options.tolerance * scale) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorCode::kNotConverged,
                "isospectral midpoint: fixed point did not converge in " +
                    std::to_string(options.max_iterations) + " iterations (h=" + std::to_string(h) + ")");
  }
  const Matrix right = ident + (0.5 * h) * p;
  const Matrix left = ident - (0.5 * h) * p;
  return {right * mid * left, state.model};
}

VorticityState step_rk4(const LaplacianEigenbasis& eig, const VorticityState& state, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step size must be positive");
  auto rhs = [&](const Matrix& w) { return vorticity_rhs(eig, {w, state.model}); };
  const Matrix k1 = rhs(state.w);
  const Matrix k2 = rhs(state.w + (0.5 * h) * k1);
  const Matrix k3 = rhs(state.w + (0.5 * h) * k2);
  const Matrix k4 = rhs(state.w + h * k3);
  return {state.w + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4), state.model};
}

std::vector<Complex> sorted_eigenvalues(const Matrix& m) {
  std::vector<Complex> values;
  const double tol = 1e-12 * std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() <= tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.emplace_back(solver.eigenvalues()(i), 0.0);
  } else if ((m + m.adjoint()).norm() <= tol) {
    const Matrix herm = Complex(0.0, -1.0) * m;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.emplace_back(0.0, solver.eigenvalues()(i));
  } else {
    Eigen::ComplexEigenSolver<Matrix> solver(m, false);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::kNotConverged, "eigenvalue computation failed");
    }
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.push_back(solver.eigenvalues()(i));
  }
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return values;
}

double spectral_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kSizeMismatch, "spectra differ in length");
  // Greedy nearest matching; sorting alone is fragile when eigenvalues share
  // a real part up to rounding.
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = b.size();
    double dist = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (best == b.size() || d < dist) {
        best = j;
        dist = d;
      }
    }
    used[best] = true;
    worst = std::max(worst, dist);
  }
  return worst;
}

VorticityTrajectory evolve_vorticity(const LaplacianEigenbasis& eig, const VorticityState& initial,
                                     double t_final, double h, Integrator integrator,
                                     bool keep_states) {
  if (!(t_final >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "t_final must be >= 0");
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step size must be positive");
  require_square(initial.w, eig.size(), "evolve_vorticity");

  const std::vector<Complex> spectrum0 = sorted_eigenvalues(initial.w);
  auto diagnose = [&](int step, double time, const Matrix& w) {
    return StepDiagnostics{step, time, w.trace(), (w * w).trace(),
                           spectral_distance(sorted_eigenvalues(w), spectrum0)};
  };

  VorticityTrajectory out;
  out.states.push_back(initial);
  out.diagnostics.push_back(diagnose(0, 0.0, initial.w));

  const int steps = t_final == 0.0 ? 0 : static_cast<int>(std::ceil(t_final / h - 1e-9));
  VorticityState current = initial;
  for (int s = 1; s <= steps; ++s) {
    const double dt = (s == steps) ? t_final - (steps - 1) * h : h;
    current = integrator == Integrator::kRk4 ? step_rk4(eig, current, dt)
                                             : step_isospectral_midpoint(eig, current, dt);
    const double time = (s == steps) ? t_final : s * h;
    out.diagnostics.push_back(diagnose(s, time, current.w));
    if (keep_states) {
      out.states.push_back(current);
    } else if (s == steps) {
      out.states.push_back(current);
    }
  }
  return out;
}

FlowMatrix flow_of_stream(const Matrix& p, double t) {
  if (p.rows() != p.cols()) throw Error(ErrorCode::kSizeMismatch, "stream matrix is not square");
  if (std::abs(p.trace()) > 1e-12 * std::max(1.0, p.norm())) {
    throw Error(ErrorCode::kInvalidArgument, "stream matrix must be trace-free");
  }
  return {matrix_exponential(t * p)};
}

Matrix act_density(const FlowMatrix& flow, const Matrix& b) {
  require_square(b, flow.f.rows(), "act_density");
  return flow.f * b * flow.f.adjoint();
}

}  // namespace qdiff
