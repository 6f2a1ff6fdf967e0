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

#include <vector>

#include "qdiff/laplacian.hpp"
#include "qdiff/types.hpp"

namespace qdiff {

struct VorticityState {
  Matrix w;
  Model model = Model::kEuler;
};

struct FlowMatrix {
  Matrix f;
};

enum class Integrator { kIsospectralMidpoint, kRk4 };

struct IsospectralOptions {
  double tolerance = 1e-12;  // relative to max(1, |W|_F)
  int max_iterations = 100;
};

/// [P, W] with P = solve_stream(W, model).
Matrix vorticity_rhs(const LaplacianEigenbasis& eig, const VorticityState& state);

/// Isospectral midpoint step:
///   W_n     = (I - h/2 P~) W~ (I + h/2 P~)
///   W_{n+1} = (I + h/2 P~) W~ (I - h/2 P~),   P~ = stream(W~).
/// Throws Error(kNotConverged) if the fixed point stalls.
VorticityState step_isospectral_midpoint(const LaplacianEigenbasis& eig,
                                         const VorticityState& state, double h,
                                         const IsospectralOptions& options = {});

/// Classical RK4 on W' = [P, W]; not isospectral.
VorticityState step_rk4(const LaplacianEigenbasis& eig, const VorticityState& state, double h);

struct StepDiagnostics {
  int step = 0;
  double time = 0.0;
  Complex trace;
  Complex trace_square;
  double spectral_drift = 0.0;  // max |lambda_i(t) - lambda_i(0)|, sorted spectra
};

struct VorticityTrajectory {
  std::vector<VorticityState> states;
  std::vector<StepDiagnostics> diagnostics;
};

/// States at t = 0, h, 2h, ... up to t_final (last step shortened if h does
/// not divide t_final). With keep_states = false only the final state is
/// stored; diagnostics are always complete.
VorticityTrajectory evolve_vorticity(const LaplacianEigenbasis& eig, const VorticityState& initial,
                                     double t_final, double h, Integrator integrator,
                                     bool keep_states = true);

/// Eigenvalues sorted by (real, imag). Hermitian and skew-Hermitian input
/// take the self-adjoint solver path.
std::vector<Complex> sorted_eigenvalues(const Matrix& m);

/// Largest eigenvalue displacement under nearest-neighbour matching.
double spectral_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// F(t) = exp(P t). Requires |Tr P| <= 1e-12 max(1, |P|_F).
FlowMatrix flow_of_stream(const Matrix& p, double t);

/// F B F^*.
Matrix act_density(const FlowMatrix& flow, const Matrix& b);

}  // namespace qdiff
