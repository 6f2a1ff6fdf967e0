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

#include <random>

#include <benchmark/benchmark.h>

#include "qdiff/dynamics.hpp"
#include "qdiff/expm.hpp"
#include "qdiff/laplacian.hpp"
#include "qdiff/quantization.hpp"
#include "qdiff/render.hpp"

namespace {

using namespace qdiff;

Matrix random_skew(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = Complex(g(rng), g(rng));
  Matrix s = (a - a.adjoint()) / 2.0;
  s -= (s.trace() / double(n)) * Matrix::Identity(n, n);
  return s / s.norm();
}

void BM_BuildEigenbasis(benchmark::State& state) {
  const SpinBasis basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_eigenbasis(basis));
}
BENCHMARK(BM_BuildEigenbasis)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ApplyLaplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpinBasis basis(n);
  const Matrix w = random_skew(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_laplacian(basis, w));
}
BENCHMARK(BM_ApplyLaplacian)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_SolvePoisson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaplacianEigenbasis eig = build_eigenbasis(SpinBasis(n));
  const Matrix w = random_skew(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_poisson(eig, w));
}
BENCHMARK(BM_SolvePoisson)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_MatrixExponential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix s = 5.0 * random_skew(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_exponential(s));
}
BENCHMARK(BM_MatrixExponential)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_IsospectralStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaplacianEigenbasis eig = build_eigenbasis(SpinBasis(n));
  const VorticityState s{random_skew(n, 4), Model::kEuler};
  for (auto _ : state) benchmark::DoNotOptimize(step_isospectral_midpoint(eig, s, 0.1));
}
BENCHMARK(BM_IsospectralStep)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_RenderField(benchmark::State& state) {
  const LaplacianEigenbasis eig = build_eigenbasis(SpinBasis(32));
  const HarmonicCoefficients c = dequantize_function(random_skew(32, 5), eig);
  for (auto _ : state) benchmark::DoNotOptimize(render_field(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RenderField)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
