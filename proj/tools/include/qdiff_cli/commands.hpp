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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdiff/dynamics.hpp"
#include "qdiff/harmonics.hpp"
#include "qdiff/laplacian.hpp"
#include "qdiff/types.hpp"

namespace qdiff::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct BasisCheckConfig {
  int n = 16;
  std::filesystem::path out = "qdiff-out";
};

struct SimulateConfig {
  int n = 16;
  Model model = Model::kEuler;
  double t_final = 1.0;
  double h = 0.1;
  std::optional<int> steps;  // overrides h with t_final / steps
  Integrator integrator = Integrator::kIsospectralMidpoint;
  std::optional<std::filesystem::path> initial;  // qcoef-v1 or qmat-v1
  bool save_states = false;
  int width = 512;
  std::filesystem::path out = "qdiff-out";
  std::optional<std::filesystem::path> cache_eigenbasis;
};

enum class BlobMode { kDensity, kCenter };

struct BlobConfig {
  int n = 32;
  BlobMode mode = BlobMode::kDensity;
  Vec3 point = Vec3(-1.0, 0.0, 0.0);
  double t_final = 0.5;           // density mode
  std::optional<double> dt;       // density mode track spacing
  int steps = 200;                // center mode
  double h = 1.0;                 // center mode
  int width = 512;
  std::filesystem::path out = "qdiff-out";
  std::optional<std::filesystem::path> cache_eigenbasis;
};

struct DeformConfig {
  int refinements = 4;
  double t_final = 1.0;
  int n = 32;
  int width = 512;
  std::filesystem::path out = "qdiff-out";
  std::optional<std::filesystem::path> cache_eigenbasis;
};

struct RenderConfig {
  std::filesystem::path input;
  std::filesystem::path output;
  int width = 512;
};

/// Thrown for invalid parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate(const BasisCheckConfig& c);
void validate(const SimulateConfig& c);
void validate(const BlobConfig& c);
void validate(const DeformConfig& c);
void validate(const RenderConfig& c);

/// Each command writes into its output directory and returns an exit code.
int cmd_basis_check(const BasisCheckConfig& c, std::ostream& log);
int cmd_simulate(const SimulateConfig& c, std::ostream& log);
int cmd_blob(const BlobConfig& c, std::ostream& log);
int cmd_deform(const DeformConfig& c, std::ostream& log);
int cmd_render(const RenderConfig& c, std::ostream& log);

/// Deterministic low-degree real vorticity used when no initial file is given.
HarmonicCoefficients default_vorticity();

/// Loads the eigenbasis from `cache` when present, otherwise builds it and
/// stores it there.
LaplacianEigenbasis load_or_build_eigenbasis(int n, const std::optional<std::filesystem::path>& cache);

/// Full command line (args[0] is the program name). Errors are reported on
/// `err` as a single line "error: code=<code> message=<text>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdiff::cli
