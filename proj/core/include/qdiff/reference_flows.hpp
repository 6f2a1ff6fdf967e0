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
#include "qdiff/types.hpp"

namespace qdiff {

/// v(x, y, z) = (y - xz, -x - yz, 1 - z^2): a clockwise rotation about z
/// plus the gradient of z.
Vec3 example_field(const UnitVector3& p);

/// Complex generator psi of example_field: psi = -alpha Y_{1,0} + i alpha Y_{1,0}
/// with alpha = sqrt(4 pi / 3), so Re psi = -z and Im psi = z.
HarmonicCoefficients example_generator();

/// X_psi(p) = X_{Re psi} + grad Im psi, evaluated spectrally.
Vec3 induced_field(const HarmonicCoefficients& psi, const UnitVector3& p);

struct FlowConstants {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Integration constants of the closed-form flow through y0. The south
/// pole is a fixed point and is rejected.
FlowConstants flow_constants(const UnitVector3& y0);

/// Closed-form flow of example_field.
UnitVector3 exact_flow(const UnitVector3& y0, double t);

/// RK4 on y' = v(y), projected back to the sphere after each step.
UnitVector3 rk4_flow(const UnitVector3& y0, double t, double h);

}  // namespace qdiff
