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

#include "qdiff/harmonics.hpp"

namespace qdiff {

/// Coefficients of (x cross grad) f, i.e. i L_k f, for k = 1, 2, 3.
std::array<HarmonicCoefficients, 3> rotational_derivatives(const HarmonicCoefficients& f);

/// {f, g} = n . (grad f x grad g), evaluated pseudo-spectrally on the grid
/// of f. Complex inputs are handled bilinearly. Throws Error(kResolution)
/// when the grid cannot resolve the product bandwidth, and
/// Error(kSizeMismatch) for mismatched grids.
GridField classical_bracket(const GridField& f, const GridField& g);

/// {Re a, Re b} - {Im a, Im b} + i ({Re a, Im b} + {Im a, Re b}).
GridField complex_bracket(const GridField& a, const GridField& b);

}  // namespace qdiff
