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

#include "qdiff/types.hpp"

namespace qdiff {

struct TriMesh {
  std::vector<UnitVector3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<double> face_scalars;  // optional, one per face

  int euler_characteristic() const;
  UnitVector3 face_centroid(int f) const;
};

/// Subdivided icosahedron projected to the sphere: 20 * 4^r faces.
/// Throws Error(kInvalidArgument) for r < 0 or r > 8.
TriMesh icosasphere(int refinements);

/// Moves every vertex along the closed-form flow for time t. Vertices at
/// the exact south pole are nudged by 1e-12 toward +x first.
TriMesh transport_mesh(const TriMesh& mesh, double t);

/// Spherical triangle area (l'Huilier).
double spherical_area(const UnitVector3& a, const UnitVector3& b, const UnitVector3& c);

double total_area(const TriMesh& mesh);

/// Per-face area(after) / area(before). Throws Error(kSizeMismatch) for
/// different connectivity and Error(kDegenerate) for collapsed faces.
std::vector<double> face_area_ratios(const TriMesh& before, const TriMesh& after);

}  // namespace qdiff
